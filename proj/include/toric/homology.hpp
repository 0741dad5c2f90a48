#pragma once

#include "toric/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Coefficient field: 0 for the rationals, otherwise a prime p.
using FieldTag = std::int64_t;

std::string field_name(FieldTag field);
/// Parses "q", "f2", "f32003", "fP".
FieldTag parse_field(const std::string& name);

/// T_y on the vertices 0..d. Faces are subsets of {0..d} encoded as bitmasks.
struct FaceComplex {
    LatticeVector y;
    int vertices = 0; // d + 1
    std::uint32_t vertex_mask = 0;
    std::vector<std::uint8_t> faces; // indexed by subset mask, size 2^vertices

    [[nodiscard]] bool has(std::uint32_t mask) const { return faces[mask] != 0; }
    [[nodiscard]] std::vector<std::uint32_t> face_list() const;
    /// Number of faces of each dimension -1..vertices-1.
    [[nodiscard]] std::vector<std::int64_t> f_vector() const;
    /// Throws InternalError when a subset of a face is missing.
    void check_closed() const;
};

/// Builds a complex from an explicit face list (closed under subsets is checked).
FaceComplex make_complex(int vertices, const std::vector<std::uint32_t>& faces);

struct ReducedHomologyProfile {
    /// betti[i + 1] = dim H~_i for i = -1..vertices-1.
    std::vector<std::int64_t> betti;
    FieldTag field = 0;

    [[nodiscard]] std::int64_t at(int i) const {
        const auto k = static_cast<std::size_t>(i + 1);
        return k < betti.size() ? betti[k] : 0;
    }
    /// Smallest i with a nonzero entry, or -2 when acyclic.
    [[nodiscard]] int lowest_nonzero() const;
    /// Largest i with a nonzero entry, or -2 when acyclic.
    [[nodiscard]] int highest_nonzero() const;
};

/// y in the semigroup generated by the homogenized set.
bool semigroup_member(SumsetTable& table, const LatticeVector& y);

/// Throws PreconditionError when y is not in the semigroup.
FaceComplex build_T(SumsetTable& table, const LatticeVector& y);

ReducedHomologyProfile reduced_homology(const FaceComplex& complex, FieldTag field = 0);

/// sum (-1)^i betti_i against sum (-1)^i f_i over i >= -1.
bool euler_consistent(const FaceComplex& complex, const ReducedHomologyProfile& profile);

} // namespace toric
