#pragma once

#include "toric/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

enum class Verdict { Smooth, OneSingular, Other };

std::string to_string(Verdict v);

/// Chart at the coordinate point P_i: the homogenized generators with coordinate i
/// deleted, the zero vector (image of D e_i) dropped.
struct AffineChart {
    int index = 0;
    std::vector<LatticeVector> generators;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Other;
    /// 1 for Smooth; gcd(D, norms) of the normalized set otherwise.
    std::int64_t e = 1;
    std::optional<int> singular_vertex;
    /// Required vectors located in the (normalized) set.
    std::vector<LatticeVector> certificates;
    /// e = 1 only: an index j (1-based) with e_j' not in A.
    std::optional<int> missing_unit;
    /// Human-readable reason when the verdict is Other.
    std::string failed_condition;
    /// Smoothness of each chart 0..d.
    std::vector<bool> chart_smooth;
    /// The set with the singular vertex moved to position 0 (A itself otherwise).
    std::optional<GeneratorSet> normalized;
    /// e = D: the smooth set in one dimension less; `reduces_to_point` when that dimension is 0.
    std::optional<GeneratorSet> reduced;
    bool reduces_to_point = false;
};

std::vector<AffineChart> charts(const GeneratorSet& a);

/// Irreducible elements of B (all nonzero) in the semigroup they generate.
std::vector<LatticeVector> minimal_generators(const std::vector<LatticeVector>& b, const EngineOptions& options = {});

/// Rank of the rational span of `vectors`.
int span_rank(const std::vector<LatticeVector>& vectors);

bool is_chart_smooth(const AffineChart& chart, const EngineOptions& options = {});

/// Smallest lambda in 1..D with (D - lambda) e_i + lambda e_j in B (B homogenized, indices 0..d).
std::optional<std::int64_t> lambda_min(const HomogenizedGeneratorSet& b, int i, int j);

/// Swaps homogeneous coordinates 0 and k, then dehomogenizes.
GeneratorSet move_vertex_to_origin(const GeneratorSet& a, int k);

/// Throws ValidationError when the homogenized coordinates share a factor > 1.
ClassificationReport classify(const GeneratorSet& a, const EngineOptions& options = {});

/// Reduction for the one-singular case e = D. Returns nullopt when the result is
/// zero-dimensional (a point, regularity 0). Throws PreconditionError outside that case.
std::optional<GeneratorSet> reduce_e_equals_D(const GeneratorSet& a);

/// True when A = {0, D e_1', ..., D e_d'} (the variety is the whole projective space).
bool is_coordinate_simplex(const GeneratorSet& a);

} // namespace toric
