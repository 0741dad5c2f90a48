#include "toric/homology.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <bit>

namespace toric {

std::string field_name(FieldTag field) { return field == 0 ? "q" : "f" + std::to_string(field); }

FieldTag parse_field(const std::string& name) {
    if (name == "q" || name == "Q") {
        return 0;
    }
    if (name.size() > 1 && (name[0] == 'f' || name[0] == 'F')) {
        std::int64_t p = 0;
        try {
            p = std::stoll(name.substr(1));
        } catch (const std::exception&) {
            throw ValidationError("unknown field " + name);
        }
        if (p < 2 || p >= (std::int64_t{1} << 31)) {
            throw ValidationError("field characteristic out of range: " + name);
        }
        for (std::int64_t k = 2; k * k <= p; ++k) {
            if (p % k == 0) {
                throw ValidationError("field characteristic is not prime: " + name);
            }
        }
        return p;
    }
    throw ValidationError("unknown field " + name);
}

std::vector<std::uint32_t> FaceComplex::face_list() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < faces.size(); ++m) {
        if (faces[m]) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<std::int64_t> FaceComplex::f_vector() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(vertices) + 1, 0);
    for (std::uint32_t m = 0; m < faces.size(); ++m) {
        if (faces[m]) {
            ++f[static_cast<std::size_t>(std::popcount(m))];
        }
    }
    return f;
}

void FaceComplex::check_closed() const {
    for (std::uint32_t m = 0; m < faces.size(); ++m) {
        if (!faces[m]) {
            continue;
        }
        for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
            const std::uint32_t sub = m & ~(rest & (~rest + 1));
            if (!faces[sub]) {
                throw InternalError("face complex not closed under subsets at y = " + y.to_string());
            }
        }
    }
}

FaceComplex make_complex(int vertices, const std::vector<std::uint32_t>& faces) {
    FaceComplex c;
    c.vertices = vertices;
    c.faces.assign(std::size_t{1} << vertices, 0);
    for (const auto f : faces) {
        c.faces[f] = 1;
        if (std::popcount(f) == 1) {
            c.vertex_mask |= f;
        }
    }
    c.check_closed();
    return c;
}

int ReducedHomologyProfile::lowest_nonzero() const {
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (betti[k] != 0) {
            return static_cast<int>(k) - 1;
        }
    }
    return -2;
}

int ReducedHomologyProfile::highest_nonzero() const {
    for (std::size_t k = betti.size(); k-- > 0;) {
        if (betti[k] != 0) {
            return static_cast<int>(k) - 1;
        }
    }
    return -2;
}

bool semigroup_member(SumsetTable& table, const LatticeVector& y) { return table.semigroup_member(y.coords()); }

FaceComplex build_T(SumsetTable& table, const LatticeVector& y) {
    const int n = table.generators().dim() + 1;
    if (y.dim() != n) {
        throw PreconditionError("y must have dimension d+1");
    }
    if (!table.semigroup_member(y.coords())) {
        throw PreconditionError("y = " + y.to_string() + " is not in the semigroup");
    }
    const std::int64_t degree = table.generators().degree();
    FaceComplex c;
    c.y = y;
    c.vertices = n;
    c.faces.assign(std::size_t{1} << n, 0);
    std::vector<std::int64_t> z(static_cast<std::size_t>(n));
    for (std::uint32_t m = 0; m < c.faces.size(); ++m) {
        bool ok = true;
        for (int j = 0; j < n; ++j) {
            z[static_cast<std::size_t>(j)] = y[j] - (((m >> j) & 1u) ? degree : 0);
            ok = ok && z[static_cast<std::size_t>(j)] >= 0;
        }
        c.faces[m] = ok && table.semigroup_member(z);
        if (c.faces[m] && std::popcount(m) == 1) {
            c.vertex_mask |= m;
        }
    }
    c.check_closed();
    return c;
}

namespace {

bool is_cone(const FaceComplex& c) {
    for (int v = 0; v < c.vertices; ++v) {
        const std::uint32_t bit = 1u << v;
        if (!(c.vertex_mask & bit)) {
            continue;
        }
        bool apex = true;
        for (std::uint32_t m = 0; m < c.faces.size() && apex; ++m) {
            apex = !c.faces[m] || c.faces[m | bit];
        }
        if (apex) {
            return true;
        }
    }
    return false;
}

} // namespace

ReducedHomologyProfile reduced_homology(const FaceComplex& complex, FieldTag field) {
    const int n = complex.vertices;
    ReducedHomologyProfile out;
    out.field = field;
    out.betti.assign(static_cast<std::size_t>(n) + 1, 0);
    if (!complex.faces[0]) {
        throw PreconditionError("complex has no empty face");
    }
    if (is_cone(complex)) {
        return out;
    }
    // faces grouped by cardinality k (dimension k-1)
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t m = 0; m < complex.faces.size(); ++m) {
        if (complex.faces[m]) {
            by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
        }
    }
    // rank of the boundary from size-k faces to size-(k-1) faces, k = 1..n
    std::vector<std::int64_t> boundary_rank(static_cast<std::size_t>(n) + 2, 0);
    for (int k = 1; k <= n; ++k) {
        const auto& cols = by_size[static_cast<std::size_t>(k)];
        const auto& rows = by_size[static_cast<std::size_t>(k - 1)];
        if (cols.empty() || rows.empty()) {
            continue;
        }
        IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int pos = 0;
            for (int v = 0; v < n; ++v) {
                if (!((cols[c] >> v) & 1u)) {
                    continue;
                }
                const std::uint32_t sub = cols[c] & ~(1u << v);
                const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
                m[r][c] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        boundary_rank[static_cast<std::size_t>(k)] = field == 0 ? rank_rational(m) : rank_mod_p(m, field);
    }
    for (int k = 0; k <= n; ++k) {
        const auto size = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(k)].size());
        out.betti[static_cast<std::size_t>(k)] =
            size - boundary_rank[static_cast<std::size_t>(k)] - boundary_rank[static_cast<std::size_t>(k) + 1];
    }
    return out;
}

bool euler_consistent(const FaceComplex& complex, const ReducedHomologyProfile& profile) {
    const auto f = complex.f_vector();
    std::int64_t chi = 0;
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const std::int64_t sign = (k % 2 == 0) ? -1 : 1; // dimension k-1
        chi += sign * f[k];
        alt += sign * (k < profile.betti.size() ? profile.betti[k] : 0);
    }
    return chi == alt;
}

} // namespace toric
