#include "toric/cm_reg.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace toric {

namespace {

constexpr std::size_t kMaxMaximizers = 4096;

struct MemoEntry {
    ReducedHomologyProfile profile;
    bool mismatch = false;
};

LatticeVector swap_coordinates(const LatticeVector& y, int k) {
    if (k == 0) {
        return y;
    }
    std::vector<std::int64_t> c(y.coords().begin(), y.coords().end());
    std::swap(c[0], c[static_cast<std::size_t>(k)]);
    return LatticeVector(std::move(c));
}

} // namespace

RegularityResult briales_enumerate(SumsetTable& table, std::int64_t max_level, FieldTag field, bool collect) {
    const GeneratorSet& a = table.generators();
    const int d = a.dim();
    const int n = d + 1;
    const std::int64_t degree = a.degree();
    const std::uint32_t masks = 1u << n;

    std::vector<const SumsetLevel*> levels;
    for (std::int64_t s = 0; s <= max_level; ++s) {
        levels.push_back(&table.level(s));
    }

    RegularityResult out;
    out.field = field;
    out.cutoff_norm = max_level * degree;
    std::unordered_map<std::string, MemoEntry> memo;
    bool have = false;
    std::int64_t best_c = 0;
    std::vector<std::int64_t> best_y;

    std::string key(masks, '\0');
    std::vector<std::int64_t> y(static_cast<std::size_t>(n));
    std::vector<std::int64_t> z(static_cast<std::size_t>(d));
    for (std::int64_t s = 0; s <= max_level; ++s) {
        const SumsetLevel& level = *levels[static_cast<std::size_t>(s)];
        for (SimplexSlice::Cursor c(level.slice(), 0); c.valid(); c.next()) {
            if (!level.test_rank(c.index())) {
                continue;
            }
            ++out.points_examined;
            y[0] = s * degree - c.norm();
            std::copy(c.data(), c.data() + d, y.begin() + 1);
            for (std::uint32_t m = 0; m < masks; ++m) {
                const int t = std::popcount(m);
                bool ok = t <= s && (y[0] - ((m & 1u) ? degree : 0)) >= 0;
                for (int j = 0; ok && j < d; ++j) {
                    z[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j) + 1] - (((m >> (j + 1)) & 1u) ? degree : 0);
                    ok = z[static_cast<std::size_t>(j)] >= 0;
                }
                key[m] = static_cast<char>(ok && levels[static_cast<std::size_t>(s - t)]->contains(z));
            }
            auto it = memo.find(key);
            if (it == memo.end()) {
                FaceComplex complex;
                complex.y = LatticeVector(y);
                complex.vertices = n;
                complex.faces.assign(key.begin(), key.end());
                for (int v = 0; v < n; ++v) {
                    if (complex.faces[1u << v]) {
                        complex.vertex_mask |= 1u << v;
                    }
                }
                complex.check_closed();
                MemoEntry entry;
                entry.profile = reduced_homology(complex, field);
                if (field != 0) {
                    entry.mismatch = reduced_homology(complex, 0).betti != entry.profile.betti;
                    if (entry.mismatch) {
                        out.field_mismatches.push_back(complex.y);
                    }
                }
                if (collect) {
                    out.complexes.push_back(complex);
                }
                it = memo.emplace(key, std::move(entry)).first;
            }
            const auto& profile = it->second.profile;
            const int i = profile.lowest_nonzero();
            if (i == -2) {
                continue;
            }
            if (collect) {
                for (int k = -1; k < n; ++k) {
                    if (profile.at(k) != 0) {
                        out.nonzero_levels.insert({s, k});
                    }
                }
            }
            const std::int64_t contribution = s - (i + 1);
            if (!have || contribution > best_c) {
                out.maximizers.clear();
                out.maximizers_truncated = false;
            }
            if (!have || contribution >= best_c) {
                if (out.maximizers.size() < kMaxMaximizers) {
                    out.maximizers.emplace_back(LatticeVector(y), i);
                } else {
                    out.maximizers_truncated = true;
                }
            }
            // ties: lexicographically largest y
            if (!have || contribution > best_c || (contribution == best_c && y > best_y)) {
                have = true;
                best_c = contribution;
                best_y = y;
                out.witness_i = i;
            }
        }
    }
    if (!have) {
        throw InternalError("no y with nonzero reduced homology (y = 0 always contributes)");
    }
    out.reg = best_c;
    out.witness_y = LatticeVector(best_y);
    return out;
}

BoundCheck herzog_hibi_bound(std::int64_t reg_value, int d, std::int64_t degree) {
    BoundCheck b;
    b.bound = degree == 2 ? (d + 1) / 2 : d * (degree - 2);
    b.slack = b.bound - reg_value;
    b.holds = b.slack >= 0;
    if (!b.holds) {
        throw BoundViolation("smooth set with reg " + std::to_string(reg_value) + " above " + std::to_string(b.bound));
    }
    return b;
}

BoundCheck one_singular_bound(std::int64_t reg_value, int d, std::int64_t degree, std::int64_t e) {
    BoundCheck b;
    const std::int64_t q = degree / e;
    b.bound = degree == 2 ? d / 2 : q * ((d - 1) * (degree - 2) + q - 2) + 1;
    b.slack = b.bound - reg_value;
    b.holds = b.slack >= 0;
    if (!b.holds) {
        throw BoundViolation("one-singular set with reg " + std::to_string(reg_value) + " above " +
                             std::to_string(b.bound));
    }
    return b;
}

RegularityResult reg(const GeneratorSet& a, const RegOptions& ro, const EngineOptions& options) {
    const int d = a.dim();
    if (is_coordinate_simplex(a)) {
        SumsetTable table(a, options);
        auto r = briales_enumerate(table, d + 1 + ro.extra_levels, ro.field, ro.collect);
        r.method = "coordinate-simplex";
        return r;
    }
    const auto report = classify(a, options);
    if (report.verdict == Verdict::Other) {
        if (!ro.cutoff_level) {
            throw UnsupportedInstanceError("verdict Other: regularity needs an explicit cutoff");
        }
        SumsetTable table(a, options);
        auto r = briales_enumerate(table, *ro.cutoff_level + ro.extra_levels, ro.field, ro.collect);
        r.method = "lower-bound";
        r.certified = false;
        return r;
    }

    SumsetTable table(*report.normalized, options);
    const auto sig = sigma(table, report.verdict);
    RegularityResult r;
    if (report.verdict == Verdict::Smooth) {
        r = briales_enumerate(table, sig.sigma + d + 1 + ro.extra_levels, ro.field, ro.collect);
        r.method = "smooth";
        if (r.reg != sig.sigma) {
            throw BoundViolation("smooth set with reg " + std::to_string(r.reg) + " != sigma " +
                                 std::to_string(sig.sigma));
        }
        herzog_hibi_bound(r.reg, d, a.degree());
    } else {
        const std::int64_t direct_level = sig.sigma + d + 2 + ro.extra_levels;
        if (report.e == a.degree()) {
            if (report.reduces_to_point) {
                r.reg = 0;
                r.witness_y = LatticeVector::zero(d + 1);
                r.witness_i = -1;
                r.field = ro.field;
            } else {
                RegOptions inner = ro;
                inner.cutoff_level.reset();
                const auto reduced = reg(*report.reduced, inner, options);
                r = reduced;
                r.witness_y = reduced.witness_y.prepend(0);
                for (auto& [y, i] : r.maximizers) {
                    y = y.prepend(0);
                }
            }
            r.method = "e=D-reduction";
            if (ro.cross_check_reduction) {
                const auto direct = briales_enumerate(table, direct_level, ro.field, false);
                if (direct.reg != r.reg) {
                    throw InternalError("e = D reduction gives reg " + std::to_string(r.reg) +
                                        " but direct enumeration gives " + std::to_string(direct.reg));
                }
            }
        } else {
            r = briales_enumerate(table, direct_level, ro.field, ro.collect);
            r.method = "one-singular";
        }
        if (r.reg > sig.sigma + 1) {
            throw BoundViolation("one-singular set with reg " + std::to_string(r.reg) + " > sigma + 1 = " +
                                 std::to_string(sig.sigma + 1));
        }
        one_singular_bound(r.reg, d, a.degree(), report.e);
        const int k = report.singular_vertex.value_or(0);
        r.witness_y = swap_coordinates(r.witness_y, k);
        for (auto& [y, i] : r.maximizers) {
            y = swap_coordinates(y, k);
        }
    }
    r.sigma = sig.sigma;
    return r;
}

DegreeResult degree(const GeneratorSet& a, const ClassificationReport* report, bool early_exit) {
    const auto h = homogenize(a);
    const int rows = a.dim() + 1;
    const int cols = static_cast<int>(h.points.size());
    DegreeResult out;
    out.codim = cols - 1 - a.dim();
    mpz_class floor_value(static_cast<long>(a.degree()));
    mpz_class g = 0;
    std::vector<int> pick(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        pick[static_cast<std::size_t>(i)] = i;
    }
    IntMatrix m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(rows)));
    while (true) {
        for (int c = 0; c < rows; ++c) {
            const auto& col = h.points[static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])];
            for (int r = 0; r < rows; ++r) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = col[r];
            }
        }
        const mpz_class det = determinant(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        ++out.minors_examined;
        if (early_exit && g == floor_value) {
            break;
        }
        int k = rows - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == cols - rows + k) {
            --k;
        }
        if (k < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < rows; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    if (g == 0) {
        throw ValidationError("every maximal minor vanishes; the set is not full-dimensional");
    }
    out.theta = g;
    mpz_class top;
    mpz_pow_ui(top.get_mpz_t(), floor_value.get_mpz_t(), static_cast<unsigned long>(rows));
    if (top % out.theta != 0) {
        throw InternalError("theta does not divide D^{d+1}");
    }
    out.degree = top / out.theta;
    if (report != nullptr && report->verdict != Verdict::Other) {
        const mpz_class e(static_cast<long>(report->e));
        if (out.theta != floor_value * e) {
            throw BoundViolation("theta = " + out.theta.get_str() + " but D*e = " + mpz_class(floor_value * e).get_str());
        }
    }
    return out;
}

EGResult eg_check(std::int64_t reg_value, const DegreeResult& deg, Verdict verdict, int d) {
    EGResult r;
    r.reg = reg_value;
    r.degree = deg.degree;
    r.codim = deg.codim;
    r.bound = deg.degree - deg.codim;
    r.slack = r.bound - reg_value;
    r.holds = r.slack >= 0;
    r.enforced = verdict == Verdict::OneSingular && d >= 3;
    if (r.enforced && !r.holds) {
        throw BoundViolation("Eisenbud-Goto bound fails: reg " + std::to_string(reg_value) + " > " + r.bound.get_str());
    }
    return r;
}

EGResult eg_check(const GeneratorSet& a, const RegOptions& ro, const EngineOptions& options) {
    if (is_coordinate_simplex(a)) {
        const auto r = reg(a, ro, options);
        return eg_check(r.reg, degree(a), Verdict::Smooth, a.dim());
    }
    const auto report = classify(a, options);
    const auto r = reg(a, ro, options);
    return eg_check(r.reg, degree(a, &report), report.verdict, a.dim());
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    mpz_class out;
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

mpq_class size_bound(int d, std::int64_t degree, std::int64_t e) {
    mpq_class q(mpz_class(static_cast<long>(degree + d * e)), mpz_class(static_cast<long>(e * (degree + d))));
    q.canonicalize();
    return q * mpq_class(binomial(degree + d, d));
}

InequalityReport eg_inequality_suite(int d, std::int64_t degree, std::int64_t e) {
    if (d < 1 || degree < 2 || e < 1 || degree % e != 0) {
        throw PreconditionError("eg_inequality_suite needs d >= 1, D >= 2, e | D");
    }
    InequalityReport r;
    r.d = d;
    r.degree = degree;
    r.e = e;
    const mpz_class big_d(static_cast<long>(degree));
    mpz_class d_pow_d;
    mpz_class d_pow_dm1;
    mpz_pow_ui(d_pow_d.get_mpz_t(), big_d.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(d_pow_dm1.get_mpz_t(), big_d.get_mpz_t(), static_cast<unsigned long>(d - 1));

    r.size_applicable = e < degree;
    r.size_bound = size_bound(d, degree, e);
    r.simplex_count = 0;
    for (std::int64_t i = 0; i * e <= degree; ++i) {
        r.simplex_count += binomial(i * e + d - 1, d - 1);
    }
    if (r.size_applicable) {
        r.size_holds = mpq_class(r.simplex_count) <= r.size_bound;
    }

    r.e_equals_D_holds = mpz_class((d - 1) * (degree - 2)) <= d_pow_dm1 - binomial(degree + d - 1, d - 1) + d;

    if (e < degree) {
        const std::int64_t q = degree / e;
        const mpq_class lhs(mpz_class(static_cast<long>(q * ((d - 1) * (degree - 2) + q - 2))));
        const mpq_class rhs = mpq_class(d_pow_d / e) - r.size_bound + d;
        r.e_below_D_holds = lhs <= rhs;
        if (d == 3) {
            r.cubic_applicable = true;
            const mpz_class ez(static_cast<long>(e));
            const mpz_class cubic = 5 * ez * big_d * big_d * big_d - (3 * ez * ez + 15 * ez + 6) * big_d * big_d +
                                    (34 * ez - 9 * ez * ez) * big_d + 12 * ez * ez;
            r.cubic_holds = cubic >= 0;
            if (r.cubic_holds != r.e_below_D_holds) {
                throw InternalError("d = 3 cubic disagrees with the inequality it rewrites");
            }
        }
    }

    if (d >= 3 && degree >= 3) {
        if (!r.size_holds || !r.e_equals_D_holds || !r.e_below_D_holds || !r.cubic_holds) {
            throw BoundViolation("Eisenbud-Goto auxiliary inequality fails at d = " + std::to_string(d) +
                                 ", D = " + std::to_string(degree) + ", e = " + std::to_string(e));
        }
    }
    return r;
}

} // namespace toric
