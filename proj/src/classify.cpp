#include "toric/classify.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Smooth:
        return "Smooth";
    case Verdict::OneSingular:
        return "OneSingular";
    case Verdict::Other:
        return "Other";
    }
    return "Other";
}

std::vector<AffineChart> charts(const GeneratorSet& a) {
    const auto h = homogenize(a);
    std::vector<AffineChart> out;
    for (int i = 0; i <= a.dim(); ++i) {
        AffineChart chart{i, {}};
        for (const auto& p : h.points) {
            auto q = p.erase(i);
            if (q.norm() != 0) {
                chart.generators.push_back(std::move(q));
            }
        }
        out.push_back(std::move(chart));
    }
    return out;
}

std::vector<LatticeVector> minimal_generators(const std::vector<LatticeVector>& b, const EngineOptions& options) {
    if (b.empty()) {
        return {};
    }
    std::vector<LatticeVector> gens(b);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const int d = gens.front().dim();
    std::int64_t max_norm = 0;
    for (const auto& g : gens) {
        if (g.dim() != d) {
            throw PreconditionError("minimal_generators: mixed dimensions");
        }
        if (g.norm() == 0) {
            throw PreconditionError("minimal_generators: zero vector in input");
        }
        max_norm = std::max(max_norm, g.norm());
    }
    const SimplexSlice region(d, max_norm, 1, 1);
    if (region.size() > options.max_slice_points) {
        throw ResourceLimitError("minimal_generators: search region above the cap");
    }
    std::vector<char> reach(region.size(), 0);
    std::vector<std::int64_t> z(static_cast<std::size_t>(d));
    for (SimplexSlice::Cursor c(region, 0); c.valid(); c.next()) {
        if (c.norm() == 0) {
            reach[c.index()] = 1;
            continue;
        }
        for (const auto& g : gens) {
            bool fits = true;
            for (int k = 0; k < d; ++k) {
                z[static_cast<std::size_t>(k)] = c.data()[k] - g[k];
                fits = fits && z[static_cast<std::size_t>(k)] >= 0;
            }
            if (fits && reach[region.rank_unchecked(z.data())]) {
                reach[c.index()] = 1;
                break;
            }
        }
    }
    std::vector<LatticeVector> out;
    for (const auto& g : gens) {
        bool reducible = false;
        for (const auto& h : gens) {
            if (h == g) {
                continue;
            }
            if (auto rest = g.minus(h); rest && reach[region.rank_unchecked(rest->coords().data())]) {
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            out.push_back(g);
        }
    }
    return out;
}

int span_rank(const std::vector<LatticeVector>& vectors) {
    IntMatrix m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        m.emplace_back(v.coords().begin(), v.coords().end());
    }
    return rank_rational(m);
}

bool is_chart_smooth(const AffineChart& chart, const EngineOptions& options) {
    return static_cast<int>(minimal_generators(chart.generators, options).size()) == span_rank(chart.generators);
}

std::optional<std::int64_t> lambda_min(const HomogenizedGeneratorSet& b, int i, int j) {
    const int n = b.parent.dim() + 1;
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
        throw PreconditionError("lambda_min needs distinct indices in 0..d");
    }
    const std::int64_t degree = b.parent.degree();
    for (std::int64_t lambda = 1; lambda <= degree; ++lambda) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(i)] = degree - lambda;
        c[static_cast<std::size_t>(j)] = lambda;
        if (std::find(b.points.begin(), b.points.end(), LatticeVector(std::move(c))) != b.points.end()) {
            return lambda;
        }
    }
    return std::nullopt;
}

GeneratorSet move_vertex_to_origin(const GeneratorSet& a, int k) {
    if (k < 0 || k > a.dim()) {
        throw PreconditionError("vertex index out of range");
    }
    if (k == 0) {
        return a;
    }
    auto h = homogenize(a);
    std::vector<LatticeVector> swapped;
    swapped.reserve(h.points.size());
    for (const auto& p : h.points) {
        std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
        std::swap(c[0], c[static_cast<std::size_t>(k)]);
        swapped.emplace_back(std::move(c));
    }
    return dehomogenize(swapped);
}

bool is_coordinate_simplex(const GeneratorSet& a) { return a.size() == static_cast<std::size_t>(a.dim()) + 1; }

namespace {

// Collects `wanted` into `found`; returns the first missing vector.
std::optional<LatticeVector> require_all(const GeneratorSet& a, const std::vector<LatticeVector>& wanted,
                                         std::vector<LatticeVector>& found) {
    for (const auto& w : wanted) {
        if (!a.contains(w)) {
            return w;
        }
        if (std::find(found.begin(), found.end(), w) == found.end()) {
            found.push_back(w);
        }
    }
    return std::nullopt;
}

std::vector<LatticeVector> smooth_requirements(const GeneratorSet& a) {
    const int d = a.dim();
    const std::int64_t big = a.degree() - 1;
    std::vector<LatticeVector> out{LatticeVector::zero(d)};
    for (int i = 0; i < d; ++i) {
        out.push_back(LatticeVector::axis(d, i, 1));
        out.push_back(LatticeVector::axis(d, i, big));
        for (int j = 0; j < d; ++j) {
            if (i != j) {
                out.push_back(LatticeVector::axis(d, i, 1) + LatticeVector::axis(d, j, big));
            }
        }
    }
    return out;
}

std::vector<LatticeVector> singular_requirements(const GeneratorSet& a, std::int64_t e) {
    const int d = a.dim();
    const std::int64_t big = a.degree() - 1;
    std::vector<LatticeVector> out{LatticeVector::zero(d)};
    for (int i = 0; i < d; ++i) {
        out.push_back(LatticeVector::axis(d, i, a.degree() - e));
        for (int j = 0; j < d; ++j) {
            if (i != j) {
                out.push_back(LatticeVector::axis(d, i, big) + LatticeVector::axis(d, j, 1));
            }
        }
    }
    return out;
}

struct SingularCheck {
    bool holds = false;
    std::vector<LatticeVector> found;
    std::optional<int> missing_unit;
    std::string reason;
};

SingularCheck check_singular_at_origin(const GeneratorSet& a) {
    SingularCheck out;
    const std::int64_t e = a.divisor();
    if (auto miss = require_all(a, singular_requirements(a, e), out.found)) {
        out.reason = "missing " + miss->to_string() + " for e = " + std::to_string(e);
        return out;
    }
    if (e == 1) {
        for (int j = 0; j < a.dim(); ++j) {
            if (!a.contains(LatticeVector::axis(a.dim(), j, 1))) {
                out.missing_unit = j + 1;
                break;
            }
        }
        if (!out.missing_unit) {
            out.reason = "e = 1 and every unit vector is present";
            return out;
        }
    }
    out.holds = true;
    return out;
}

} // namespace

ClassificationReport classify(const GeneratorSet& a, const EngineOptions& options) {
    const std::int64_t g = a.homogenized_coordinate_gcd();
    if (g > 1) {
        throw ValidationError("all homogenized coordinates are divisible by " + std::to_string(g) +
                              "; divide the instance by " + std::to_string(g) + " first");
    }
    ClassificationReport report;
    for (const auto& chart : charts(a)) {
        report.chart_smooth.push_back(is_chart_smooth(chart, options));
    }
    const auto non_smooth = std::count(report.chart_smooth.begin(), report.chart_smooth.end(), false);

    std::vector<LatticeVector> found;
    const auto smooth_miss = require_all(a, smooth_requirements(a), found);
    if (!smooth_miss) {
        report.verdict = Verdict::Smooth;
        report.e = 1;
        report.certificates = std::move(found);
        report.normalized = a;
    } else {
        std::string reasons = "not smooth: missing " + smooth_miss->to_string();
        for (int k = 0; k <= a.dim(); ++k) {
            GeneratorSet moved = move_vertex_to_origin(a, k);
            auto check = check_singular_at_origin(moved);
            if (check.holds) {
                report.verdict = Verdict::OneSingular;
                report.e = moved.divisor();
                report.singular_vertex = k;
                report.certificates = std::move(check.found);
                report.missing_unit = check.missing_unit;
                if (report.e == moved.degree()) {
                    report.reduced = reduce_e_equals_D(moved);
                    report.reduces_to_point = !report.reduced.has_value();
                }
                report.normalized = std::move(moved);
                break;
            }
            reasons += "; vertex " + std::to_string(k) + ": " + check.reason;
        }
        if (report.verdict == Verdict::Other) {
            report.e = a.divisor();
            report.failed_condition = reasons;
        }
    }

    const bool consistent = (report.verdict == Verdict::Smooth && non_smooth == 0) ||
                            (report.verdict == Verdict::OneSingular && non_smooth == 1 &&
                             !report.chart_smooth[static_cast<std::size_t>(*report.singular_vertex)]) ||
                            (report.verdict == Verdict::Other && non_smooth >= 2);
    if (!consistent) {
        throw InternalError("membership verdict " + to_string(report.verdict) + " disagrees with " +
                            std::to_string(non_smooth) + " non-smooth chart(s)");
    }
    return report;
}

std::optional<GeneratorSet> reduce_e_equals_D(const GeneratorSet& a) {
    const int d = a.dim();
    const std::int64_t degree = a.degree();
    if (a.divisor() != degree) {
        throw PreconditionError("reduction needs e = D, got e = " + std::to_string(a.divisor()));
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j && !a.contains(LatticeVector::axis(d, i, degree - 1) + LatticeVector::axis(d, j, 1))) {
                throw PreconditionError("reduction needs (D-1)e_i' + e_j' in A for all i != j");
            }
        }
    }
    if (d == 1) {
        return std::nullopt;
    }
    std::vector<LatticeVector> pts;
    for (const auto& p : a.points()) {
        if (p.norm() == degree) {
            pts.push_back(p.erase(0));
        }
    }
    return GeneratorSet::create(d - 1, std::move(pts));
}

} // namespace toric
