#include "toric/sumset_reg.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

SigmaBounds sigma_bounds(Verdict family, int d, std::int64_t degree, std::int64_t e) {
    if (family == Verdict::Other) {
        throw UnsupportedInstanceError("no sigma bounds for verdict Other");
    }
    SigmaBounds b;
    const std::int64_t q = degree / e;
    b.t0 = (degree - 2) * (d - 1) + q - 2;
    b.s0 = q * b.t0;
    b.lower = step_threshold(d, degree, e);
    b.alt_lower = ceil_div(d * degree - d + e - 1, degree);
    if (family == Verdict::Smooth) {
        b.upper = degree == 2 ? d - d / 2 : d * (degree - 2);
    } else {
        b.upper = degree == 2 ? d / 2 : b.s0; // ceil((d-1)/2) = floor(d/2)
    }
    return b;
}

namespace {

std::int64_t hole_level(const std::vector<LatticeVector>& holes, std::int64_t degree) {
    std::int64_t level = 0;
    for (const auto& h : holes) {
        level = std::max(level, ceil_div(h.norm(), degree));
    }
    return level;
}

void require_family(Verdict family) {
    if (family == Verdict::Other) {
        throw UnsupportedInstanceError("sumsets regularity is only defined for smooth or one-singular sets");
    }
}

} // namespace

HoleSet compute_holes(SumsetTable& table, Verdict family) {
    require_family(family);
    const GeneratorSet& a = table.generators();
    const auto b = sigma_bounds(family, a.dim(), a.degree(), a.divisor());
    HoleSet out;
    if (family == Verdict::Smooth) {
        const SumsetLevel& full = table.level(std::max<std::int64_t>(b.t0, 0));
        if (full.cardinality() != full.slice().size()) {
            throw BoundViolation("smooth set but level d(D-2) does not fill the simplex");
        }
        return out;
    }
    const std::int64_t t0 = std::max<std::int64_t>(b.t0, 0);
    const std::int64_t s0 = std::max<std::int64_t>(b.s0, 0);
    const SumsetLevel& stable = table.level(s0);
    const SimplexSlice inner(a.dim(), a.degree(), t0, a.divisor());
    for (SimplexSlice::Cursor c(inner, 0); c.valid(); c.next()) {
        const std::span<const std::int64_t> y(c.data(), static_cast<std::size_t>(a.dim()));
        if (!stable.contains(y)) {
            out.points.emplace_back(std::vector<std::int64_t>(y.begin(), y.end()));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.enclosing_level = hole_level(out.points, a.degree());
    return out;
}

HoleSet compute_holes(const GeneratorSet& a, const EngineOptions& options) {
    const auto report = classify(a, options);
    require_family(report.verdict);
    SumsetTable table(*report.normalized, options);
    return compute_holes(table, report.verdict);
}

bool level_matches_holes(SumsetTable& table, std::int64_t s, const HoleSet& holes) {
    const SumsetLevel& level = table.level(s);
    std::uint64_t inside = 0;
    for (const auto& h : holes.points) {
        if (level.slice().contains(h.coords())) {
            if (level.contains(h.coords())) {
                return false;
            }
            ++inside;
        }
    }
    return level.cardinality() + inside == level.slice().size();
}

SigmaResult sigma(SumsetTable& table, Verdict family) {
    require_family(family);
    const GeneratorSet& a = table.generators();
    SigmaResult out;
    out.family = family;
    out.e = a.divisor();
    out.bounds = sigma_bounds(family, a.dim(), a.degree(), out.e);
    out.holes = compute_holes(table, family);
    const std::int64_t start = std::max({std::int64_t{0}, out.holes.enclosing_level, out.bounds.lower});

    if (family == Verdict::Smooth) {
        std::int64_t s = start;
        while (s <= out.bounds.upper && !level_matches_holes(table, s, out.holes)) {
            ++s;
        }
        if (s > out.bounds.upper) {
            throw BoundViolation("smooth set: no level up to " + std::to_string(out.bounds.upper) +
                                 " fills the simplex");
        }
        out.sigma = s;
        out.window_lo = out.window_hi = s;
    } else {
        const std::int64_t top = std::max(start, out.bounds.s0);
        if (!level_matches_holes(table, top, out.holes)) {
            throw BoundViolation("level " + std::to_string(top) + " differs from the simplex minus the holes");
        }
        std::int64_t s = top;
        while (s > start && level_matches_holes(table, s - 1, out.holes)) {
            --s;
        }
        out.sigma = s;
        out.window_lo = s;
        out.window_hi = top;
        if (s > out.bounds.upper) {
            throw BoundViolation("sigma " + std::to_string(s) + " exceeds the proven bound " +
                                 std::to_string(out.bounds.upper));
        }
    }
    out.step_verified = simplex_step_holds(a.dim(), a.degree(), out.e, out.sigma, table.options());
    if (!out.step_verified) {
        throw InternalError("step property fails at sigma = " + std::to_string(out.sigma));
    }
    return out;
}

SigmaResult sigma(const GeneratorSet& a, const EngineOptions& options) {
    const auto report = classify(a, options);
    require_family(report.verdict);
    SumsetTable table(*report.normalized, options);
    return sigma(table, report.verdict);
}

SigmaBoundsReport verify_sigma_bounds(const SigmaResult& result) {
    SigmaBoundsReport r;
    r.lower_holds = result.sigma >= result.bounds.lower;
    r.alt_lower_holds = result.sigma >= result.bounds.alt_lower;
    r.upper_holds = result.sigma <= result.bounds.upper;
    r.slack_lower = result.sigma - result.bounds.lower;
    r.slack_upper = result.bounds.upper - result.sigma;
    if (!r.lower_holds || !r.upper_holds) {
        throw BoundViolation("sigma = " + std::to_string(result.sigma) + " outside [" +
                             std::to_string(result.bounds.lower) + ", " + std::to_string(result.bounds.upper) + "]");
    }
    return r;
}

} // namespace toric
