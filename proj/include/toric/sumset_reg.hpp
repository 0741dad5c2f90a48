#pragma once

#include "toric/classify.hpp"
#include "toric/lattice.hpp"

#include <vector>

namespace toric {

struct SigmaBounds {
    std::int64_t t0 = 0;
    std::int64_t s0 = 0;
    /// ceil(d - (d+e-1)/D), the step threshold.
    std::int64_t lower = 0;
    /// ceil(d - (d-e+1)/D); only reported.
    std::int64_t alt_lower = 0;
    std::int64_t upper = 0;
};

/// Bounds for a Smooth (e = 1) or OneSingular set.
SigmaBounds sigma_bounds(Verdict family, int d, std::int64_t degree, std::int64_t e);

struct HoleSet {
    std::vector<LatticeVector> points;
    /// Smallest s with every hole in Delta_{s,e}.
    std::int64_t enclosing_level = 0;
};

struct SigmaResult {
    Verdict family = Verdict::Smooth;
    std::int64_t sigma = 0;
    std::int64_t e = 1;
    HoleSet holes;
    SigmaBounds bounds;
    /// Every level in [window_lo, window_hi] was checked to equal Delta_{s,e} minus the holes.
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
    /// Direct set check of the simplex step at sigma.
    bool step_verified = false;
};

/// `table` holds the normalized set (singular vertex at 0). Throws UnsupportedInstanceError for Other.
HoleSet compute_holes(SumsetTable& table, Verdict family);
HoleSet compute_holes(const GeneratorSet& a, const EngineOptions& options = {});

/// Throws BoundViolation when no s up to the proven upper bound qualifies.
SigmaResult sigma(SumsetTable& table, Verdict family);
SigmaResult sigma(const GeneratorSet& a, const EngineOptions& options = {});

/// sA = Delta_{s,e} minus the holes lying in that slice.
bool level_matches_holes(SumsetTable& table, std::int64_t s, const HoleSet& holes);

struct SigmaBoundsReport {
    bool lower_holds = false;
    bool alt_lower_holds = false;
    bool upper_holds = false;
    std::int64_t slack_lower = 0;
    std::int64_t slack_upper = 0;
};

/// Throws BoundViolation when lower <= sigma <= upper fails; the alternative lower bound is only reported.
SigmaBoundsReport verify_sigma_bounds(const SigmaResult& result);

} // namespace toric
