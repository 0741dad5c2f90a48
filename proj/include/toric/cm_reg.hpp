#pragma once

#include "toric/classify.hpp"
#include "toric/homology.hpp"
#include "toric/sumset_reg.hpp"

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toric {

struct RegOptions {
    FieldTag field = 0;
    /// Highest level |y|/D to enumerate; required (and only used) for verdict Other.
    std::optional<std::int64_t> cutoff_level;
    /// Added to the proven cutoff level.
    std::int64_t extra_levels = 0;
    /// Keep every distinct complex and the (level, i) pairs with nonzero homology.
    bool collect = false;
    /// e = D: also enumerate the unreduced set and compare.
    bool cross_check_reduction = true;
};

struct RegularityResult {
    std::int64_t reg = 0;
    LatticeVector witness_y;
    int witness_i = -1;
    std::int64_t cutoff_norm = 0;
    /// smooth, one-singular, e=D-reduction, coordinate-simplex or lower-bound
    std::string method;
    /// False for verdict Other: the value is only a lower bound.
    bool certified = true;
    FieldTag field = 0;
    std::optional<std::int64_t> sigma;
    std::int64_t points_examined = 0;
    /// Every (y, lowest nonzero i) attaining the maximum, in enumeration order (capped).
    std::vector<std::pair<LatticeVector, int>> maximizers;
    bool maximizers_truncated = false;
    /// y whose profile over the prime field differs from the one over Q.
    std::vector<LatticeVector> field_mismatches;
    // filled when RegOptions::collect is set
    std::vector<FaceComplex> complexes;
    std::set<std::pair<std::int64_t, int>> nonzero_levels;
};

/// Maximum of s - (i+1) over y in the semigroup with |y| = sD <= max_level*D and
/// nonzero reduced homology of T_y in degree i. `table` holds the set to enumerate.
RegularityResult briales_enumerate(SumsetTable& table, std::int64_t max_level, FieldTag field, bool collect);

RegularityResult reg(const GeneratorSet& a, const RegOptions& reg_options = {}, const EngineOptions& options = {});

struct BoundCheck {
    bool holds = false;
    std::int64_t bound = 0;
    std::int64_t slack = 0;
};

/// reg <= d(D-2) (D >= 3) or ceil(d/2) (D = 2). Throws BoundViolation.
BoundCheck herzog_hibi_bound(std::int64_t reg_value, int d, std::int64_t degree);
/// reg <= (D/e)[(d-1)(D-2) + D/e - 2] + 1 (D >= 3) or ceil((d-1)/2) (D = 2). Throws BoundViolation.
BoundCheck one_singular_bound(std::int64_t reg_value, int d, std::int64_t degree, std::int64_t e);

struct DegreeResult {
    mpz_class theta;
    mpz_class degree;
    std::int64_t codim = 0;
    std::uint64_t minors_examined = 0;
};

/// theta = gcd of maximal minors of the homogenized matrix; degree = D^{d+1}/theta.
/// With `report` given and OneSingular, theta = D e is cross-checked.
DegreeResult degree(const GeneratorSet& a, const ClassificationReport* report = nullptr, bool early_exit = true);

struct EGResult {
    std::int64_t reg = 0;
    mpz_class degree;
    std::int64_t codim = 0;
    mpz_class bound;
    bool holds = false;
    mpz_class slack;
    /// OneSingular with d >= 3: a failure throws.
    bool enforced = false;
};

EGResult eg_check(std::int64_t reg_value, const DegreeResult& deg, Verdict verdict, int d);
EGResult eg_check(const GeneratorSet& a, const RegOptions& reg_options = {}, const EngineOptions& options = {});

struct InequalityReport {
    int d = 0;
    std::int64_t degree = 0;
    std::int64_t e = 1;
    /// |{y in N_e^d : |y| <= D}| against ((D/e + d)/(D + d)) C(D+d, d); e < D only.
    bool size_applicable = false;
    mpz_class simplex_count;
    mpq_class size_bound;
    bool size_holds = true;
    /// (d-1)(D-2) <= D^{d-1} - C(D+d-1, d-1) + d
    bool e_equals_D_holds = true;
    /// (D/e)[(d-1)(D-2) + D/e - 2] <= D^d/e - size_bound + d; e < D only
    bool e_below_D_holds = true;
    /// d = 3: 5eD^3 - (3e^2+15e+6)D^2 + (34e-9e^2)D + 12e^2 >= 0
    bool cubic_applicable = false;
    bool cubic_holds = true;
};

/// Exact evaluation; throws BoundViolation inside d >= 3, D >= 3.
InequalityReport eg_inequality_suite(int d, std::int64_t degree, std::int64_t e);

/// ((D/e + d)/(D + d)) C(D+d, d).
mpq_class size_bound(int d, std::int64_t degree, std::int64_t e);

mpz_class binomial(std::int64_t n, std::int64_t k);

} // namespace toric
