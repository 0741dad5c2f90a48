#include "toric/families.hpp"

#include "toric/classify.hpp"
#include "toric/errors.hpp"

#include <set>

namespace toric {

namespace {

GeneratorSet from_set(int d, const std::set<LatticeVector>& pts) {
    return GeneratorSet::create(d, std::vector<LatticeVector>(pts.begin(), pts.end()));
}

LatticeVector point(std::initializer_list<std::int64_t> c) { return LatticeVector(std::vector<std::int64_t>(c)); }

void check_params(int d, std::int64_t degree) {
    if (d < 1 || degree < 2) {
        throw ValidationError("family parameters need d >= 1 and D >= 2");
    }
}

LatticeVector random_point(const SimplexSlice& slice, Rng& rng) { return slice.unrank(rng() % slice.size()); }

} // namespace

GeneratorSet veronese(int d, std::int64_t degree) {
    check_params(d, degree);
    const SimplexSlice slice(d, degree, 1, 1);
    std::vector<LatticeVector> pts;
    for (std::uint64_t r = 0; r < slice.size(); ++r) {
        pts.push_back(slice.unrank(r));
    }
    return GeneratorSet::create(d, std::move(pts));
}

GeneratorSet minimal_smooth(int d, std::int64_t degree) {
    check_params(d, degree);
    std::set<LatticeVector> pts{LatticeVector::zero(d)};
    for (int i = 0; i < d; ++i) {
        pts.insert(LatticeVector::axis(d, i, 1));
        pts.insert(LatticeVector::axis(d, i, degree - 1));
        pts.insert(LatticeVector::axis(d, i, degree));
        for (int j = 0; j < d; ++j) {
            if (i != j) {
                pts.insert(LatticeVector::axis(d, i, 1) + LatticeVector::axis(d, j, degree - 1));
            }
        }
    }
    return from_set(d, pts);
}

GeneratorSet smooth_random(int d, std::int64_t degree, int extras, Rng& rng) {
    const auto base = minimal_smooth(d, degree);
    std::set<LatticeVector> pts(base.points().begin(), base.points().end());
    const SimplexSlice slice(d, degree, 1, 1);
    for (int k = 0; k < extras; ++k) {
        pts.insert(random_point(slice, rng));
    }
    return from_set(d, pts);
}

GeneratorSet one_singular_base(int d, std::int64_t degree, std::int64_t e) {
    check_params(d, degree);
    if (e < 1 || degree % e != 0) {
        throw ValidationError("e must be a positive divisor of D");
    }
    if (e == 1 && degree == 2) {
        throw ValidationError("D = 2 forces e = 2 for a single singular point");
    }
    if (e > 1 && d == 1) {
        throw ValidationError("d = 1 with e > 1 gives a non-normalized set");
    }
    std::set<LatticeVector> pts{LatticeVector::zero(d)};
    for (int i = 0; i < d; ++i) {
        pts.insert(LatticeVector::axis(d, i, degree));
        pts.insert(LatticeVector::axis(d, i, degree - e));
        for (int j = 0; j < d; ++j) {
            if (i != j) {
                pts.insert(LatticeVector::axis(d, i, degree - 1) + LatticeVector::axis(d, j, 1));
            }
        }
    }
    return from_set(d, pts);
}

GeneratorSet one_singular_random(int d, std::int64_t degree, std::int64_t e, int extras, Rng& rng) {
    const auto base = one_singular_base(d, degree, e);
    const SimplexSlice slice(d, degree, 1, e);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::set<LatticeVector> pts(base.points().begin(), base.points().end());
        for (int k = 0; k < extras; ++k) {
            auto p = random_point(slice, rng);
            if (e == degree && p.norm() != degree && p.norm() != 0) {
                continue;
            }
            pts.insert(std::move(p));
        }
        auto candidate = from_set(d, pts);
        const auto report = classify(candidate);
        if (report.verdict == Verdict::OneSingular && report.singular_vertex == 0 && report.e == e) {
            return candidate;
        }
    }
    throw ValidationError("could not sample a one-singular set for these parameters");
}

GeneratorSet random_set(int d, std::int64_t degree, int extras, Rng& rng) {
    check_params(d, degree);
    std::set<LatticeVector> pts{LatticeVector::zero(d)};
    for (int i = 0; i < d; ++i) {
        pts.insert(LatticeVector::axis(d, i, degree));
    }
    const SimplexSlice slice(d, degree, 1, 1);
    for (int k = 0; k < extras; ++k) {
        pts.insert(random_point(slice, rng));
    }
    return from_set(d, pts);
}

GeneratorSet chart_example() {
    return GeneratorSet::create(2, {point({0, 0}), point({6, 0}), point({0, 6}), point({1, 5}), point({5, 1}),
                                    point({0, 4}), point({4, 0}), point({1, 1})});
}

GeneratorSet one_hole_quartic() {
    return GeneratorSet::create(2, {point({0, 0}), point({4, 0}), point({0, 4}), point({3, 1}), point({1, 3}),
                                    point({2, 0}), point({0, 2})});
}

GeneratorSet even_sextic() {
    std::vector<LatticeVector> pts;
    for (std::int64_t a = 0; a <= 6; ++a) {
        for (std::int64_t b = 0; a + b <= 6; ++b) {
            if ((a + b) % 2 == 0 && !(a == 2 && b == 4) && !(a == 3 && b == 3)) {
                pts.push_back(point({a, b}));
            }
        }
    }
    return GeneratorSet::create(2, std::move(pts));
}

} // namespace toric
