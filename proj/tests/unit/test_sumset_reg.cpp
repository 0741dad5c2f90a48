#include "oracle.hpp"

#include "toric/classify.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"
#include "toric/sumset_reg.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace toric;

namespace {

LatticeVector v(std::initializer_list<std::int64_t> c) { return LatticeVector(std::vector<std::int64_t>(c)); }

} // namespace

TEST(SigmaBounds, Formulas) {
    const auto b = sigma_bounds(Verdict::OneSingular, 2, 4, 2);
    EXPECT_EQ(b.t0, 2);
    EXPECT_EQ(b.s0, 4);
    EXPECT_EQ(b.lower, 2);
    EXPECT_EQ(b.upper, 4);
    const auto s = sigma_bounds(Verdict::Smooth, 3, 5, 1);
    EXPECT_EQ(s.upper, 9);
    EXPECT_EQ(s.lower, 3);
    EXPECT_EQ(sigma_bounds(Verdict::Smooth, 5, 2, 1).upper, 3);
    EXPECT_EQ(sigma_bounds(Verdict::OneSingular, 5, 2, 2).upper, 2);
    EXPECT_THROW(sigma_bounds(Verdict::Other, 2, 4, 1), UnsupportedInstanceError);
}

TEST(Holes, QuarticHasOneHole) {
    const auto h = compute_holes(one_hole_quartic());
    EXPECT_EQ(h.points, (std::vector<LatticeVector>{v({1, 1})}));
    EXPECT_EQ(h.enclosing_level, 1);
}

TEST(Holes, SmoothSetsHaveNone) {
    EXPECT_TRUE(compute_holes(veronese(2, 3)).points.empty());
    EXPECT_TRUE(compute_holes(minimal_smooth(3, 4)).points.empty());
}

TEST(Holes, EvenSexticHasNone) { EXPECT_TRUE(compute_holes(even_sextic()).points.empty()); }

TEST(Holes, ChartExampleAgreesWithMembershipOracle) {
    const auto a = chart_example();
    const auto h = compute_holes(a);
    EXPECT_EQ(h.points.size(), 8u);
    std::vector<LatticeVector> gens;
    for (const auto& p : a.points()) {
        if (p.norm() > 0) {
            gens.push_back(p);
        }
    }
    const std::set<LatticeVector> holes(h.points.begin(), h.points.end());
    for (const auto& y : oracle::naive_simplex(2, 24, a.divisor())) {
        EXPECT_EQ(holes.count(y) == 1, !oracle::naive_member(gens, y)) << y.to_string();
    }
}

TEST(Holes, OtherIsUnsupported) {
    const auto a = GeneratorSet::create(2, {v({0, 0}), v({5, 0}), v({0, 5}), v({1, 1})});
    EXPECT_THROW(compute_holes(a), UnsupportedInstanceError);
    EXPECT_THROW(sigma(a), UnsupportedInstanceError);
}

TEST(Sigma, QuarticWindow) {
    const auto a = one_hole_quartic();
    const auto r = sigma(a);
    EXPECT_EQ(r.sigma, 2);
    EXPECT_EQ(r.e, 2);
    EXPECT_TRUE(r.step_verified);
    SumsetTable table(a);
    EXPECT_FALSE(level_matches_holes(table, 1, r.holes));
    for (std::int64_t s = 2; s <= 8; ++s) {
        EXPECT_TRUE(level_matches_holes(table, s, r.holes)) << s;
    }
    EXPECT_EQ(table.level(1).cardinality(), 7u);
    EXPECT_EQ(table.level(2).cardinality(), 24u);
}

TEST(Sigma, EvenSexticLevelTwoMissesOnePoint) {
    const auto a = even_sextic();
    SumsetTable table(a);
    EXPECT_EQ(table.level(2).complement(), (std::vector<LatticeVector>{v({3, 9})}));
    const auto r = sigma(a);
    EXPECT_TRUE(r.holes.points.empty());
    EXPECT_EQ(r.sigma, 3);
}

TEST(Sigma, ChartExample) {
    const auto r = sigma(chart_example());
    EXPECT_EQ(r.sigma, 4);
    EXPECT_EQ(r.family, Verdict::OneSingular);
}

TEST(Sigma, VeroneseClosedForm) {
    for (int d = 1; d <= 3; ++d) {
        for (std::int64_t degree = 2; degree <= 6; ++degree) {
            EXPECT_EQ(sigma(veronese(d, degree)).sigma, d - d / degree) << d << " " << degree;
        }
    }
}

TEST(Sigma, MinimalSmoothClosedForm) {
    for (int d = 1; d <= 3; ++d) {
        for (std::int64_t degree = 3; degree <= 6; ++degree) {
            EXPECT_EQ(sigma(minimal_smooth(d, degree)).sigma, d * (degree - 2)) << d << " " << degree;
        }
    }
}

TEST(Sigma, QuadraticClosedForms) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_EQ(sigma(veronese(d, 2)).sigma, d - d / 2);
        if (d >= 2) {
            EXPECT_EQ(sigma(one_singular_base(d, 2, 2)).sigma, d / 2);
        }
    }
}

TEST(Sigma, BoundsHoldOnRandomFamilies) {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + trial % 3;
        const std::int64_t degree = 3 + trial % 3;
        const auto r = sigma(smooth_random(d, degree, 3, rng));
        const auto rep = verify_sigma_bounds(r);
        EXPECT_TRUE(rep.lower_holds && rep.upper_holds);
    }
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 2;
        const std::int64_t degree = 4;
        const std::int64_t e = trial % 4 < 2 ? 2 : 4;
        const auto r = sigma(one_singular_random(d, degree, e, 2, rng));
        const auto rep = verify_sigma_bounds(r);
        EXPECT_TRUE(rep.lower_holds && rep.upper_holds);
        EXPECT_LE(r.window_lo, r.window_hi);
    }
}

TEST(Sigma, SingularVertexIsNormalized) {
    // quartic with homogeneous coordinates rotated: vertex 1 is singular
    const auto base = one_hole_quartic();
    const auto moved = move_vertex_to_origin(base, 1);
    const auto r = classify(moved);
    ASSERT_EQ(r.singular_vertex, 1);
    EXPECT_EQ(sigma(moved).sigma, 2);
}

TEST(Sigma, IsMinimalForSmoothSets) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = smooth_random(2, 3 + trial % 3, 2, rng);
        const auto r = sigma(a);
        if (r.sigma > r.bounds.lower) {
            SumsetTable table(a);
            const auto& below = table.level(r.sigma - 1);
            EXPECT_LT(below.cardinality(), below.slice().size());
        }
    }
}
