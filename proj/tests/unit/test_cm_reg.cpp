#include "oracle.hpp"

#include "toric/classify.hpp"
#include "toric/cm_reg.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace toric;

namespace {

LatticeVector v(std::initializer_list<std::int64_t> c) { return LatticeVector(std::vector<std::int64_t>(c)); }

bool has_maximizer(const RegularityResult& r, const LatticeVector& y, int i) {
    return std::find(r.maximizers.begin(), r.maximizers.end(), std::make_pair(y, i)) != r.maximizers.end();
}

} // namespace

TEST(Reg, QuarticMatchesSigma) {
    const auto r = reg(one_hole_quartic());
    EXPECT_EQ(r.reg, 2);
    EXPECT_EQ(r.sigma, 2);
    EXPECT_EQ(r.method, "one-singular");
    EXPECT_TRUE(r.certified);
    EXPECT_TRUE(has_maximizer(r, v({4, 2, 2}), -1));
    EXPECT_EQ(r.witness_y, v({4, 6, 6}));
    EXPECT_EQ(r.witness_i, 1);
}

TEST(Reg, EvenSexticHollowTriangle) {
    const auto r = reg(even_sextic());
    EXPECT_EQ(r.reg, 3);
    EXPECT_EQ(r.witness_y, v({6, 9, 15}));
    EXPECT_EQ(r.witness_i, 1);
    EXPECT_TRUE(has_maximizer(r, v({6, 9, 15}), 1));
}

TEST(Reg, ChartExample) {
    const auto r = reg(chart_example());
    EXPECT_EQ(r.reg, 4);
    EXPECT_LE(r.reg, *r.sigma + 1);
}

TEST(Reg, SmoothEqualsSigma) {
    EXPECT_EQ(reg(veronese(2, 3)).reg, 2);
    EXPECT_EQ(reg(minimal_smooth(2, 4)).reg, 4);
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = reg(smooth_random(2, 3 + trial % 2, 2, rng));
        EXPECT_EQ(r.reg, *r.sigma);
        EXPECT_EQ(r.method, "smooth");
    }
}

TEST(Reg, ReductionPath) {
    for (int d = 2; d <= 4; ++d) {
        const auto r = reg(one_singular_base(d, 2, 2));
        EXPECT_EQ(r.method, "e=D-reduction");
        EXPECT_EQ(r.reg, reg(veronese(d - 1, 2)).reg);
        EXPECT_EQ(r.witness_y[0], 0);
    }
    Rng rng(3);
    for (int trial = 0; trial < 4; ++trial) {
        const auto a = one_singular_random(2, 4, 4, 2, rng);
        const auto r = reg(a);
        EXPECT_EQ(r.method, "e=D-reduction");
        EXPECT_EQ(r.reg, reg(*classify(a).reduced).reg);
        EXPECT_LE(r.reg, *r.sigma + 1);
    }
}

TEST(Reg, ReducesToPoint) {
    const auto r = reg(GeneratorSet::create(1, {v({0}), v({2})}));
    EXPECT_EQ(r.reg, 0);
}

TEST(Reg, CoordinateSimplex) {
    const auto a = GeneratorSet::create(3, {v({0, 0, 0}), v({3, 0, 0}), v({0, 3, 0}), v({0, 0, 3})});
    const auto r = reg(a);
    EXPECT_EQ(r.reg, 0);
    EXPECT_EQ(r.method, "coordinate-simplex");
}

TEST(Reg, OtherNeedsCutoff) {
    const auto a = GeneratorSet::create(2, {v({0, 0}), v({5, 0}), v({0, 5}), v({1, 1})});
    EXPECT_THROW(reg(a), UnsupportedInstanceError);
    RegOptions ro;
    ro.cutoff_level = 3;
    const auto r = reg(a, ro);
    EXPECT_FALSE(r.certified);
    EXPECT_EQ(r.method, "lower-bound");
    EXPECT_EQ(r.cutoff_norm, 15);
    EXPECT_GE(r.reg, 0);
}

TEST(Reg, SingularVertexMappedBack) {
    const auto moved = move_vertex_to_origin(one_hole_quartic(), 2);
    const auto r = reg(moved);
    EXPECT_EQ(r.reg, 2);
    EXPECT_TRUE(has_maximizer(r, v({2, 2, 4}), -1));
    SumsetTable table(moved);
    EXPECT_EQ(reduced_homology(build_T(table, r.witness_y)).lowest_nonzero(), r.witness_i);
}

TEST(Reg, FieldsAgree) {
    for (const auto& a : {one_hole_quartic(), even_sextic(), chart_example()}) {
        const auto q = reg(a);
        for (FieldTag p : {2, 32003}) {
            RegOptions ro;
            ro.field = p;
            const auto r = reg(a, ro);
            EXPECT_EQ(r.reg, q.reg);
            EXPECT_TRUE(r.field_mismatches.empty());
        }
    }
}

TEST(Reg, ExtraLevelsDoNotChangeTheAnswer) {
    for (const auto& a : {one_hole_quartic(), even_sextic(), veronese(2, 4), minimal_smooth(2, 3)}) {
        const auto base = reg(a);
        RegOptions ro;
        ro.extra_levels = 2;
        const auto wide = reg(a, ro);
        EXPECT_EQ(wide.reg, base.reg);
        EXPECT_GT(wide.cutoff_norm, base.cutoff_norm);
    }
}

TEST(Reg, CollectedComplexesMatchOracle) {
    RegOptions ro;
    ro.collect = true;
    const auto r = reg(even_sextic(), ro);
    ASSERT_FALSE(r.complexes.empty());
    for (const auto& c : r.complexes) {
        auto q = reduced_homology(c).betti;
        auto o = oracle::homology_recheck(c.face_list(), c.vertices, 32003);
        q.resize(o.size(), 0);
        EXPECT_EQ(q, o);
    }
    EXPECT_TRUE(r.nonzero_levels.count({5, 1}) == 1);
}

TEST(Bounds, HerzogHibi) {
    EXPECT_EQ(herzog_hibi_bound(3, 2, 4).slack, 1);
    EXPECT_EQ(herzog_hibi_bound(2, 3, 2).bound, 2);
    EXPECT_THROW(herzog_hibi_bound(5, 2, 4), BoundViolation);
}

TEST(Bounds, OneSingularBound) {
    EXPECT_EQ(one_singular_bound(2, 2, 4, 2).bound, 5);
    EXPECT_EQ(one_singular_bound(1, 4, 2, 2).bound, 2);
    EXPECT_THROW(one_singular_bound(9, 2, 4, 2), BoundViolation);
}

TEST(Degree, KnownValues) {
    const auto q = degree(one_hole_quartic());
    EXPECT_EQ(q.theta, 8);
    EXPECT_EQ(q.degree, 8);
    EXPECT_EQ(q.codim, 4);
    EXPECT_EQ(degree(veronese(2, 3)).degree, 9);
    const auto s = degree(even_sextic());
    EXPECT_EQ(s.theta, 12);
    EXPECT_EQ(s.degree, 18);
    EXPECT_EQ(s.codim, 11);
}

TEST(Degree, OneSingularThetaIsDTimesE) {
    for (const auto& a : {one_hole_quartic(), even_sextic(), chart_example()}) {
        const auto report = classify(a);
        const auto r = degree(a, &report);
        EXPECT_EQ(r.theta, a.degree() * report.e);
    }
}

TEST(Degree, EarlyExitAgreesWithOracle) {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + trial % 3;
        const auto a = random_set(d, 2 + trial % 4, 2 + trial % 4, rng);
        const auto fast = degree(a);
        const auto slow = degree(a, nullptr, false);
        EXPECT_EQ(fast.theta, slow.theta);
        EXPECT_EQ(slow.theta, oracle::naive_theta(a.points(), a.degree()));
        EXPECT_LE(fast.minors_examined, slow.minors_examined);
    }
}

TEST(EG, Quartic) {
    const auto r = eg_check(one_hole_quartic());
    EXPECT_EQ(r.reg, 2);
    EXPECT_EQ(r.bound, 4);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.enforced);
}

TEST(EG, EnforcedInHigherDimension) {
    DegreeResult fake;
    fake.degree = 5;
    fake.codim = 4;
    EXPECT_THROW(eg_check(3, fake, Verdict::OneSingular, 3), BoundViolation);
    EXPECT_FALSE(eg_check(3, fake, Verdict::OneSingular, 2).holds);
    EXPECT_NO_THROW(eg_check(3, fake, Verdict::Other, 4));
}

TEST(Inequalities, SizeBoundValues) {
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(2, 5), 0);
    EXPECT_EQ(size_bound(2, 4, 2), 10);
    const auto r = eg_inequality_suite(2, 4, 2);
    EXPECT_EQ(r.simplex_count, 9);
    EXPECT_TRUE(r.size_holds);
}

TEST(Inequalities, SweepHolds) {
    for (int d = 3; d <= 6; ++d) {
        for (std::int64_t degree = 3; degree <= 10; ++degree) {
            for (std::int64_t e = 1; e <= degree; ++e) {
                if (degree % e != 0) {
                    continue;
                }
                const auto r = eg_inequality_suite(d, degree, e);
                EXPECT_TRUE(r.e_equals_D_holds);
                EXPECT_TRUE(r.e_below_D_holds);
                EXPECT_EQ(r.cubic_applicable, d == 3 && e < degree);
            }
        }
    }
    EXPECT_THROW(eg_inequality_suite(3, 6, 4), PreconditionError);
}
