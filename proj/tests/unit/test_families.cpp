#include "toric/classify.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"

#include <gtest/gtest.h>

using namespace toric;

TEST(Families, VeroneseSize) {
    EXPECT_EQ(veronese(2, 4).size(), 15u);
    EXPECT_EQ(veronese(3, 3).size(), 20u);
}

TEST(Families, MinimalSmoothSize) {
    EXPECT_EQ(minimal_smooth(2, 4).size(), 9u);
    EXPECT_EQ(minimal_smooth(1, 3).size(), 4u);
    EXPECT_EQ(minimal_smooth(2, 2).size(), 6u);
}

TEST(Families, NamedExamples) {
    EXPECT_EQ(chart_example().size(), 8u);
    EXPECT_EQ(chart_example().degree(), 6);
    EXPECT_EQ(one_hole_quartic().size(), 7u);
    EXPECT_EQ(even_sextic().degree(), 6);
    EXPECT_EQ(even_sextic().divisor(), 2);
    EXPECT_EQ(even_sextic().size(), 14u);
}

TEST(Families, SmoothRandomIsSmooth) {
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = smooth_random(1 + trial % 3, 2 + trial % 5, trial % 6, rng);
        EXPECT_EQ(classify(a).verdict, Verdict::Smooth);
    }
}

TEST(Families, OneSingularRandomHasRequestedDivisor) {
    Rng rng(2);
    for (int d : {2, 3}) {
        for (std::int64_t degree : {4, 6}) {
            for (std::int64_t e : {std::int64_t{2}, degree}) {
                for (int trial = 0; trial < 5; ++trial) {
                    const auto a = one_singular_random(d, degree, e, 3, rng);
                    const auto r = classify(a);
                    EXPECT_EQ(r.verdict, Verdict::OneSingular);
                    EXPECT_EQ(r.e, e);
                    EXPECT_EQ(r.singular_vertex, 0);
                }
            }
        }
    }
}

TEST(Families, SeedsAreReproducible) {
    Rng a(42);
    Rng b(42);
    EXPECT_EQ(smooth_random(2, 5, 4, a), smooth_random(2, 5, 4, b));
    EXPECT_EQ(one_singular_random(3, 6, 3, 3, a), one_singular_random(3, 6, 3, 3, b));
}

TEST(Families, ParameterErrors) {
    EXPECT_THROW(one_singular_base(2, 6, 4), ValidationError);
    EXPECT_THROW(one_singular_base(2, 2, 1), ValidationError);
    EXPECT_THROW(one_singular_base(1, 4, 2), ValidationError);
    EXPECT_THROW(veronese(0, 3), ValidationError);
}
