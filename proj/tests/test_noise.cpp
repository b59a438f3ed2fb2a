#include <gtest/gtest.h>

#include <cmath>

#include "craftbench/noise.hpp"
#include "craftbench/rng.hpp"

using namespace craftbench;

TEST(Noise, Deterministic) {
    OpenSimplex2D a(11);
    OpenSimplex2D b(11);
    for (double x = -5.0; x < 5.0; x += 0.37) {
        EXPECT_EQ(a(x, 2.0 * x), b(x, 2.0 * x));
        EXPECT_EQ(a(x, 2.0 * x), noise2(11, x, 2.0 * x));
    }
}

TEST(Noise, SeedsGiveDifferentFields) {
    OpenSimplex2D a(1);
    OpenSimplex2D b(2);
    int differ = 0;
    for (int i = 0; i < 100; ++i) {
        differ += a(i * 0.31, i * 0.17) != b(i * 0.31, i * 0.17) ? 1 : 0;
    }
    EXPECT_GT(differ, 90);
}

TEST(Noise, RangeWithinUnitInterval) {
    OpenSimplex2D n(3);
    Rng r(4);
    double lo = 1.0;
    double hi = -1.0;
    for (int i = 0; i < 100000; ++i) {
        const double v = n(r.uniform() * 400.0 - 200.0, r.uniform() * 400.0 - 200.0);
        ASSERT_GE(v, -1.0);
        ASSERT_LE(v, 1.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Not degenerate: the field spans a good part of the range.
    EXPECT_LT(lo, -0.5);
    EXPECT_GT(hi, 0.5);
}

// Finite differences stay under a Lipschitz bound, measured at about 2.3
// over 1e5 samples; the test allows 3.
TEST(Noise, ContinuousWithBoundedSlope) {
    OpenSimplex2D n(3);
    Rng r(1);
    for (int i = 0; i < 20000; ++i) {
        const double x = r.uniform() * 200.0 - 100.0;
        const double y = r.uniform() * 200.0 - 100.0;
        const double v = n(x, y);
        for (double eps : {1e-3, 1e-5, 1e-7}) {
            ASSERT_LE(std::fabs(n(x + eps, y) - v), 3.0 * eps) << x << "," << y;
            ASSERT_LE(std::fabs(n(x, y + eps) - v), 3.0 * eps) << x << "," << y;
        }
    }
}
