#include "craftbench/noise.hpp"

#include <algorithm>
#include <cmath>

namespace craftbench {

namespace {

// (1/sqrt(3) - 1) / 2 and (sqrt(3) - 1) / 2
constexpr double kStretch = -0.211324865405187117745425609749;
constexpr double kSquish = 0.366025403784438646763723170753;
constexpr double kNorm = 47.0;

constexpr std::array<std::int8_t, 16> kGradients = {5, 2, 2, 5, -5, 2, -2, 5, 5, -2, 2, -5, -5, -2, -2, -5};

constexpr std::uint64_t kLcgMul = 6364136223846793005ULL;
constexpr std::uint64_t kLcgAdd = 1442695040888963407ULL;

auto fast_floor(double x) noexcept -> int {
    const int xi = static_cast<int>(x);
    return x < xi ? xi - 1 : xi;
}

auto attenuate(double dx, double dy) noexcept -> double {
    const double a = 2.0 - dx * dx - dy * dy;
    if (a <= 0.0) {
        return 0.0;
    }
    const double a2 = a * a;
    return a2 * a2;
}

}    // namespace

OpenSimplex2D::OpenSimplex2D(std::uint64_t seed) noexcept {
    std::array<std::uint8_t, 256> source{};
    for (int i = 0; i < 256; ++i) {
        source[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < 3; ++i) {
        seed = seed * kLcgMul + kLcgAdd;
    }
    for (int i = 255; i >= 0; --i) {
        seed = seed * kLcgMul + kLcgAdd;
        const auto r = static_cast<std::size_t>((seed + 31) % static_cast<std::uint64_t>(i + 1));
        perm_[static_cast<std::size_t>(i)] = source[r];
        source[r] = source[static_cast<std::size_t>(i)];
    }
}

auto OpenSimplex2D::extrapolate(int xsb, int ysb, double dx, double dy) const noexcept -> double {
    const auto px = perm_[static_cast<std::size_t>(xsb & 0xFF)];
    const auto index = perm_[static_cast<std::size_t>((px + ysb) & 0xFF)] & 0x0E;
    return kGradients[index] * dx + kGradients[index + 1] * dy;
}

auto OpenSimplex2D::operator()(double x, double y) const noexcept -> double {
    // Place input on the stretched (skewed) lattice.
    const double stretch_offset = (x + y) * kStretch;
    const double xs = x + stretch_offset;
    const double ys = y + stretch_offset;

    int xsb = fast_floor(xs);
    int ysb = fast_floor(ys);

    const double squish_offset = (xsb + ysb) * kSquish;
    const double xb = xsb + squish_offset;
    const double yb = ysb + squish_offset;

    const double xins = xs - xsb;
    const double yins = ys - ysb;
    const double in_sum = xins + yins;

    double dx0 = x - xb;
    double dy0 = y - yb;

    double value = 0.0;

    // (1, 0) and (0, 1) vertices contribute for both triangles.
    const double dx1 = dx0 - 1 - kSquish;
    const double dy1 = dy0 - kSquish;
    if (const double a = attenuate(dx1, dy1); a > 0.0) {
        value += a * extrapolate(xsb + 1, ysb, dx1, dy1);
    }
    const double dx2 = dx0 - kSquish;
    const double dy2 = dy0 - 1 - kSquish;
    if (const double a = attenuate(dx2, dy2); a > 0.0) {
        value += a * extrapolate(xsb, ysb + 1, dx2, dy2);
    }

    int xsv_ext = 0;
    int ysv_ext = 0;
    double dx_ext = 0.0;
    double dy_ext = 0.0;
    if (in_sum <= 1.0) {
        const double zins = 1.0 - in_sum;
        if (zins > xins || zins > yins) {
            if (xins > yins) {
                xsv_ext = xsb + 1;
                ysv_ext = ysb - 1;
                dx_ext = dx0 - 1;
                dy_ext = dy0 + 1;
            } else {
                xsv_ext = xsb - 1;
                ysv_ext = ysb + 1;
                dx_ext = dx0 + 1;
                dy_ext = dy0 - 1;
            }
        } else {
            xsv_ext = xsb + 1;
            ysv_ext = ysb + 1;
            dx_ext = dx0 - 1 - 2 * kSquish;
            dy_ext = dy0 - 1 - 2 * kSquish;
        }
    } else {
        const double zins = 2.0 - in_sum;
        if (zins < xins || zins < yins) {
            if (xins > yins) {
                xsv_ext = xsb + 2;
                ysv_ext = ysb;
                dx_ext = dx0 - 2 - 2 * kSquish;
                dy_ext = dy0 - 2 * kSquish;
            } else {
                xsv_ext = xsb;
                ysv_ext = ysb + 2;
                dx_ext = dx0 - 2 * kSquish;
                dy_ext = dy0 - 2 - 2 * kSquish;
            }
        } else {
            dx_ext = dx0;
            dy_ext = dy0;
            xsv_ext = xsb;
            ysv_ext = ysb;
        }
        xsb += 1;
        ysb += 1;
        dx0 = dx0 - 1 - 2 * kSquish;
        dy0 = dy0 - 1 - 2 * kSquish;
    }

    if (const double a = attenuate(dx0, dy0); a > 0.0) {
        value += a * extrapolate(xsb, ysb, dx0, dy0);
    }
    if (const double a = attenuate(dx_ext, dy_ext); a > 0.0) {
        value += a * extrapolate(xsv_ext, ysv_ext, dx_ext, dy_ext);
    }

    return std::clamp(value / kNorm, -1.0, 1.0);
}

auto noise2(std::uint64_t seed, double x, double y) noexcept -> double {
    return OpenSimplex2D(seed)(x, y);
}

}    // namespace craftbench
