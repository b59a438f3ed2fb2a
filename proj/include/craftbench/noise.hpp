#pragma once

#include <array>
#include <cstdint>

namespace craftbench {

// Two-dimensional OpenSimplex gradient noise. The permutation is derived from
// the seed with a fixed 64-bit LCG and the gradient table is fixed, so values
// depend only on IEEE double arithmetic.
class OpenSimplex2D {
public:
    explicit OpenSimplex2D(std::uint64_t seed) noexcept;

    // Continuous in (x, y); clamped to [-1, 1].
    auto operator()(double x, double y) const noexcept -> double;

private:
    auto extrapolate(int xsb, int ysb, double dx, double dy) const noexcept -> double;

    std::array<std::uint8_t, 256> perm_{};
};

// Convenience form building the permutation per call; prefer OpenSimplex2D
// when sampling many points with one seed.
auto noise2(std::uint64_t seed, double x, double y) noexcept -> double;

}    // namespace craftbench
