// SPDX-License-Identifier: Apache-2.0
#include "gravbec/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace gravbec {

std::vector<Vec3> sphere_sequence(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sphere_sequence: n must be >= 1");
    constexpr double golden = 0.6180339887498949;  // 1/phi
    // splitmix64 of the seed -> azimuthal phase in [0, 1)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    const double phase = static_cast<double>(z >> 11) * 0x1.0p-53;

    std::vector<Vec3> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    for (int i = 0; i < n; ++i) {
        const double z_coord = 1.0 - 2.0 * (i + 0.5) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z_coord * z_coord));
        double t = i * golden + phase;
        t -= std::floor(t);
        const double phi = two_pi * t;
        dirs.push_back({rho * std::cos(phi), rho * std::sin(phi), z_coord});
    }
    return dirs;
}

}  // namespace gravbec
