#pragma once

#include <cstdint>

namespace wittpack {

// Desk-scale ceilings. Everything in this library is exact arithmetic over
// tiny fields; the ceilings keep exhaustive enumeration cheap and are the
// single place to raise if a larger experiment is ever wanted.
inline constexpr int kMaxPrime = 97;
inline constexpr int kMaxExtensionDegree = 4;
inline constexpr std::uint32_t kEnumerationCeiling = 1'000'000;

// Default bound for torsion-order searches over the rationals. Orders up to
// 6 are all that ever occur here; the slack catches regressions.
inline constexpr int kRatOrderBound = 16;

}  // namespace wittpack
