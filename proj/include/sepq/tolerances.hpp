#pragma once

namespace sepq {

// Default numerical thresholds. Zero classification is deliberately stricter
// than product comparison so masks do not flip under noise products tolerate.
inline constexpr double kTolNorm = 1e-9;         // relative, on sum |a_i|^2
inline constexpr double kTolZero = 1e-12;        // absolute, on |a_i|
inline constexpr double kTolPairProduct = 1e-9;  // relative, see products_equal()
inline constexpr double kTolRank = 1e-9;         // relative to the pivot magnitude^2

inline constexpr int kMaxEnumerateQubits = 10;
inline constexpr int kMaxDecomposeQubits = 14;

}  // namespace sepq
