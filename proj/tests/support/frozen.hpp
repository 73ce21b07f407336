// Regression constants for the sample polygon pair (default configuration:
// 5x5 kernel, sigma 1, peak divisor 0.1621, margin 5). Locked once from the
// independent reference pipeline in support/oracle.*; every build must
// reproduce them to 1e-9 relative.

#ifndef EDGECURRENT_TESTS_FROZEN_HPP
#define EDGECURRENT_TESTS_FROZEN_HPP

namespace frozen {

inline constexpr double kSampleScore = 625.81304582479493;    // E(P1, P2)
inline constexpr double kSampleSelf1 = 1649.9559666498340;    // E(P1, P1)
inline constexpr double kSampleSelf2 = 1541.7161541567091;    // E(P2, P2)
inline constexpr double kSampleDistance = 1940.0460291569530; // d(P1, P2)

inline constexpr int kSampleRows = 55;
inline constexpr int kSampleCols = 60;

} // namespace frozen

#endif
