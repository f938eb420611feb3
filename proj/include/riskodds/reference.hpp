#pragma once

#include <array>

namespace riskodds::reference {

// Published minimum-attacker comparison table: defender counts 2..15 by
// target probabilities 20%..80%, one row pair (VC, AC) per defender count.
inline constexpr int kMinDefenders = 2;
inline constexpr int kMaxDefenders = 15;
inline constexpr std::array<int, 7> kTargets = {20, 30, 40, 50, 60, 70, 80};

/// Published VC cell (minimum attacking armies); def_actual in 2..15,
/// target one of kTargets.
int published_vc(int def_actual, int target_percent);

/// Published AC cell.
int published_ac(int def_actual, int target_percent);

}  // namespace riskodds::reference
