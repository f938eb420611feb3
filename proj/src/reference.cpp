#include "riskodds/reference.hpp"

#include <stdexcept>

namespace riskodds::reference {

namespace {

// Minimum attacking armies by defender count (rows 2..15) and target
// probability (20..80%), as published. The table is treated as reference
// data; the verification tooling reports suspected transcription errors
// rather than hiding them.
constexpr int kVc[14][7] = {
    {4, 4, 5, 5, 5, 5, 6},        // D_hat = 2
    {4, 4, 5, 6, 6, 6, 8},        // 3
    {5, 5, 6, 6, 7, 8, 9},        // 4
    {5, 6, 6, 7, 8, 9, 10},       // 5
    {6, 7, 7, 8, 9, 10, 11},      // 6
    {6, 7, 8, 9, 10, 11, 12},     // 7
    {7, 8, 9, 10, 11, 12, 13},    // 8
    {8, 8, 10, 10, 12, 13, 14},   // 9
    {8, 9, 10, 11, 13, 14, 15},   // 10
    {9, 10, 11, 12, 13, 15, 16},  // 11
    {9, 11, 12, 13, 14, 16, 17},  // 12
    {10, 12, 13, 14, 15, 17, 18}, // 13
    {11, 12, 13, 15, 16, 18, 19}, // 14
    {12, 13, 14, 16, 17, 18, 20}, // 15
};

constexpr int kAc[14][7] = {
    {3, 3, 4, 4, 4, 5, 6},        // D_hat = 2
    {3, 3, 4, 5, 5, 6, 7},        // 3
    {4, 4, 5, 6, 6, 7, 8},        // 4
    {4, 5, 5, 6, 7, 8, 9},        // 5
    {5, 6, 6, 7, 8, 9, 10},       // 6
    {5, 6, 7, 8, 9, 10, 11},      // 7
    {6, 7, 8, 9, 10, 11, 12},     // 8
    {7, 8, 9, 10, 11, 12, 13},    // 9
    {7, 8, 10, 10, 12, 13, 15},   // 10
    {8, 9, 10, 11, 13, 14, 16},   // 11
    {9, 10, 11, 12, 14, 15, 17},  // 12
    {9, 11, 12, 13, 15, 16, 18},  // 13
    {10, 11, 13, 14, 15, 17, 19}, // 14
    {11, 12, 13, 15, 16, 18, 20}, // 15
};

int target_index(int target_percent) {
    for (size_t i = 0; i < kTargets.size(); ++i)
        if (kTargets[i] == target_percent) return static_cast<int>(i);
    throw std::invalid_argument("target percent not in the published table");
}

int defender_index(int def_actual) {
    if (def_actual < kMinDefenders || def_actual > kMaxDefenders)
        throw std::invalid_argument("defender count not in the published table");
    return def_actual - kMinDefenders;
}

}  // namespace

int published_vc(int def_actual, int target_percent) {
    return kVc[defender_index(def_actual)][target_index(target_percent)];
}

int published_ac(int def_actual, int target_percent) {
    return kAc[defender_index(def_actual)][target_index(target_percent)];
}

}  // namespace riskodds::reference
