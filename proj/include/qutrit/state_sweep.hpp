#pragma once

#include <cstdint>

#include "qutrit/entropy.hpp"

namespace qutrit {

/// Minimum iq over `count` seeded random qutrit states pushed through the
/// padded-qutrit route. Sample i uses seed seed_base + i, so the parallel and
/// serial versions see identical states and agree exactly.
double min_iq_padded_qutrit(int count, std::uint64_t seed_base);
double min_iq_padded_qutrit_serial(int count, std::uint64_t seed_base);

/// Same sweep for random 4x4 states through the center-padded 6x6 route.
double min_iq_padded_6x6(int count, std::uint64_t seed_base);
double min_iq_padded_6x6_serial(int count, std::uint64_t seed_base);

}  // namespace qutrit
