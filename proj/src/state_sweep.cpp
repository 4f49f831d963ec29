#include "qutrit/state_sweep.hpp"

#include <algorithm>
#include <vector>

#include "qutrit/parallel.hpp"

namespace qutrit {

namespace {

template <class ForEach>
double min_iq_impl(int count, std::uint64_t seed_base, int dim, EntropyRoute route,
                   ForEach&& for_each) {
    std::vector<double> iq(static_cast<size_t>(count));
    for_each(static_cast<size_t>(count), [&](size_t i) {
        const DensityMatrix state = random_density(dim, seed_base + i);
        iq[i] = subadditivity_report(state, route).iq;
    });
    return *std::min_element(iq.begin(), iq.end());
}

}  // namespace

double min_iq_padded_qutrit(int count, std::uint64_t seed_base) {
    return min_iq_impl(count, seed_base, 3, EntropyRoute::PaddedQutrit,
                       [](size_t n, auto&& body) { parallel_for(n, body); });
}

double min_iq_padded_qutrit_serial(int count, std::uint64_t seed_base) {
    return min_iq_impl(count, seed_base, 3, EntropyRoute::PaddedQutrit,
                       [](size_t n, auto&& body) { serial_for(n, body); });
}

double min_iq_padded_6x6(int count, std::uint64_t seed_base) {
    return min_iq_impl(count, seed_base, 4, EntropyRoute::Padded6x6,
                       [](size_t n, auto&& body) { parallel_for(n, body); });
}

double min_iq_padded_6x6_serial(int count, std::uint64_t seed_base) {
    return min_iq_impl(count, seed_base, 4, EntropyRoute::Padded6x6,
                       [](size_t n, auto&& body) { serial_for(n, body); });
}

}  // namespace qutrit
