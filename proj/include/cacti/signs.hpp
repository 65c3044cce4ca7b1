#pragma once

/// Koszul sign bookkeeping.  The whole library runs on one rule: commuting two
/// symbols of total degrees a and b costs (-1)^{ab}.  Operation symbols are
/// weighted by their shifted degree (total degree minus one) when they move
/// past arguments; arguments are weighted by suspension (internal degree plus
/// one) on the Hochschild side and by their total degree on the tensor side.

#include <vector>

namespace cacti {

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Koszul sign of the permutation taking `source` to `target`, where both
/// sequences hold the same distinct symbol ids and `degrees[id]` is the symbol
/// degree.  Computed by weighted inversion counting.
inline int koszul_reorder_sign(const std::vector<int>& source,
                               const std::vector<int>& target,
                               const std::vector<long>& degrees) {
    // position of each id in the source
    std::vector<int> pos(degrees.size(), -1);
    for (std::size_t i = 0; i < source.size(); ++i) pos[source[i]] = static_cast<int>(i);
    long e = 0;
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = i + 1; j < target.size(); ++j)
            if (pos[target[i]] > pos[target[j]]) e += degrees[target[i]] * degrees[target[j]];
    return parity_sign(e);
}

/// Bridging sign between the cacti operation B_m and insertion-brace notation:
///   B_m(f, g_1..g_{m-1}) = (-1)^sigma f{g_1,...,g_{m-1}}
/// as a function of total degrees; s(x) = t(x) - 1.
inline long brace_bridge_exponent(long t_f, const std::vector<long>& t_gs) {
    long s_f = t_f - 1;
    long e = 0;
    for (std::size_t k = 0; k < t_gs.size(); ++k) {
        e += s_f * t_gs[k] + 1;
        for (std::size_t l = 0; l < k; ++l) e += t_gs[k] * (t_gs[l] - 1) + 1;
    }
    return e;
}

} // namespace cacti
