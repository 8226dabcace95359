#include "qhgrass/rimhook.hpp"

namespace qhgrass {

Expansion quantumize(const std::map<WidePartition, TPoly>& classical, const Rect& target) {
    const int n = target.n;
    Expansion out(target);
    for (const auto& [gamma, coeff] : classical) {
        auto red = n_core_reduce(gamma, n, target);
        if (!red) continue;
        TPoly folded = substitute_indices(coeff, [&](int v) {
            return std::make_pair((v - 1) % n + 1, false);
        });
        if (red->sign < 0) folded = -folded;
        out.add(red->core, red->d, folded);
    }
    return out;
}

} // namespace qhgrass
