#pragma once

// Reduction of classical expansions in a wide ambient rectangle to quantum
// expansions over the target rectangle: each shape is replaced by its n-core
// with q-degree the number of removed n-hooks, signed by hook heights, and
// the coefficient variables are folded by t_i -> t_{((i-1) mod n) + 1}.

#include <map>

#include "qhgrass/expansion.hpp"
#include "qhgrass/shapes.hpp"

namespace qhgrass {

Expansion quantumize(const std::map<WidePartition, TPoly>& classical, const Rect& target);

} // namespace qhgrass
