#pragma once

// The equivariant quantum Pieri rules on the cylinder: expansions of
// sigma_{(1)^p} * sigma_mu and sigma_{(k)} * sigma_mu in the Schubert basis,
// with coefficients built from addable-box weights.

#include <vector>

#include "qhgrass/cylinder.hpp"
#include "qhgrass/expansion.hpp"

namespace qhgrass {

// A box of mu whose row closes flush with a vertical strip: row i with
// lambda[d]_i = mu_i >= 1, located at (i, mu_i). Stats:
//   u: index of the vertical boundary step at the box's right edge,
//   r: row counted from the bottom of the window, r = m - i + 1,
//   b: boxes of the extended strip strictly below row i (filled per
//      extension; candidates carry the bare-strip count).
struct AddableBox {
    int row = 0;
    int col = 0;
    int u = 0;
    int r = 0;
    int b = 0;
};

// wt^v(alpha) = t_u - t_{r-b}; always a positive root sum since u > r-b >= 1.
TPoly wt_v(const AddableBox& alpha);
LinearFactor wt_v_factor(const AddableBox& alpha);

// Horizontal counterpart: bottom box of column j with stats
//   s: index of the horizontal boundary step below the box,
//   c: column counted from the right edge of the window, c = (n-m) - j + 1,
//   rt: boxes of the extended strip in cylinder columns strictly right of j
//       (by column residue).
struct HAddableBox {
    int row = 0;
    int col = 0;
    int s = 0;
    int c = 0;
    int rt = 0;
};

// wt^h(alpha) = t_{n+1-(c-rt)} - t_s.
TPoly wt_h(const HAddableBox& alpha, int n);
LinearFactor wt_h_factor(const HAddableBox& alpha, int n);

std::vector<AddableBox> addable_candidates(const CylindricSkew& skew);

// All ways to grow a vertical r-strip skew to a vertical p-strip by adding
// p-r addable boxes, with the b stat completed per extension. Weights are
// listed top row first. Empty when the skew is not a vertical strip or has
// more than p boxes.
struct Extension {
    std::vector<AddableBox> added;
    std::vector<LinearFactor> weights;
};
std::vector<Extension> extensions(const CylindricSkew& skew, int p);

enum class PieriShape { Column, Row };

// sigma_{(1)^p} * sigma_mu for 1 <= p <= m (InvalidP otherwise).
Expansion column_pieri(int p, const Partition& mu);

// sigma_{(k)} * sigma_mu for 1 <= k <= n-m (InvalidK otherwise). Computed by
// transposing to the dual rectangle and mapping back with t_i -> -t_{n+1-i};
// the direct horizontal-weight computation is asserted equal.
Expansion row_pieri(int k, const Partition& mu);

// Horizontal-strip enumeration with wt^h weights, no transposition.
Expansion row_pieri_direct(int k, const Partition& mu);

// The t = 0 shadow: 1 for each full p-strip (resp. k-strip) target, nothing
// else. Matches specialize_to_zero of the equivariant rules.
std::map<TermKey, Int> postnikov_pieri(PieriShape shape, int size, const Partition& mu);

// Bilinear extension of the column rule to an expansion; q-degrees add.
Expansion apply_column_pieri(int p, const Expansion& e);

} // namespace qhgrass
