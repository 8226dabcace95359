#pragma once

// Torus fixed-point localizations: factorial Schur polynomials evaluated at
// boundary-step variables, the closed Psi form of column Pieri coefficients,
// the join-and-cut shape, and the classical column Pieri expansion they
// assemble into.

#include <functional>
#include <map>
#include <vector>

#include "qhgrass/expansion.hpp"
#include "qhgrass/poly.hpp"
#include "qhgrass/shapes.hpp"

namespace qhgrass {

// A semistandard tableau, rows top to bottom.
struct SSYT {
    std::vector<std::vector<int>> rows;
    bool operator==(const SSYT&) const = default;
};

// All SSYT of the given shape with entries in 1..alphabet, in row-major
// lexicographic order.
std::vector<SSYT> enumerate_ssyt(const std::vector<int>& shape, int alphabet);

// Evaluation point for the x-variables of a factorial Schur polynomial.
struct XSpec {
    std::vector<TPoly> values; // values[i-1] substitutes x_i
};

// x_i = t_{u_i(eta)}, the bottom-up boundary up-steps.
XSpec xspec_from_upsteps(const Partition& eta);
XSpec xspec_identity(int mprime); // x_i = t_i

// s_shape(x|t) = sum over SSYT of prod over boxes (i,j) of
// (x_{T(i,j)} - t_{T(i,j)+j-i}), with the shift variables reindexed through
// tmap. Organized as a column-transfer sum with zero-factor pruning; the
// literal tableau enumeration is kept in tests as the independent route.
TPoly factorial_schur(const std::vector<int>& shape, const XSpec& x,
                      const std::function<int(int)>& tmap = {});

// xi^gamma(eta): the restriction of the Schubert class gamma to the fixed
// point eta, both in the same rectangle. Vanishes exactly when gamma is not
// contained in eta.
TPoly xi(const Partition& gamma, const Partition& eta);

// xi^eta(eta) in factored form: one factor t_{u_{m-i+1}} - t_{s_j} per box.
std::vector<LinearFactor> xi_diag(const Partition& eta);
TPoly xi_diag_expanded(const Partition& eta);

// The cut shape lambda_mu in Rect(m-r, n+1) for a vertical r-strip
// lambda/mu with lambda in Rect(m, n+1), mu in Rect(m, n); throws
// NotVerticalStrip otherwise. Closed formula over the rows where lambda and
// mu agree.
Partition join_and_cut(const Partition& lam, const Partition& mu);

// Psi(eta, p') = sum over weakly increasing iota in [m'-p'+1]^{p'} of
// prod_j (t_{u_{iota_j + j - 1}} - t_{iota_j}).
TPoly psi(const Partition& eta, int pprime);
// One factor of a Psi summand, exposed for tests.
TPoly psi_factor(const Partition& eta, const std::vector<int>& iota, int j);

// Classical column Pieri in the one-column-wider rectangle:
// sigma_{(1)^p} . sigma_mu = sum over vertical r-strips lambda/mu of
// xi^{(1)^{p-r}}(lambda_mu) sigma_lambda in Rect(m, n+1).
std::map<Partition, TPoly> huangli_column_pieri(int p, const Partition& mu);

// Excited diagrams of a column inside eta: the independent witness route for
// column-shape restrictions. Each diagram contributes the product of its box
// weights t_{u_{m-i+1}} - t_{s_j}.
std::vector<std::vector<Box>> excited_column_diagrams(int k, const Partition& eta);
TPoly xi_column_via_excited(int k, const Partition& eta);

} // namespace qhgrass
