#pragma once
//
// Independent verification routes for equivariant (quantum) Schubert products:
//
//  * gkm_classical_product: triangular solve for structure constants from the
//    restriction (fixed-point localization) values alone, followed by a full
//    consistency pass over every torus fixed point.
//  * eq_quantum_product: classical product in the wide ambient Gr(m, 2n-1),
//    pushed down to quantum Gr(m,n) by hook removal.
//  * levelrank_check / crosscheck_pieri: equality checks between the rule
//    routes, the localization routes, and the strange-duality image.
//

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhgrass/expansion.hpp"
#include "qhgrass/localization.hpp"
#include "qhgrass/shapes.hpp"

namespace qhgrass {

// Memoizes restriction values xi^gamma(eta) across repeated solves. The value
// depends only on the padded part vectors (the rectangle width only gates
// validity), so one cache may serve rectangles of every size.
class XiCache {
public:
    const TPoly& get(const Partition& gamma, const Partition& eta);
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, TPoly> entries_;
};

// Structure constants of sigma_lambda . sigma_mu in H*_T(Gr(m,n)) obtained by
// solving the localization system fixed point by fixed point in increasing
// size order.  Every returned coefficient is checked homogeneous of degree
// |lambda|+|mu|-|nu|, and the full system is re-verified at EVERY fixed point
// of the rectangle before returning.  `cap` bounds the number of fixed points
// enumerated for that verification pass (binomial(n,m) must not exceed it).
std::map<Partition, TPoly> gkm_classical_product(const Partition& lam, const Partition& mu,
                                                 XiCache& cache, std::int64_t cap = 1000000);
std::map<Partition, TPoly> gkm_classical_product(const Partition& lam, const Partition& mu,
                                                 std::int64_t cap = 1000000);

// sigma_lambda * sigma_mu in QH*_T(Gr(m,n)): classical product in
// Gr(m, 2n-1) followed by n-hook reduction with the cyclic parameter folding.
// `cap` bounds binomial(2n-1, m); TooLarge is thrown beyond it.
Expansion eq_quantum_product(const Partition& lam, const Partition& mu, XiCache& cache,
                             std::int64_t cap = 10000);
Expansion eq_quantum_product(const Partition& lam, const Partition& mu,
                             std::int64_t cap = 10000);

// One verification failure: the offending product, the offending term, and
// the two canonical renderings that were supposed to coincide.
struct CheckFailure {
    std::string kind;        // "route-mismatch" or "positivity"
    std::string detail;      // which routes/property were compared
    std::vector<int> lambda; // nonzero parts of the left operand
    std::vector<int> mu;     // nonzero parts of the right operand
    std::vector<int> nu;     // nonzero parts of the offending basis shape
    int d = 0;               // offending q-degree
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string status = "ok"; // "ok" or "fail"
    std::int64_t checked = 0;  // coefficient comparisons performed
    std::int64_t skipped = 0;  // oracle legs skipped because a cap was exceeded
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
    void record_failure(CheckFailure f);
    void merge(const CheckReport& other);
};

// Verifies the strange-duality identity for one quantum product: the
// expansion of sigma_lambda * sigma_mu in Gr(m,n) must map term by term onto
// the expansion of the conjugate product in Gr(n-m,n) under conjugation of
// shapes and t_i -> -t_{n+1-i} on coefficients.
CheckReport levelrank_check(const Partition& lam, const Partition& mu, XiCache& cache,
                            std::int64_t cap = 10000);

struct CrosscheckOptions {
    std::int64_t quantum_cap = 10000; // skip localization legs beyond this many fixed points
    bool check_positivity = true;     // decompose every coefficient into the positive basis
    bool include_rows = true;         // also sweep the row rule
};

// Exhaustive multi-route verification of the Pieri rules over one rectangle:
// for every mu in the rectangle and every admissible strip size, the rule
// output is compared against the hook-removal route and (below the cap)
// against the localization solver route, for both column and row strips.
CheckReport crosscheck_pieri(const Rect& rect, const CrosscheckOptions& opts = {});

} // namespace qhgrass
