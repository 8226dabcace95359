#pragma once

// Schubert-basis expansions: finite sums  sum_{lambda,d} c_{lambda,d}(t) q^d sigma_lambda.
// Coefficients remember a factored display form when the producing rule built
// them as sums of products of linear weights; equality always compares the
// expanded values.

#include <map>
#include <optional>
#include <vector>

#include "qhgrass/poly.hpp"
#include "qhgrass/shapes.hpp"

namespace qhgrass {

// The linear form t_a - t_b.
struct LinearFactor {
    int a = 0;
    int b = 0;
    bool operator==(const LinearFactor&) const = default;
};

using FactoredSum = std::vector<std::vector<LinearFactor>>; // sum of products

TPoly expand_factored(const FactoredSum& f);

struct Coefficient {
    TPoly value;
    std::optional<FactoredSum> factored;

    bool operator==(const Coefficient& o) const { return value == o.value; }
};

struct TermKey {
    int d = 0;
    Partition lam;

    bool operator==(const TermKey&) const = default;
    bool operator<(const TermKey& o) const {
        if (d != o.d) return d < o.d;
        return lam < o.lam;
    }
};

class Expansion {
public:
    explicit Expansion(Rect rect) : rect_(rect) {}

    const Rect& rect() const { return rect_; }
    const std::map<TermKey, Coefficient>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Merging an expanded value into an existing factored coefficient drops
    // the factored form; zero results are erased.
    void add(const Partition& lam, int d, const TPoly& value);
    void add_factored(const Partition& lam, int d, FactoredSum products);

    const TPoly* find(const Partition& lam, int d) const;
    TPoly at_or_zero(const Partition& lam, int d) const;

    bool operator==(const Expansion& o) const;

private:
    Rect rect_;
    std::map<TermKey, Coefficient> terms_;
};

// The level-rank image: conjugate every shape into Rect(n-m, n) and map
// coefficients through t_i -> -t_{n+1-i}; factored forms stay factored since
// each linear weight maps to t_{n+1-b} - t_{n+1-a}.
Expansion level_rank_dual(const Expansion& e);

} // namespace qhgrass
