#include "qhgrass/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhgrass/pieri.hpp"
#include "qhgrass/rimhook.hpp"
#include "qhgrass/serialize.hpp"

namespace qhgrass {

namespace {

std::vector<int> nonzero_parts(const Partition& p) {
    std::vector<int> out;
    for (int x : p.parts()) {
        if (x == 0) break;
        out.push_back(x);
    }
    return out;
}

void require_same_rect(const Partition& lam, const Partition& mu, const char* what) {
    if (lam.rect() != mu.rect()) {
        std::ostringstream os;
        os << what << ": operands live in different rectangles";
        throw DomainError(os.str());
    }
}

// All nu with join <= nu <= rectangle and |nu| <= bound, in increasing size
// order, so that every proper subshape of an entry precedes it.
std::vector<Partition> solve_candidates(const Partition& join, int bound) {
    const Rect rect = join.rect();
    const int m = rect.m;
    std::vector<int> suffix(m + 1, 0);
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + join.parts()[i];

    std::vector<Partition> out;
    std::vector<int> cur(m, 0);
    std::function<void(int, int, int)> gen = [&](int i, int mx, int used) {
        if (i == m) {
            out.emplace_back(rect, cur);
            return;
        }
        const int lo = join.parts()[i];
        const int hi = std::min(mx, rect.width());
        for (int v = lo; v <= hi; ++v) {
            if (used + v + suffix[i + 1] > bound) break;
            cur[i] = v;
            gen(i + 1, v, used + v);
        }
        cur[i] = 0;
    };
    gen(0, rect.width(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<WidePartition, TPoly> to_wide(const std::map<Partition, TPoly>& classical) {
    std::map<WidePartition, TPoly> out;
    for (const auto& [shape, value] : classical) out.emplace(WidePartition{shape.parts()}, value);
    return out;
}

// Union-of-keys comparison between two expansions over the same rectangle.
void compare_expansions(CheckReport& rep, const Expansion& a, const Expansion& b,
                        const Partition& lam, const Partition& mu, const std::string& detail) {
    std::set<TermKey> keys;
    for (const auto& [key, coeff] : a.terms()) keys.insert(key);
    for (const auto& [key, coeff] : b.terms()) keys.insert(key);
    for (const TermKey& key : keys) {
        ++rep.checked;
        TPoly va = a.at_or_zero(key.lam, key.d);
        TPoly vb = b.at_or_zero(key.lam, key.d);
        if (!(va == vb)) {
            rep.record_failure(CheckFailure{"route-mismatch", detail, nonzero_parts(lam),
                                            nonzero_parts(mu), nonzero_parts(key.lam), key.d,
                                            poly_to_text(va), poly_to_text(vb)});
        }
    }
}

void check_positivity(CheckReport& rep, const Expansion& e, const Partition& lam,
                      const Partition& mu) {
    const int n = e.rect().n;
    for (const auto& [key, coeff] : e.terms()) {
        ++rep.checked;
        bool good = false;
        try {
            good = all_coefficients_nonnegative(graham_decompose(coeff.value, n));
        } catch (const DomainError&) {
            good = false;
        }
        if (!good) {
            rep.record_failure(CheckFailure{
                "positivity", "coefficient in the simple-root difference basis",
                nonzero_parts(lam), nonzero_parts(mu), nonzero_parts(key.lam), key.d,
                "all basis coefficients >= 0", poly_to_text(coeff.value)});
        }
    }
}

} // namespace

const TPoly& XiCache::get(const Partition& gamma, const Partition& eta) {
    auto key = std::make_pair(gamma.parts(), eta.parts());
    auto it = entries_.find(key);
    if (it == entries_.end()) it = entries_.emplace(std::move(key), xi(gamma, eta)).first;
    return it->second;
}

void CheckReport::record_failure(CheckFailure f) {
    status = "fail";
    failures.push_back(std::move(f));
}

void CheckReport::merge(const CheckReport& other) {
    checked += other.checked;
    skipped += other.skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    if (!ok()) status = "fail";
}

std::map<Partition, TPoly> gkm_classical_product(const Partition& lam, const Partition& mu,
                                                 XiCache& cache, std::int64_t cap) {
    require_same_rect(lam, mu, "gkm_classical_product");
    const Rect rect = lam.rect();

    std::vector<int> join_parts(rect.m);
    for (int i = 0; i < rect.m; ++i) join_parts[i] = std::max(lam.parts()[i], mu.parts()[i]);
    const Partition join(rect, join_parts);
    const int bound = lam.size() + mu.size();

    std::map<Partition, TPoly> c;
    for (const Partition& nu : solve_candidates(join, bound)) {
        TPoly acc = cache.get(lam, nu) * cache.get(mu, nu);
        for (const auto& [kappa, ck] : c)
            if (nu.contains(kappa)) acc -= ck * cache.get(kappa, nu);
        for (const LinearFactor& f : xi_diag(nu)) acc = divide_linear(acc, f.a, f.b);
        if (acc.is_zero()) continue;
        if (!acc.is_homogeneous_of_degree(lam.size() + mu.size() - nu.size()))
            throw std::logic_error("localization solve produced an inhomogeneous coefficient");
        c.emplace(nu, std::move(acc));
    }

    // The solve used only the fixed points above the join; re-verify the
    // bilinearity relation at every fixed point of the rectangle.
    for (const Partition& eta : enumerate_partitions(rect, cap)) {
        TPoly lhs;
        for (const auto& [nu, cnu] : c)
            if (eta.contains(nu)) lhs += cnu * cache.get(nu, eta);
        if (!(lhs == cache.get(lam, eta) * cache.get(mu, eta)))
            throw std::logic_error("fixed-point consistency check failed at " +
                                   partition_to_text(eta));
    }
    return c;
}

std::map<Partition, TPoly> gkm_classical_product(const Partition& lam, const Partition& mu,
                                                 std::int64_t cap) {
    XiCache cache;
    return gkm_classical_product(lam, mu, cache, cap);
}

Expansion eq_quantum_product(const Partition& lam, const Partition& mu, XiCache& cache,
                             std::int64_t cap) {
    require_same_rect(lam, mu, "eq_quantum_product");
    const Rect rect = lam.rect();
    const Rect wide{rect.m, 2 * rect.n - 1};
    const Partition lam_w(wide, lam.parts());
    const Partition mu_w(wide, mu.parts());
    return quantumize(to_wide(gkm_classical_product(lam_w, mu_w, cache, cap)), rect);
}

Expansion eq_quantum_product(const Partition& lam, const Partition& mu, std::int64_t cap) {
    XiCache cache;
    return eq_quantum_product(lam, mu, cache, cap);
}

CheckReport levelrank_check(const Partition& lam, const Partition& mu, XiCache& cache,
                            std::int64_t cap) {
    require_same_rect(lam, mu, "levelrank_check");
    CheckReport rep;
    Expansion direct = eq_quantum_product(lam, mu, cache, cap);
    Expansion dual = eq_quantum_product(transpose(lam), transpose(mu), cache, cap);
    compare_expansions(rep, direct, level_rank_dual(dual), lam, mu,
                       "product vs mapped conjugate product");
    return rep;
}

CheckReport crosscheck_pieri(const Rect& rect, const CrosscheckOptions& opts) {
    CheckReport rep;
    const bool oracle_feasible = binomial(2 * rect.n - 1, rect.m) <= opts.quantum_cap;

    for (const Partition& mu : enumerate_partitions(rect)) {
        for (int p = 1; p <= rect.m; ++p) {
            const Partition cls = Partition::column(rect, p);
            Expansion rule = column_pieri(p, mu);
            Expansion hook = quantumize(to_wide(huangli_column_pieri(p, mu)), rect);
            compare_expansions(rep, rule, hook, cls, mu, "column rule vs hook-reduction");
            if (oracle_feasible) {
                // Fresh cache per product: caching restrictions across a whole
                // sweep holds too many expanded polynomials live at once.
                Expansion solved = eq_quantum_product(cls, mu, opts.quantum_cap);
                compare_expansions(rep, rule, solved, cls, mu, "column rule vs localization");
            } else {
                ++rep.skipped;
            }
            if (opts.check_positivity) check_positivity(rep, rule, cls, mu);
        }
        if (!opts.include_rows) continue;
        for (int k = 1; k <= rect.width(); ++k) {
            const Partition cls = Partition::row(rect, k);
            Expansion rule = row_pieri(k, mu);
            // Hook-reduction leg for rows: run the column machinery in the
            // conjugate rectangle and map back through the duality.
            Expansion hook_dual = quantumize(
                to_wide(huangli_column_pieri(k, transpose(mu))), Rect{rect.width(), rect.n});
            compare_expansions(rep, rule, level_rank_dual(hook_dual), cls, mu,
                               "row rule vs hook-reduction");
            if (oracle_feasible) {
                Expansion solved = eq_quantum_product(cls, mu, opts.quantum_cap);
                compare_expansions(rep, rule, solved, cls, mu, "row rule vs localization");
            } else {
                ++rep.skipped;
            }
            if (opts.check_positivity) check_positivity(rep, rule, cls, mu);
        }
    }
    return rep;
}

} // namespace qhgrass
