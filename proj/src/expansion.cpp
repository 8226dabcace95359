#include "qhgrass/expansion.hpp"

namespace qhgrass {

TPoly expand_factored(const FactoredSum& f) {
    TPoly sum;
    for (const auto& product : f) {
        TPoly p = TPoly::constant(1);
        for (const LinearFactor& lf : product) p = p * linear_diff(lf.a, lf.b);
        sum += p;
    }
    return sum;
}

void Expansion::add(const Partition& lam, int d, const TPoly& value) {
    if (value.is_zero()) return;
    TermKey key{d, lam};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Coefficient{value, std::nullopt});
        return;
    }
    it->second.value += value;
    it->second.factored.reset();
    if (it->second.value.is_zero()) terms_.erase(it);
}

void Expansion::add_factored(const Partition& lam, int d, FactoredSum products) {
    TPoly value = expand_factored(products);
    if (value.is_zero()) return;
    TermKey key{d, lam};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Coefficient{std::move(value), std::move(products)});
        return;
    }
    it->second.value += value;
    if (it->second.factored) {
        it->second.factored->insert(it->second.factored->end(), products.begin(), products.end());
    }
    if (it->second.value.is_zero()) terms_.erase(it);
}

const TPoly* Expansion::find(const Partition& lam, int d) const {
    auto it = terms_.find(TermKey{d, lam});
    return it == terms_.end() ? nullptr : &it->second.value;
}

TPoly Expansion::at_or_zero(const Partition& lam, int d) const {
    const TPoly* p = find(lam, d);
    return p ? *p : TPoly::zero();
}

Expansion level_rank_dual(const Expansion& e) {
    const Rect& r = e.rect();
    const int n = r.n;
    Expansion out(Rect{r.width(), n});
    auto flip = [n](int v) { return std::make_pair(n + 1 - v, true); };
    for (const auto& [key, coeff] : e.terms()) {
        Partition dual = transpose(key.lam);
        if (coeff.factored) {
            FactoredSum mapped;
            mapped.reserve(coeff.factored->size());
            for (const auto& product : *coeff.factored) {
                std::vector<LinearFactor> mp;
                mp.reserve(product.size());
                for (const LinearFactor& lf : product)
                    mp.push_back(LinearFactor{n + 1 - lf.b, n + 1 - lf.a});
                mapped.push_back(std::move(mp));
            }
            out.add_factored(dual, key.d, std::move(mapped));
        } else {
            out.add(dual, key.d, substitute_indices(coeff.value, flip));
        }
    }
    return out;
}

bool Expansion::operator==(const Expansion& o) const {
    if (rect_ != o.rect_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (!(a->first == b->first) || !(a->second == b->second)) return false;
    return true;
}

} // namespace qhgrass
