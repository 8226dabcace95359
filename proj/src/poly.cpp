#include "qhgrass/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qhgrass {

Monomial Monomial::var(int v, int pow) {
    Monomial m;
    if (pow != 0) m.e_.push_back({v, pow});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, p] : e_) d += p;
    return d;
}

int Monomial::power_of(int v) const {
    for (auto& [w, p] : e_)
        if (w == v) return p;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (b->first < a->first)
            r.e_.push_back(*b++);
        else {
            r.e_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // First differing variable index decides; absent means exponent 0.
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first == b->first) {
            if (a->second != b->second) return a->second < b->second;
            ++a, ++b;
        } else if (a->first < b->first) {
            return false; // this has positive exponent where o has 0
        } else {
            return true;
        }
    }
    return a == e_.end() && b != o.e_.end();
}

TPoly TPoly::constant(Int c) {
    TPoly p;
    if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

TPoly TPoly::var(int v) {
    TPoly p;
    p.terms_.emplace(Monomial::var(v), Int(1));
    return p;
}

TPoly TPoly::monomial(Monomial m, Int c) {
    TPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int TPoly::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool TPoly::is_homogeneous_of_degree(int d) const {
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Int TPoly::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Int TPoly::constant_term() const { return coefficient_of(Monomial()); }

void TPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TPoly TPoly::operator-() const {
    TPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r(*this);
    r += o;
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r(*this);
    r -= o;
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

int TPoly::max_variable() const {
    int v = 0;
    for (auto& [m, c] : terms_)
        if (!m.entries().empty()) v = std::max(v, m.entries().back().first);
    return v;
}

TPoly linear_diff(int a, int b) {
    if (a == b) return TPoly();
    TPoly p;
    p += TPoly::var(a);
    p -= TPoly::var(b);
    return p;
}

Int specialize_to_zero(const TPoly& p) { return p.constant_term(); }

TPoly substitute_indices(const TPoly& p, const std::function<std::pair<int, bool>(int)>& f) {
    TPoly r;
    for (auto& [m, c] : p.terms_) {
        std::map<int, int> img;
        bool neg = false;
        for (auto& [v, e] : m.entries()) {
            auto [nv, flip] = f(v);
            img[nv] += e;
            if (flip && (e & 1)) neg = !neg;
        }
        Monomial nm;
        for (auto& [v, e] : img) nm = nm * Monomial::var(v, e);
        r.add_term(nm, neg ? Int(-c) : c);
    }
    return r;
}

TPoly substitute(const TPoly& p, const std::function<TPoly(int)>& f) {
    // Powers of each image are cached across terms.
    std::map<std::pair<int, int>, TPoly> powers;
    std::function<const TPoly&(int, int)> pow = [&](int v, int e) -> const TPoly& {
        auto it = powers.find({v, e});
        if (it != powers.end()) return it->second;
        TPoly val = (e == 1) ? f(v) : pow(v, e - 1) * f(v);
        return powers.emplace(std::make_pair(v, e), std::move(val)).first->second;
    };
    TPoly r;
    for (auto& [m, c] : p.terms_) {
        TPoly t = TPoly::constant(c);
        for (auto& [v, e] : m.entries()) t = t * pow(v, e);
        r += t;
    }
    return r;
}

TPoly divide_linear(const TPoly& p, int a, int b) {
    if (a == b) throw NonzeroRemainder("divide_linear: divisor t_a - t_a is zero");
    if (p.is_zero()) return p;
    // View p as a polynomial in t_a with coefficients in the remaining
    // variables, then run synthetic division by (t_a - t_b).
    std::map<int, TPoly> by_deg;
    for (auto& [m, c] : p.terms_) {
        int e = m.power_of(a);
        Monomial rest;
        for (auto& [v, pw] : m.entries())
            if (v != a) rest = rest * Monomial::var(v, pw);
        by_deg[e].add_term(rest, c);
    }
    int top = by_deg.rbegin()->first;
    if (top == 0) throw NonzeroRemainder("divide_linear: dividend free of t_a");
    const TPoly tb = TPoly::var(b);
    std::vector<TPoly> q(top); // q[k] multiplies t_a^k
    TPoly carry = by_deg.count(top) ? by_deg[top] : TPoly();
    q[top - 1] = carry;
    for (int k = top - 1; k >= 1; --k) {
        carry = (by_deg.count(k) ? by_deg[k] : TPoly()) + tb * carry;
        q[k - 1] = carry;
    }
    TPoly rem = (by_deg.count(0) ? by_deg[0] : TPoly()) + tb * q[0];
    if (!rem.is_zero()) throw NonzeroRemainder("divide_linear: nonzero remainder");
    TPoly out;
    for (int k = 0; k < top; ++k) {
        const Monomial tak = Monomial::var(a, k);
        for (auto& [m, c] : q[k].terms_) out.add_term(m * tak, c);
    }
    return out;
}

TPoly graham_decompose(const TPoly& p, int n) {
    if (p.max_variable() > n)
        throw DomainError("graham_decompose: polynomial uses a variable beyond t_n");
    // Shift invariance: substituting t_i -> t_i + t_{n+1} must not change p.
    const int fresh = n + 1;
    TPoly shifted = substitute(p, [&](int v) { return TPoly::var(v) + TPoly::var(fresh); });
    if (shifted != p) throw NotShiftInvariant("graham_decompose: not invariant under t -> t + c");
    // t_1 -> 0, t_i -> y_1 + ... + y_{i-1}; output variables are y-indices.
    std::vector<TPoly> prefix(n + 1);
    prefix[1] = TPoly::zero();
    for (int i = 2; i <= n; ++i) prefix[i] = prefix[i - 1] + TPoly::var(i - 1);
    return substitute(p, [&](int v) { return prefix[v]; });
}

bool all_coefficients_nonnegative(const TPoly& p) {
    for (auto& [m, c] : p.terms())
        if (c < 0) return false;
    return true;
}

} // namespace qhgrass
