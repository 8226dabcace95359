#pragma once

// Exact sparse polynomials over Z in indexed variables t_1, t_2, ...
// Everything is immutable value semantics; the zero polynomial is the empty
// term map, so equality is plain structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qhgrass/errors.hpp"

namespace qhgrass {

using Int = boost::multiprecision::cpp_int;

// A monomial is a finite map variable index -> positive power, kept as a
// vector of (var, pow) pairs sorted by variable index.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    static Monomial var(int v, int pow = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    int degree() const;
    int power_of(int v) const;

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const = default;
    // Graded order, ties broken lexicographically on the exponent vector read
    // in increasing variable index. Map iteration in this order matches the
    // canonical serialization.
    bool operator<(const Monomial& o) const;

private:
    std::vector<Entry> e_;
};

class TPoly {
public:
    TPoly() = default; // zero

    static TPoly zero() { return TPoly(); }
    static TPoly constant(Int c);
    static TPoly var(int v);
    static TPoly monomial(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Max total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous_of_degree(int d) const;
    Int coefficient_of(const Monomial& m) const;
    Int constant_term() const;

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);

    bool operator==(const TPoly& o) const = default;

    // Largest variable index appearing; 0 for constants.
    int max_variable() const;

private:
    friend TPoly substitute_indices(const TPoly&, const std::function<std::pair<int, bool>(int)>&);
    friend TPoly substitute(const TPoly&, const std::function<TPoly(int)>&);
    friend TPoly divide_linear(const TPoly&, int, int);
    void add_term(const Monomial& m, const Int& c); // maintains no-zero invariant
    std::map<Monomial, Int> terms_;
};

// t_a - t_b
TPoly linear_diff(int a, int b);

// Constant term, i.e. the image under t_i -> 0 for all i.
Int specialize_to_zero(const TPoly& p);

// Variable renaming t_v -> s * t_{f(v).first} where s is -1 when
// f(v).second is set. Indices may collide; exponents merge.
TPoly substitute_indices(const TPoly& p, const std::function<std::pair<int, bool>(int)>& f);

// Full composition t_v -> f(v) for arbitrary polynomial images.
TPoly substitute(const TPoly& p, const std::function<TPoly(int)>& f);

// Exact quotient p / (t_a - t_b); throws NonzeroRemainder when (t_a - t_b)
// does not divide p. Requires a != b.
TPoly divide_linear(const TPoly& p, int a, int b);

// Rewrites p, a polynomial in t_1..t_n, in the simple-root differences
// y_i = t_{i+1} - t_i. Shift invariance (p(t+c) = p(t)) is verified first by
// substituting t_i -> t_i + t_{n+1} with a fresh variable; when it fails,
// throws NotShiftInvariant. The result is returned as a polynomial whose
// variable i stands for y_i.
TPoly graham_decompose(const TPoly& p, int n);

// True when every coefficient of a (y-variable) polynomial is nonnegative.
bool all_coefficients_nonnegative(const TPoly& p);

} // namespace qhgrass
