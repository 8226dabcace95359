#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "qhgrass/poly.hpp"
#include "qhgrass/serialize.hpp"

using namespace qhgrass;

namespace {

// Deterministic random polynomial with small support, for algebra laws.
TPoly random_poly(std::mt19937& rng, int max_var, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> var(1, max_var);
    std::uniform_int_distribution<int> pow(1, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> nvars(0, 3);
    TPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        const int v = nvars(rng);
        for (int j = 0; j < v; ++j) m = m * Monomial::var(var(rng), pow(rng));
        p += TPoly::monomial(m, coef(rng));
    }
    return p;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("monomial order is graded then lexicographic") {
    const Monomial a = Monomial::var(11) * Monomial::var(12);
    const Monomial b = Monomial::var(3) * Monomial::var(12);
    const Monomial c = Monomial::var(3) * Monomial::var(11);
    const Monomial d = Monomial::var(3, 2);
    // Same degree: the monomial with the smaller exponent at the first
    // differing variable index comes first.
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    // Degree dominates.
    CHECK(Monomial::var(12) < a);
    CHECK(Monomial() < Monomial::var(1));
    CHECK(Monomial::var(2) < Monomial::var(1, 2));
}

TEST_CASE("linear differences and their canonical text") {
    CHECK(poly_to_text(linear_diff(12, 3)) == "t_12 - t_3");
    CHECK(poly_to_text(linear_diff(3, 12)) == "-t_12 + t_3");
    CHECK(poly_to_text(linear_diff(2, 1)) == "t_2 - t_1");
    CHECK(linear_diff(4, 4).is_zero());
    CHECK(linear_diff(12, 3).degree() == 1);
    CHECK(linear_diff(12, 3).is_homogeneous_of_degree(1));
}

TEST_CASE("product expansion matches the hand computation") {
    const TPoly p = linear_diff(12, 3) * linear_diff(11, 3);
    CHECK(poly_to_text(p) == "t_11*t_12 - t_3*t_12 - t_3*t_11 + t_3^2");
    CHECK(p.term_count() == 4);
    CHECK(p.is_homogeneous_of_degree(2));
    CHECK(p.coefficient_of(Monomial::var(3, 2)) == 1);
    CHECK(p.coefficient_of(Monomial::var(3) * Monomial::var(11)) == -1);
}

TEST_CASE("ring axioms on random values") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const TPoly a = random_poly(rng, 6, 4);
        const TPoly b = random_poly(rng, 6, 4);
        const TPoly c = random_poly(rng, 6, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + TPoly::zero() == a);
        CHECK(a * TPoly::constant(1) == a);
        CHECK((a * TPoly::zero()).is_zero());
        CHECK(-(-a) == a);
    }
}

TEST_CASE("no zero terms are ever stored") {
    const TPoly p = linear_diff(2, 1) + linear_diff(1, 2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(p == TPoly::zero());
    CHECK(p.degree() == -1);
}

TEST_CASE("exact division by a linear difference") {
    SUBCASE("round trip on random multiples") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const TPoly q = random_poly(rng, 5, 4);
            const TPoly p = q * linear_diff(4, 2);
            CHECK(divide_linear(p, 4, 2) == q);
        }
    }
    SUBCASE("golden quotients") {
        const TPoly p = linear_diff(12, 3) * linear_diff(11, 3);
        CHECK(divide_linear(p, 12, 3) == linear_diff(11, 3));
        CHECK(divide_linear(p, 11, 3) == linear_diff(12, 3));
        CHECK(divide_linear(TPoly::zero(), 2, 1).is_zero());
    }
    SUBCASE("non-multiples are rejected") {
        CHECK_THROWS_AS(divide_linear(linear_diff(3, 1), 2, 1), NonzeroRemainder);
        CHECK_THROWS_AS(divide_linear(TPoly::constant(1), 2, 1), NonzeroRemainder);
    }
}

TEST_CASE("index substitution") {
    SUBCASE("identity") {
        const TPoly p = linear_diff(5, 2) * linear_diff(3, 1);
        CHECK(substitute_indices(p, [](int v) { return std::make_pair(v, false); }) == p);
    }
    SUBCASE("modular folding t_16 -> t_1 for n = 15") {
        const TPoly p = linear_diff(16, 2);
        const TPoly f =
            substitute_indices(p, [](int v) { return std::make_pair((v - 1) % 15 + 1, false); });
        CHECK(f == linear_diff(1, 2));
    }
    SUBCASE("negating involution t_i -> -t_{n+1-i} for n = 15") {
        const auto flip = [](int v) { return std::make_pair(16 - v, true); };
        CHECK(substitute_indices(linear_diff(5, 2), flip) == linear_diff(14, 11));
        const TPoly p = linear_diff(5, 2) * linear_diff(12, 3);
        CHECK(substitute_indices(p, flip) == linear_diff(14, 11) * linear_diff(13, 4));
    }
    SUBCASE("colliding images merge exponents") {
        // t_2*t_3 with both variables sent to t_1 becomes t_1^2.
        const TPoly p = TPoly::monomial(Monomial::var(2) * Monomial::var(3), 1);
        const TPoly f = substitute_indices(p, [](int) { return std::make_pair(1, false); });
        CHECK(f == TPoly::monomial(Monomial::var(1, 2), 1));
    }
}

TEST_CASE("full substitution composes polynomials") {
    // t_2 -> t_1 + t_3 inside t_2^2 gives (t_1+t_3)^2.
    const TPoly p = TPoly::monomial(Monomial::var(2, 2), 1);
    const TPoly image = TPoly::var(1) + TPoly::var(3);
    const TPoly got = substitute(p, [&](int v) { return v == 2 ? image : TPoly::var(v); });
    CHECK(got == image * image);
}

TEST_CASE("constant term extraction") {
    CHECK(specialize_to_zero(linear_diff(3, 1)) == 0);
    CHECK(specialize_to_zero(TPoly::constant(7)) == 7);
    CHECK(specialize_to_zero(linear_diff(3, 1) + TPoly::constant(2)) == 2);
    CHECK(specialize_to_zero(TPoly::zero()) == 0);
}

TEST_CASE("rewriting in simple-root differences") {
    SUBCASE("t_3 - t_1 = y_1 + y_2") {
        const TPoly g = graham_decompose(linear_diff(3, 1), 5);
        std::map<Monomial, Int> want{{Monomial::var(1), 1}, {Monomial::var(2), 1}};
        CHECK(g.terms() == want);
        CHECK(all_coefficients_nonnegative(g));
    }
    SUBCASE("constants pass through") {
        const TPoly g = graham_decompose(TPoly::constant(3), 4);
        CHECK(g == TPoly::constant(3));
        CHECK(all_coefficients_nonnegative(g));
        CHECK(graham_decompose(TPoly::zero(), 4).is_zero());
    }
    SUBCASE("the two-box localization value is positive in the root basis") {
        // (t_5-t_2)(t_11-t_2) + (t_5-t_2)(t_12-t_3) + (t_11-t_3)(t_12-t_3)
        const TPoly p = linear_diff(5, 2) * linear_diff(11, 2) +
                        linear_diff(5, 2) * linear_diff(12, 3) +
                        linear_diff(11, 3) * linear_diff(12, 3);
        CHECK(all_coefficients_nonnegative(graham_decompose(p, 15)));
    }
    SUBCASE("non-shift-invariant input is rejected") {
        CHECK_THROWS_AS(graham_decompose(TPoly::var(1), 3), NotShiftInvariant);
        CHECK_THROWS_AS(graham_decompose(TPoly::var(2) + TPoly::var(1), 3), NotShiftInvariant);
    }
    SUBCASE("negative root coefficients are detected") {
        const TPoly g = graham_decompose(linear_diff(1, 2), 3);
        CHECK_FALSE(all_coefficients_nonnegative(g));
    }
    SUBCASE("round trip through y_j = t_{j+1} - t_j") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 25; ++trial) {
            // Build a shift-invariant input as a product of differences.
            TPoly p = TPoly::constant(1);
            std::uniform_int_distribution<int> var(1, 5);
            for (int f = 0; f < 3; ++f) {
                const int a = var(rng), b = var(rng);
                p = p * (TPoly::var(a) - TPoly::var(b));
            }
            const TPoly g = graham_decompose(p, 5);
            const TPoly back =
                substitute(g, [](int j) { return TPoly::var(j + 1) - TPoly::var(j); });
            CHECK(back == p);
        }
    }
}

TEST_CASE("degree bookkeeping") {
    const TPoly p = linear_diff(5, 2) * linear_diff(11, 2) + TPoly::constant(1);
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.is_homogeneous_of_degree(2));
    CHECK(p.max_variable() == 11);
    CHECK(TPoly::constant(5).max_variable() == 0);
}

} // TEST_SUITE
