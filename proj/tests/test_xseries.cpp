#include <doctest.h>

#include "qchar/xseries.hpp"

using namespace qchar;

namespace {

// Long division, coefficient by coefficient.
std::vector<Rational> divide(const std::vector<Rational>& num, const std::vector<Rational>& den)
{
    std::vector<Rational> out(num.size());
    for (std::size_t n = 0; n < num.size(); ++n) {
        Rational acc = num[n];
        for (std::size_t k = 1; k <= n && k < den.size(); ++k)
            acc -= den[k] * out[n - k];
        out[n] = acc / den[0];
    }
    return out;
}

} // namespace

TEST_CASE("series inverse matches long division")
{
    TruncatedSeries s{{Rational(3), Rational(-1, 2), Rational(5), Rational(0), Rational(7, 3)}};
    std::vector<Rational> one(5, Rational(0));
    one[0] = 1;
    CHECK(s.inverse().coeffs == divide(one, s.coeffs));
    CHECK(s * s.inverse() == TruncatedSeries::one(4));
}

TEST_CASE("exp_of inverts log")
{
    // log(1 - c z) = -sum c^n z^n / n
    const Rational c(3, 2);
    std::vector<Rational> lg(7, Rational(0));
    for (int n = 1; n <= 6; ++n)
        lg[static_cast<std::size_t>(n)] = -rational_pow(c, n) / n;
    const TruncatedSeries e = TruncatedSeries::exp_of(lg);
    CHECK(e.coeffs[0] == 1);
    CHECK(e.coeffs[1] == -c);
    for (int n = 2; n <= 6; ++n)
        CHECK(e.coeffs[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("root series cancellation and expansion")
{
    const RootSeries r = RootSeries::make({3, 1, 2}, {2, 5});
    CHECK(r.roots == std::vector<int>{1, 3});
    CHECK(r.poles == std::vector<int>{5});
    CHECK(r.degree() == 1);
    CHECK_FALSE(r.is_polynomial());
    CHECK(RootSeries::make({4}, {4}).is_one());

    // (1 - z q^{-1}) / (1 - z q^{-5}) at q = 2, by long division
    const Rational q(2);
    const TruncatedSeries e = RootSeries::make({1}, {5}).expand(q, 6);
    std::vector<Rational> num(7, Rational(0)), den(7, Rational(0));
    num[0] = den[0] = 1;
    num[1] = -rational_pow(q, -1);
    den[1] = -rational_pow(q, -5);
    CHECK(e.coeffs == divide(num, den));
}

TEST_CASE("inverse quantum Cartan matrix in A1 and A2")
{
    const Rational q(2);
    const PairingOracle a1(build_cartan("A1"), q, 4);
    for (int r = 1; r <= 4; ++r) {
        const Rational x = rational_pow(q, r);
        CHECK(a1.tilde_c(1, 1, r) == 1 / (x + 1 / x));
    }
    const PairingOracle a2(build_cartan("A2"), q, 3);
    for (int r = 1; r <= 3; ++r) {
        const Rational x = rational_pow(q, r);
        const Rational det = x * x + 1 + 1 / (x * x);
        CHECK(a2.tilde_c(1, 1, r) == (x + 1 / x) / det);
        CHECK(a2.tilde_c(1, 2, r) == 1 / det);
    }
    CHECK_THROWS_AS(PairingOracle(build_cartan("A1"), Rational(1), 4), XSeriesError);
}

TEST_CASE("X factorizations for simple reflections")
{
    const CartanPtr b2 = build_cartan("B2");
    const BraidAction b(b2);
    const WeylElement s2 = simple_reflection(*b2, 2);
    CHECK(x_factorization(b, s2, 1).exps == LaurentMonomial::variable(1, 0));
    CHECK(x_factorization(b, s2, 2).exps == LaurentMonomial({{1, 0, 1}, {1, 2, 1}, {2, 2, -1}}));
    CHECK(x_factorization(b, identity_element(*b2), 2).exps == LaurentMonomial::variable(2, 0));
}

TEST_CASE("eigenvalues on the sl2 fundamental")
{
    const CartanPtr a1 = build_cartan("A1");
    const BraidAction b(a1);
    const YMonomial top = LaurentMonomial::variable(1, 0);
    const YMonomial low = LaurentMonomial::variable(1, 2, -1);
    const WeylElement e = identity_element(*a1);
    CHECK(eigenvalue_on(b, e, 1, top, top).is_one());
    const RootSeries v = eigenvalue_on(b, e, 1, low, top);
    CHECK(v.is_polynomial());
    CHECK(v.degree() == 1);
    CHECK(twisted_weight_gap(b, e, 1, low, top) == 1);
    CHECK_THROWS_AS(eigenvalue_on(b, e, 1, LaurentMonomial::variable(1, 1), top), XSeriesError);
}
