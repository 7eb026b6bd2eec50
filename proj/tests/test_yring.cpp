#include <doctest.h>

#include <functional>

#include "qchar/yring.hpp"

using namespace qchar;

TEST_CASE("monomial normalization and arithmetic")
{
    const LaurentMonomial m({{2, 1, 1}, {1, 0, 2}, {2, 1, -1}, {1, 0, -1}});
    CHECK(m == LaurentMonomial::variable(1, 0));
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.pow(3).exponent(1, 0) == 3);
    CHECK(m.shifted(4) == LaurentMonomial::variable(1, 4));
}

TEST_CASE("A monomials in A2 and B2")
{
    const CartanPtr a2 = build_cartan("A2");
    CHECK(make_A(*a2, 1, 1) == parse_monomial(*a2, "Y:1,0*Y:1,2*Y:2,1^-1"));
    const CartanPtr b2 = build_cartan("B2");
    // long node 1: A_{1,r} = Y_{1,r-2} Y_{1,r+2} Y_{2,r-1}^{-1} Y_{2,r+1}^{-1}
    CHECK(make_A(*b2, 1, 0) == parse_monomial(*b2, "Y:1,-2*Y:1,2*Y:2,-1^-1*Y:2,1^-1"));
    // short node 2: A_{2,r} = Y_{2,r-1} Y_{2,r+1} Y_{1,r}^{-1}
    CHECK(make_A(*b2, 2, 0) == parse_monomial(*b2, "Y:2,-1*Y:2,1*Y:1,0^-1"));
    CHECK(weight_of(*b2, make_A(*b2, 2, 5)) == b2->alpha(2));
}

TEST_CASE("monomial literal parser")
{
    const CartanPtr a2 = build_cartan("A2");
    CHECK(parse_monomial(*a2, "1").is_identity());
    CHECK(parse_monomial(*a2, "A:1,1") == make_A(*a2, 1, 1));
    CHECK(parse_monomial(*a2, "Y:2,-3^-2") == LaurentMonomial::variable(2, -3, -2));
    CHECK_THROWS_AS(parse_monomial(*a2, "Y:3,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(*a2, "Y:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(*a2, "Z:1,0"), std::invalid_argument);
}

TEST_CASE("factor_in_A agrees with exhaustive search")
{
    // Every exponent vector on a small window of root monomials; the
    // library must return exactly the vector that produced the product.
    const CartanPtr a2 = build_cartan("A2");
    std::vector<std::pair<int, int>> slots{{1, 0}, {1, 2}, {2, 1}, {2, 3}, {1, 4}, {2, -1}};
    std::vector<int> e(slots.size(), -1);
    const YMonomial anchor = LaurentMonomial::variable(1, 0);
    int checked = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
        if (k == slots.size()) {
            YMonomial m = anchor;
            std::vector<Factor> f;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                m *= make_A(*a2, slots[s].first, slots[s].second).pow(e[s]);
                if (e[s])
                    f.push_back({slots[s].first, slots[s].second, e[s]});
            }
            const auto got = factor_in_A(*a2, m, anchor);
            REQUIRE(got);
            CHECK(*got == RootExponents(f));
            ++checked;
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            e[k] = v;
            walk(k + 1);
        }
    };
    walk(0);
    CHECK(checked == 729);
}

TEST_CASE("factor_in_A rejects monomials outside the root lattice")
{
    const CartanPtr a2 = build_cartan("A2");
    CHECK_FALSE(factor_in_A(*a2, LaurentMonomial::variable(1, 0), {}));
    // right weight class but wrong parity of spectral shift
    CHECK_FALSE(factor_in_A(*a2, make_A(*a2, 1, 0).shifted(0) * LaurentMonomial::variable(1, 1) *
                                     LaurentMonomial::variable(1, 0, -1),
                            {}));
}

TEST_CASE("dominance")
{
    CHECK(is_dominant(LaurentMonomial({{1, 0, 1}, {2, 3, 2}})));
    CHECK_FALSE(is_dominant(LaurentMonomial({{1, 0, 1}, {2, 3, -1}})));
    CHECK(is_k_dominant(LaurentMonomial({{1, 0, 1}, {2, 3, -1}}), 1));
}

TEST_CASE("polynomial arithmetic")
{
    const YMonomial a = LaurentMonomial::variable(1, 0);
    const YMonomial b = LaurentMonomial::variable(1, 2, -1);
    const YPolynomial p = YPolynomial(a) + YPolynomial(b);
    const YPolynomial sq = p * p;
    CHECK(sq.coefficient(a * b) == 2);
    CHECK(sq.total() == 4);
    CHECK((p - p).empty());
    CHECK(p.shifted(2).coefficient(a.shifted(2)) == 1);
}
