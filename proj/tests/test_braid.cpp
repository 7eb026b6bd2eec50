#include <doctest.h>

#include "qchar/braid.hpp"

using namespace qchar;

TEST_CASE("T_i on generators")
{
    const CartanPtr b2 = build_cartan("B2");
    const BraidAction t(b2);
    // T_1(Y_{1,0}) = Y_{1,0} A_{1,2}^{-1}
    CHECK(t.T(1, LaurentMonomial::variable(1, 0)) ==
          LaurentMonomial::variable(1, 0) * make_A(*b2, 1, 2).inverse());
    CHECK(t.T(1, LaurentMonomial::variable(2, 5)) == LaurentMonomial::variable(2, 5));
    CHECK(t.T(2, LaurentMonomial::variable(2, 0)) ==
          LaurentMonomial::variable(2, 0) * make_A(*b2, 2, 1).inverse());
}

TEST_CASE("inverse maps undo T")
{
    const CartanPtr g2 = build_cartan("G2");
    const BraidAction t(g2);
    const YMonomial m({{1, 0, 2}, {2, 3, -1}, {1, 7, 1}});
    for (int i = 1; i <= 2; ++i)
        CHECK(t.T_inv(i, t.T(i, m)) == m);
    const WeylElement w = longest_element(*g2);
    CHECK(t.T_w_inv(w, t.T_w(w, m)) == m);
}

TEST_CASE("A2 with w = s1")
{
    const CartanPtr a2 = build_cartan("A2");
    const BraidAction t(a2);
    const WeylElement s1 = simple_reflection(*a2, 1);
    CHECK(t.T_w(s1, LaurentMonomial::variable(1, 0)) == parse_monomial(*a2, "Y:1,2^-1*Y:2,1"));
    CHECK(t.T_w(s1, LaurentMonomial::variable(2, 0)) == LaurentMonomial::variable(2, 0));
    CHECK(twisted_root(t, s1, 1, 0).value == make_A(*a2, 1, 2).inverse());
    CHECK(twisted_root(t, s1, 2, 0).value == make_A(*a2, 2, 0) * make_A(*a2, 1, 1));
}

TEST_CASE("compare_w")
{
    const CartanPtr a2 = build_cartan("A2");
    const BraidAction t(a2);
    const WeylElement e = identity_element(*a2);
    const YMonomial y = LaurentMonomial::variable(1, 0);
    const YMonomial lower = y * make_A(*a2, 1, 1).inverse();
    CHECK(compare_w(t, lower, y, e) == Ordering::less);
    CHECK(compare_w(t, y, lower, e) == Ordering::greater);
    CHECK(compare_w(t, y, y, e) == Ordering::equal);
    CHECK(compare_w(t, y * make_A(*a2, 1, 1) * make_A(*a2, 2, 0).inverse(), y, e) ==
          Ordering::incomparable);
    // under s1 the root A_{1} flips sign, so the order reverses along it
    const WeylElement s1 = simple_reflection(*a2, 1);
    CHECK(compare_w(t, lower, y, s1) == Ordering::greater);
}

TEST_CASE("twisted roots are rejected outside the lattice")
{
    const CartanPtr a2 = build_cartan("A2");
    const BraidAction t(a2);
    CHECK_FALSE(factor_in_Aw(t, LaurentMonomial::variable(1, 0), {}, simple_reflection(*a2, 2)));
}
