#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mwext/steenrod.hpp"

using namespace mwext;

namespace {

Monomial tau_pow(int a) {
    Monomial m;
    m.tau_exp = a;
    return m;
}
Monomial rho_pow(int b) {
    Monomial m;
    m.rho_exp = b;
    return m;
}
Monomial tau_i(int i) {
    Monomial m;
    m.tau_mask = 1u << i;
    return m;
}
Monomial xi(int i, int e = 1) {
    Monomial m;
    m.xi.resize(std::size_t(i), 0);
    m.xi[std::size_t(i) - 1] = std::uint16_t(e);
    return m;
}
Monomial mono_mul(const Presentation& p, std::initializer_list<Monomial> ms) {
    AlgebraElement acc = AlgebraElement::from(Monomial{});
    for (const Monomial& m : ms) acc = p.multiply(acc, AlgebraElement::from(m));
    REQUIRE(acc.terms.size() == 1);
    return acc.terms[0];
}

}  // namespace

TEST_CASE("generator degrees") {
    Presentation p = Presentation::make(PresKind::RMotivic, 20);
    CHECK(p.coeff_tau_degree() == Bidegree{0, -1});
    CHECK(p.coeff_rho_degree() == Bidegree{-1, -1});
    CHECK(p.tau_gen_degree(0) == Bidegree{1, 0});
    CHECK(p.tau_gen_degree(1) == Bidegree{3, 1});
    CHECK(p.tau_gen_degree(2) == Bidegree{7, 3});
    CHECK(p.xi_gen_degree(1) == Bidegree{2, 1});
    CHECK(p.xi_gen_degree(2) == Bidegree{6, 3});

    Presentation cl = Presentation::make(PresKind::Classical, 20);
    CHECK(cl.xi_gen_degree(1) == Bidegree{1, 0});
    CHECK(cl.xi_gen_degree(2) == Bidegree{3, 0});
    CHECK(cl.xi_gen_degree(3) == Bidegree{7, 0});
}

TEST_CASE("monomial basis slot degrees") {
    Presentation p = Presentation::make(PresKind::RMotivic, 20);
    /* (t,w) = (1,0): tau_0 alone */
    auto b10 = p.monomial_basis({1, 0});
    REQUIRE(b10.size() == 1);
    CHECK(b10[0] == tau_i(0));
    /* (2,1): xi_1 alone */
    auto b21 = p.monomial_basis({2, 1});
    REQUIRE(b21.size() == 1);
    CHECK(b21[0] == xi(1));
    /* (0,0): 1 */
    auto b00 = p.monomial_basis({0, 0});
    REQUIRE(b00.size() == 1);
    CHECK(b00[0].is_one());
}

TEST_CASE("monomial basis count at (6,3) matches brute-force enumeration") {
    Presentation p = Presentation::make(PresKind::RMotivic, 20);
    auto b = p.monomial_basis({6, 3});

    /* independent enumeration: exponent vectors over tau_0..tau_2 (0/1)
     * and xi_1..xi_3 bounded by degree */
    int count = 0;
    for (int m0 = 0; m0 <= 1; ++m0)
        for (int m1 = 0; m1 <= 1; ++m1)
            for (int m2 = 0; m2 <= 1; ++m2)
                for (int e1 = 0; e1 <= 3; ++e1)
                    for (int e2 = 0; e2 <= 1; ++e2)
                        for (int e3 = 0; e3 <= 1; ++e3) {
                            int t = m0 * 1 + m1 * 3 + m2 * 7 + e1 * 2 + e2 * 6 + e3 * 14;
                            int w = m0 * 0 + m1 * 1 + m2 * 3 + e1 * 1 + e2 * 3 + e3 * 7;
                            if (t == 6 && w == 3) ++count;
                        }
    CHECK(int(b.size()) == count);
    CHECK(count == 2); /* xi_1^3 and xi_2 */
}

TEST_CASE("relation tau_0^2") {
    Presentation r = Presentation::make(PresKind::RMotivic, 20);
    AlgebraElement prod = r.multiply(tau_i(0), tau_i(0));
    AlgebraElement expect;
    expect.add(mono_mul(r, {tau_pow(1), xi(1)}));
    expect.add(mono_mul(r, {rho_pow(1), tau_i(1)}));
    expect.add(mono_mul(r, {rho_pow(1), tau_i(0), xi(1)}));
    CHECK(prod == expect);

    Presentation c = Presentation::make(PresKind::CMotivic, 20);
    AlgebraElement prod_c = c.multiply(tau_i(0), tau_i(0));
    AlgebraElement expect_c;
    expect_c.add(mono_mul(c, {tau_pow(1), xi(1)}));
    CHECK(prod_c == expect_c);
}

TEST_CASE("identity multiplication") {
    Presentation r = Presentation::make(PresKind::RMotivic, 20);
    Monomial x = mono_mul(r, {tau_pow(2), tau_i(1), xi(2, 3)});
    CHECK(r.multiply(Monomial{}, x) == AlgebraElement::from(x));
}

TEST_CASE("tau_0^4 canonical form, two reduction routes agree") {
    Presentation r = Presentation::make(PresKind::RMotivic, 20);
    /* route 1: (tau_0^2)^2 */
    AlgebraElement sq = r.multiply(tau_i(0), tau_i(0));
    AlgebraElement route1 = r.multiply(sq, sq);
    /* route 2: ((tau_0^2) tau_0) tau_0 */
    AlgebraElement route2 = r.multiply(r.multiply(sq, AlgebraElement::from(tau_i(0))),
                                       AlgebraElement::from(tau_i(0)));
    CHECK(route1 == route2);

    AlgebraElement expect;
    expect.add(mono_mul(r, {tau_pow(2), xi(1, 2)}));
    expect.add(mono_mul(r, {rho_pow(2), tau_pow(1), xi(2)}));
    expect.add(mono_mul(r, {rho_pow(3), tau_i(2)}));
    expect.add(mono_mul(r, {rho_pow(3), tau_i(0), xi(2)}));
    expect.add(mono_mul(r, {rho_pow(2), tau_pow(1), xi(1, 3)}));
    expect.add(mono_mul(r, {rho_pow(3), tau_i(1), xi(1, 2)}));
    expect.add(mono_mul(r, {rho_pow(3), tau_i(0), xi(1, 3)}));
    CHECK(route1 == expect);
}

TEST_CASE("rewriting confluent on every monomial pair in a small window") {
    Presentation r = Presentation::make(PresKind::RMotivic, 9);
    std::vector<Monomial> pool = r.slot_monomials(4);
    for (const Monomial& a : pool)
        for (const Monomial& b : pool) {
            AlgebraElement left = r.multiply(a, b);
            AlgebraElement right = r.multiply(b, a);
            CHECK(left == right);
            Bidegree expect = r.degree(a) + r.degree(b);
            for (const Monomial& t : left.terms) CHECK(r.degree(t) == expect);
        }
}

TEST_CASE("eta_right") {
    Presentation r = Presentation::make(PresKind::RMotivic, 20);
    /* eta_R(tau) = tau + rho tau_0 */
    AlgebraElement et = r.eta_right_coeff(1, 0);
    AlgebraElement expect;
    expect.add(tau_pow(1));
    expect.add(mono_mul(r, {rho_pow(1), tau_i(0)}));
    CHECK(et == expect);

    /* eta_R(rho^2) = rho^2 */
    CHECK(r.eta_right_coeff(0, 2) == AlgebraElement::from(rho_pow(2)));

    /* eta_R(tau^4) = tau^4 + rho^4 tau_0^4 (char 2), reduced */
    AlgebraElement e4 = r.eta_right_coeff(4, 0);
    AlgebraElement t04 = r.multiply(r.multiply(tau_i(0), tau_i(0)),
                                    r.multiply(tau_i(0), tau_i(0)));
    AlgebraElement expect4;
    expect4.add(tau_pow(4));
    expect4.add(r.multiply(AlgebraElement::from(rho_pow(4)), t04));
    CHECK(e4 == expect4);

    /* toy pair: eta_R(t) = t + x */
    Presentation b = Presentation::make(PresKind::ToyB, 8);
    AlgebraElement ebt = b.eta_right_coeff(1, 0);
    AlgebraElement expect_b;
    expect_b.add(tau_pow(1));
    expect_b.add(xi(1));
    CHECK(ebt == expect_b);
}

TEST_CASE("coproduct formulas") {
    Presentation r = Presentation::make(PresKind::RMotivic, 20);
    Monomial one;

    /* Delta(1) = 1 (x) 1 */
    TensorElement d1 = r.coproduct(one);
    REQUIRE(d1.terms.size() == 1);
    CHECK(d1.terms[0] == TensorPair{one, one});

    /* Delta(xi_2) = xi_2 (x) 1 + xi_1^2 (x) xi_1 + 1 (x) xi_2 */
    TensorElement dxi2 = r.coproduct(xi(2));
    TensorElement expect;
    expect.add({xi(2), one});
    expect.add({xi(1, 2), xi(1)});
    expect.add({one, xi(2)});
    CHECK(dxi2 == expect);

    /* Frobenius on a primitive: Delta(xi_1^2) = xi_1^2 (x) 1 + 1 (x) xi_1^2 */
    TensorElement dxi1sq = r.coproduct(xi(1, 2));
    TensorElement expect_sq;
    expect_sq.add({xi(1, 2), one});
    expect_sq.add({one, xi(1, 2)});
    CHECK(dxi1sq == expect_sq);

    /* Delta(tau_0 xi_1) = Delta(tau_0) Delta(xi_1), fully expanded */
    TensorElement dm = r.coproduct(mono_mul(r, {tau_i(0), xi(1)}));
    TensorElement expect_m;
    expect_m.add({mono_mul(r, {tau_i(0), xi(1)}), one});
    expect_m.add({tau_i(0), xi(1)});
    expect_m.add({xi(1), tau_i(0)});
    expect_m.add({one, mono_mul(r, {tau_i(0), xi(1)})});
    CHECK(dm == expect_m);

    /* Delta(tau_1) = tau_1 (x) 1 + xi_1 (x) tau_0 + 1 (x) tau_1 */
    TensorElement dt1 = r.coproduct(tau_i(1));
    TensorElement expect_t1;
    expect_t1.add({tau_i(1), one});
    expect_t1.add({xi(1), tau_i(0)});
    expect_t1.add({one, tau_i(1)});
    CHECK(dt1 == expect_t1);

    /* Delta(tau_2) = tau_2 (x) 1 + xi_2 (x) tau_0 + xi_1^2 (x) tau_1 + 1 (x) tau_2 */
    TensorElement dt2 = r.coproduct(tau_i(2));
    TensorElement expect_t2;
    expect_t2.add({tau_i(2), one});
    expect_t2.add({xi(2), tau_i(0)});
    expect_t2.add({xi(1, 2), tau_i(1)});
    expect_t2.add({one, tau_i(2)});
    CHECK(dt2 == expect_t2);
}

TEST_CASE("degree preservation of Delta and eta_R") {
    Presentation r = Presentation::make(PresKind::RMotivic, 9);
    for (const Monomial& m : r.slot_monomials(5)) {
        Bidegree d = r.degree(m);
        for (const TensorPair& p : r.coproduct(m).terms)
            CHECK(r.degree(p.first) + r.degree(p.second) == d);
    }
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 2; ++b) {
            AlgebraElement e = r.eta_right_coeff(a, b);
            for (const Monomial& t : e.terms)
                CHECK(r.degree(t) == Bidegree{-b, -a - b});
        }
}

TEST_CASE("setting rho to zero reproduces the C-motivic structure maps") {
    Presentation r = Presentation::make(PresKind::RMotivic, 12);
    Presentation c = Presentation::make(PresKind::CMotivic, 12);
    for (const Monomial& m : r.slot_monomials(6)) {
        CHECK(Presentation::set_rho_zero(r.coproduct(m)) == c.coproduct(m));
        for (const Monomial& g : r.slot_monomials(3)) {
            AlgebraElement pr = Presentation::set_rho_zero(r.multiply(m, g));
            CHECK(pr == c.multiply(m, g));
        }
    }
    for (int a = 0; a <= 4; ++a)
        CHECK(Presentation::set_rho_zero(r.eta_right_coeff(a, 0)) == c.eta_right_coeff(a, 0));
}

TEST_CASE("window overflow on out-of-range generators") {
    Presentation tiny = Presentation::make(PresKind::RMotivic, 2);
    CHECK_THROWS_AS(tiny.monomial_basis({40, 20}), WindowOverflow);
}
