#include <doctest.h>

#include "fixtures.hpp"
#include "semihall/double.hpp"

using namespace semihall;
using fixtures::A2Objects;

TEST_SUITE("double") {
  TEST_CASE("extended products") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const auto& plus = dd.plus();
    const K0Class zero({0, 0});
    for (const auto& a : classes_in_ball(2, 1)) {
      for (const auto& b : classes_in_ball(2, 1)) {
        CHECK(plus.key_product({o.zero, a}, {o.zero, b}) == plus.basis({o.zero, a + b}));
      }
      for (ClassId n : {o.s1, o.s2, o.p1}) {
        const QSqrt t = sdh.vpow(a2->symmetric_form(a, a2->class_of(n)));
        CHECK(plus.key_product({o.zero, a}, {n, zero}) == ExtElement{{{n, a}, t}});
        CHECK(dd.minus().key_product({o.zero, a}, {n, zero}) == ExtElement{{{n, a}, t}});
      }
    }
    const QSqrt vinv = sdh.vpow(-1);
    CHECK(plus.key_product({o.s1, zero}, {o.s2, zero}) == ExtElement{{{o.split, zero}, vinv}, {{o.p1, zero}, vinv}});
  }

  TEST_CASE("extended coproducts") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const K0Class zero({0, 0});
    for (const auto& a : classes_in_ball(2, 1)) {
      CHECK(dd.plus().coproduct(ExtKey{o.zero, a}) == ExtTensor{{{{o.zero, a}, {o.zero, a}}, sdh.scalar(1)}});
    }
    const K0Class s = a2->class_of(o.s1);
    const ExtTensor expect{{{{o.s1, zero}, {o.zero, zero}}, sdh.scalar(1)},
                           {{{o.zero, s}, {o.s1, zero}}, sdh.scalar(1)}};
    CHECK(dd.plus().coproduct(ExtKey{o.s1, zero}) == expect);
    const ExtTensor expect_minus{{{{o.zero, zero}, {o.s1, zero}}, sdh.scalar(1)},
                                 {{{o.s1, zero}, {o.zero, s}}, sdh.scalar(1)}};
    CHECK(dd.minus().coproduct(ExtKey{o.s1, zero}) == expect_minus);
  }

  TEST_CASE("pairing values") {
    VectBackend v(3);
    SDHAlgebra sdh(v);
    DrinfeldDouble dd(sdh);
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        CHECK(dd.pairing(ExtKey{0, K0Class({a})}, ExtKey{0, K0Class({b})}) == sdh.vpow(2 * a * b));
      }
    }
    CHECK(dd.pairing(ExtKey{1, K0Class({0})}, ExtKey{1, K0Class({0})}) == QSqrt(2));
    CHECK(dd.pairing(ExtKey{1, K0Class({0})}, ExtKey{2, K0Class({0})}).is_zero());
  }

  TEST_CASE("embeddings") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const ExtKey one = dd.plus().unit_key();
    CHECK(dd.iso(one, one) == sdh.unit());
    for (ClassId s : {o.s1, o.s2, o.p1}) {
      CHECK(dd.iso({s, K0Class({0, 0})}, one) == sdh.c(s));
      CHECK(dd.iso(one, {s, K0Class({0, 0})}) == sdh.cstar(s));
    }
    CHECK(dd.iso({o.zero, K0Class({1, -1})}, one) == sdh.k_alpha(K0Class({1, -1}), false));
  }

  TEST_CASE("extended bialgebra suites") {
    auto a2 = make_a2(2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const K0Class b({1, 1});
    for (const ExtHallAlgebra* e : {&dd.plus(), &dd.minus()}) {
      CHECK(verify_ext_associativity(*e, b, 1, 2).passed());
      CHECK(verify_ext_coassociativity(*e, b, 1, 2).passed());
      CHECK(verify_ext_compatibility(*e, b, 1, 2).passed());
      CHECK(verify_ext_counit(*e, b, 1, 2).passed());
    }
    CHECK(verify_hopf_pairing(dd, b, 1, 2).passed());
  }

  TEST_CASE("double relations through I") {
    auto a2 = make_a2(2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const K0Class b({1, 1});
    CHECK(verify_d1(dd, b, 1, 2).passed());
    CHECK(verify_d2(dd, b, 1, 2).passed());
    CHECK(verify_d3(dd, b, 1, 2).passed());
    CHECK(verify_d4(dd, b, 1, D4Orientation::verified(), 2).passed());
    CHECK(verify_bialgebra_iso(dd, b, 1, 2).passed());
    CHECK(verify_iso_injective(dd, b, 1, 2).passed());
  }

  TEST_CASE("exactly one leg placement satisfies D4") {
    VectBackend v(2);
    SDHAlgebra sdh(v);
    DrinfeldDouble dd(sdh);
    int passing = 0;
    for (const auto& o : D4Orientation::all()) {
      const bool ok = verify_d4(dd, K0Class({2}), 1, o, 2).passed();
      if (ok) {
        ++passing;
        CHECK(o == D4Orientation::verified());
      }
    }
    CHECK(passing == 1);
    CHECK_FALSE(verify_d4(dd, K0Class({2}), 1, D4Orientation::as_printed(), 2).passed());
  }

  TEST_CASE("the opposite twist in H^ex- breaks I- and the pairing") {
    VectBackend v(2);
    SDHAlgebra sdh(v);
    DrinfeldDouble dd(sdh, -1);
    CHECK_FALSE(verify_d2(dd, K0Class({2}), 1, 2).passed());
    CHECK_FALSE(verify_hopf_pairing(dd, K0Class({2}), 1, 2).passed());
    CHECK_FALSE(verify_ext_compatibility(dd.minus(), K0Class({2}), 1, 2).passed());
  }

  TEST_CASE("iso sends a simple generator to the two-term coproduct") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra sdh(*a2);
    DrinfeldDouble dd(sdh);
    const ExtKey one = dd.minus().unit_key();
    const ExtKey s{o.s2, K0Class({0, 0})};
    SDHTensor lhs;
    for (const auto& [pa, ca] : dd.plus().coproduct(s)) {
      for (const auto& [l, cl] : dd.iso(pa.first, one)) {
        for (const auto& [r, cr] : dd.iso(pa.second, one)) add_to(lhs, std::pair{l, r}, ca * cl * cr);
      }
    }
    CHECK(lhs == sdh.coproduct(sdh.c(o.s2)));
    CHECK(lhs.size() == 2);
  }
}
