#include <doctest.h>

#include "fixtures.hpp"
#include "semihall/ideal_oracle.hpp"
#include "semihall/sdh.hpp"

using namespace semihall;
using fixtures::A2Objects;

namespace {

SDHElement scaled(const SDHElement& x, const QSqrt& c) {
  SDHElement out;
  accumulate(out, x, c);
  return out;
}

SDHTensor pure(const SDHElement& x, const SDHElement& y) {
  SDHTensor out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) add_to(out, std::pair{kx, ky}, cx * cy);
  }
  return out;
}

SDHTensor sum(SDHTensor a, const SDHTensor& b) {
  for (const auto& [k, c] : b) add_to(a, k, c);
  return a;
}

}  // namespace

TEST_SUITE("sdh") {
  TEST_CASE("K-parts") {
    auto a2 = make_a2(2);
    SDHAlgebra alg(*a2);
    CHECK(alg.k_alpha(K0Class({0, 0}), false) == alg.unit());
    CHECK(alg.k_alpha(K0Class({0, 0}), true) == alg.unit());
    for (const auto& a : classes_in_ball(2, 1)) {
      for (const auto& b : classes_in_ball(2, 1)) {
        CHECK(alg.product(alg.k_alpha(a, true), alg.k_alpha(b, false)) ==
              alg.product(alg.k_alpha(b, false), alg.k_alpha(a, true)));
        CHECK(alg.product(alg.k_alpha(a, false), alg.k_alpha(b, false)) == alg.k_alpha(a + b, false));
      }
      CHECK(alg.product(alg.k_alpha(a, true), alg.k_alpha(-a, true)) == alg.unit());
    }
  }

  TEST_CASE("commuting K-parts past stalks") {
    auto a2 = make_a2(2);
    SDHAlgebra alg(*a2);
    const auto objs = a2->objects_up_to(K0Class({1, 1}));
    for (const auto& g : classes_in_ball(2, 1)) {
      for (ClassId a : objs) {
        for (ClassId b : objs) {
          const SDHElement c = alg.basis(alg.stalk_key(a, b));
          const K0Class ab = a2->class_of(a) - a2->class_of(b);
          const SDHElement kl = alg.product(alg.k_alpha(g, false), c);
          const SDHElement kr = alg.product(c, alg.k_alpha(g, false));
          CHECK(kl == scaled(kr, alg.vpow(a2->symmetric_form(-ab, g))));
          const SDHElement sl = alg.product(alg.k_alpha(g, true), c);
          const SDHElement sr = alg.product(c, alg.k_alpha(g, true));
          CHECK(sl == scaled(sr, alg.vpow(a2->symmetric_form(ab, g))));
        }
      }
    }
  }

  TEST_CASE("stalk products embed the twisted Hall algebra twice") {
    auto a2 = make_a2(2);
    SDHAlgebra alg(*a2);
    HallAlgebra h(*a2);
    const auto objs = a2->objects_up_to(K0Class({1, 1}));
    for (ClassId x : objs) {
      for (ClassId y : objs) {
        if (!(a2->class_of(x) + a2->class_of(y)).within(K0Class({1, 1}))) continue;
        SDHElement c_expect, cs_expect;
        for (const auto& [r, coeff] : h.basis_product(x, y, true)) {
          add_to(c_expect, alg.stalk_key(a2->zero(), r), coeff);
          add_to(cs_expect, alg.stalk_key(r, a2->zero()), coeff);
        }
        CHECK(alg.product(alg.c(x), alg.c(y)) == c_expect);
        CHECK(alg.product(alg.cstar(x), alg.cstar(y)) == cs_expect);
      }
    }
  }

  TEST_CASE("unit") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    for (const auto& k : alg.keys_within(K0Class({2}), 1)) {
      CHECK(alg.key_product(alg.unit_key(), k) == alg.basis(k));
      CHECK(alg.key_product(k, alg.unit_key()) == alg.basis(k));
    }
  }

  TEST_CASE("coproduct examples") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra alg(*a2);
    for (const auto& g : classes_in_ball(2, 2)) {
      const SDHElement k = alg.k_alpha(g, false);
      CHECK(alg.coproduct(k) == pure(k, k));
    }
    for (ClassId s : {o.s1, o.s2}) {
      const K0Class ss = a2->class_of(s);
      CHECK(alg.coproduct(alg.cstar(s)) ==
            sum(pure(alg.cstar(s), alg.k_alpha(ss, true)), pure(alg.unit(), alg.cstar(s))));
      CHECK(alg.coproduct(alg.c(s)) == sum(pure(alg.c(s), alg.unit()), pure(alg.k_alpha(ss, false), alg.c(s))));
    }
  }

  TEST_CASE("counit") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra alg(*a2);
    CHECK(alg.counit(alg.unit()) == QSqrt(1));
    CHECK(alg.counit(alg.cstar(o.s1)) == QSqrt(0));
    CHECK(alg.counit(alg.c(o.p1)) == QSqrt(0));
    CHECK(alg.counit(alg.k_alpha(K0Class({1, -1}), true)) == QSqrt(1));
  }

  TEST_CASE("structure suites") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    const K0Class b({2});
    CHECK(verify_k_relations(alg, 2, 2).passed());
    CHECK(verify_counit(alg, b, 1, 2).passed());
    CHECK(verify_coassociativity(alg, b, 1, 2).passed());
    CHECK(verify_compatibility(alg, b, 1, 2).passed());
    CHECK(verify_sdh_associativity(alg, K0Class({1}), 1, 2).passed());
    auto a2 = make_a2(2);
    SDHAlgebra aa(*a2);
    CHECK(verify_sdh_associativity(aa, K0Class({1, 1}), 0, 2).passed());
    CHECK(verify_coassociativity(aa, K0Class({1, 1}), 1, 2).passed());
  }

  TEST_CASE("perturbed exponents are noticed") {
    VectBackend v(2);
    ExponentPerturbation p;
    p.product_constant = 1;
    SDHAlgebra bad_product(v, p);
    CHECK_FALSE(p.is_identity());
    CHECK_FALSE(verify_compatibility(bad_product, K0Class({2}), 1, 2).passed());
    ExponentPerturbation c;
    c.coproduct_terms[0] = -1;
    SDHAlgebra bad_coproduct(v, c);
    CHECK_FALSE(verify_compatibility(bad_coproduct, K0Class({2}), 1, 2).passed());
    CHECK(ExponentPerturbation{}.is_identity());
  }

  TEST_CASE("json export is sorted and stable") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    const SDHElement p = alg.product(alg.c(1), alg.cstar(1));
    const auto j = alg.element_json(p);
    CHECK(j.size() == p.size());
    CHECK(j == alg.element_json(alg.product(alg.c(1), alg.cstar(1))));
    CHECK(alg.key_json(alg.stalk_key(1, 0)).at("A") == "V1");
  }
}

TEST_SUITE("sdh-oracle") {
  TEST_CASE("normal forms of the standard complexes") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    ComplexCategory cc(v);
    const K0Class zero({0});
    for (ClassId x = 0; x <= 2; ++x) {
      const K0Class xx = v.class_of(x);
      CHECK(normal_form(alg, cc, cc.k_complex(x)) == alg.basis(alg.key(xx, zero, 0, 0)));
      CHECK(normal_form(alg, cc, cc.kstar_complex(x)) == alg.basis(alg.key(zero, xx, 0, 0)));
      CHECK(normal_form(alg, cc, cc.c_complex(x)) == alg.c(x));
      CHECK(normal_form(alg, cc, cc.cstar_complex(x)) == alg.cstar(x));
    }
  }

  TEST_CASE("normal form of the A2 complex P1 -> S1") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    SDHAlgebra alg(*a2);
    ComplexCategory cc(*a2);
    QuotientOracle oracle(alg, cc);
    Z2Complex c;
    c.m0 = a2->representative(o.p1);
    c.m1 = a2->representative(o.s1);
    c.d0 = {FpMatrix(2, 1, 1, {1}), FpMatrix(2, 0, 1)};
    c.d1 = {FpMatrix(2, 1, 1, {0}), FpMatrix(2, 1, 0)};
    const SDHElement nf = normal_form(alg, cc, c);
    const SDHKey expect = alg.key(a2->class_of(o.s1), K0Class({0, 0}), o.s2, o.zero);
    CHECK(nf == SDHElement{{expect, alg.vpow(-1)}});
    const HallElement lhs{{cc.classify(c), alg.scalar(1)}};
    CHECK(oracle.equivalent(lhs, oracle.representative(nf)));
    CHECK_FALSE(oracle.equivalent(lhs, oracle.representative(alg.basis(expect))));
  }

  TEST_CASE("C_V1 * C*_V1 against the complex oracle") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    ComplexCategory cc(v);
    QuotientOracle oracle(alg, cc);
    const SDHElement p = alg.product(alg.c(1), alg.cstar(1));
    CHECK(p.size() == 2);
    CHECK(p.count(alg.stalk_key(1, 1)) == 1);
    CHECK(p.count(alg.key(K0Class({0}), K0Class({1}), 0, 0)) == 1);
    const HallElement lhs = oracle.product(oracle.representative(alg.c(1)), oracle.representative(alg.cstar(1)));
    CHECK(oracle.equivalent(lhs, oracle.representative(p)));
    SDHElement wrong = p;
    wrong.begin()->second *= alg.vpow(1);
    CHECK_FALSE(oracle.equivalent(lhs, oracle.representative(wrong)));
  }

  TEST_CASE("oracle suites") {
    VectBackend v(2);
    SDHAlgebra alg(v);
    ComplexCategory cc(v);
    QuotientOracle oracle(alg, cc);
    const K0Class b({2});
    CHECK(verify_k_well_defined(oracle, b, 2).passed());
    CHECK(verify_normal_form(oracle, b, 2).passed());
    CHECK(verify_basis_independence(oracle, b, 2).passed());
    CHECK(verify_product_oracle(oracle, b, 1, 4, 2).passed());
  }

  TEST_CASE("the oracle rejects a perturbed product") {
    VectBackend v(2);
    ComplexCategory cc(v);
    ExponentPerturbation p;
    p.product_terms[2] = 1;
    SDHAlgebra bad(v, p);
    QuotientOracle oracle(bad, cc);
    CHECK_FALSE(verify_product_oracle(oracle, K0Class({2}), 1, 4, 2).passed());
  }

  TEST_CASE("row spaces") {
    RowSpace rs;
    CHECK(rs.insert({{0, QSqrt(1)}, {1, QSqrt(2)}}));
    CHECK(rs.insert({{1, QSqrt(1)}}));
    CHECK_FALSE(rs.insert({{0, QSqrt(3)}, {1, QSqrt(-1)}}));
    CHECK(rs.rank() == 2);
    HallElement v{{0, QSqrt(5)}, {2, QSqrt(1)}};
    rs.reduce(v);
    CHECK(v == HallElement{{2, QSqrt(1)}});
  }
}
