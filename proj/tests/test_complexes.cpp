#include <doctest.h>

#include "fixtures.hpp"
#include "semihall/complexes.hpp"
#include "semihall/hall.hpp"

using namespace semihall;
using fixtures::A2Objects;

TEST_SUITE("complexes") {
  TEST_CASE("homology of the standard complexes") {
    VectBackend v(2);
    ComplexCategory cc(v);
    for (ClassId x = 0; x <= 2; ++x) {
      CHECK(cc.homology(cc.k_complex(x), 0) == v.zero());
      CHECK(cc.homology(cc.k_complex(x), 1) == v.zero());
      CHECK(cc.homology(cc.c_complex(x), 1) == x);
      CHECK(cc.homology(cc.c_complex(x), 0) == v.zero());
      CHECK(cc.homology(cc.cstar_complex(x), 0) == x);
      CHECK(cc.is_acyclic(cc.classify(cc.k_complex(x))));
      CHECK(cc.is_acyclic(cc.classify(cc.kstar_complex(x))));
    }
    const ClassId z = cc.zero();
    CHECK(cc.classify(cc.k_complex(0)) == z);
    CHECK(cc.classify(cc.kstar_complex(0)) == z);
    CHECK(cc.classify(cc.c_complex(0)) == z);
    CHECK(cc.classify(cc.cstar_complex(0)) == z);
  }

  TEST_CASE("A2 complex with the projection onto the top") {
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    ComplexCategory cc(*a2);
    Z2Complex c;
    c.m0 = a2->representative(o.p1);
    c.m1 = a2->representative(o.s1);
    c.d0 = {FpMatrix(2, 1, 1, {1}), FpMatrix(2, 0, 1)};
    c.d1 = {FpMatrix(2, 1, 1, {0}), FpMatrix(2, 1, 0)};
    REQUIRE(cc.is_valid(c));
    CHECK(cc.homology(c, 0) == o.s2);
    CHECK(cc.homology(c, 1) == o.zero);
    CHECK(cc.image(c, 0) == o.s1);
    CHECK(cc.image(c, 1) == o.zero);
    CHECK_FALSE(cc.is_acyclic(cc.classify(c)));
  }

  TEST_CASE("shift") {
    auto a2 = make_a2(2);
    ComplexCategory cc(*a2);
    for (ClassId x : a2->objects_up_to(K0Class({1, 1}))) {
      CHECK(cc.classify(cc.shift(cc.c_complex(x))) == cc.classify(cc.cstar_complex(x)));
      CHECK(cc.classify(cc.shift(cc.k_complex(x))) == cc.classify(cc.kstar_complex(x)));
    }
    for (ClassId m : cc.enumerate(K0Class({1, 1}))) {
      const Z2Complex c = cc.representative(m);
      CHECK(cc.classify(cc.shift(cc.shift(c))) == m);
      CHECK(cc.homology(cc.shift(c), 0) == cc.homology(c, 1));
    }
  }

  TEST_CASE("component-wise Euler form") {
    auto a2 = make_a2(2);
    ComplexCategory cc(*a2);
    const auto objs = a2->objects_up_to(K0Class({1, 1}));
    for (ClassId x : objs) {
      for (ClassId y : objs) {
        const ClassId cx = cc.classify(cc.c_complex(x)), cy = cc.classify(cc.c_complex(y));
        const ClassId csy = cc.classify(cc.cstar_complex(y));
        const ClassId kx = cc.classify(cc.k_complex(x)), ky = cc.classify(cc.k_complex(y));
        CHECK(cc.euler_form(cx, cy) == a2->euler_form(x, y));
        CHECK(cc.euler_form(cx, csy) == 0);
        CHECK(cc.euler_form(kx, ky) == 2 * a2->euler_form(x, y));
      }
    }
  }

  TEST_CASE("enumeration") {
    VectBackend v(2);
    ComplexCategory cc(v);
    CHECK(cc.enumerate(K0Class({1})).size() == 6);
    CHECK(cc.enumerate(K0Class({0})).size() == 1);
  }

  TEST_CASE("acyclic complexes and the standard acyclic sums") {
    for (std::uint64_t q : {2u, 3u}) {
      auto a2 = make_a2(q);
      A2Objects o(*a2);
      ComplexCategory cc(*a2);
      int nonstandard = 0;
      for (ClassId m : cc.enumerate(K0Class({1, 1}))) {
        const Z2Complex c = cc.representative(m);
        const ClassId i0 = cc.image(c, 0), i1 = cc.image(c, 1);
        const ClassId h0 = cc.homology(c, 0), h1 = cc.homology(c, 1);
        const ClassId std_acyclic = cc.direct_sum(cc.classify(cc.k_complex(i0)), cc.classify(cc.kstar_complex(i1)));
        CHECK(cc.is_acyclic(m) == (h0 == a2->zero() && h1 == a2->zero()));
        const K0Class expect = cc.class_of(std_acyclic) + cc.class_of(cc.classify(cc.stalk_complex(h0, h1)));
        CHECK(cc.class_of(m) == expect);
        if (cc.is_acyclic(m) && m != std_acyclic) {
          ++nonstandard;
          // P1 <=> S1 + S2 and its shift: a non-split component with the same images
          CHECK((c.m0.dims == std::vector<int>{1, 1} && c.m1.dims == std::vector<int>{1, 1}));
          CHECK((cc.classify(c) != cc.direct_sum(cc.classify(cc.k_complex(o.s1)),
                                                 cc.classify(cc.kstar_complex(o.s2)))));
        }
      }
      CHECK(nonstandard == 2);
    }
  }

  TEST_CASE("Hall numbers of complexes") {
    VectBackend v(2);
    ComplexCategory cc(v);
    HallAlgebra h(cc);
    const ClassId k = cc.classify(cc.k_complex(1));
    const ClassId c = cc.classify(cc.c_complex(1));
    const ClassId cs = cc.classify(cc.cstar_complex(1));
    CHECK(h.hall_number(cs, c, k) == QSqrt(1));
    CHECK(h.hall_number(c, cs, k).is_zero());
    CHECK(h.hall_number(k, cc.zero(), k) == QSqrt(1));
    const auto prod = h.basis_product(c, cs, true);
    CHECK(prod.count(k) == 0);
    CHECK(prod.count(cc.direct_sum(c, cs)) == 1);
    CHECK(prod.count(cc.classify(cc.kstar_complex(1))) == 1);
    for (const auto& [r, coeff] : prod) CHECK(cc.class_of(r) == cc.class_of(c) + cc.class_of(cs));
  }

  TEST_CASE("the Hall product of complexes is associative") {
    VectBackend v(2);
    ComplexCategory cc(v);
    HallAlgebra h(cc);
    CHECK(verify_associativity(h, K0Class({1, 1}), 2).passed());
    auto a2 = make_a2(2);
    ComplexCategory ca(*a2);
    HallAlgebra ha(ca);
    CHECK(verify_associativity(ha, K0Class({1, 0, 1, 0}), 2).passed());
  }
}
