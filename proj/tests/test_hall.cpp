#include <doctest.h>

#include "fixtures.hpp"
#include "semihall/hall.hpp"

using namespace semihall;
using fixtures::A2Objects;

namespace {

QSqrt sq(long r, long s, std::uint64_t q) { return QSqrt(mpq_class(r), mpq_class(s), q); }

}  // namespace

TEST_SUITE("hallcore") {
  TEST_CASE("Hall numbers in vect") {
    VectBackend v(2);
    HallAlgebra h(v);
    CHECK(h.hall_number(1, 1, 2) == QSqrt(mpq_class(1, 2)));
    CHECK(hall_number_direct(v, 1, 1, 2) == QSqrt(mpq_class(1, 2)));
    for (ClassId m = 0; m <= 3; ++m) CHECK(h.hall_number(m, 0, m) == QSqrt(1));
  }

  TEST_CASE("Hall numbers on A2") {
    auto a2 = make_a2(2);
    HallAlgebra h(*a2);
    A2Objects o(*a2);
    CHECK(h.hall_number(o.s1, o.s2, o.p1) == QSqrt(1));
    CHECK(hall_number_direct(*a2, o.s1, o.s2, o.p1) == QSqrt(1));
    CHECK(h.hall_number(o.s1, o.s2, o.split) == QSqrt(1));
    CHECK(hall_number_direct(*a2, o.s1, o.s2, o.split) == QSqrt(1));
    CHECK(h.hall_number(o.s2, o.s1, o.p1).is_zero());
    CHECK(hall_number_direct(*a2, o.s2, o.s1, o.p1).is_zero());
  }

  TEST_CASE("Riedtmann conversion against the subobject census") {
    for (std::uint64_t q : {2u, 3u}) {
      auto a2 = make_a2(q);
      HallAlgebra h(*a2);
      for (const auto& [m, n, r] : graded_triples(*a2, K0Class({2, 1}))) {
        const mpq_class f(a2->sub_quotient_count(r, m, n));
        const QSqrt expect = QSqrt(f * mpq_class(a2->aut_count(m) * a2->aut_count(n), a2->aut_count(r)));
        CHECK(h.hall_number(m, n, r) == expect);
      }
    }
  }

  TEST_CASE("iterated Hall numbers") {
    VectBackend v(2);
    HallAlgebra h(v);
    CHECK(h.iterated_hall_number({1, 1, 0}, 2) == QSqrt(mpq_class(1, 2)));
    // 21 complete flags in F_2^3, a_{V3} = 168
    CHECK(h.iterated_hall_number({1, 1, 1}, 3) == QSqrt(mpq_class(21, 168)));
    CHECK(h.iterated_hall_number({2, 0, 0}, 2) == QSqrt(1));
  }

  TEST_CASE("twisted products") {
    VectBackend v(2);
    HallAlgebra h(v);
    CHECK(h.basis_product(0, 2, true) == HallElement{{2, QSqrt(1)}});
    CHECK(h.basis_product(1, 1, true) == HallElement{{2, sq(0, 1, 2) * QSqrt(mpq_class(1, 2))}});
    auto a2 = make_a2(2);
    HallAlgebra ha(*a2);
    A2Objects o(*a2);
    const QSqrt vinv = QSqrt::vpow(-1, 2);
    CHECK(ha.basis_product(o.s1, o.s2, true) == HallElement{{o.split, vinv}, {o.p1, vinv}});
    CHECK(ha.basis_product(o.s2, o.s1, true) == HallElement{{o.split, QSqrt(1)}});
  }

  TEST_CASE("Green coproduct") {
    VectBackend v(2);
    HallAlgebra h(v);
    CHECK(h.green_coproduct(0) == HallTensor{{{0, 0}, QSqrt(1)}});
    const HallTensor expect{{{2, 0}, QSqrt(1)}, {{0, 2}, QSqrt(1)}, {{1, 1}, sq(0, 3, 2)}};
    CHECK(h.green_coproduct(2) == expect);
    for (ClassId r = 0; r <= 3; ++r) {
      HallElement left;
      for (const auto& [mn, c] : h.green_coproduct(r)) {
        if (mn.first == 0) add_to(left, mn.second, c);
      }
      CHECK(left == HallElement{{r, QSqrt(1)}});
    }
  }

  TEST_CASE("identity suites hold") {
    VectBackend v(2);
    HallAlgebra h(v);
    const K0Class b({3});
    CHECK(verify_hall_double_entry(h, v, b, 2).passed());
    CHECK(verify_gaussian_oracle(v, 4, 2).passed());
    CHECK(verify_associativity(h, b, 2).passed());
    CHECK(verify_green_formula(h, K0Class({2}), 2).passed());
    CHECK(verify_green_corollary(h, K0Class({2}), 2).passed());
    CHECK(verify_green_counit(h, b, 2).passed());
    CHECK(verify_green_coassociativity(h, b, 2).passed());
    CHECK(verify_green_bialgebra(h, b, 2).passed());
    CHECK(verify_euler_form(h, v, b, 2).passed());
    auto a2 = make_a2(2);
    HallAlgebra ha(*a2);
    const K0Class ba({1, 1});
    CHECK(verify_associativity(ha, ba, 2).passed());
    CHECK(verify_green_formula(ha, ba, 2).passed());
    CHECK(verify_green_bialgebra(ha, ba, 2).passed());
  }

  TEST_CASE("fault injection is caught") {
    VectBackend v(2);
    HallAlgebra h(v);
    h.inject_fault(1, 1, 2, QSqrt(2));
    const SuiteReport de = verify_hall_double_entry(h, v, K0Class({2}), 1);
    CHECK(de.failed == 1);
    REQUIRE_FALSE(de.failures.empty());
    CHECK(de.failures[0].instance.find("V2") != std::string::npos);
    CHECK_FALSE(verify_green_formula(h, K0Class({2}), 1).passed());
    CHECK_FALSE(verify_green_corollary(h, K0Class({2}), 1).passed());
    // a uniform rescaling of h^{V2}_{V1V1} is invisible to associativity; h^{V3}_{V1V2} is not
    HallAlgebra h3(v);
    h3.inject_fault(1, 2, 3, QSqrt(2));
    CHECK_FALSE(verify_associativity(h3, K0Class({3}), 1).passed());
  }

  TEST_CASE("reports do not depend on the worker count") {
    auto a2 = make_a2(2);
    HallAlgebra h(*a2);
    h.inject_fault(a2->objects_of_class(K0Class({1, 0}))[0], a2->objects_of_class(K0Class({0, 1}))[0],
                   a2->objects_of_class(K0Class({1, 1}))[0], QSqrt(3));
    const auto one = verify_green_formula(h, K0Class({1, 1}), 1).to_json();
    const auto four = verify_green_formula(h, K0Class({1, 1}), 4).to_json();
    CHECK(one == four);
  }

  TEST_CASE("truncation aborts are counted") {
    VectBackend v(2);
    HallAlgebra h(v, K0Class({1}));
    CHECK_THROWS_AS(h.basis_product(1, 1, true), TruncationError);
    const SuiteReport r = run_suite("probe", 3, 2, [&](std::size_t i) -> Check {
      if (i == 1) h.basis_product(1, 1, true);
      return std::nullopt;
    });
    CHECK(r.aborted == 1);
    CHECK(exit_code_for({r}) == 2);
  }
}
