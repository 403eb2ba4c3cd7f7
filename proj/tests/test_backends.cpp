#include <doctest.h>

#include "fixtures.hpp"
#include "semihall/errors.hpp"
#include "semihall/fp_matrix.hpp"

using namespace semihall;
using fixtures::A2Objects;

TEST_SUITE("backends") {
  TEST_CASE("object listings") {
    VectBackend v(2);
    CHECK(v.objects_up_to(K0Class({2})).size() == 3);
    CHECK(v.objects_up_to(K0Class({0})).size() == 1);
    auto a2 = make_a2(2);
    CHECK(a2->objects_up_to(K0Class({1, 1})).size() == 5);
    CHECK(a2->objects_up_to(K0Class({0, 0})).size() == 1);
  }

  TEST_CASE("hom counts") {
    VectBackend v(3);
    CHECK(v.hom_count(1, 1) == 3);
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    CHECK(a2->hom_count(o.s1, o.s2) == 1);
    // P1 has top S1 and socle S2 for the arrow 1 -> 2
    CHECK(a2->hom_count(o.p1, o.s2) == 1);
    CHECK(a2->hom_count(o.s2, o.p1) == 2);
    CHECK(a2->hom_count(o.p1, o.s1) == 2);
    CHECK(a2->hom_count(o.p1, o.p1) == 2);
  }

  TEST_CASE("automorphism counts") {
    VectBackend v(2);
    CHECK(v.aut_count(0) == 1);
    CHECK(v.aut_count(1) == 1);
    CHECK(v.aut_count(2) == 6);
    VectBackend v3(3);
    for (int n = 0; n <= 3; ++n) CHECK(v3.aut_count(n) == gl_order(n, 3));
    auto a2 = make_a2(3);
    A2Objects o(*a2);
    CHECK(a2->aut_count(o.p1) == 2);
    CHECK(a2->aut_count(o.split) == 4);
  }

  TEST_CASE("orbit-stabilizer accounts for every representation") {
    for (std::uint64_t q : {2u, 3u}) {
      auto a2 = make_a2(q);
      for (const auto& d : classes_within(K0Class({2, 2}))) {
        mpq_class total = 0;
        for (ClassId m : a2->objects_of_class(d)) {
          total += mpq_class(gl_order(d.v[0], q) * gl_order(d.v[1], q), a2->aut_count(m));
        }
        mpz_class reps;
        mpz_ui_pow_ui(reps.get_mpz_t(), q, static_cast<unsigned long>(d.v[0] * d.v[1]));
        total.canonicalize();
        CHECK(total == mpq_class(reps));
      }
    }
  }

  TEST_CASE("Euler forms") {
    VectBackend v(2);
    CHECK(v.euler_form(1, 1) == 1);
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    CHECK(a2->euler_form(o.s1, o.s2) == -1);
    CHECK(a2->euler_form(o.s2, o.s1) == 0);
    CHECK(a2->symmetric_form(a2->class_of(o.s1), a2->class_of(o.s2)) == -1);
    for (ClassId m : a2->objects_up_to(K0Class({1, 1}))) {
      for (ClassId n : a2->objects_up_to(K0Class({1, 1}))) {
        const auto census = a2->extension_census(m, n);
        mpz_class ext = 0;
        for (const auto& [r, c] : census.cocycles) ext += c;
        // sum_R h^R_{MN} = |Ext^1(M,N)| / |Hom(M,N)|
        mpq_class ext_size = mpq_class(ext, census.normalizer) * mpq_class(a2->hom_count(m, n));
        ext_size.canonicalize();
        long dim_ext = 0;
        for (mpq_class x = ext_size; x > 1; x /= 2) ++dim_ext;
        CHECK(ext_size == mpq_class(mpz_class(1) << dim_ext));
        CHECK(a2->euler_form(m, n) == a2->hom_dim(m, n) - dim_ext);
      }
    }
  }

  TEST_CASE("filtration counts") {
    VectBackend v(2);
    CHECK(v.sub_quotient_count(2, 1, 1) == 3);
    CHECK(v.sub_quotient_count(2, 2, 0) == 1);
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    CHECK(a2->sub_quotient_count(o.p1, o.s1, o.s2) == 1);
    CHECK(a2->sub_quotient_count(o.p1, o.s2, o.s1) == 0);
    CHECK(a2->sub_quotient_count(o.split, o.s2, o.s1) == 1);
  }

  TEST_CASE("direct sums") {
    VectBackend v(2);
    CHECK(v.direct_sum(1, 1) == 2);
    CHECK(v.direct_sum(2, 0) == 2);
    auto a2 = make_a2(2);
    A2Objects o(*a2);
    CHECK(a2->direct_sum(o.s1, o.s2) == o.split);
    CHECK(a2->direct_sum(o.s1, o.s2) != o.p1);
    CHECK(a2->direct_sum(o.p1, o.zero) == o.p1);
  }

  TEST_CASE("vect agrees with the one-vertex quiver") {
    VectBackend v(2);
    QuiverBackend point(1, {}, 2);
    for (int n = 0; n <= 3; ++n) {
      const auto ids = point.objects_of_class(K0Class({n}));
      REQUIRE(ids.size() == 1);
      CHECK(point.aut_count(ids[0]) == v.aut_count(n));
      for (int m = 0; m <= n; ++m) {
        const ClassId pm = point.objects_of_class(K0Class({m})).at(0);
        const ClassId pk = point.objects_of_class(K0Class({n - m})).at(0);
        CHECK(point.sub_quotient_count(ids[0], pk, pm) == v.sub_quotient_count(n, n - m, m));
      }
    }
  }

  TEST_CASE("quiver descriptions") {
    using nlohmann::json;
    CHECK(quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [[0, 1]], "q": 3})"))->q() == 3);
    CHECK(quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [[0, 1]], "q": 3})"), 2)->q() == 2);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [[0, 1], [1, 0]], "q": 2})")),
                    ConfigError);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [[0, 5]], "q": 2})")), ConfigError);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [[0, 1]], "q": 4})")), ConfigError);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"arrows": []})")), ConfigError);
    CHECK_THROWS_AS(load_quiver_file("/nonexistent/quiver.json"), ConfigError);
  }
}
