#include <doctest.h>

#include <set>

#include "semihall/fp_matrix.hpp"

using namespace semihall;

TEST_SUITE("finfield") {
  TEST_CASE("row reduction") {
    const auto id = FpMatrix::identity(2, 2);
    CHECK(rref(id).form == id);
    CHECK(rank(id) == 2);
    CHECK(rank(FpMatrix(2, 3, 3)) == 0);
    const auto r = rref(FpMatrix(2, 2, 2, {1, 1, 1, 1}));
    CHECK(r.rank == 1);
    CHECK(r.form == FpMatrix(2, 2, 2, {1, 1, 0, 0}));
  }

  TEST_CASE("kernels") {
    CHECK(solve_kernel(FpMatrix::identity(3, 3)).empty());
    CHECK(solve_kernel(FpMatrix(2, 1, 3)).size() == 3);
    const auto k = solve_kernel(FpMatrix(3, 1, 2, {1, 1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Residue>{2, 1});
  }

  TEST_CASE("rank-nullity on every 2x3 matrix over F_3") {
    for (int code = 0; code < 729; ++code) {
      std::vector<Residue> e;
      for (int i = 0, c = code; i < 6; ++i, c /= 3) e.push_back(c % 3);
      const FpMatrix m(3, 2, 3, e);
      const auto ker = solve_kernel(m);
      CHECK(rank(m) + static_cast<int>(ker.size()) == 3);
      for (const auto& v : ker) {
        for (int r = 0; r < 2; ++r) {
          int s = 0;
          for (int c = 0; c < 3; ++c) s += m(r, c) * v[static_cast<std::size_t>(c)];
          CHECK(s % 3 == 0);
        }
      }
    }
  }

  TEST_CASE("inverse") {
    for (const auto& g : enumerate_gl(2, 3)) CHECK(g * inverse(g) == FpMatrix::identity(3, 2));
    CHECK_THROWS(inverse(FpMatrix(2, 2, 2, {1, 1, 1, 1})));
  }

  TEST_CASE("general linear group orders") {
    CHECK(gl_order(0, 2) == 1);
    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(enumerate_gl(2, 2).size() == 6);
    CHECK(mpz_class(static_cast<unsigned long>(enumerate_gl(2, 3).size())) == gl_order(2, 3));
    CHECK(mpz_class(static_cast<unsigned long>(enumerate_gl(3, 2).size())) == gl_order(3, 2));
  }

  TEST_CASE("subspace enumeration matches Gaussian binomials") {
    CHECK(enumerate_subspaces(2, 1, 2).size() == 3);
    CHECK(enumerate_subspaces(3, 1, 3).size() == 13);
    const auto zero = enumerate_subspaces(3, 0, 2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].rows() == 0);
    for (int p : {2, 3}) {
      for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
          const auto subs = enumerate_subspaces(n, k, p);
          CHECK(mpz_class(static_cast<unsigned long>(subs.size())) == gaussian_binomial(n, k, p));
          std::set<FpMatrix> distinct(subs.begin(), subs.end());
          CHECK(distinct.size() == subs.size());
          for (const auto& s : subs) CHECK(rank(s) == k);
        }
      }
    }
  }

  TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
  }
}
