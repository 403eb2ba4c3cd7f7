#pragma once

/**
 * @file hall.hpp
 * @brief Hall algebra H(A), its twisted form H_tw(A), Green's coproduct and
 *        the exhaustive identity checkers that run on top of them.
 *
 * Hall numbers come from the subobject census of the middle term:
 *
 *     h^R_{MN} = F^R_{MN} a_M a_N / a_R
 *
 * where F^R_{MN} counts subobjects N' of R with N' ~ N and R/N' ~ M. The
 * independent route hall_number_direct() counts extension cocycles instead.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semihall/category.hpp"
#include "semihall/coeff.hpp"
#include "semihall/report.hpp"

namespace semihall {

using HallElement = std::map<ClassId, QSqrt>;
using HallTensor = std::map<std::pair<ClassId, ClassId>, QSqrt>;
using HallTensor3 = std::map<std::vector<ClassId>, QSqrt>;

void add_term(HallElement& e, ClassId c, const QSqrt& v);
template <class Map, class Key>
void add_to(Map& m, const Key& k, const QSqrt& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

class HallAlgebra {
 public:
  /// Products whose support leaves `bound` raise TruncationError.
  explicit HallAlgebra(const FinitaryCategory& cat, std::optional<K0Class> bound = std::nullopt);

  const FinitaryCategory& category() const { return cat_; }
  std::uint64_t q() const { return cat_.q(); }
  QSqrt vpow(long n) const { return QSqrt::vpow(n, cat_.q()); }
  QSqrt scalar(const mpq_class& x) const { return QSqrt(x, 0, cat_.q()); }
  QSqrt aut(ClassId m) const { return scalar(mpq_class(cat_.aut_count(m))); }

  QSqrt hall_number(ClassId m, ClassId n, ClassId r) const;
  /// h^K_{M1 M2 ... Mn}, defined recursively through the last n-1 factors.
  QSqrt iterated_hall_number(const std::vector<ClassId>& ms, ClassId k) const;
  /// All (M1, ..., Mn) with h^R_{M1...Mn} != 0, with their values.
  HallTensor3 decompositions(ClassId r, std::size_t n) const;

  HallElement basis_product(ClassId m, ClassId n, bool twisted) const;
  HallElement product(const HallElement& x, const HallElement& y, bool twisted) const;
  HallTensor green_coproduct(ClassId r) const;
  HallTensor green_coproduct(const HallElement& x) const;
  QSqrt counit(const HallElement& x) const;

  /// Test hook: multiplies h^R_{MN} by `factor` wherever it is read.
  void inject_fault(ClassId m, ClassId n, ClassId r, const QSqrt& factor);

 private:
  void check_bound(const K0Class& c) const;

  const FinitaryCategory& cat_;
  std::optional<K0Class> bound_;
  std::map<std::tuple<ClassId, ClassId, ClassId>, QSqrt> faults_;
};

/// |Ext^1(M,N)_R| / |Hom(M,N)| from the cocycle census.
QSqrt hall_number_direct(const HereditaryCategory& cat, ClassId m, ClassId n, ClassId r);

/// Triples (M, N, R) with M^ + N^ = R^ within bound, in a stable order.
std::vector<std::tuple<ClassId, ClassId, ClassId>> graded_triples(const FinitaryCategory& cat,
                                                                  const K0Class& bound);

SuiteReport verify_hall_double_entry(const HallAlgebra& alg, const HereditaryCategory& cat,
                                     const K0Class& bound, unsigned jobs);
/// F^{V_n}_{V_m, V_k} against the Gaussian-binomial product formula and subspace enumeration.
SuiteReport verify_gaussian_oracle(const FinitaryCategory& vect, int max_total, unsigned jobs);
SuiteReport verify_associativity(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
SuiteReport verify_green_formula(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
SuiteReport verify_green_corollary(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
SuiteReport verify_green_counit(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
SuiteReport verify_green_coassociativity(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
/// Delta(xy) = Delta(x) Delta(y) on H_tw with (a (x) b)(c (x) d) = v^{(b^, c^)} ac (x) bd.
SuiteReport verify_green_bialgebra(const HallAlgebra& alg, const K0Class& bound, unsigned jobs);
/// <M^, N^> = dim Hom(M,N) - dim Ext^1(M,N), with Ext^1 measured by summing Hall numbers.
SuiteReport verify_euler_form(const HallAlgebra& alg, const HereditaryCategory& cat,
                              const K0Class& bound, unsigned jobs);

}  // namespace semihall
