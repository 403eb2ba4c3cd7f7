#pragma once

/**
 * @file ideal_oracle.hpp
 * @brief Brute-force model of SDH: the twisted Hall algebra of Z/2-graded
 *        complexes modulo the ideal generated by [L] - [K + M], K acyclic,
 *        localized at the acyclic complexes.
 *
 * Each homogeneous piece of the ideal is built as a row space over Q(sqrt q)
 * from the generators of that degree together with left and right multiples
 * of the ideal in smaller degrees. Membership is decided by row reduction.
 * An element x vanishes in the localization iff x * s lies in the ideal for
 * some acyclic s; equivalent() searches a fixed list of small multipliers.
 */

#include <memory>
#include <mutex>

#include "semihall/complexes.hpp"
#include "semihall/sdh.hpp"

namespace semihall {

/// Echelon row space of finitely supported vectors ClassId -> QSqrt.
class RowSpace {
 public:
  /// Reduces `v` in place against the stored rows.
  void reduce(HallElement& v) const;
  /// Adds `v` if independent; returns whether it was added.
  bool insert(HallElement v);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<HallElement>& rows() const { return rows_; }

 private:
  std::vector<HallElement> rows_;
  std::vector<ClassId> pivots_;
};

class QuotientOracle {
 public:
  QuotientOracle(const SDHAlgebra& alg, const ComplexCategory& cc);

  const SDHAlgebra& algebra() const { return alg_; }
  const ComplexCategory& complexes() const { return cc_; }

  /// Degree of a key in K0 of complexes: (alpha+beta+A^, alpha+beta+B^).
  K0Class degree(const SDHKey& k) const;
  /// The twisted product of H(C).
  HallElement product(const HallElement& x, const HallElement& y) const;
  /// [K_R(alpha)] * [K*_R(beta)] * [C*_A + C_B] for keys with nonnegative K-parts,
  /// where R(gamma) is the semisimple-free choice `object_of(gamma)`.
  HallElement representative(const SDHKey& k) const;
  HallElement representative(const SDHElement& x) const;
  /// The first enumerated object of class gamma (gamma >= 0).
  ClassId object_of(const K0Class& gamma) const;

  bool is_acyclic(ClassId m) const;
  /// The homogeneous piece of the ideal in `degree`.
  const RowSpace& ideal(const K0Class& degree) const;
  /// x reduced modulo the ideal, degree by degree.
  HallElement reduce(const HallElement& x) const;
  bool in_ideal(const HallElement& x) const { return reduce(x).empty(); }
  /// x = y after localization: (x - y) * s lies in the ideal for s = 1 or s = [K_S], [K*_S]
  /// with S simple. A positive answer is a proof; a negative one may miss a larger s. Multipliers whose
  /// degree exceeds the enumeration budget are skipped.
  bool equivalent(const HallElement& x, const HallElement& y) const;

  /// Whether every key of nonnegative K-parts in `degree` is independent modulo the ideal.
  bool keys_independent(const std::vector<SDHKey>& keys) const;

 private:
  const SDHAlgebra& alg_;
  const ComplexCategory& cc_;
  HallAlgebra hall_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<K0Class, std::unique_ptr<RowSpace>> ideals_;
  mutable std::map<ClassId, bool> acyclic_;
  std::vector<ClassId> multipliers_;
};

/**
 * The normal form of a complex:
 *
 *     [M] = v^e K_{Im d0} * K*_{Im d1} * [C*_{H0} + C_{H1}]
 *
 * with e = <Im d0, H0^ - H1^> + <Im d1, H1^ - H0^>.
 */
SDHElement normal_form(const SDHAlgebra& alg, const ComplexCategory& cc, const Z2Complex& c);
long normal_form_exponent(const HereditaryCategory& base, const K0Class& im0, const K0Class& im1,
                          const K0Class& h0, const K0Class& h1);

/// [M] - normal_form(M) lies in the ideal, for every complex with components within `component_bound`.
SuiteReport verify_normal_form(const QuotientOracle& oracle, const K0Class& component_bound, unsigned jobs);
/// [K_A] * [K_B'] = [K_A'] * [K_B] modulo the ideal whenever A^ - B^ = A'^ - B'^.
SuiteReport verify_k_well_defined(const QuotientOracle& oracle, const K0Class& bound, unsigned jobs);
/// Keys of nonnegative K-parts whose representatives are independent modulo the ideal.
SuiteReport verify_basis_independence(const QuotientOracle& oracle, const K0Class& bound, unsigned jobs);
/// x * y from the closed formula agrees with the product of representatives modulo the ideal,
/// for every pair of keys with nonnegative K-parts in the l1-ball of radius `k_radius`
/// whose product has total dimension at most `max_total`.
SuiteReport verify_product_oracle(const QuotientOracle& oracle, const K0Class& bound, int k_radius, int max_total,
                                  unsigned jobs);

}  // namespace semihall
