#pragma once

/**
 * @file double.hpp
 * @brief Extended Hall algebras H^ex+ and H^ex-, the Hopf pairing between
 *        them, and the Drinfeld double relations checked inside SDH through
 *        I(a (x) b) = I+(a) * I-(b).
 *
 * Products in both extended algebras are
 *
 *     [M]k_a * [N]k_b = sum_R v^{<M,N> + t (a,N)} h^R_{MN} [R]k_{a+b}
 *
 * with t = +1 for H^ex+. For H^ex- the twist sign t is a constructor
 * argument; t = +1 is the value under which I- is an algebra map.
 *
 *     D+([R]) = sum v^{<M,N>} h^R_{MN} a_R/(a_M a_N) [M]k_N (x) [N]
 *     D-([R]) = sum v^{<M,N>} h^R_{MN} a_R/(a_M a_N) [N] (x) [M]k_N
 */

#include <array>

#include "semihall/sdh.hpp"

namespace semihall {

struct ExtKey {
  ClassId m = 0;
  K0Class alpha;

  friend bool operator==(const ExtKey&, const ExtKey&) = default;
  friend auto operator<=>(const ExtKey&, const ExtKey&) = default;
};

using ExtElement = std::map<ExtKey, QSqrt>;
using ExtTensor = std::map<std::pair<ExtKey, ExtKey>, QSqrt>;
using ExtTensor3 = std::map<std::array<ExtKey, 3>, QSqrt>;

enum class ExtSign { plus, minus };

class ExtHallAlgebra {
 public:
  ExtHallAlgebra(const HereditaryCategory& base, ExtSign sign, int k_twist = 1);

  const HereditaryCategory& base() const { return base_; }
  ExtSign sign() const { return sign_; }
  int k_twist() const { return k_twist_; }
  const HallAlgebra& hall() const { return hall_; }

  ExtKey key(ClassId m, const K0Class& alpha) const { return {m, alpha}; }
  ExtKey unit_key() const { return {base_.zero(), K0Class::zero(base_.k0_rank())}; }
  ExtElement unit() const { return {{unit_key(), hall_.scalar(1)}}; }
  ExtElement basis(const ExtKey& k) const { return {{k, hall_.scalar(1)}}; }

  ExtElement key_product(const ExtKey& x, const ExtKey& y) const;
  ExtElement product(const ExtElement& x, const ExtElement& y) const;
  ExtTensor coproduct(const ExtKey& k) const;
  ExtTensor coproduct(const ExtElement& x) const;
  QSqrt counit(const ExtKey& k) const;
  /// Componentwise product on the tensor square.
  ExtTensor tensor_product(const ExtTensor& x, const ExtTensor& y) const;

  /// [M]k_alpha with M within bound and alpha in the l1-ball of radius `k_radius`.
  std::vector<ExtKey> keys_within(const K0Class& bound, int k_radius) const;
  std::string key_label(const ExtKey& k) const;

 private:
  const HereditaryCategory& base_;
  ExtSign sign_;
  int k_twist_;
  HallAlgebra hall_;
};

/// Which Sweedler legs are paired on each side of (D4):
/// sum phi(x_(lx), y_(ly)) x_(other) (x) y_(other) = sum phi(x_(rx), y_(ry)) (1 (x) y_(other)) (x_(other) (x) 1).
/// Legs are numbered 1 and 2.
struct D4Orientation {
  int lhs_x = 2;
  int lhs_y = 1;
  int rhs_x = 1;
  int rhs_y = 2;

  static D4Orientation as_printed() { return {}; }
  /// The only orientation under which (D4) holds: phi(x_(2), y_(2)) on the left, phi(x_(1), y_(1)) on the right.
  static D4Orientation verified() { return {2, 2, 1, 1}; }
  static std::vector<D4Orientation> all();
  std::string describe() const;
  friend bool operator==(const D4Orientation&, const D4Orientation&) = default;
};

class DrinfeldDouble {
 public:
  /// `minus_twist` is the sign t of (a,N) in the H^ex- product.
  explicit DrinfeldDouble(const SDHAlgebra& sdh, int minus_twist = 1);

  const SDHAlgebra& sdh() const { return sdh_; }
  const ExtHallAlgebra& plus() const { return plus_; }
  const ExtHallAlgebra& minus() const { return minus_; }

  /// phi([M]k_a, [N]k_b) = v^{(a,b)} delta_{MN} a_M.
  QSqrt pairing(const ExtKey& x, const ExtKey& y) const;
  QSqrt pairing(const ExtElement& x, const ExtElement& y) const;

  /// I+([M]k_a) = [C_M] * K_a.
  SDHElement iso_plus(const ExtKey& x) const;
  /// I-([M]k_a) = [C*_M] * K*_a.
  SDHElement iso_minus(const ExtKey& y) const;
  /// I([A]k_a (x) [B]k_b) = [C_A] * K_a * [C*_B] * K*_b.
  SDHElement iso(const ExtKey& x, const ExtKey& y) const;
  SDHElement iso_plus(const ExtElement& x) const;
  SDHElement iso_minus(const ExtElement& y) const;

 private:
  const SDHAlgebra& sdh_;
  ExtHallAlgebra plus_;
  ExtHallAlgebra minus_;
};

SuiteReport verify_ext_associativity(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_ext_coassociativity(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_ext_compatibility(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_ext_counit(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);

/// phi(x x', y) = sum phi(x, y_(2)) phi(x', y_(1)) and phi(x, y y') = sum phi(x_(1), y) phi(x_(2), y')
/// on all triples within bound.
SuiteReport verify_hopf_pairing(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);

/// (D1): I(x x' (x) 1) = I(x (x) 1) I(x' (x) 1).
SuiteReport verify_d1(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);
/// (D2): I(1 (x) y y') = I(1 (x) y) I(1 (x) y').
SuiteReport verify_d2(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);
/// (D3): I(x (x) 1) I(1 (x) y) = I(x (x) y).
SuiteReport verify_d3(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);
/// (D4) transported through I, with the given leg orientation.
SuiteReport verify_d4(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, const D4Orientation& o,
                      unsigned jobs);
/// (I (x) I)(D+(a) (x) D-(b)) = D(I(a (x) b)) on all generators within bound.
SuiteReport verify_bialgebra_iso(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);
/// The images I(a (x) b) of all generators within bound are linearly independent in SDH.
SuiteReport verify_iso_injective(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs);

}  // namespace semihall
