#pragma once

/**
 * @file sdh.hpp
 * @brief The semi-derived Ringel-Hall algebra on its canonical basis
 *        K_alpha * K*_beta * [C*_A + C_B].
 *
 * Products are computed by commuting K-factors to the left and expanding the
 * product of two stalk parts [C*_X1 + C_Y1] * [C*_X2 + C_Y2] as a sum over
 * Hall numbers of the base category. The coproduct is defined on K-factors
 * (group-like) and on stalk parts by an iterated-Hall-number sum.
 *
 * Conventions:
 *   - [C*_A + C_B] K_g  = v^{-(B - A, g)} K_g  [C*_A + C_B]
 *   - [C*_A + C_B] K*_g = v^{-(A - B, g)} K*_g [C*_A + C_B]
 *   - the counit is 1 on every K_alpha, K*_beta, 0 on [C_M], [C*_M] for
 *     M != 0 and multiplicative; on a mixed stalk part it is read off from
 *     the product [C_B] * [C*_A].
 */

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include <json.hpp>

#include "semihall/hall.hpp"

namespace semihall {

struct SDHKey {
  K0Class alpha;
  K0Class beta;
  ClassId a = 0;  // C* part (degree 0)
  ClassId b = 0;  // C part (degree 1)

  friend bool operator==(const SDHKey&, const SDHKey&) = default;
  friend auto operator<=>(const SDHKey&, const SDHKey&) = default;
};

using SDHElement = std::map<SDHKey, QSqrt>;
using SDHTensor = std::map<std::pair<SDHKey, SDHKey>, QSqrt>;
using SDHTensor3 = std::map<std::array<SDHKey, 3>, QSqrt>;

/// Integer offsets added to the exponents of the structure constants.
/// Used only by sensitivity controls; a default-constructed value is the identity.
struct ExponentPerturbation {
  std::array<int, 10> product_terms{};   // coefficients of the ten pairings in the product exponent
  int product_constant = 0;
  std::array<int, 5> coproduct_terms{};  // coefficients of the five pairings in the coproduct exponent
  int coproduct_constant = 0;

  bool is_identity() const;
  std::string describe() const;
};

class SDHAlgebra {
 public:
  explicit SDHAlgebra(const HereditaryCategory& base, ExponentPerturbation perturbation = {});

  const HereditaryCategory& base() const { return base_; }
  const HallAlgebra& hall() const { return hall_; }
  std::uint64_t q() const { return base_.q(); }
  QSqrt vpow(long n) const { return hall_.vpow(n); }
  QSqrt scalar(const mpq_class& x) const { return hall_.scalar(x); }
  const ExponentPerturbation& perturbation() const { return perturbation_; }

  K0Class zero_class() const { return K0Class::zero(base_.k0_rank()); }
  SDHKey key(const K0Class& alpha, const K0Class& beta, ClassId a, ClassId b) const { return {alpha, beta, a, b}; }
  SDHKey stalk_key(ClassId a, ClassId b) const { return {zero_class(), zero_class(), a, b}; }
  SDHKey unit_key() const { return stalk_key(base_.zero(), base_.zero()); }

  SDHElement unit() const { return {{unit_key(), scalar(1)}}; }
  SDHElement basis(const SDHKey& k) const { return {{k, scalar(1)}}; }
  /// K_alpha (or K*_alpha when starred).
  SDHElement k_alpha(const K0Class& alpha, bool starred) const;
  SDHElement c(ClassId x) const { return basis(stalk_key(base_.zero(), x)); }
  SDHElement cstar(ClassId x) const { return basis(stalk_key(x, base_.zero())); }

  /// K-degree of a key: (alpha, beta) plus the classes of its stalk part.
  K0Class stalk_class(const SDHKey& k) const { return base_.class_of(k.a) + base_.class_of(k.b); }

  /// Rewrites key * K_gamma (or key * K*_gamma) in canonical order.
  SDHElement straighten_k(const SDHKey& k, const K0Class& gamma, bool starred) const;

  /// [C*_X1 + C_Y1] * [C*_X2 + C_Y2] expanded in the basis.
  const SDHElement& stalk_product(ClassId x1, ClassId y1, ClassId x2, ClassId y2) const;
  SDHElement key_product(const SDHKey& x, const SDHKey& y) const;
  SDHElement product(const SDHElement& x, const SDHElement& y) const;

  /// Delta([C*_X + C_Y]) in the basis of SDH (x) SDH.
  const SDHTensor& stalk_coproduct(ClassId x, ClassId y) const;
  SDHTensor coproduct(const SDHKey& k) const;
  SDHTensor coproduct(const SDHElement& x) const;

  QSqrt counit(const SDHKey& k) const;
  QSqrt counit(const SDHElement& x) const;

  /// (a (x) b)(c (x) d) = ac (x) bd.
  SDHTensor tensor_product(const SDHTensor& x, const SDHTensor& y) const;

  /// Keys with K-parts in the l1-ball of radius `k_radius` and A^ + B^ <= bound.
  std::vector<SDHKey> keys_within(const K0Class& bound, int k_radius = 1) const;

  std::string key_label(const SDHKey& k) const;
  nlohmann::json key_json(const SDHKey& k) const;
  nlohmann::json element_json(const SDHElement& x) const;
  nlohmann::json tensor_json(const SDHTensor& x) const;

 private:
  SDHElement compute_stalk_product(ClassId x1, ClassId y1, ClassId x2, ClassId y2) const;
  SDHTensor compute_stalk_coproduct(ClassId x, ClassId y) const;
  QSqrt stalk_counit(ClassId a, ClassId b) const;

  const HereditaryCategory& base_;
  HallAlgebra hall_;
  ExponentPerturbation perturbation_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::array<ClassId, 4>, std::unique_ptr<SDHElement>> products_;
  mutable std::map<std::pair<ClassId, ClassId>, std::unique_ptr<SDHTensor>> coproducts_;
  mutable std::map<std::pair<ClassId, ClassId>, QSqrt> counits_;
};

/// Multiplies every coefficient of `x` by `c` and accumulates into `out`.
void accumulate(SDHElement& out, const SDHElement& x, const QSqrt& c);

std::string diff_elements(const SDHAlgebra& alg, const SDHElement& lhs, const SDHElement& rhs);

SuiteReport verify_sdh_associativity(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_coassociativity(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_compatibility(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
SuiteReport verify_counit(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs);
/// K_a K_b = K_{a+b}, K_a K*_b = K*_b K_a, K_a K_{-a} = 1 on the K-ball.
SuiteReport verify_k_relations(const SDHAlgebra& alg, int k_radius, unsigned jobs);

}  // namespace semihall
