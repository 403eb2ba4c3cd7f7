#pragma once

/**
 * @file complexes.hpp
 * @brief The category of Z/2-graded complexes over a hereditary base category.
 *
 * A complex M0 <=> M1 over representations of a quiver Q is a representation
 * of the doubled quiver: two copies of Q (components 0 and 1) joined at each
 * vertex v by d0_v : (v,0) -> (v,1) and d1_v : (v,1) -> (v,0), subject to
 * the relations saying that d0, d1 are morphisms and d1 d0 = d0 d1 = 0.
 * The K0 vector of a complex is (class M0, class M1).
 */

#include <json.hpp>

#include "semihall/category.hpp"

namespace semihall {

struct Z2Complex {
  Representation m0;
  Representation m1;
  std::vector<FpMatrix> d0;  // per vertex, m1.dims[v] x m0.dims[v]
  std::vector<FpMatrix> d1;  // per vertex, m0.dims[v] x m1.dims[v]
};

class ComplexCategory final : public FinitaryCategory {
 public:
  explicit ComplexCategory(const HereditaryCategory& base, std::uint64_t budget = (1u << 22));

  const HereditaryCategory& base() const { return base_; }
  const RepEngine& engine() const { return engine_; }

  std::uint64_t q() const override { return base_.q(); }
  std::size_t k0_rank() const override { return 2 * base_.k0_rank(); }
  std::string descriptor() const override { return "complexes over " + base_.descriptor(); }
  std::vector<ClassId> objects_of_class(const K0Class& c) const override;
  K0Class class_of(ClassId m) const override { return K0Class(engine_.dims(m)); }
  mpz_class aut_count(ClassId m) const override { return engine_.aut_count(m); }
  const FiltrationCounts& filtrations(ClassId r) const override { return engine_.filtrations(r); }
  ClassId zero() const override;
  ClassId direct_sum(ClassId a, ClassId b) const override { return engine_.direct_sum(a, b); }
  /// Component-wise Euler form <M0,N0> + <M1,N1>.
  long euler_form(const K0Class& x, const K0Class& y) const override;
  using FinitaryCategory::euler_form;
  std::string label(ClassId m) const override;

  static K0Class join(const K0Class& c0, const K0Class& c1);
  K0Class component(const K0Class& c, int i) const;

  bool is_valid(const Z2Complex& c) const;
  Representation to_rep(const Z2Complex& c) const;
  Z2Complex from_rep(const Representation& r) const;
  Z2Complex representative(ClassId m) const { return from_rep(engine_.representative(m)); }
  ClassId classify(const Z2Complex& c) const;

  /// H^i = ker d^i / Im d^{i-1}, as a class of the base category.
  ClassId homology(const Z2Complex& c, int i) const;
  /// Im d^i as a class of the base category.
  ClassId image(const Z2Complex& c, int i) const;
  bool is_acyclic(ClassId m) const;
  /// Swaps the components and negates both differentials.
  Z2Complex shift(const Z2Complex& c) const;

  Z2Complex k_complex(ClassId x) const;      // X --1--> X, back 0
  Z2Complex kstar_complex(ClassId x) const;  // X --0--> X, back 1
  Z2Complex c_complex(ClassId x) const;      // 0 <=> X
  Z2Complex cstar_complex(ClassId x) const;  // X <=> 0
  /// C*_A + C_B: A in degree 0, B in degree 1, zero differentials.
  Z2Complex stalk_complex(ClassId a, ClassId b) const;

  /// Every class whose two components are within `component_bound`.
  std::vector<ClassId> enumerate(const K0Class& component_bound) const;

  nlohmann::json dump(const Z2Complex& c) const;

 private:
  Representation zero_object() const;

  const HereditaryCategory& base_;
  int n_;
  int a_;
  RepEngine engine_;
};

}  // namespace semihall
