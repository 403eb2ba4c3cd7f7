#pragma once

/**
 * @file category.hpp
 * @brief Contracts for finitary abelian categories whose Hall algebras are built here.
 *
 * A FinitaryCategory is everything the Hall-algebra layer needs: isomorphism
 * classes graded by K0, automorphism counts, subobject census and an Euler
 * form. HereditaryCategory adds the structure of a base category A (Hom
 * spaces, extension census, concrete representatives) that the complex
 * category and the semi-derived algebra are built on.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "semihall/k0.hpp"
#include "semihall/rep_engine.hpp"

namespace semihall {

class FinitaryCategory {
 public:
  virtual ~FinitaryCategory() = default;

  virtual std::uint64_t q() const = 0;
  virtual std::size_t k0_rank() const = 0;
  virtual std::string descriptor() const = 0;

  virtual std::vector<ClassId> objects_of_class(const K0Class& c) const = 0;
  virtual K0Class class_of(ClassId m) const = 0;
  virtual mpz_class aut_count(ClassId m) const = 0;
  /// Subobject census of R keyed by (quotient class, subobject class).
  virtual const FiltrationCounts& filtrations(ClassId r) const = 0;
  virtual ClassId zero() const = 0;
  virtual ClassId direct_sum(ClassId a, ClassId b) const = 0;
  virtual long euler_form(const K0Class& x, const K0Class& y) const = 0;
  /// Stable human-readable name; sorting by label gives a run-independent order.
  virtual std::string label(ClassId m) const = 0;

  long symmetric_form(const K0Class& x, const K0Class& y) const {
    return euler_form(x, y) + euler_form(y, x);
  }
  long euler_form(ClassId m, ClassId n) const { return euler_form(class_of(m), class_of(n)); }

  /// Every class with K0 vector componentwise <= bound, sorted by K0 class then label.
  std::vector<ClassId> objects_up_to(const K0Class& bound) const;
  /// F^R_{MN}: subobjects N' of R with N' ~ N and R/N' ~ M.
  mpz_class sub_quotient_count(ClassId r, ClassId m, ClassId n) const;
  /// Sorts ids by (K0 class, label).
  void sort_classes(std::vector<ClassId>& ids) const;
};

class HereditaryCategory : public FinitaryCategory {
 public:
  /// The quiver whose representations make up the category (one vertex for vect).
  virtual const QuiverShape& shape() const = 0;
  /// Generic enumeration engine over shape(); used for linear-algebra helpers.
  virtual const RepEngine& engine() const = 0;
  virtual ClassId classify(const Representation& r) const = 0;
  virtual Representation representative(ClassId m) const = 0;
  /// Extension classes of M by N counted through cocycles.
  virtual ExtensionCensus extension_census(ClassId m, ClassId n) const = 0;

  std::size_t k0_rank() const override { return static_cast<std::size_t>(shape().vertices); }
  K0Class class_of(ClassId m) const override { return K0Class(representative(m).dims); }
  long euler_form(const K0Class& x, const K0Class& y) const override;
  using FinitaryCategory::euler_form;

  mpz_class hom_count(ClassId m, ClassId n) const;
  int hom_dim(ClassId m, ClassId n) const;
};

}  // namespace semihall
