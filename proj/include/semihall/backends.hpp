#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "semihall/category.hpp"

namespace semihall {

/// Finite-dimensional F_q vector spaces. The class id of V_n is n.
class VectBackend final : public HereditaryCategory {
 public:
  explicit VectBackend(std::uint64_t q);

  std::uint64_t q() const override { return q_; }
  std::string descriptor() const override;
  std::vector<ClassId> objects_of_class(const K0Class& c) const override;
  mpz_class aut_count(ClassId m) const override;
  const FiltrationCounts& filtrations(ClassId r) const override;
  ClassId zero() const override { return 0; }
  ClassId direct_sum(ClassId a, ClassId b) const override { return a + b; }
  std::string label(ClassId m) const override;

  const QuiverShape& shape() const override { return engine_.shape(); }
  const RepEngine& engine() const override { return engine_; }
  ClassId classify(const Representation& r) const override;
  Representation representative(ClassId m) const override;
  ExtensionCensus extension_census(ClassId m, ClassId n) const override;

 private:
  std::uint64_t q_;
  RepEngine engine_;
  mutable std::shared_mutex mutex_;
  mutable std::map<ClassId, std::unique_ptr<FiltrationCounts>> filtrations_;
};

/// Representations of an acyclic quiver without relations.
class QuiverBackend final : public HereditaryCategory {
 public:
  QuiverBackend(int vertices, std::vector<Arrow> arrows, std::uint64_t q,
                std::uint64_t budget = (1u << 22));

  std::uint64_t q() const override { return q_; }
  std::string descriptor() const override;
  std::vector<ClassId> objects_of_class(const K0Class& c) const override;
  mpz_class aut_count(ClassId m) const override { return engine_.aut_count(m); }
  const FiltrationCounts& filtrations(ClassId r) const override { return engine_.filtrations(r); }
  ClassId zero() const override;
  ClassId direct_sum(ClassId a, ClassId b) const override { return engine_.direct_sum(a, b); }
  std::string label(ClassId m) const override;

  const QuiverShape& shape() const override { return engine_.shape(); }
  const RepEngine& engine() const override { return engine_; }
  ClassId classify(const Representation& r) const override { return engine_.classify(r); }
  Representation representative(ClassId m) const override { return engine_.representative(m); }
  ExtensionCensus extension_census(ClassId m, ClassId n) const override {
    return engine_.extension_census(m, n);
  }

 private:
  std::uint64_t q_;
  RepEngine engine_;
};

/// Parses {"vertices": n, "arrows": [[s,t],...], "q": p}; throws ConfigError.
std::unique_ptr<QuiverBackend> quiver_from_json(const nlohmann::json& j,
                                                std::uint64_t q_override = 0);
std::unique_ptr<QuiverBackend> load_quiver_file(const std::string& path,
                                                std::uint64_t q_override = 0);

/// The A2 quiver 1 -> 2 (vertices 0 -> 1 internally).
std::unique_ptr<QuiverBackend> make_a2(std::uint64_t q);

}  // namespace semihall
