#include <stdexcept>
#include <string>

#include "semihall/backends.hpp"
#include "semihall/errors.hpp"

namespace semihall {

namespace {

QuiverShape point() {
  QuiverShape s;
  s.vertices = 1;
  return s;
}

}  // namespace

VectBackend::VectBackend(std::uint64_t q) : q_(q), engine_(point(), static_cast<Residue>(q)) {}

std::string VectBackend::descriptor() const { return "vect(q=" + std::to_string(q_) + ")"; }

std::vector<ClassId> VectBackend::objects_of_class(const K0Class& c) const {
  if (c.rank() != 1) throw std::invalid_argument("vect has K0 rank 1");
  if (c.v[0] < 0) return {};
  return {c.v[0]};
}

mpz_class VectBackend::aut_count(ClassId m) const { return gl_order(m, q_); }

const FiltrationCounts& VectBackend::filtrations(ClassId r) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = filtrations_.find(r); it != filtrations_.end()) return *it->second;
  }
  auto f = std::make_unique<FiltrationCounts>();
  for (int k = 0; k <= r; ++k) (*f)[{r - k, k}] = gaussian_binomial(r, k, q_);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = filtrations_.emplace(r, std::move(f));
  return *it->second;
}

std::string VectBackend::label(ClassId m) const { return "V" + std::to_string(m); }

ClassId VectBackend::classify(const Representation& r) const { return r.dims.at(0); }

Representation VectBackend::representative(ClassId m) const { return Representation{{m}, {}}; }

ExtensionCensus VectBackend::extension_census(ClassId m, ClassId n) const {
  // no arrows: the single (empty) cocycle gives the split extension
  ExtensionCensus out;
  out.cocycles[m + n] = 1;
  mpz_ui_pow_ui(out.normalizer.get_mpz_t(), q_, static_cast<unsigned long>(m * n));
  return out;
}

}  // namespace semihall
