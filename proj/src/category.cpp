#include "semihall/category.hpp"

#include <algorithm>

namespace semihall {

std::vector<ClassId> FinitaryCategory::objects_up_to(const K0Class& bound) const {
  std::vector<ClassId> out;
  for (const auto& c : classes_within(bound)) {
    auto ids = objects_of_class(c);
    sort_classes(ids);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

mpz_class FinitaryCategory::sub_quotient_count(ClassId r, ClassId m, ClassId n) const {
  const auto& f = filtrations(r);
  auto it = f.find({m, n});
  return it == f.end() ? mpz_class(0) : it->second;
}

void FinitaryCategory::sort_classes(std::vector<ClassId>& ids) const {
  std::vector<std::pair<std::pair<K0Class, std::string>, ClassId>> keyed;
  keyed.reserve(ids.size());
  for (ClassId c : ids) keyed.push_back({{class_of(c), label(c)}, c});
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = keyed[i].second;
}

long HereditaryCategory::euler_form(const K0Class& x, const K0Class& y) const {
  long s = 0;
  for (std::size_t i = 0; i < x.v.size(); ++i) s += static_cast<long>(x.v[i]) * y.v[i];
  for (const auto& a : shape().arrows) {
    s -= static_cast<long>(x.v[static_cast<std::size_t>(a.source)]) * y.v[static_cast<std::size_t>(a.target)];
  }
  return s;
}

int HereditaryCategory::hom_dim(ClassId m, ClassId n) const {
  return engine().hom_dim(representative(m), representative(n));
}

mpz_class HereditaryCategory::hom_count(ClassId m, ClassId n) const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q(), static_cast<unsigned long>(hom_dim(m, n)));
  return out;
}

}  // namespace semihall
