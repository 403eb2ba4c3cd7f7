#include "semihall/ideal_oracle.hpp"

#include <stdexcept>

#include "semihall/errors.hpp"

namespace semihall {

void RowSpace::reduce(HallElement& v) const {
  for (std::size_t i = 0; i < rows_.size() && !v.empty(); ++i) {
    auto it = v.find(pivots_[i]);
    if (it == v.end()) continue;
    const QSqrt c = it->second;
    for (const auto& [k, x] : rows_[i]) add_to(v, k, -(c * x));
  }
}

bool RowSpace::insert(HallElement v) {
  reduce(v);
  if (v.empty()) return false;
  const ClassId pivot = v.begin()->first;
  const QSqrt inv = v.begin()->second.inv();
  for (auto& [k, x] : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

QuotientOracle::QuotientOracle(const SDHAlgebra& alg, const ComplexCategory& cc)
    : alg_(alg), cc_(cc), hall_(cc) {
  const auto& base = alg.base();
  for (std::size_t v = 0; v < base.k0_rank(); ++v) {
    K0Class e = K0Class::zero(base.k0_rank());
    e.v[v] = 1;
    for (ClassId s : base.objects_of_class(e)) {
      multipliers_.push_back(cc.classify(cc.k_complex(s)));
      multipliers_.push_back(cc.classify(cc.kstar_complex(s)));
    }
  }
}

bool QuotientOracle::equivalent(const HallElement& x, const HallElement& y) const {
  HallElement d = x;
  for (const auto& [m, c] : y) add_to(d, m, -c);
  if (in_ideal(d)) return true;
  for (ClassId s : multipliers_) {
    try {
      if (in_ideal(product(d, {{s, alg_.scalar(1)}}))) return true;
    } catch (const BudgetExceeded&) {
      // the shifted degree is out of reach; this multiplier proves nothing
    }
  }
  return false;
}

K0Class QuotientOracle::degree(const SDHKey& k) const {
  const auto& base = alg_.base();
  const K0Class g = k.alpha + k.beta;
  return ComplexCategory::join(g + base.class_of(k.a), g + base.class_of(k.b));
}

HallElement QuotientOracle::product(const HallElement& x, const HallElement& y) const {
  return hall_.product(x, y, true);
}

ClassId QuotientOracle::object_of(const K0Class& gamma) const {
  auto ids = alg_.base().objects_of_class(gamma);
  if (ids.empty()) throw std::invalid_argument("no object of class " + gamma.to_string());
  alg_.base().sort_classes(ids);
  return ids.front();
}

HallElement QuotientOracle::representative(const SDHKey& k) const {
  if (!k.alpha.nonnegative() || !k.beta.nonnegative()) {
    throw std::invalid_argument("representatives need nonnegative K-parts");
  }
  const QSqrt one = alg_.scalar(1);
  HallElement out{{cc_.classify(cc_.k_complex(object_of(k.alpha))), one}};
  out = product(out, {{cc_.classify(cc_.kstar_complex(object_of(k.beta))), one}});
  return product(out, {{cc_.classify(cc_.stalk_complex(k.a, k.b)), one}});
}

HallElement QuotientOracle::representative(const SDHElement& x) const {
  HallElement out;
  for (const auto& [k, c] : x) {
    for (const auto& [m, d] : representative(k)) add_to(out, m, c * d);
  }
  return out;
}

bool QuotientOracle::is_acyclic(ClassId m) const {
  std::lock_guard lock(mutex_);
  auto it = acyclic_.find(m);
  if (it != acyclic_.end()) return it->second;
  const bool a = cc_.is_acyclic(m);
  acyclic_.emplace(m, a);
  return a;
}

const RowSpace& QuotientOracle::ideal(const K0Class& d) const {
  std::lock_guard lock(mutex_);
  if (auto it = ideals_.find(d); it != ideals_.end()) return *it->second;
  auto rs = std::make_unique<RowSpace>();
  const QSqrt one = alg_.scalar(1);
  const ClassId zero = cc_.zero();
  for (ClassId l : cc_.objects_of_class(d)) {
    for (const auto& [key, count] : cc_.filtrations(l)) {
      (void)count;
      const auto [m, k] = key;
      if (k == zero || !is_acyclic(k)) continue;
      HallElement g{{l, one}};
      add_to(g, cc_.direct_sum(k, m), -one);
      rs->insert(std::move(g));
    }
  }
  for (const auto& a : classes_within(d)) {
    if (a.is_zero() || a == d) continue;
    const RowSpace& sub = ideal(d - a);
    if (sub.rank() == 0) continue;
    for (ClassId x : cc_.objects_of_class(a)) {
      const HallElement ex{{x, one}};
      for (const auto& row : sub.rows()) {
        rs->insert(product(ex, row));
        rs->insert(product(row, ex));
      }
    }
  }
  auto [it, inserted] = ideals_.emplace(d, std::move(rs));
  return *it->second;
}

HallElement QuotientOracle::reduce(const HallElement& x) const {
  std::map<K0Class, HallElement> parts;
  for (const auto& [m, c] : x) parts[cc_.class_of(m)].emplace(m, c);
  HallElement out;
  for (auto& [d, part] : parts) {
    ideal(d).reduce(part);
    out.insert(part.begin(), part.end());
  }
  return out;
}

bool QuotientOracle::keys_independent(const std::vector<SDHKey>& keys) const {
  std::map<K0Class, RowSpace> spaces;
  for (const auto& k : keys) {
    const K0Class d = degree(k);
    HallElement r = representative(k);
    ideal(d).reduce(r);
    if (!spaces[d].insert(std::move(r))) return false;
  }
  return true;
}

long normal_form_exponent(const HereditaryCategory& base, const K0Class& im0, const K0Class& im1,
                          const K0Class& h0, const K0Class& h1) {
  return base.euler_form(im0, h0 - h1) + base.euler_form(im1, h1 - h0);
}

SDHElement normal_form(const SDHAlgebra& alg, const ComplexCategory& cc, const Z2Complex& c) {
  const auto& base = alg.base();
  const ClassId i0 = cc.image(c, 0), i1 = cc.image(c, 1);
  const ClassId h0 = cc.homology(c, 0), h1 = cc.homology(c, 1);
  const K0Class ci0 = base.class_of(i0), ci1 = base.class_of(i1);
  const long e = normal_form_exponent(base, ci0, ci1, base.class_of(h0), base.class_of(h1));
  return {{SDHKey{ci0, ci1, h0, h1}, alg.vpow(e)}};
}

namespace {

/// Finds e in a small window with x - v^e y in the ideal.
std::string exponent_hint(const QuotientOracle& oracle, const HallElement& x, const HallElement& y) {
  for (long e = -12; e <= 12; ++e) {
    HallElement s;
    for (const auto& [m, c] : y) add_to(s, m, c * oracle.algebra().vpow(e));
    if (oracle.equivalent(x, s)) return "agrees after rescaling by v^" + std::to_string(e);
  }
  return "no power of v closes the gap";
}

}  // namespace

SuiteReport verify_normal_form(const QuotientOracle& oracle, const K0Class& component_bound, unsigned jobs) {
  const auto& cc = oracle.complexes();
  const auto ms = cc.enumerate(component_bound);
  for (ClassId m : ms) oracle.ideal(cc.class_of(m));
  return run_suite("normal-form", ms.size(), jobs, [&](std::size_t i) -> Check {
    const ClassId m = ms[i];
    const SDHElement nf = normal_form(oracle.algebra(), cc, cc.representative(m));
    const HallElement lhs{{m, oracle.algebra().scalar(1)}};
    const HallElement rhs = oracle.representative(nf);
    if (oracle.equivalent(lhs, rhs)) return std::nullopt;
    return Failure{cc.label(m), exponent_hint(oracle, lhs, rhs)};
  });
}

SuiteReport verify_k_well_defined(const QuotientOracle& oracle, const K0Class& bound, unsigned jobs) {
  const auto& base = oracle.algebra().base();
  const auto& cc = oracle.complexes();
  const auto objs = base.objects_up_to(bound);
  std::vector<std::array<ClassId, 4>> quads;
  for (ClassId a : objs) {
    for (ClassId b : objs) {
      for (ClassId a2 : objs) {
        for (ClassId b2 : objs) {
          if (std::pair{a, b} >= std::pair{a2, b2}) continue;
          if (base.class_of(a) - base.class_of(b) != base.class_of(a2) - base.class_of(b2)) continue;
          if (!(base.class_of(a) + base.class_of(b2)).within(bound)) continue;
          quads.push_back({a, b, a2, b2});
        }
      }
    }
  }
  const QSqrt one = oracle.algebra().scalar(1);
  auto kc = [&](ClassId x) { return HallElement{{cc.classify(cc.k_complex(x)), one}}; };
  return run_suite("k-well-defined", quads.size(), jobs, [&](std::size_t i) -> Check {
    const auto [a, b, a2, b2] = quads[i];
    const HallElement lhs = oracle.product(kc(a), kc(b2));
    const HallElement rhs = oracle.product(kc(a2), kc(b));
    if (oracle.equivalent(lhs, rhs)) return std::nullopt;
    return Failure{"K_" + base.label(a) + " K_" + base.label(b) + "^-1 vs K_" + base.label(a2) + " K_" +
                       base.label(b2) + "^-1",
                   exponent_hint(oracle, lhs, rhs)};
  });
}

SuiteReport verify_basis_independence(const QuotientOracle& oracle, const K0Class& bound, unsigned jobs) {
  const auto& base = oracle.algebra().base();
  std::vector<std::vector<SDHKey>> groups;
  for (const auto& d0 : classes_within(bound)) {
    for (const auto& d1 : classes_within(bound)) {
      std::vector<SDHKey> keys;
      for (const auto& g : classes_within(bound)) {
        if (!(d0 - g).nonnegative() || !(d1 - g).nonnegative()) continue;
        for (const auto& alpha : classes_within(g)) {
          for (ClassId a : base.objects_of_class(d0 - g)) {
            for (ClassId b : base.objects_of_class(d1 - g)) keys.push_back({alpha, g - alpha, a, b});
          }
        }
      }
      groups.push_back(std::move(keys));
    }
  }
  return run_suite("basis-independence", groups.size(), jobs, [&](std::size_t i) -> Check {
    if (groups[i].empty() || oracle.keys_independent(groups[i])) return std::nullopt;
    return Failure{oracle.degree(groups[i].front()).to_string(),
                   std::to_string(groups[i].size()) + " keys are dependent modulo the ideal"};
  });
}

SuiteReport verify_product_oracle(const QuotientOracle& oracle, const K0Class& bound, int k_radius, int max_total,
                                  unsigned jobs) {
  const auto& alg = oracle.algebra();
  std::vector<SDHKey> keys;
  for (const auto& k : alg.keys_within(bound, k_radius)) {
    if (k.alpha.nonnegative() && k.beta.nonnegative()) keys.push_back(k);
  }
  std::vector<std::pair<SDHKey, SDHKey>> pairs;
  for (const auto& x : keys) {
    for (const auto& y : keys) {
      if ((oracle.degree(x) + oracle.degree(y)).l1() <= max_total) pairs.emplace_back(x, y);
    }
  }
  return run_suite("product-oracle", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const HallElement lhs = oracle.product(oracle.representative(x), oracle.representative(y));
    const HallElement rhs = oracle.representative(alg.key_product(x, y));
    if (oracle.equivalent(lhs, rhs)) return std::nullopt;
    return Failure{alg.key_label(x) + " * " + alg.key_label(y), exponent_hint(oracle, lhs, rhs)};
  });
}

}  // namespace semihall
