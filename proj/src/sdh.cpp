#include "semihall/sdh.hpp"

#include <algorithm>
#include <sstream>

namespace semihall {

bool ExponentPerturbation::is_identity() const {
  return product_constant == 0 && coproduct_constant == 0 &&
         std::all_of(product_terms.begin(), product_terms.end(), [](int x) { return x == 0; }) &&
         std::all_of(coproduct_terms.begin(), coproduct_terms.end(), [](int x) { return x == 0; });
}

std::string ExponentPerturbation::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < product_terms.size(); ++i) {
    if (product_terms[i]) os << "product term " << i << " " << std::showpos << product_terms[i] << std::noshowpos << " ";
  }
  if (product_constant) os << "product constant " << std::showpos << product_constant << std::noshowpos << " ";
  for (std::size_t i = 0; i < coproduct_terms.size(); ++i) {
    if (coproduct_terms[i]) {
      os << "coproduct term " << i << " " << std::showpos << coproduct_terms[i] << std::noshowpos << " ";
    }
  }
  if (coproduct_constant) os << "coproduct constant " << std::showpos << coproduct_constant << std::noshowpos;
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s.empty() ? "identity" : s;
}

void accumulate(SDHElement& out, const SDHElement& x, const QSqrt& c) {
  for (const auto& [k, v] : x) add_to(out, k, v * c);
}

SDHAlgebra::SDHAlgebra(const HereditaryCategory& base, ExponentPerturbation perturbation)
    : base_(base), hall_(base), perturbation_(perturbation) {}

SDHElement SDHAlgebra::k_alpha(const K0Class& alpha, bool starred) const {
  SDHKey k = unit_key();
  (starred ? k.beta : k.alpha) = alpha;
  return basis(k);
}

SDHElement SDHAlgebra::straighten_k(const SDHKey& k, const K0Class& gamma, bool starred) const {
  const K0Class a = base_.class_of(k.a), b = base_.class_of(k.b);
  SDHKey out = k;
  long e;
  if (starred) {
    e = -base_.symmetric_form(a - b, gamma);
    out.beta += gamma;
  } else {
    e = -base_.symmetric_form(b - a, gamma);
    out.alpha += gamma;
  }
  return {{out, vpow(e)}};
}

const SDHElement& SDHAlgebra::stalk_product(ClassId x1, ClassId y1, ClassId x2, ClassId y2) const {
  const std::array<ClassId, 4> key{x1, y1, x2, y2};
  {
    std::shared_lock lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) return *it->second;
  }
  auto value = std::make_unique<SDHElement>(compute_stalk_product(x1, y1, x2, y2));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = products_.emplace(key, std::move(value));
  return *it->second;
}

SDHElement SDHAlgebra::compute_stalk_product(ClassId x1, ClassId y1, ClassId x2, ClassId y2) const {
  const auto& cat = base_;
  const auto& h = hall_;
  auto cls = [&](ClassId m) { return cat.class_of(m); };
  auto ef = [&](const K0Class& x, const K0Class& y) { return cat.euler_form(x, y); };
  const QSqrt outer = h.aut(x1) * h.aut(x2) * h.aut(y1) * h.aut(y2);
  const auto& pt = perturbation_.product_terms;
  SDHElement out;
  // h^{X1}_{S0 M0}, h^{Y2}_{N0 S0}, h^{X2}_{N1 S1}, h^{Y1}_{S1 M1}
  for (const auto& [k1, f1] : cat.filtrations(x1)) {
    (void)f1;
    const auto [s0, m0] = k1;
    const QSqrt hx1 = h.hall_number(s0, m0, x1);
    for (const auto& [k2, f2] : cat.filtrations(y2)) {
      (void)f2;
      const auto [n0, s0b] = k2;
      if (s0b != s0) continue;
      const QSqrt hy2 = h.hall_number(n0, s0, y2);
      for (const auto& [k3, f3] : cat.filtrations(x2)) {
        (void)f3;
        const auto [n1, s1] = k3;
        const QSqrt hx2 = h.hall_number(n1, s1, x2);
        for (const auto& [k4, f4] : cat.filtrations(y1)) {
          (void)f4;
          const auto [s1b, m1] = k4;
          if (s1b != s1) continue;
          const QSqrt hy1 = h.hall_number(s1, m1, y1);
          const QSqrt base_coeff = outer * hx1 * hy2 * hx2 * hy1 /
                                   (h.aut(s0) * h.aut(s1) * h.aut(m0) * h.aut(m1) * h.aut(n0) * h.aut(n1));
          const K0Class d0 = cls(s0), d1 = cls(s1);
          const auto ks = cat.objects_of_class(cls(m0) + cls(n1));
          const auto ls = cat.objects_of_class(cls(m1) + cls(n0));
          for (ClassId k : ks) {
            const QSqrt hk = h.hall_number(m0, n1, k);
            if (hk.is_zero()) continue;
            for (ClassId l : ls) {
              const QSqrt hl = h.hall_number(m1, n0, l);
              if (hl.is_zero()) continue;
              const std::array<long, 10> raw{
                  ef(d0, cls(k)),  ef(d1, cls(l)), ef(cls(m0), cls(n1)), ef(cls(m1), cls(n0)),
                  ef(d0, cls(l)),  ef(d1, cls(k)), ef(cls(y1), d0),      ef(cls(x1), d1),
                  ef(d0, cls(n1)), ef(d1, cls(n0))};
              static constexpr std::array<int, 10> sign{1, 1, 1, 1, -1, -1, -1, -1, -1, -1};
              long n = perturbation_.product_constant;
              for (std::size_t i = 0; i < raw.size(); ++i) n += (sign[i] + pt[i]) * raw[i];
              add_to(out, SDHKey{d0, d1, k, l}, vpow(n) * base_coeff * hk * hl);
            }
          }
        }
      }
    }
  }
  return out;
}

SDHElement SDHAlgebra::key_product(const SDHKey& x, const SDHKey& y) const {
  const K0Class a1 = base_.class_of(x.a), b1 = base_.class_of(x.b);
  // [c1] K_{alpha2} K*_{beta2} = v^{-(B1 - A1, alpha2) - (A1 - B1, beta2)} K_{alpha2} K*_{beta2} [c1]
  const long e = -base_.symmetric_form(b1 - a1, y.alpha) - base_.symmetric_form(a1 - b1, y.beta);
  const QSqrt twist = vpow(e);
  SDHElement out;
  for (const auto& [k, c] : stalk_product(x.a, x.b, y.a, y.b)) {
    SDHKey r = k;
    r.alpha += x.alpha + y.alpha;
    r.beta += x.beta + y.beta;
    add_to(out, r, twist * c);
  }
  return out;
}

SDHElement SDHAlgebra::product(const SDHElement& x, const SDHElement& y) const {
  SDHElement out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) accumulate(out, key_product(kx, ky), cx * cy);
  }
  return out;
}

const SDHTensor& SDHAlgebra::stalk_coproduct(ClassId x, ClassId y) const {
  const std::pair<ClassId, ClassId> key{x, y};
  {
    std::shared_lock lock(mutex_);
    if (auto it = coproducts_.find(key); it != coproducts_.end()) return *it->second;
  }
  auto value = std::make_unique<SDHTensor>(compute_stalk_coproduct(x, y));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = coproducts_.emplace(key, std::move(value));
  return *it->second;
}

SDHTensor SDHAlgebra::compute_stalk_coproduct(ClassId x, ClassId y) const {
  const auto& cat = base_;
  const auto& h = hall_;
  auto cls = [&](ClassId m) { return cat.class_of(m); };
  const auto& pt = perturbation_.coproduct_terms;
  SDHTensor out;
  const auto xdec = h.decompositions(x, 3);  // (X2, T, X1)
  const auto ydec = h.decompositions(y, 3);  // (Y1, T, Y2)
  for (const auto& [xs, hx] : xdec) {
    const ClassId x2 = xs[0], t = xs[1], x1 = xs[2];
    for (const auto& [ys, hy] : ydec) {
      if (ys[1] != t) continue;
      const ClassId y1 = ys[0], y2 = ys[2];
      const K0Class ct = cls(t), cx1 = cls(x1), cx2 = cls(x2), cy1 = cls(y1), cy2 = cls(y2);
      const std::array<long, 5> raw{cat.euler_form(cx2, cx1 + ct), cat.euler_form(cy1, cy2 + ct),
                                    cat.euler_form(ct, cy2), cat.symmetric_form(cx1 + ct, cy2),
                                    cat.euler_form(cx1, ct)};
      static constexpr std::array<int, 5> sign{1, 1, 1, -1, -1};
      long n = perturbation_.coproduct_constant;
      for (std::size_t i = 0; i < raw.size(); ++i) n += (sign[i] + pt[i]) * raw[i];
      const QSqrt coeff = vpow(n) * hx * hy * h.aut(x) * h.aut(y) /
                          (h.aut(t) * h.aut(x2) * h.aut(x1) * h.aut(y2) * h.aut(y1));
      // [C*_X1 + C_Y1] K_{Y2+T} (x) [C*_X2 + C_Y2] K*_{X1+T}
      const auto left = straighten_k(stalk_key(x1, y1), cy2 + ct, false);
      const auto right = straighten_k(stalk_key(x2, y2), cx1 + ct, true);
      for (const auto& [lk, lc] : left) {
        for (const auto& [rk, rc] : right) add_to(out, std::pair{lk, rk}, coeff * lc * rc);
      }
    }
  }
  return out;
}

SDHTensor SDHAlgebra::coproduct(const SDHKey& k) const {
  SDHTensor out;
  for (const auto& [pair, c] : stalk_coproduct(k.a, k.b)) {
    SDHKey l = pair.first, r = pair.second;
    l.alpha += k.alpha;
    l.beta += k.beta;
    r.alpha += k.alpha;
    r.beta += k.beta;
    add_to(out, std::pair{l, r}, c);
  }
  return out;
}

SDHTensor SDHAlgebra::coproduct(const SDHElement& x) const {
  SDHTensor out;
  for (const auto& [k, c] : x) {
    for (const auto& [pair, d] : coproduct(k)) add_to(out, pair, c * d);
  }
  return out;
}

QSqrt SDHAlgebra::stalk_counit(ClassId a, ClassId b) const {
  const ClassId z = base_.zero();
  if (a == z && b == z) return scalar(1);
  if (a == z || b == z) return scalar(0);
  {
    std::shared_lock lock(mutex_);
    if (auto it = counits_.find({a, b}); it != counits_.end()) return it->second;
  }
  // [C_B] * [C*_A] = c0 [C*_A + C_B] + (terms with smaller stalk parts), and
  // the counit of the left side is counit([C_B]) counit([C*_A]) = 0.
  const auto& expansion = stalk_product(z, b, a, z);
  QSqrt lead = scalar(0), rest = scalar(0);
  for (const auto& [k, c] : expansion) {
    if (k.a == a && k.b == b && k.alpha.is_zero() && k.beta.is_zero()) {
      lead += c;
    } else {
      rest += c * stalk_counit(k.a, k.b);
    }
  }
  QSqrt value = -rest / lead;
  std::unique_lock lock(mutex_);
  counits_.emplace(std::pair{a, b}, value);
  return value;
}

QSqrt SDHAlgebra::counit(const SDHKey& k) const { return stalk_counit(k.a, k.b); }

QSqrt SDHAlgebra::counit(const SDHElement& x) const {
  QSqrt out = scalar(0);
  for (const auto& [k, c] : x) out += c * counit(k);
  return out;
}

SDHTensor SDHAlgebra::tensor_product(const SDHTensor& x, const SDHTensor& y) const {
  SDHTensor out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const QSqrt c = cx * cy;
      const SDHElement left = key_product(kx.first, ky.first);
      const SDHElement right = key_product(kx.second, ky.second);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) add_to(out, std::pair{l, r}, c * cl * cr);
      }
    }
  }
  return out;
}

std::vector<SDHKey> SDHAlgebra::keys_within(const K0Class& bound, int k_radius) const {
  std::vector<SDHKey> out;
  const auto objs = base_.objects_up_to(bound);
  const auto ball = classes_in_ball(base_.k0_rank(), k_radius);
  for (const auto& alpha : ball) {
    for (const auto& beta : ball) {
      for (ClassId a : objs) {
        for (ClassId b : objs) {
          if ((base_.class_of(a) + base_.class_of(b)).within(bound)) out.push_back({alpha, beta, a, b});
        }
      }
    }
  }
  return out;
}

std::string SDHAlgebra::key_label(const SDHKey& k) const {
  return "K" + k.alpha.to_string() + " K*" + k.beta.to_string() + " [C*" + base_.label(k.a) + " + C" +
         base_.label(k.b) + "]";
}

nlohmann::json SDHAlgebra::key_json(const SDHKey& k) const {
  return {{"alpha", k.alpha.v}, {"beta", k.beta.v}, {"A", base_.label(k.a)}, {"B", base_.label(k.b)}};
}

nlohmann::json SDHAlgebra::element_json(const SDHElement& x) const {
  std::vector<std::pair<std::string, nlohmann::json>> rows;
  for (const auto& [k, c] : x) rows.emplace_back(key_label(k), nlohmann::json{{"key", key_json(k)}, {"coeff", to_json(c)}});
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  nlohmann::json out = nlohmann::json::array();
  for (auto& [label, row] : rows) out.push_back(std::move(row));
  return out;
}

nlohmann::json SDHAlgebra::tensor_json(const SDHTensor& x) const {
  std::vector<std::pair<std::string, nlohmann::json>> rows;
  for (const auto& [k, c] : x) {
    rows.emplace_back(key_label(k.first) + " | " + key_label(k.second),
                      nlohmann::json{{"key", {key_json(k.first), key_json(k.second)}}, {"coeff", to_json(c)}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  nlohmann::json out = nlohmann::json::array();
  for (auto& [label, row] : rows) out.push_back(std::move(row));
  return out;
}

namespace {

/// Describes a coefficient ratio as a power of v when it is one.
std::string ratio_note(const SDHAlgebra& alg, const QSqrt& lhs, const QSqrt& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return "";
  const QSqrt r = lhs / rhs;
  for (long e = -12; e <= 12; ++e) {
    if (r == alg.vpow(e)) return " (ratio v^" + std::to_string(e) + ")";
  }
  return "";
}

template <class Map, class Label>
std::string diff_generic(const SDHAlgebra& alg, const Map& lhs, const Map& rhs, Label label) {
  std::ostringstream os;
  int shown = 0;
  auto zero = alg.scalar(0);
  std::vector<typename Map::key_type> keys;
  for (const auto& [k, v] : lhs) keys.push_back(k);
  for (const auto& [k, v] : rhs) {
    if (!lhs.count(k)) keys.push_back(k);
  }
  for (const auto& k : keys) {
    auto l = lhs.count(k) ? lhs.at(k) : zero;
    auto r = rhs.count(k) ? rhs.at(k) : zero;
    if (l == r) continue;
    if (shown++ == 4) {
      os << "...";
      break;
    }
    os << label(k) << ": " << l << " vs " << r << ratio_note(alg, l, r) << "; ";
  }
  return os.str();
}

std::string diff_tensors(const SDHAlgebra& alg, const SDHTensor& lhs, const SDHTensor& rhs) {
  return diff_generic(alg, lhs, rhs,
                      [&](const auto& k) { return alg.key_label(k.first) + " (x) " + alg.key_label(k.second); });
}

}  // namespace

std::string diff_elements(const SDHAlgebra& alg, const SDHElement& lhs, const SDHElement& rhs) {
  return diff_generic(alg, lhs, rhs, [&](const SDHKey& k) { return alg.key_label(k); });
}

SuiteReport verify_sdh_associativity(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  const std::size_t n = keys.size();
  return run_suite("sdh-associativity", n * n * n, jobs, [&](std::size_t i) -> Check {
    const SDHKey& x = keys[i / (n * n)];
    const SDHKey& y = keys[(i / n) % n];
    const SDHKey& z = keys[i % n];
    const SDHElement lhs = alg.product(alg.key_product(x, y), alg.basis(z));
    const SDHElement rhs = alg.product(alg.basis(x), alg.key_product(y, z));
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(x) + " * " + alg.key_label(y) + " * " + alg.key_label(z),
                   diff_elements(alg, lhs, rhs)};
  });
}

SuiteReport verify_coassociativity(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  return run_suite("sdh-coassociativity", keys.size(), jobs, [&](std::size_t i) -> Check {
    const SDHKey& k = keys[i];
    SDHTensor3 lhs, rhs;
    for (const auto& [pair, c] : alg.coproduct(k)) {
      for (const auto& [inner, d] : alg.coproduct(pair.first)) {
        add_to(lhs, std::array<SDHKey, 3>{inner.first, inner.second, pair.second}, c * d);
      }
      for (const auto& [inner, d] : alg.coproduct(pair.second)) {
        add_to(rhs, std::array<SDHKey, 3>{pair.first, inner.first, inner.second}, c * d);
      }
    }
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(k), diff_generic(alg, lhs, rhs, [&](const auto& t) {
                     return alg.key_label(t[0]) + " (x) " + alg.key_label(t[1]) + " (x) " + alg.key_label(t[2]);
                   })};
  });
}

SuiteReport verify_compatibility(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  const std::size_t n = keys.size();
  return run_suite("sdh-compatibility", n * n, jobs, [&](std::size_t i) -> Check {
    const SDHKey& x = keys[i / n];
    const SDHKey& y = keys[i % n];
    const SDHTensor lhs = alg.coproduct(alg.key_product(x, y));
    const SDHTensor rhs = alg.tensor_product(alg.coproduct(x), alg.coproduct(y));
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(x) + " * " + alg.key_label(y), diff_tensors(alg, lhs, rhs)};
  });
}

SuiteReport verify_counit(const SDHAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  return run_suite("sdh-counit", keys.size(), jobs, [&](std::size_t i) -> Check {
    const SDHKey& k = keys[i];
    SDHElement left, right;
    for (const auto& [pair, c] : alg.coproduct(k)) {
      add_to(left, pair.second, c * alg.counit(pair.first));
      add_to(right, pair.first, c * alg.counit(pair.second));
    }
    const SDHElement expect = alg.basis(k);
    if (left == expect && right == expect) return std::nullopt;
    return Failure{alg.key_label(k), "(e x id): " + diff_elements(alg, left, expect) +
                                         " (id x e): " + diff_elements(alg, right, expect)};
  });
}

SuiteReport verify_k_relations(const SDHAlgebra& alg, int k_radius, unsigned jobs) {
  const auto ball = classes_in_ball(alg.base().k0_rank(), k_radius);
  const std::size_t n = ball.size();
  return run_suite("sdh-k-relations", n * n, jobs, [&](std::size_t i) -> Check {
    const K0Class& a = ball[i / n];
    const K0Class& b = ball[i % n];
    std::string bad;
    if (alg.product(alg.k_alpha(a, false), alg.k_alpha(b, false)) != alg.k_alpha(a + b, false)) bad += "K K; ";
    if (alg.product(alg.k_alpha(a, true), alg.k_alpha(b, true)) != alg.k_alpha(a + b, true)) bad += "K* K*; ";
    if (alg.product(alg.k_alpha(a, false), alg.k_alpha(b, true)) !=
        alg.product(alg.k_alpha(b, true), alg.k_alpha(a, false))) {
      bad += "K K* commute; ";
    }
    if (alg.product(alg.k_alpha(a, false), alg.k_alpha(-a, false)) != alg.unit()) bad += "K inverse; ";
    if (bad.empty()) return std::nullopt;
    return Failure{a.to_string() + "," + b.to_string(), bad};
  });
}

}  // namespace semihall
