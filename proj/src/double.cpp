#include "semihall/double.hpp"

#include <sstream>

#include "semihall/ideal_oracle.hpp"

namespace semihall {

ExtHallAlgebra::ExtHallAlgebra(const HereditaryCategory& base, ExtSign sign, int k_twist)
    : base_(base), sign_(sign), k_twist_(sign == ExtSign::plus ? 1 : k_twist), hall_(base) {}

ExtElement ExtHallAlgebra::key_product(const ExtKey& x, const ExtKey& y) const {
  const QSqrt twist = hall_.vpow(k_twist_ * base_.symmetric_form(x.alpha, base_.class_of(y.m)));
  ExtElement out;
  for (const auto& [r, c] : hall_.basis_product(x.m, y.m, true)) add_to(out, ExtKey{r, x.alpha + y.alpha}, twist * c);
  return out;
}

ExtElement ExtHallAlgebra::product(const ExtElement& x, const ExtElement& y) const {
  ExtElement out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      for (const auto& [k, c] : key_product(kx, ky)) add_to(out, k, cx * cy * c);
    }
  }
  return out;
}

ExtTensor ExtHallAlgebra::coproduct(const ExtKey& k) const {
  ExtTensor out;
  for (const auto& [mn, c] : hall_.green_coproduct(k.m)) {
    const auto [m, n] = mn;
    const ExtKey big{m, base_.class_of(n) + k.alpha};
    const ExtKey small{n, k.alpha};
    if (sign_ == ExtSign::plus) {
      add_to(out, std::pair{big, small}, c);
    } else {
      add_to(out, std::pair{small, big}, c);
    }
  }
  return out;
}

ExtTensor ExtHallAlgebra::coproduct(const ExtElement& x) const {
  ExtTensor out;
  for (const auto& [k, c] : x) {
    for (const auto& [pair, d] : coproduct(k)) add_to(out, pair, c * d);
  }
  return out;
}

QSqrt ExtHallAlgebra::counit(const ExtKey& k) const { return hall_.scalar(k.m == base_.zero() ? 1 : 0); }

ExtTensor ExtHallAlgebra::tensor_product(const ExtTensor& x, const ExtTensor& y) const {
  ExtTensor out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const ExtElement left = key_product(kx.first, ky.first);
      const ExtElement right = key_product(kx.second, ky.second);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) add_to(out, std::pair{l, r}, cx * cy * cl * cr);
      }
    }
  }
  return out;
}

std::vector<ExtKey> ExtHallAlgebra::keys_within(const K0Class& bound, int k_radius) const {
  std::vector<ExtKey> out;
  for (const auto& alpha : classes_in_ball(base_.k0_rank(), k_radius)) {
    for (ClassId m : base_.objects_up_to(bound)) out.push_back({m, alpha});
  }
  return out;
}

std::string ExtHallAlgebra::key_label(const ExtKey& k) const {
  return "[" + base_.label(k.m) + "]k" + k.alpha.to_string();
}

std::vector<D4Orientation> D4Orientation::all() {
  std::vector<D4Orientation> out;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int c = 1; c <= 2; ++c) {
        for (int d = 1; d <= 2; ++d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

std::string D4Orientation::describe() const {
  auto other = [](int leg) { return 3 - leg; };
  std::ostringstream os;
  os << "sum phi(x_(" << lhs_x << "), y_(" << lhs_y << ")) x_(" << other(lhs_x) << ") (x) y_(" << other(lhs_y)
     << ") = sum phi(x_(" << rhs_x << "), y_(" << rhs_y << ")) (1 (x) y_(" << other(rhs_y) << "))(x_("
     << other(rhs_x) << ") (x) 1)";
  return os.str();
}

DrinfeldDouble::DrinfeldDouble(const SDHAlgebra& sdh, int minus_twist)
    : sdh_(sdh), plus_(sdh.base(), ExtSign::plus), minus_(sdh.base(), ExtSign::minus, minus_twist) {}

QSqrt DrinfeldDouble::pairing(const ExtKey& x, const ExtKey& y) const {
  if (x.m != y.m) return sdh_.scalar(0);
  return sdh_.vpow(sdh_.base().symmetric_form(x.alpha, y.alpha)) * plus_.hall().aut(x.m);
}

QSqrt DrinfeldDouble::pairing(const ExtElement& x, const ExtElement& y) const {
  QSqrt out = sdh_.scalar(0);
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) out += cx * cy * pairing(kx, ky);
  }
  return out;
}

SDHElement DrinfeldDouble::iso_plus(const ExtKey& x) const {
  return sdh_.product(sdh_.c(x.m), sdh_.k_alpha(x.alpha, false));
}

SDHElement DrinfeldDouble::iso_minus(const ExtKey& y) const {
  return sdh_.product(sdh_.cstar(y.m), sdh_.k_alpha(y.alpha, true));
}

SDHElement DrinfeldDouble::iso(const ExtKey& x, const ExtKey& y) const {
  return sdh_.product(iso_plus(x), iso_minus(y));
}

SDHElement DrinfeldDouble::iso_plus(const ExtElement& x) const {
  SDHElement out;
  for (const auto& [k, c] : x) accumulate(out, iso_plus(k), c);
  return out;
}

SDHElement DrinfeldDouble::iso_minus(const ExtElement& y) const {
  SDHElement out;
  for (const auto& [k, c] : y) accumulate(out, iso_minus(k), c);
  return out;
}

namespace {

std::vector<std::pair<ExtKey, ExtKey>> pairs_within(const HereditaryCategory& base, const std::vector<ExtKey>& xs,
                                                     const std::vector<ExtKey>& ys, const K0Class& bound) {
  std::vector<std::pair<ExtKey, ExtKey>> out;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if ((base.class_of(x.m) + base.class_of(y.m)).within(bound)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string element_diff(const ExtHallAlgebra& alg, const ExtElement& lhs, const ExtElement& rhs) {
  std::ostringstream os;
  int shown = 0;
  auto zero = alg.hall().scalar(0);
  std::map<ExtKey, std::pair<QSqrt, QSqrt>> rows;
  for (const auto& [k, v] : lhs) rows.emplace(k, std::pair{v, zero});
  for (const auto& [k, v] : rhs) {
    auto [it, inserted] = rows.emplace(k, std::pair{zero, v});
    if (!inserted) it->second.second = v;
  }
  for (const auto& [k, lr] : rows) {
    if (lr.first == lr.second) continue;
    if (shown++ == 4) {
      os << "...";
      break;
    }
    os << alg.key_label(k) << ": " << lr.first << " vs " << lr.second << "; ";
  }
  return os.str();
}

std::string tensor_diff(const ExtHallAlgebra& alg, const ExtTensor& lhs, const ExtTensor& rhs) {
  std::ostringstream os;
  int shown = 0;
  auto zero = alg.hall().scalar(0);
  std::map<std::pair<ExtKey, ExtKey>, std::pair<QSqrt, QSqrt>> rows;
  for (const auto& [k, v] : lhs) rows.emplace(k, std::pair{v, zero});
  for (const auto& [k, v] : rhs) {
    auto [it, inserted] = rows.emplace(k, std::pair{zero, v});
    if (!inserted) it->second.second = v;
  }
  for (const auto& [k, lr] : rows) {
    if (lr.first == lr.second) continue;
    if (shown++ == 4) {
      os << "...";
      break;
    }
    os << alg.key_label(k.first) << " (x) " << alg.key_label(k.second) << ": " << lr.first << " vs " << lr.second
       << "; ";
  }
  return os.str();
}

}  // namespace

SuiteReport verify_ext_associativity(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& base = alg.base();
  const auto keys = alg.keys_within(bound, k_radius);
  std::vector<std::array<ExtKey, 3>> triples;
  for (const auto& x : keys) {
    for (const auto& y : keys) {
      for (const auto& z : keys) {
        if ((base.class_of(x.m) + base.class_of(y.m) + base.class_of(z.m)).within(bound)) triples.push_back({x, y, z});
      }
    }
  }
  const std::string name = alg.sign() == ExtSign::plus ? "ext+-associativity" : "ext--associativity";
  return run_suite(name, triples.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y, z] = triples[i];
    const ExtElement lhs = alg.product(alg.key_product(x, y), alg.basis(z));
    const ExtElement rhs = alg.product(alg.basis(x), alg.key_product(y, z));
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(x) + " * " + alg.key_label(y) + " * " + alg.key_label(z),
                   element_diff(alg, lhs, rhs)};
  });
}

SuiteReport verify_ext_coassociativity(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  const std::string name = alg.sign() == ExtSign::plus ? "ext+-coassociativity" : "ext--coassociativity";
  return run_suite(name, keys.size(), jobs, [&](std::size_t i) -> Check {
    ExtTensor3 lhs, rhs;
    for (const auto& [pair, c] : alg.coproduct(keys[i])) {
      for (const auto& [inner, d] : alg.coproduct(pair.first)) {
        add_to(lhs, std::array<ExtKey, 3>{inner.first, inner.second, pair.second}, c * d);
      }
      for (const auto& [inner, d] : alg.coproduct(pair.second)) {
        add_to(rhs, std::array<ExtKey, 3>{pair.first, inner.first, inner.second}, c * d);
      }
    }
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(keys[i]), "(D x 1) D != (1 x D) D"};
  });
}

SuiteReport verify_ext_compatibility(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  const auto pairs = pairs_within(alg.base(), keys, keys, bound);
  const std::string name = alg.sign() == ExtSign::plus ? "ext+-compatibility" : "ext--compatibility";
  return run_suite(name, pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const ExtTensor lhs = alg.coproduct(alg.key_product(x, y));
    const ExtTensor rhs = alg.tensor_product(alg.coproduct(x), alg.coproduct(y));
    if (lhs == rhs) return std::nullopt;
    return Failure{alg.key_label(x) + " * " + alg.key_label(y), tensor_diff(alg, lhs, rhs)};
  });
}

SuiteReport verify_ext_counit(const ExtHallAlgebra& alg, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto keys = alg.keys_within(bound, k_radius);
  const std::string name = alg.sign() == ExtSign::plus ? "ext+-counit" : "ext--counit";
  return run_suite(name, keys.size(), jobs, [&](std::size_t i) -> Check {
    ExtElement left, right;
    for (const auto& [pair, c] : alg.coproduct(keys[i])) {
      add_to(left, pair.second, c * alg.counit(pair.first));
      add_to(right, pair.first, c * alg.counit(pair.second));
    }
    const ExtElement expect = alg.basis(keys[i]);
    if (left == expect && right == expect) return std::nullopt;
    return Failure{alg.key_label(keys[i]), element_diff(alg, left, expect) + element_diff(alg, right, expect)};
  });
}

SuiteReport verify_hopf_pairing(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& base = dd.sdh().base();
  const auto& plus = dd.plus();
  const auto& minus = dd.minus();
  const auto keys = plus.keys_within(bound, k_radius);
  std::vector<std::array<ExtKey, 3>> triples;
  for (const auto& x : keys) {
    for (const auto& x2 : keys) {
      for (const auto& y : keys) {
        const K0Class s = base.class_of(x.m) + base.class_of(x2.m);
        if (s.within(bound) && s == base.class_of(y.m)) triples.push_back({x, x2, y});
      }
    }
  }
  return run_suite("hopf-pairing", triples.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [a, b, c] = triples[i];
    // phi(a b, c) over H^ex+ x H^ex-, with c in H^ex-
    const QSqrt lhs1 = dd.pairing(plus.key_product(a, b), minus.basis(c));
    QSqrt rhs1 = dd.sdh().scalar(0);
    for (const auto& [pair, k] : minus.coproduct(c)) rhs1 += k * dd.pairing(a, pair.second) * dd.pairing(b, pair.first);
    // phi(c, a b) with c in H^ex+ and a b in H^ex-
    const QSqrt lhs2 = dd.pairing(plus.basis(c), minus.key_product(a, b));
    QSqrt rhs2 = dd.sdh().scalar(0);
    for (const auto& [pair, k] : plus.coproduct(c)) rhs2 += k * dd.pairing(pair.first, a) * dd.pairing(pair.second, b);
    if (lhs1 == rhs1 && lhs2 == rhs2) return std::nullopt;
    return Failure{plus.key_label(a) + ", " + plus.key_label(b) + ", " + plus.key_label(c),
                   "phi(xx',y): " + lhs1.to_string() + " vs " + rhs1.to_string() + "; phi(x,yy'): " +
                       lhs2.to_string() + " vs " + rhs2.to_string()};
  });
}

SuiteReport verify_d1(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& plus = dd.plus();
  const auto keys = plus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(plus.base(), keys, keys, bound);
  return run_suite("double-d1", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const SDHElement lhs = dd.iso_plus(plus.key_product(x, y));
    const SDHElement rhs = dd.sdh().product(dd.iso_plus(x), dd.iso_plus(y));
    if (lhs == rhs) return std::nullopt;
    return Failure{plus.key_label(x) + " * " + plus.key_label(y), diff_elements(dd.sdh(), lhs, rhs)};
  });
}

SuiteReport verify_d2(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& minus = dd.minus();
  const auto keys = minus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(minus.base(), keys, keys, bound);
  return run_suite("double-d2", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const SDHElement lhs = dd.iso_minus(minus.key_product(x, y));
    const SDHElement rhs = dd.sdh().product(dd.iso_minus(x), dd.iso_minus(y));
    if (lhs == rhs) return std::nullopt;
    return Failure{minus.key_label(x) + " * " + minus.key_label(y), diff_elements(dd.sdh(), lhs, rhs)};
  });
}

SuiteReport verify_d3(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& plus = dd.plus();
  const auto keys = plus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(plus.base(), keys, keys, bound);
  return run_suite("double-d3", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const SDHElement lhs =
        dd.sdh().product(dd.iso(x, dd.minus().unit_key()), dd.iso(dd.plus().unit_key(), y));
    const SDHElement rhs = dd.iso(x, y);
    if (lhs == rhs) return std::nullopt;
    return Failure{plus.key_label(x) + " (x) " + plus.key_label(y), diff_elements(dd.sdh(), lhs, rhs)};
  });
}

SuiteReport verify_d4(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, const D4Orientation& o,
                      unsigned jobs) {
  const auto& plus = dd.plus();
  const auto& minus = dd.minus();
  const auto keys = plus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(plus.base(), keys, keys, bound);
  auto leg = [](const std::pair<ExtKey, ExtKey>& p, int i) -> const ExtKey& { return i == 1 ? p.first : p.second; };
  return run_suite("double-d4", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [x, y] = pairs[i];
    const ExtTensor dx = plus.coproduct(x);
    const ExtTensor dy = minus.coproduct(y);
    SDHElement lhs, rhs;
    for (const auto& [px, cx] : dx) {
      for (const auto& [py, cy] : dy) {
        const QSqrt l = dd.pairing(leg(px, o.lhs_x), leg(py, o.lhs_y));
        if (!l.is_zero()) accumulate(lhs, dd.iso(leg(px, 3 - o.lhs_x), leg(py, 3 - o.lhs_y)), cx * cy * l);
        const QSqrt r = dd.pairing(leg(px, o.rhs_x), leg(py, o.rhs_y));
        if (!r.is_zero()) {
          accumulate(rhs, dd.sdh().product(dd.iso_minus(leg(py, 3 - o.rhs_y)), dd.iso_plus(leg(px, 3 - o.rhs_x))),
                     cx * cy * r);
        }
      }
    }
    if (lhs == rhs) return std::nullopt;
    return Failure{plus.key_label(x) + " , " + minus.key_label(y), diff_elements(dd.sdh(), lhs, rhs)};
  });
}

SuiteReport verify_bialgebra_iso(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned jobs) {
  const auto& plus = dd.plus();
  const auto& minus = dd.minus();
  const auto keys = plus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(plus.base(), keys, keys, bound);
  const auto& sdh = dd.sdh();
  return run_suite("bialgebra-iso", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto& [a, b] = pairs[i];
    SDHTensor lhs;
    for (const auto& [pa, ca] : plus.coproduct(a)) {
      for (const auto& [pb, cb] : minus.coproduct(b)) {
        const SDHElement left = dd.iso(pa.first, pb.first);
        const SDHElement right = dd.iso(pa.second, pb.second);
        for (const auto& [l, cl] : left) {
          for (const auto& [r, cr] : right) add_to(lhs, std::pair{l, r}, ca * cb * cl * cr);
        }
      }
    }
    const SDHTensor rhs = sdh.coproduct(dd.iso(a, b));
    if (lhs == rhs) return std::nullopt;
    return Failure{plus.key_label(a) + " (x) " + minus.key_label(b), "(I x I) D != D I"};
  });
}

SuiteReport verify_iso_injective(const DrinfeldDouble& dd, const K0Class& bound, int k_radius, unsigned) {
  const auto& plus = dd.plus();
  const auto keys = plus.keys_within(bound, k_radius);
  const auto pairs = pairs_within(plus.base(), keys, keys, bound);
  std::map<SDHKey, ClassId> index;
  RowSpace space;
  // sequential: each instance checks independence from the earlier images
  return run_suite("iso-injective", pairs.size(), 1, [&](std::size_t i) -> Check {
    const auto& [a, b] = pairs[i];
    HallElement row;
    for (const auto& [k, c] : dd.iso(a, b)) {
      auto [it, inserted] = index.emplace(k, static_cast<ClassId>(index.size()));
      add_to(row, it->second, c);
    }
    if (space.insert(std::move(row))) return std::nullopt;
    return Failure{plus.key_label(a) + " (x) " + dd.minus().key_label(b), "image is dependent on earlier images"};
  });
}

}  // namespace semihall
