#include "semihall/hall.hpp"

#include <sstream>

#include "semihall/errors.hpp"

namespace semihall {

void add_term(HallElement& e, ClassId c, const QSqrt& v) { add_to(e, c, v); }

HallAlgebra::HallAlgebra(const FinitaryCategory& cat, std::optional<K0Class> bound)
    : cat_(cat), bound_(std::move(bound)) {}

void HallAlgebra::check_bound(const K0Class& c) const {
  if (bound_ && !c.within(*bound_)) {
    throw TruncationError("Hall product leaves the truncation bound " + bound_->to_string() + " at " +
                          c.to_string());
  }
}

void HallAlgebra::inject_fault(ClassId m, ClassId n, ClassId r, const QSqrt& factor) {
  faults_[{m, n, r}] = factor;
}

QSqrt HallAlgebra::hall_number(ClassId m, ClassId n, ClassId r) const {
  mpz_class f = cat_.sub_quotient_count(r, m, n);
  if (f == 0) return scalar(0);
  mpq_class h(f * cat_.aut_count(m) * cat_.aut_count(n), cat_.aut_count(r));
  h.canonicalize();
  QSqrt out = scalar(h);
  if (!faults_.empty()) {
    if (auto it = faults_.find({m, n, r}); it != faults_.end()) out *= it->second;
  }
  return out;
}

HallTensor3 HallAlgebra::decompositions(ClassId r, std::size_t n) const {
  HallTensor3 out;
  if (n == 1) {
    out[{r}] = scalar(1);
    return out;
  }
  for (const auto& [key, count] : cat_.filtrations(r)) {
    (void)count;
    const auto [m1, t] = key;
    QSqrt h = hall_number(m1, t, r);
    if (h.is_zero()) continue;
    for (const auto& [tail, ht] : decompositions(t, n - 1)) {
      std::vector<ClassId> ms{m1};
      ms.insert(ms.end(), tail.begin(), tail.end());
      add_to(out, ms, h * ht);
    }
  }
  return out;
}

QSqrt HallAlgebra::iterated_hall_number(const std::vector<ClassId>& ms, ClassId k) const {
  if (ms.size() < 2) throw std::invalid_argument("iterated Hall numbers need at least two factors");
  if (ms.size() == 2) return hall_number(ms[0], ms[1], k);
  K0Class tail = K0Class::zero(cat_.k0_rank());
  for (std::size_t i = 1; i < ms.size(); ++i) tail += cat_.class_of(ms[i]);
  std::vector<ClassId> rest(ms.begin() + 1, ms.end());
  QSqrt total = scalar(0);
  for (ClassId t : cat_.objects_of_class(tail)) {
    QSqrt h = hall_number(ms[0], t, k);
    if (h.is_zero()) continue;
    total += h * iterated_hall_number(rest, t);
  }
  return total;
}

HallElement HallAlgebra::basis_product(ClassId m, ClassId n, bool twisted) const {
  const K0Class cm = cat_.class_of(m), cn = cat_.class_of(n);
  const K0Class cr = cm + cn;
  check_bound(cr);
  HallElement out;
  QSqrt twist = twisted ? vpow(cat_.euler_form(cm, cn)) : scalar(1);
  for (ClassId r : cat_.objects_of_class(cr)) add_to(out, r, twist * hall_number(m, n, r));
  return out;
}

HallElement HallAlgebra::product(const HallElement& x, const HallElement& y, bool twisted) const {
  HallElement out;
  for (const auto& [m, a] : x) {
    for (const auto& [n, b] : y) {
      QSqrt ab = a * b;
      for (const auto& [r, c] : basis_product(m, n, twisted)) add_to(out, r, ab * c);
    }
  }
  return out;
}

HallTensor HallAlgebra::green_coproduct(ClassId r) const {
  // v^<M,N> h^R_{MN} a_R / (a_M a_N) = v^<M,N> F^R_{MN}
  HallTensor out;
  for (const auto& [key, count] : cat_.filtrations(r)) {
    const auto [m, n] = key;
    QSqrt c = vpow(cat_.euler_form(m, n)) * hall_number(m, n, r) * aut(r) / (aut(m) * aut(n));
    (void)count;
    add_to(out, key, c);
  }
  return out;
}

HallTensor HallAlgebra::green_coproduct(const HallElement& x) const {
  HallTensor out;
  for (const auto& [r, a] : x) {
    for (const auto& [key, c] : green_coproduct(r)) add_to(out, key, a * c);
  }
  return out;
}

QSqrt HallAlgebra::counit(const HallElement& x) const {
  auto it = x.find(cat_.zero());
  return it == x.end() ? scalar(0) : it->second;
}

QSqrt hall_number_direct(const HereditaryCategory& cat, ClassId m, ClassId n, ClassId r) {
  if (cat.class_of(m) + cat.class_of(n) != cat.class_of(r)) return QSqrt(0, 0, cat.q());
  auto census = cat.extension_census(m, n);
  auto it = census.cocycles.find(r);
  if (it == census.cocycles.end()) return QSqrt(0, 0, cat.q());
  mpq_class h(it->second, census.normalizer);
  h.canonicalize();
  return QSqrt(h, 0, cat.q());
}

std::vector<std::tuple<ClassId, ClassId, ClassId>> graded_triples(const FinitaryCategory& cat,
                                                                  const K0Class& bound) {
  std::vector<std::tuple<ClassId, ClassId, ClassId>> out;
  const auto objs = cat.objects_up_to(bound);
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      K0Class c = cat.class_of(m) + cat.class_of(n);
      if (!c.within(bound)) continue;
      auto rs = cat.objects_of_class(c);
      cat.sort_classes(rs);
      for (ClassId r : rs) out.emplace_back(m, n, r);
    }
  }
  return out;
}

namespace {

std::string names(const FinitaryCategory& cat, const std::vector<ClassId>& ids) {
  std::string s = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += cat.label(ids[i]);
  }
  return s + ")";
}

Check compare(const FinitaryCategory& cat, const std::vector<ClassId>& ids, const QSqrt& lhs,
              const QSqrt& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{names(cat, ids), "lhs " + lhs.to_string() + " != rhs " + rhs.to_string()};
}

template <class Map>
std::string diff_maps(const Map& a, const Map& b) {
  std::ostringstream os;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) {
      os << "lhs term " << v << " vs rhs " << (it == b.end() ? std::string("0") : it->second.to_string()) << "; ";
    }
  }
  for (const auto& [k, v] : b) {
    if (!a.count(k)) os << "rhs-only term " << v << "; ";
  }
  return os.str();
}

HallTensor tensor_product(const HallAlgebra& alg, const HallTensor& x, const HallTensor& y) {
  const auto& cat = alg.category();
  HallTensor out;
  for (const auto& [k1, a] : x) {
    for (const auto& [k2, b] : y) {
      const auto [xa, xb] = k1;
      const auto [ya, yb] = k2;
      QSqrt c = a * b * alg.vpow(cat.symmetric_form(cat.class_of(xb), cat.class_of(ya)));
      HallElement left = alg.basis_product(xa, ya, true);
      HallElement right = alg.basis_product(xb, yb, true);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) add_to(out, std::pair{l, r}, c * cl * cr);
      }
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_hall_double_entry(const HallAlgebra& alg, const HereditaryCategory& cat,
                                     const K0Class& bound, unsigned jobs) {
  auto triples = graded_triples(cat, bound);
  return run_suite("hall-double-entry", triples.size(), jobs, [&](std::size_t i) -> Check {
    auto [m, n, r] = triples[i];
    return compare(cat, {m, n, r}, alg.hall_number(m, n, r), hall_number_direct(cat, m, n, r));
  });
}

SuiteReport verify_gaussian_oracle(const FinitaryCategory& vect, int max_total, unsigned jobs) {
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t <= max_total; ++t) {
    for (int n = 0; n <= t; ++n) pairs.emplace_back(t - n, n);
  }
  const std::uint64_t q = vect.q();
  return run_suite("gaussian-binomial", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto [m, n] = pairs[i];
    const int total = m + n;
    mpz_class got = vect.sub_quotient_count(total, m, n);
    // product formula prod_{i<n} (q^{total-i} - 1) / (q^{n-i} - 1)
    mpq_class formula = 1;
    for (int j = 0; j < n; ++j) {
      mpz_class a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), q, static_cast<unsigned long>(total - j));
      mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(n - j));
      formula *= mpq_class(a - 1, b - 1);
    }
    formula.canonicalize();
    const auto listed = enumerate_subspaces(total, n, static_cast<Residue>(q)).size();
    if (mpq_class(got) == formula && got == mpz_class(static_cast<unsigned long>(listed))) return std::nullopt;
    return Failure{"V" + std::to_string(total) + " sub V" + std::to_string(n),
                   "count " + got.get_str() + ", product formula " + formula.get_str() + ", enumerated " +
                       std::to_string(listed)};
  });
}

SuiteReport verify_associativity(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  std::vector<std::vector<ClassId>> quads;
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      for (ClassId l : objs) {
        K0Class c = cat.class_of(m) + cat.class_of(n) + cat.class_of(l);
        if (!c.within(bound)) continue;
        auto ks = cat.objects_of_class(c);
        cat.sort_classes(ks);
        for (ClassId k : ks) quads.push_back({m, n, l, k});
      }
    }
  }
  return run_suite("associativity", quads.size(), jobs, [&](std::size_t i) -> Check {
    const auto& t = quads[i];
    const ClassId m = t[0], n = t[1], l = t[2], k = t[3];
    QSqrt lhs = alg.scalar(0), rhs = alg.scalar(0);
    for (ClassId r : cat.objects_of_class(cat.class_of(m) + cat.class_of(n))) {
      lhs += alg.hall_number(m, n, r) * alg.hall_number(r, l, k);
    }
    for (ClassId s : cat.objects_of_class(cat.class_of(n) + cat.class_of(l))) {
      rhs += alg.hall_number(m, s, k) * alg.hall_number(n, l, s);
    }
    return compare(cat, t, lhs, rhs);
  });
}

SuiteReport verify_green_formula(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  std::vector<std::vector<ClassId>> quads;
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      K0Class c = cat.class_of(m) + cat.class_of(n);
      if (!c.within(bound)) continue;
      for (ClassId k1 : objs) {
        K0Class rest = c - cat.class_of(k1);
        if (!rest.nonnegative()) continue;
        auto k2s = cat.objects_of_class(rest);
        cat.sort_classes(k2s);
        for (ClassId k2 : k2s) quads.push_back({m, n, k1, k2});
      }
    }
  }
  return run_suite("green-formula", quads.size(), jobs, [&](std::size_t i) -> Check {
    const auto& t = quads[i];
    const ClassId m = t[0], n = t[1], k1 = t[2], k2 = t[3];
    QSqrt lhs = alg.scalar(0);
    for (ClassId k : cat.objects_of_class(cat.class_of(m) + cat.class_of(n))) {
      lhs += alg.aut(k) * alg.hall_number(m, n, k) * alg.hall_number(k1, k2, k);
    }
    QSqrt rhs = alg.scalar(0);
    const QSqrt outer = alg.aut(m) * alg.aut(n) * alg.aut(k1) * alg.aut(k2);
    for (const auto& [mkey, fm] : cat.filtrations(m)) {
      (void)fm;
      const auto [m1, m2] = mkey;
      for (const auto& [nkey, fn] : cat.filtrations(n)) {
        (void)fn;
        const auto [n1, n2] = nkey;
        QSqrt h = alg.hall_number(m1, n1, k1);
        if (h.is_zero()) continue;
        h *= alg.hall_number(m2, n2, k2);
        if (h.is_zero()) continue;
        h *= alg.hall_number(m1, m2, m) * alg.hall_number(n1, n2, n);
        rhs += alg.vpow(-2 * cat.euler_form(m1, n2)) * outer /
               (alg.aut(m1) * alg.aut(m2) * alg.aut(n1) * alg.aut(n2)) * h;
      }
    }
    return compare(cat, t, lhs, rhs);
  });
}

SuiteReport verify_green_corollary(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  std::vector<std::vector<ClassId>> tuples;
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      K0Class c = cat.class_of(m) + cat.class_of(n);
      if (!c.within(bound)) continue;
      for (ClassId k1 : objs) {
        for (ClassId cc : objs) {
          K0Class rest = c - cat.class_of(k1) - cat.class_of(cc);
          if (!rest.nonnegative()) continue;
          auto k2s = cat.objects_of_class(rest);
          cat.sort_classes(k2s);
          for (ClassId k2 : k2s) tuples.push_back({m, n, k1, cc, k2});
        }
      }
    }
  }
  return run_suite("green-corollary", tuples.size(), jobs, [&](std::size_t i) -> Check {
    const auto& t = tuples[i];
    const ClassId m = t[0], n = t[1], k1 = t[2], c = t[3], k2 = t[4];
    QSqrt lhs = alg.scalar(0);
    for (ClassId k : cat.objects_of_class(cat.class_of(m) + cat.class_of(n))) {
      QSqrt h = alg.hall_number(m, n, k);
      if (h.is_zero()) continue;
      lhs += alg.aut(k) * h * alg.iterated_hall_number({k1, c, k2}, k);
    }
    QSqrt rhs = alg.scalar(0);
    const QSqrt outer = alg.aut(m) * alg.aut(n) * alg.aut(k1) * alg.aut(k2) * alg.aut(c);
    const auto mdec = alg.decompositions(m, 3);
    const auto ndec = alg.decompositions(n, 3);
    for (const auto& [ms, hm] : mdec) {
      const ClassId m1 = ms[0], c1 = ms[1], m2 = ms[2];
      for (const auto& [ns, hn] : ndec) {
        const ClassId n1 = ns[0], c2 = ns[1], n2 = ns[2];
        QSqrt h = alg.hall_number(m1, n1, k1);
        if (h.is_zero()) continue;
        h *= alg.hall_number(c1, c2, c);
        if (h.is_zero()) continue;
        h *= alg.hall_number(m2, n2, k2);
        if (h.is_zero()) continue;
        const long e = -2 * cat.euler_form(cat.class_of(m1), cat.class_of(c2) + cat.class_of(n2)) -
                       2 * cat.euler_form(c1, n2);
        rhs += alg.vpow(e) * outer /
               (alg.aut(m1) * alg.aut(n1) * alg.aut(c1) * alg.aut(m2) * alg.aut(c2) * alg.aut(n2)) * hm * hn * h;
      }
    }
    return compare(cat, t, lhs, rhs);
  });
}

SuiteReport verify_green_counit(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  const ClassId zero = cat.zero();
  return run_suite("green-counit", objs.size(), jobs, [&](std::size_t i) -> Check {
    const ClassId r = objs[i];
    HallElement left, right;
    for (const auto& [key, c] : alg.green_coproduct(r)) {
      if (key.first == zero) add_to(left, key.second, c);
      if (key.second == zero) add_to(right, key.first, c);
    }
    HallElement expect{{r, alg.scalar(1)}};
    if (left == expect && right == expect) return std::nullopt;
    return Failure{cat.label(r), "counit axiom fails"};
  });
}

SuiteReport verify_green_coassociativity(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  return run_suite("green-coassociativity", objs.size(), jobs, [&](std::size_t i) -> Check {
    const ClassId r = objs[i];
    HallTensor3 lhs, rhs;
    for (const auto& [key, c] : alg.green_coproduct(r)) {
      for (const auto& [inner, d] : alg.green_coproduct(key.first)) {
        add_to(lhs, std::vector<ClassId>{inner.first, inner.second, key.second}, c * d);
      }
      for (const auto& [inner, d] : alg.green_coproduct(key.second)) {
        add_to(rhs, std::vector<ClassId>{key.first, inner.first, inner.second}, c * d);
      }
    }
    if (lhs == rhs) return std::nullopt;
    return Failure{cat.label(r), diff_maps(lhs, rhs)};
  });
}

SuiteReport verify_green_bialgebra(const HallAlgebra& alg, const K0Class& bound, unsigned jobs) {
  const auto& cat = alg.category();
  const auto objs = cat.objects_up_to(bound);
  std::vector<std::pair<ClassId, ClassId>> pairs;
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      if ((cat.class_of(m) + cat.class_of(n)).within(bound)) pairs.emplace_back(m, n);
    }
  }
  return run_suite("green-bialgebra", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto [m, n] = pairs[i];
    HallTensor lhs = alg.green_coproduct(alg.basis_product(m, n, true));
    HallTensor rhs = tensor_product(alg, alg.green_coproduct(m), alg.green_coproduct(n));
    if (lhs == rhs) return std::nullopt;
    return Failure{names(cat, {m, n}), diff_maps(lhs, rhs)};
  });
}

SuiteReport verify_euler_form(const HallAlgebra& alg, const HereditaryCategory& cat,
                              const K0Class& bound, unsigned jobs) {
  const auto objs = cat.objects_up_to(bound);
  std::vector<std::pair<ClassId, ClassId>> pairs;
  for (ClassId m : objs) {
    for (ClassId n : objs) {
      if ((cat.class_of(m) + cat.class_of(n)).within(bound)) pairs.emplace_back(m, n);
    }
  }
  return run_suite("euler-form", pairs.size(), jobs, [&](std::size_t i) -> Check {
    const auto [m, n] = pairs[i];
    const int hom = cat.hom_dim(m, n);
    // |Ext^1(M,N)| = |Hom(M,N)| * sum_R h^R_{MN}
    QSqrt total = alg.scalar(0);
    for (ClassId r : cat.objects_of_class(cat.class_of(m) + cat.class_of(n))) total += alg.hall_number(m, n, r);
    QSqrt ext = total * alg.scalar(mpq_class(cat.hom_count(m, n)));
    const long expected_ext = hom - cat.euler_form(m, n);
    if (expected_ext >= 0 && ext == alg.vpow(2 * expected_ext)) return std::nullopt;
    return Failure{names(cat, {m, n}), "|Ext^1| = " + ext.to_string() + ", dim Hom = " + std::to_string(hom) +
                                           ", Euler form " + std::to_string(cat.euler_form(m, n))};
  });
}

}  // namespace semihall
