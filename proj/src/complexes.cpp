#include "semihall/complexes.hpp"

#include <stdexcept>

namespace semihall {

namespace {

QuiverShape doubled(const QuiverShape& q, Residue p) {
  const int n = q.vertices;
  const int a = static_cast<int>(q.arrows.size());
  QuiverShape s;
  s.vertices = 2 * n;
  for (const auto& ar : q.arrows) s.arrows.push_back({ar.source, ar.target});
  for (const auto& ar : q.arrows) s.arrows.push_back({ar.source + n, ar.target + n});
  for (int v = 0; v < n; ++v) s.arrows.push_back({v, v + n});
  for (int v = 0; v < n; ++v) s.arrows.push_back({v + n, v});
  const int d0 = 2 * a, d1 = 2 * a + n;
  for (int k = 0; k < a; ++k) {
    const int src = q.arrows[static_cast<std::size_t>(k)].source;
    const int tgt = q.arrows[static_cast<std::size_t>(k)].target;
    // d0_t a^0 = a^1 d0_s and d1_t a^1 = a^0 d1_s
    s.relations.push_back({{{1, {k, d0 + tgt}}, {p - 1, {d0 + src, a + k}}}});
    s.relations.push_back({{{1, {a + k, d1 + tgt}}, {p - 1, {d1 + src, k}}}});
  }
  for (int v = 0; v < n; ++v) {
    s.relations.push_back({{{1, {d0 + v, d1 + v}}}});
    s.relations.push_back({{{1, {d1 + v, d0 + v}}}});
  }
  return s;
}

std::vector<Residue> column_of(const FpMatrix& m, int c) {
  std::vector<Residue> v(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) v[static_cast<std::size_t>(r)] = m(r, c);
  return v;
}

Subspace column_space(const FpMatrix& m) {
  std::vector<std::vector<Residue>> cols;
  for (int c = 0; c < m.cols(); ++c) cols.push_back(column_of(m, c));
  return Subspace::from_vectors(m.p(), m.rows(), cols);
}

Subspace kernel(const FpMatrix& m) { return Subspace::from_vectors(m.p(), m.cols(), solve_kernel(m)); }

}  // namespace

ComplexCategory::ComplexCategory(const HereditaryCategory& base, std::uint64_t budget)
    : base_(base),
      n_(base.shape().vertices),
      a_(static_cast<int>(base.shape().arrows.size())),
      engine_(doubled(base.shape(), static_cast<Residue>(base.q())), static_cast<Residue>(base.q()), budget) {}

std::vector<ClassId> ComplexCategory::objects_of_class(const K0Class& c) const {
  if (!c.nonnegative()) return {};
  return engine_.classes_with_dims(c.v);
}

ClassId ComplexCategory::zero() const {
  return engine_.classes_with_dims(std::vector<int>(static_cast<std::size_t>(2 * n_), 0)).front();
}

long ComplexCategory::euler_form(const K0Class& x, const K0Class& y) const {
  return base_.euler_form(component(x, 0), component(y, 0)) + base_.euler_form(component(x, 1), component(y, 1));
}

std::string ComplexCategory::label(ClassId m) const {
  const K0Class c = class_of(m);
  return "[" + component(c, 0).to_string() + "|" + component(c, 1).to_string() + "]#" +
         std::to_string(engine_.local_index(m));
}

K0Class ComplexCategory::join(const K0Class& c0, const K0Class& c1) {
  K0Class out = c0;
  out.v.insert(out.v.end(), c1.v.begin(), c1.v.end());
  return out;
}

K0Class ComplexCategory::component(const K0Class& c, int i) const {
  const auto begin = c.v.begin() + static_cast<long>(i) * n_;
  return K0Class(std::vector<int>(begin, begin + n_));
}

bool ComplexCategory::is_valid(const Z2Complex& c) const {
  if (c.d0.size() != static_cast<std::size_t>(n_) || c.d1.size() != static_cast<std::size_t>(n_)) return false;
  for (int v = 0; v < n_; ++v) {
    const auto& d0 = c.d0[static_cast<std::size_t>(v)];
    const auto& d1 = c.d1[static_cast<std::size_t>(v)];
    if (d0.rows() != c.m1.dims[static_cast<std::size_t>(v)] || d0.cols() != c.m0.dims[static_cast<std::size_t>(v)]) {
      return false;
    }
    if (d1.rows() != c.m0.dims[static_cast<std::size_t>(v)] || d1.cols() != c.m1.dims[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return engine_.satisfies_relations(to_rep(c));
}

Representation ComplexCategory::to_rep(const Z2Complex& c) const {
  Representation r;
  r.dims = c.m0.dims;
  r.dims.insert(r.dims.end(), c.m1.dims.begin(), c.m1.dims.end());
  r.maps = c.m0.maps;
  r.maps.insert(r.maps.end(), c.m1.maps.begin(), c.m1.maps.end());
  r.maps.insert(r.maps.end(), c.d0.begin(), c.d0.end());
  r.maps.insert(r.maps.end(), c.d1.begin(), c.d1.end());
  return r;
}

Z2Complex ComplexCategory::from_rep(const Representation& r) const {
  Z2Complex c;
  c.m0.dims.assign(r.dims.begin(), r.dims.begin() + n_);
  c.m1.dims.assign(r.dims.begin() + n_, r.dims.end());
  auto it = r.maps.begin();
  c.m0.maps.assign(it, it + a_);
  c.m1.maps.assign(it + a_, it + 2 * a_);
  c.d0.assign(it + 2 * a_, it + 2 * a_ + n_);
  c.d1.assign(it + 2 * a_ + n_, it + 2 * a_ + 2 * n_);
  return c;
}

ClassId ComplexCategory::classify(const Z2Complex& c) const {
  if (!is_valid(c)) throw std::invalid_argument("not a Z/2-graded complex");
  return engine_.classify(to_rep(c));
}

ClassId ComplexCategory::homology(const Z2Complex& c, int i) const {
  const Representation& m = i == 0 ? c.m0 : c.m1;
  const auto& d_out = i == 0 ? c.d0 : c.d1;
  const auto& d_in = i == 0 ? c.d1 : c.d0;
  std::vector<Subspace> ker, img;
  for (int v = 0; v < n_; ++v) {
    ker.push_back(kernel(d_out[static_cast<std::size_t>(v)]));
    const Subspace& k = ker.back();
    // Im d^{i-1} written in the basis of ker d^i
    const FpMatrix& din = d_in[static_cast<std::size_t>(v)];
    std::vector<std::vector<Residue>> coords;
    for (int col = 0; col < din.cols(); ++col) coords.push_back(k.coordinates(column_of(din, col)));
    img.push_back(Subspace::from_vectors(static_cast<Residue>(q()), k.dim(), coords));
  }
  const RepEngine& be = base_.engine();
  Representation kr = be.restrict_to(m, ker);
  return base_.classify(be.quotient_by(kr, img));
}

ClassId ComplexCategory::image(const Z2Complex& c, int i) const {
  const Representation& target = i == 0 ? c.m1 : c.m0;
  const auto& d = i == 0 ? c.d0 : c.d1;
  std::vector<Subspace> im;
  for (int v = 0; v < n_; ++v) im.push_back(column_space(d[static_cast<std::size_t>(v)]));
  return base_.classify(base_.engine().restrict_to(target, im));
}

bool ComplexCategory::is_acyclic(ClassId m) const {
  const Z2Complex c = representative(m);
  return homology(c, 0) == base_.zero() && homology(c, 1) == base_.zero();
}

Z2Complex ComplexCategory::shift(const Z2Complex& c) const {
  Z2Complex s;
  s.m0 = c.m1;
  s.m1 = c.m0;
  for (const auto& d : c.d1) s.d0.push_back(d.scaled(static_cast<Residue>(q() - 1)));
  for (const auto& d : c.d0) s.d1.push_back(d.scaled(static_cast<Residue>(q() - 1)));
  return s;
}

Representation ComplexCategory::zero_object() const {
  Representation z;
  z.dims.assign(static_cast<std::size_t>(n_), 0);
  for (int k = 0; k < a_; ++k) z.maps.emplace_back(static_cast<Residue>(q()), 0, 0);
  return z;
}

namespace {

std::vector<FpMatrix> blocks(const std::vector<int>& rows, const std::vector<int>& cols, Residue p, bool identity) {
  std::vector<FpMatrix> out;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    out.push_back(identity ? FpMatrix::identity(p, rows[v]) : FpMatrix(p, rows[v], cols[v]));
  }
  return out;
}

}  // namespace

Z2Complex ComplexCategory::k_complex(ClassId x) const {
  const Representation r = base_.representative(x);
  const auto p = static_cast<Residue>(q());
  return {r, r, blocks(r.dims, r.dims, p, true), blocks(r.dims, r.dims, p, false)};
}

Z2Complex ComplexCategory::kstar_complex(ClassId x) const {
  const Representation r = base_.representative(x);
  const auto p = static_cast<Residue>(q());
  return {r, r, blocks(r.dims, r.dims, p, false), blocks(r.dims, r.dims, p, true)};
}

Z2Complex ComplexCategory::stalk_complex(ClassId a, ClassId b) const {
  const Representation ra = a < 0 ? zero_object() : base_.representative(a);
  const Representation rb = b < 0 ? zero_object() : base_.representative(b);
  const auto p = static_cast<Residue>(q());
  return {ra, rb, blocks(rb.dims, ra.dims, p, false), blocks(ra.dims, rb.dims, p, false)};
}

Z2Complex ComplexCategory::c_complex(ClassId x) const { return stalk_complex(-1, x); }
Z2Complex ComplexCategory::cstar_complex(ClassId x) const { return stalk_complex(x, -1); }

std::vector<ClassId> ComplexCategory::enumerate(const K0Class& component_bound) const {
  std::vector<ClassId> out;
  for (const auto& c0 : classes_within(component_bound)) {
    for (const auto& c1 : classes_within(component_bound)) {
      auto ids = objects_of_class(join(c0, c1));
      sort_classes(ids);
      out.insert(out.end(), ids.begin(), ids.end());
    }
  }
  return out;
}

nlohmann::json ComplexCategory::dump(const Z2Complex& c) const {
  auto mats = [](const std::vector<FpMatrix>& ms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : ms) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int col = 0; col < m.cols(); ++col) row.push_back(m(r, col));
        rows.push_back(row);
      }
      arr.push_back({{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}});
    }
    return arr;
  };
  return {{"m0", {{"dims", c.m0.dims}, {"maps", mats(c.m0.maps)}}},
          {"m1", {{"dims", c.m1.dims}, {"maps", mats(c.m1.maps)}}},
          {"d0", mats(c.d0)},
          {"d1", mats(c.d1)}};
}

}  // namespace semihall
