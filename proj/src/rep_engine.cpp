#include "semihall/rep_engine.hpp"

#include <cassert>
#include <functional>
#include <optional>
#include <string>

#include "semihall/errors.hpp"

namespace semihall {

namespace {

constexpr ClassId kUnseen = -1;
constexpr ClassId kInvalid = -2;

std::vector<Residue> row_of(const FpMatrix& m, int r) {
  std::vector<Residue> v(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = m(r, c);
  return v;
}

}  // namespace

std::vector<Residue> mat_vec(const FpMatrix& m, const std::vector<Residue>& x) {
  assert(static_cast<int>(x.size()) == m.cols());
  std::vector<Residue> y(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    long s = 0;
    for (int j = 0; j < m.cols(); ++j) s += static_cast<long>(m(i, j)) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = static_cast<Residue>(s % m.p());
  }
  return y;
}

bool QuiverShape::acyclic() const {
  // Kahn's algorithm
  std::vector<int> indeg(static_cast<std::size_t>(vertices), 0);
  for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.target)];
  std::vector<int> ready;
  for (int v = 0; v < vertices; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.source == v && --indeg[static_cast<std::size_t>(a.target)] == 0) ready.push_back(a.target);
    }
  }
  return seen == vertices;
}

// ---------------------------------------------------------------- Subspace

bool Subspace::contains(const std::vector<Residue>& w) const {
  return residue_coordinates(w) == std::vector<Residue>(static_cast<std::size_t>(ambient() - dim()), 0);
}

std::vector<Residue> Subspace::coordinates(const std::vector<Residue>& w) const {
  std::vector<Residue> c(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = w[static_cast<std::size_t>(pivots[i])];
  return c;
}

std::vector<Residue> Subspace::residue_coordinates(const std::vector<Residue>& w) const {
  const Residue p = basis.p();
  std::vector<Residue> red = w;
  for (int i = 0; i < dim(); ++i) {
    long f = red[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])];
    if (f == 0) continue;
    for (int c = 0; c < ambient(); ++c) {
      red[static_cast<std::size_t>(c)] =
          static_cast<Residue>(((red[static_cast<std::size_t>(c)] - f * basis(i, c)) % p + p) % p);
    }
  }
  std::vector<Residue> out;
  std::size_t next_pivot = 0;
  for (int c = 0; c < ambient(); ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    out.push_back(red[static_cast<std::size_t>(c)]);
  }
  return out;
}

Subspace Subspace::span(const FpMatrix& rows) {
  auto red = rref(rows);
  FpMatrix b(rows.p(), red.rank, rows.cols());
  for (int r = 0; r < red.rank; ++r) {
    for (int c = 0; c < rows.cols(); ++c) b(r, c) = red.form(r, c);
  }
  return Subspace{std::move(b), std::move(red.pivots)};
}

Subspace Subspace::from_vectors(Residue p, int n, const std::vector<std::vector<Residue>>& vs) {
  FpMatrix m(p, static_cast<int>(vs.size()), n);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = vs[r][static_cast<std::size_t>(c)];
  }
  return span(m);
}

Subspace Subspace::whole(Residue p, int n) { return span(FpMatrix::identity(p, n)); }

// ---------------------------------------------------------------- RepEngine

RepEngine::RepEngine(QuiverShape shape, Residue p, std::uint64_t budget)
    : shape_(std::move(shape)), p_(p), budget_(budget) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw ConfigError("field size must be prime, got " + std::to_string(p));
}

bool RepEngine::satisfies_relations(const Representation& r) const {
  for (const auto& rel : shape_.relations) {
    std::optional<FpMatrix> total;
    for (const auto& term : rel.terms) {
      const int start = shape_.arrows[static_cast<std::size_t>(term.path.front())].source;
      FpMatrix acc = FpMatrix::identity(p_, r.dims[static_cast<std::size_t>(start)]);
      for (int a : term.path) acc = r.maps[static_cast<std::size_t>(a)] * acc;
      acc = acc.scaled(term.coeff);
      total = total ? *total + acc : acc;
    }
    if (total && !total->is_zero()) return false;
  }
  return true;
}

std::uint64_t RepEngine::encode(const Representation& r) const {
  std::uint64_t code = 0, scale = 1;
  for (const auto& m : r.maps) {
    for (Residue e : m.entries()) {
      code += scale * static_cast<std::uint64_t>(e);
      scale *= static_cast<std::uint64_t>(p_);
    }
  }
  return code;
}

Representation RepEngine::decode(const std::vector<int>& dims, std::uint64_t code) const {
  Representation r{dims, {}};
  r.maps.reserve(shape_.arrows.size());
  for (const auto& a : shape_.arrows) {
    const int rows = dims[static_cast<std::size_t>(a.target)];
    const int cols = dims[static_cast<std::size_t>(a.source)];
    std::vector<Residue> e(static_cast<std::size_t>(rows * cols));
    for (auto& x : e) {
      x = static_cast<Residue>(code % static_cast<std::uint64_t>(p_));
      code /= static_cast<std::uint64_t>(p_);
    }
    r.maps.emplace_back(p_, rows, cols, std::move(e));
  }
  return r;
}

const std::vector<FpMatrix>& RepEngine::gl_list(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = gl_cache_.find(n); it != gl_cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<std::vector<FpMatrix>>(enumerate_gl(n, p_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = gl_cache_.emplace(n, std::move(fresh));
  return *it->second;
}

const std::vector<Subspace>& RepEngine::all_subspaces(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = subspace_cache_.find(n); it != subspace_cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<std::vector<Subspace>>();
  for (int k = 0; k <= n; ++k) {
    for (auto& b : enumerate_subspaces(n, k, p_)) {
      auto red = rref(b);
      fresh->push_back(Subspace{std::move(b), std::move(red.pivots)});
    }
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = subspace_cache_.emplace(n, std::move(fresh));
  return *it->second;
}

std::unique_ptr<RepEngine::DimTable> RepEngine::build_table(const std::vector<int>& dims,
                                                            std::vector<ClassInfo>& fresh) const {
  if (dims.size() != static_cast<std::size_t>(shape_.vertices)) {
    throw std::invalid_argument("dimension vector length does not match the quiver");
  }
  for (int d : dims) {
    if (d < 0) throw std::invalid_argument("negative dimension");
  }
  std::uint64_t codes = 1;
  for (const auto& a : shape_.arrows) {
    const int entries = dims[static_cast<std::size_t>(a.target)] * dims[static_cast<std::size_t>(a.source)];
    for (int i = 0; i < entries; ++i) {
      codes *= static_cast<std::uint64_t>(p_);
      if (codes > budget_) {
        throw BudgetExceeded("representation space too large for dimension vector");
      }
    }
  }
  mpz_class group_order = 1;
  for (int d : dims) group_order *= gl_order(d, static_cast<std::uint64_t>(p_));
  if (group_order > mpz_class(static_cast<unsigned long>(budget_))) {
    throw BudgetExceeded("automorphism group too large for dimension vector");
  }

  std::vector<const std::vector<FpMatrix>*> gls;
  std::vector<std::vector<FpMatrix>> gl_inv;
  for (int d : dims) {
    gls.push_back(&gl_list(d));
    std::vector<FpMatrix> invs;
    invs.reserve(gls.back()->size());
    for (const auto& g : *gls.back()) invs.push_back(inverse(g));
    gl_inv.push_back(std::move(invs));
  }

  auto t = std::make_unique<DimTable>();
  t->dims = dims;
  t->class_of_code.assign(codes, kUnseen);
  const std::size_t nv = dims.size();

  for (std::uint64_t code = 0; code < codes; ++code) {
    if (t->class_of_code[code] != kUnseen) continue;
    Representation r = decode(dims, code);
    if (!satisfies_relations(r)) {
      t->class_of_code[code] = kInvalid;
      continue;
    }
    const auto local = static_cast<ClassId>(t->classes.size());
    t->classes.push_back(local);  // rewritten to global ids on insertion
    std::uint64_t orbit = 0;
    std::vector<std::size_t> idx(nv, 0);
    while (true) {
      Representation img{dims, {}};
      img.maps.reserve(r.maps.size());
      for (std::size_t a = 0; a < r.maps.size(); ++a) {
        const auto s = static_cast<std::size_t>(shape_.arrows[a].source);
        const auto tg = static_cast<std::size_t>(shape_.arrows[a].target);
        img.maps.push_back((*gls[tg])[idx[tg]] * r.maps[a] * gl_inv[s][idx[s]]);
      }
      auto c = encode(img);
      if (t->class_of_code[c] == kUnseen) {
        t->class_of_code[c] = local;
        ++orbit;
      }
      std::size_t i = 0;
      while (i < nv && ++idx[i] == gls[i]->size()) idx[i++] = 0;
      if (i == nv) break;
    }
    ClassInfo ci;
    ci.dims = dims;
    ci.local = local;
    ci.rep = std::move(r);
    ci.aut = group_order / mpz_class(static_cast<unsigned long>(orbit));
    fresh.push_back(std::move(ci));
  }
  return t;
}

const RepEngine::DimTable& RepEngine::table(const std::vector<int>& dims) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(dims); it != tables_.end()) return *it->second;
  }
  std::vector<ClassInfo> fresh;
  auto t = build_table(dims, fresh);
  std::unique_lock lock(mutex_);
  if (auto it = tables_.find(dims); it != tables_.end()) return *it->second;
  const auto base = static_cast<ClassId>(classes_.size());
  for (auto& c : t->class_of_code) {
    if (c >= 0) c += base;
  }
  for (auto& c : t->classes) c += base;
  for (auto& ci : fresh) classes_.push_back(std::make_unique<ClassInfo>(std::move(ci)));
  auto [it, inserted] = tables_.emplace(dims, std::move(t));
  return *it->second;
}

const RepEngine::ClassInfo& RepEngine::info(ClassId c) const {
  std::shared_lock lock(mutex_);
  if (c < 0 || static_cast<std::size_t>(c) >= classes_.size()) throw std::out_of_range("unknown class id");
  return *classes_[static_cast<std::size_t>(c)];
}

ClassId RepEngine::classify(const Representation& r) const {
  const auto& t = table(r.dims);
  ClassId c = t.class_of_code[encode(r)];
  if (c < 0) throw std::invalid_argument("representation violates the quiver relations");
  return c;
}

const std::vector<ClassId>& RepEngine::classes_with_dims(const std::vector<int>& dims) const {
  return table(dims).classes;
}

const Representation& RepEngine::representative(ClassId c) const { return info(c).rep; }
const std::vector<int>& RepEngine::dims(ClassId c) const { return info(c).dims; }
int RepEngine::local_index(ClassId c) const { return info(c).local; }
const mpz_class& RepEngine::aut_count(ClassId c) const { return info(c).aut; }

std::size_t RepEngine::class_count() const {
  std::shared_lock lock(mutex_);
  return classes_.size();
}

int RepEngine::hom_dim(const Representation& m, const Representation& n) const {
  // unknown layout: f_v is dims_n[v] x dims_m[v], row-major, vertices concatenated
  std::vector<int> offset(static_cast<std::size_t>(shape_.vertices) + 1, 0);
  for (int v = 0; v < shape_.vertices; ++v) {
    offset[static_cast<std::size_t>(v) + 1] =
        offset[static_cast<std::size_t>(v)] + n.dims[static_cast<std::size_t>(v)] * m.dims[static_cast<std::size_t>(v)];
  }
  const int unknowns = offset.back();
  std::vector<std::vector<Residue>> rows;
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(shape_.arrows[a].source);
    const auto t = static_cast<std::size_t>(shape_.arrows[a].target);
    const FpMatrix& ma = m.maps[a];  // m_t x m_s
    const FpMatrix& na = n.maps[a];  // n_t x n_s
    // (N_a f_s - f_t M_a)_{ij} = 0 for i < n_t, j < m_s
    for (int i = 0; i < n.dims[t]; ++i) {
      for (int j = 0; j < m.dims[s]; ++j) {
        std::vector<Residue> eq(static_cast<std::size_t>(unknowns), 0);
        for (int k = 0; k < n.dims[s]; ++k) {
          auto& e = eq[static_cast<std::size_t>(offset[s] + k * m.dims[s] + j)];
          e = (e + na(i, k)) % p_;
        }
        for (int k = 0; k < m.dims[t]; ++k) {
          auto& e = eq[static_cast<std::size_t>(offset[t] + i * m.dims[t] + k)];
          e = (e - ma(k, j) + p_) % p_;
        }
        rows.push_back(std::move(eq));
      }
    }
  }
  if (rows.empty()) return unknowns;
  FpMatrix sys(p_, static_cast<int>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < unknowns; ++c) sys(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
  }
  return unknowns - rank(sys);
}

bool RepEngine::closed(const Representation& r, const std::vector<Subspace>& u) const {
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& us = u[static_cast<std::size_t>(shape_.arrows[a].source)];
    const auto& ut = u[static_cast<std::size_t>(shape_.arrows[a].target)];
    for (int i = 0; i < us.dim(); ++i) {
      if (!ut.contains(mat_vec(r.maps[a], row_of(us.basis, i)))) return false;
    }
  }
  return true;
}

Representation RepEngine::restrict_to(const Representation& r, const std::vector<Subspace>& u) const {
  Representation out;
  for (const auto& s : u) out.dims.push_back(s.dim());
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& us = u[static_cast<std::size_t>(shape_.arrows[a].source)];
    const auto& ut = u[static_cast<std::size_t>(shape_.arrows[a].target)];
    FpMatrix m(p_, ut.dim(), us.dim());
    for (int j = 0; j < us.dim(); ++j) {
      auto c = ut.coordinates(mat_vec(r.maps[a], row_of(us.basis, j)));
      for (int i = 0; i < ut.dim(); ++i) m(i, j) = c[static_cast<std::size_t>(i)];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

Representation RepEngine::quotient_by(const Representation& r, const std::vector<Subspace>& u) const {
  Representation out;
  for (const auto& s : u) out.dims.push_back(s.ambient() - s.dim());
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& us = u[static_cast<std::size_t>(shape_.arrows[a].source)];
    const auto& ut = u[static_cast<std::size_t>(shape_.arrows[a].target)];
    FpMatrix m(p_, ut.ambient() - ut.dim(), us.ambient() - us.dim());
    int j = 0;
    std::size_t next_pivot = 0;
    for (int c = 0; c < us.ambient(); ++c) {
      if (next_pivot < us.pivots.size() && us.pivots[next_pivot] == c) {
        ++next_pivot;
        continue;
      }
      std::vector<Residue> e(static_cast<std::size_t>(us.ambient()), 0);
      e[static_cast<std::size_t>(c)] = 1;
      auto coords = ut.residue_coordinates(mat_vec(r.maps[a], e));
      for (std::size_t i = 0; i < coords.size(); ++i) m(static_cast<int>(i), j) = coords[i];
      ++j;
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

const FiltrationCounts& RepEngine::filtrations(ClassId rc) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = filtrations_.find(rc); it != filtrations_.end()) return *it->second;
  }
  const Representation& r = representative(rc);
  const std::size_t nv = r.dims.size();
  std::vector<const std::vector<Subspace>*> lists;
  std::uint64_t tuples = 1;
  for (int d : r.dims) {
    lists.push_back(&all_subspaces(d));
    tuples *= lists.back()->size();
    if (tuples > budget_) throw BudgetExceeded("too many subspace tuples to enumerate subobjects");
  }
  auto counts = std::make_unique<FiltrationCounts>();
  std::vector<std::size_t> idx(nv, 0);
  std::vector<Subspace> u(nv);
  while (true) {
    for (std::size_t v = 0; v < nv; ++v) u[v] = (*lists[v])[idx[v]];
    if (closed(r, u)) {
      ClassId sub = classify(restrict_to(r, u));
      ClassId quo = classify(quotient_by(r, u));
      (*counts)[{quo, sub}] += 1;
    }
    std::size_t i = 0;
    while (i < nv && ++idx[i] == lists[i]->size()) idx[i++] = 0;
    if (i == nv) break;
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = filtrations_.emplace(rc, std::move(counts));
  return *it->second;
}

ClassId RepEngine::direct_sum(ClassId a, ClassId b) const {
  const auto& ra = representative(a);
  const auto& rb = representative(b);
  Representation out;
  for (std::size_t v = 0; v < ra.dims.size(); ++v) out.dims.push_back(ra.dims[v] + rb.dims[v]);
  for (std::size_t k = 0; k < shape_.arrows.size(); ++k) {
    const auto& ma = ra.maps[k];
    const auto& mb = rb.maps[k];
    FpMatrix m(p_, ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (int i = 0; i < ma.rows(); ++i) {
      for (int j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
    }
    for (int i = 0; i < mb.rows(); ++i) {
      for (int j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
    }
    out.maps.push_back(std::move(m));
  }
  return classify(out);
}

ExtensionCensus RepEngine::extension_census(ClassId mc, ClassId nc) const {
  if (!shape_.relations.empty()) {
    throw std::logic_error("cocycle census is only implemented for quivers without relations");
  }
  const auto& m = representative(mc);
  const auto& n = representative(nc);
  ExtensionCensus out;
  std::uint64_t codes = 1;
  std::vector<int> entries;
  for (const auto& a : shape_.arrows) {
    int e = n.dims[static_cast<std::size_t>(a.target)] * m.dims[static_cast<std::size_t>(a.source)];
    entries.push_back(e);
    for (int i = 0; i < e; ++i) {
      codes *= static_cast<std::uint64_t>(p_);
      if (codes > budget_) throw BudgetExceeded("cocycle space too large");
    }
  }
  long exponent = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) exponent += m.dims[v] * n.dims[v];
  mpz_pow_ui(out.normalizer.get_mpz_t(), mpz_class(p_).get_mpz_t(), static_cast<unsigned long>(exponent));

  for (std::uint64_t code = 0; code < codes; ++code) {
    std::uint64_t rest = code;
    Representation mid;
    for (std::size_t v = 0; v < m.dims.size(); ++v) mid.dims.push_back(n.dims[v] + m.dims[v]);
    for (std::size_t k = 0; k < shape_.arrows.size(); ++k) {
      const auto s = static_cast<std::size_t>(shape_.arrows[k].source);
      const auto t = static_cast<std::size_t>(shape_.arrows[k].target);
      // middle term basis: N first, then M; block [[N_a, xi_a], [0, M_a]]
      FpMatrix blk(p_, mid.dims[t], mid.dims[s]);
      for (int i = 0; i < n.dims[t]; ++i) {
        for (int j = 0; j < n.dims[s]; ++j) blk(i, j) = n.maps[k](i, j);
      }
      for (int i = 0; i < m.dims[t]; ++i) {
        for (int j = 0; j < m.dims[s]; ++j) blk(n.dims[t] + i, n.dims[s] + j) = m.maps[k](i, j);
      }
      for (int i = 0; i < n.dims[t]; ++i) {
        for (int j = 0; j < m.dims[s]; ++j) {
          blk(i, n.dims[s] + j) = static_cast<Residue>(rest % static_cast<std::uint64_t>(p_));
          rest /= static_cast<std::uint64_t>(p_);
        }
      }
      mid.maps.push_back(std::move(blk));
    }
    out.cocycles[classify(mid)] += 1;
  }
  return out;
}

}  // namespace semihall
