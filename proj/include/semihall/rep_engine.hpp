#pragma once

/**
 * @file rep_engine.hpp
 * @brief Brute-force classification of representations of a finite quiver
 *        with linear relations over F_p.
 *
 * Both hereditary backends (vector spaces are the one-vertex quiver) and the
 * category of Z/2-graded complexes (a doubled quiver with commutativity and
 * zero relations) run on this engine.
 *
 * For a fixed dimension vector every representation is encoded as an integer
 * (the arrow matrices read as base-p digits). Isomorphism classes are the
 * orbits of prod_v GL(d_v) acting by conjugation; they are found by applying
 * the whole group to the first unclassified code. |Aut M| then follows from
 * orbit-stabilizer as |G| / |orbit|.
 */

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "semihall/fp_matrix.hpp"

namespace semihall {

struct Arrow {
  int source = 0;
  int target = 0;
};

/// coeff * (path[k-1] o ... o path[0]); path[0] is applied first.
struct PathTerm {
  Residue coeff = 1;
  std::vector<int> path;
};

/// A linear relation sum(terms) = 0 between parallel paths.
struct Relation {
  std::vector<PathTerm> terms;
};

struct QuiverShape {
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  bool acyclic() const;
};

struct Representation {
  std::vector<int> dims;
  std::vector<FpMatrix> maps;  // maps[a] : dims[source] -> dims[target], a dims[t] x dims[s] matrix

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// A subspace of F_p^n given by an RREF basis (rows).
struct Subspace {
  FpMatrix basis;
  std::vector<int> pivots;

  int dim() const { return basis.rows(); }
  int ambient() const { return basis.cols(); }
  bool contains(const std::vector<Residue>& w) const;
  /// Coordinates of w (assumed to lie in the subspace) in the basis.
  std::vector<Residue> coordinates(const std::vector<Residue>& w) const;
  /// Coordinates of w modulo the subspace, indexed by non-pivot columns.
  std::vector<Residue> residue_coordinates(const std::vector<Residue>& w) const;

  static Subspace span(const FpMatrix& rows);
  static Subspace from_vectors(Residue p, int n, const std::vector<std::vector<Residue>>& vs);
  static Subspace whole(Residue p, int n);
};

using ClassId = int;

/// (quotient class M, subobject class N) -> number of subobjects N' of R with
/// N' ~ N and R/N' ~ M.
using FiltrationCounts = std::map<std::pair<ClassId, ClassId>, mpz_class>;

/// Extension classes counted through cocycles: h^R_{MN} = cocycles[R] / normalizer.
struct ExtensionCensus {
  std::map<ClassId, mpz_class> cocycles;
  mpz_class normalizer;
};

std::vector<Residue> mat_vec(const FpMatrix& m, const std::vector<Residue>& x);

class RepEngine {
 public:
  /// `budget` caps both the number of codes per dimension vector and |G|.
  RepEngine(QuiverShape shape, Residue p, std::uint64_t budget = (1u << 22));

  const QuiverShape& shape() const { return shape_; }
  Residue p() const { return p_; }

  bool satisfies_relations(const Representation& r) const;

  ClassId classify(const Representation& r) const;
  const std::vector<ClassId>& classes_with_dims(const std::vector<int>& dims) const;
  const Representation& representative(ClassId c) const;
  const std::vector<int>& dims(ClassId c) const;
  int local_index(ClassId c) const;
  const mpz_class& aut_count(ClassId c) const;

  int hom_dim(const Representation& m, const Representation& n) const;
  const FiltrationCounts& filtrations(ClassId r) const;
  ClassId direct_sum(ClassId a, ClassId b) const;
  /// Cocycle census for quivers without relations.
  ExtensionCensus extension_census(ClassId m, ClassId n) const;

  /// Subrepresentation on the subspaces `u` (closed under every arrow).
  Representation restrict_to(const Representation& r, const std::vector<Subspace>& u) const;
  Representation quotient_by(const Representation& r, const std::vector<Subspace>& u) const;
  bool closed(const Representation& r, const std::vector<Subspace>& u) const;

  std::size_t class_count() const;

 private:
  struct ClassInfo {
    std::vector<int> dims;
    int local = 0;
    Representation rep;
    mpz_class aut;
  };
  struct DimTable {
    std::vector<int> dims;
    std::vector<ClassId> class_of_code;
    std::vector<ClassId> classes;
  };

  const DimTable& table(const std::vector<int>& dims) const;
  std::unique_ptr<DimTable> build_table(const std::vector<int>& dims,
                                        std::vector<ClassInfo>& fresh) const;
  const std::vector<FpMatrix>& gl_list(int n) const;
  const std::vector<Subspace>& all_subspaces(int n) const;
  std::uint64_t encode(const Representation& r) const;
  Representation decode(const std::vector<int>& dims, std::uint64_t code) const;
  const ClassInfo& info(ClassId c) const;

  QuiverShape shape_;
  Residue p_;
  std::uint64_t budget_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<DimTable>> tables_;
  mutable std::vector<std::unique_ptr<ClassInfo>> classes_;
  mutable std::map<ClassId, std::unique_ptr<FiltrationCounts>> filtrations_;
  mutable std::map<int, std::unique_ptr<std::vector<FpMatrix>>> gl_cache_;
  mutable std::map<int, std::unique_ptr<std::vector<Subspace>>> subspace_cache_;
};

}  // namespace semihall
