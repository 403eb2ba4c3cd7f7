#pragma once

/**
 * @file fp_matrix.hpp
 * @brief Dense linear algebra over prime fields F_p.
 *
 * Entries are residues in [0, p) stored row-major. Matrices here are tiny
 * (the enumeration core never goes beyond a handful of rows), so every
 * routine is a straightforward dense loop.
 */

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace semihall {

using Residue = std::int32_t;

bool is_prime(std::uint64_t n);
Residue inv_mod(Residue a, Residue p);

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(Residue p, int rows, int cols);
  FpMatrix(Residue p, int rows, int cols, std::vector<Residue> entries);

  static FpMatrix identity(Residue p, int n);

  Residue p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Residue operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Residue& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<Residue>& entries() const { return data_; }

  bool is_zero() const;

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(Residue s) const;
  FpMatrix transpose() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  Residue p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Residue> data_;
};

struct RrefResult {
  FpMatrix form;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const FpMatrix& m);
int rank(const FpMatrix& m);

/// Basis of the null space {x : m x = 0}, one vector per free column.
std::vector<std::vector<Residue>> solve_kernel(const FpMatrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
FpMatrix inverse(const FpMatrix& m);

/// |GL_n(F_p)| = prod_{i<n} (p^n - p^i).
mpz_class gl_order(int n, std::uint64_t p);

/// Gaussian binomial [n choose k]_q by the q-Pascal recursion.
mpz_class gaussian_binomial(int n, int k, std::uint64_t q);

/// One k x n RREF basis matrix per k-dimensional subspace of F_p^n, in a
/// deterministic order (pivot pattern, then free entries lexicographically).
std::vector<FpMatrix> enumerate_subspaces(int n, int k, Residue p);

/// All invertible n x n matrices over F_p.
std::vector<FpMatrix> enumerate_gl(int n, Residue p);

}  // namespace semihall
