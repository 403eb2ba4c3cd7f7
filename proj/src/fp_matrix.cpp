#include "semihall/fp_matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace semihall {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue inv_mod(Residue a, Residue p) {
  // extended Euclid; p is prime and a != 0 mod p
  long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  if (new_r == 0) throw std::domain_error("inv_mod: zero has no inverse");
  while (new_r != 0) {
    long quot = r / new_r;
    long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return static_cast<Residue>(((t % p) + p) % p);
}

FpMatrix::FpMatrix(Residue p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

FpMatrix::FpMatrix(Residue p, int rows, int cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("FpMatrix: entry count does not match shape");
  }
  for (auto& e : data_) e = ((e % p_) + p_) % p_;
}

FpMatrix FpMatrix::identity(Residue p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const {
  for (auto e : data_) {
    if (e != 0) return false;
  }
  return true;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  assert(cols_ == o.rows_);
  FpMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      Residue a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r(i, j) = static_cast<Residue>((r(i, j) + static_cast<long>(a) * o(k, j)) % p_);
      }
    }
  }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  FpMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  FpMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] - o.data_[i] + p_) % p_;
  return r;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix r = *this;
  for (auto& e : r.data_) e = static_cast<Residue>((static_cast<long>(e) * s) % p_);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

RrefResult rref(const FpMatrix& m) {
  RrefResult out{m, 0, {}};
  FpMatrix& a = out.form;
  const Residue p = a.p();
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    Residue s = inv_mod(a(row, col), p);
    for (int c = 0; c < a.cols(); ++c) a(row, c) = static_cast<Residue>((static_cast<long>(a(row, c)) * s) % p);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      long f = a(r, col);
      for (int c = 0; c < a.cols(); ++c) {
        a(r, c) = static_cast<Residue>(((a(r, c) - f * a(row, c)) % p + p) % p);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int rank(const FpMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Residue>> solve_kernel(const FpMatrix& m) {
  auto red = rref(m);
  const Residue p = m.p();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : red.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Residue>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Residue> v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < red.rank; ++r) {
      v[static_cast<std::size_t>(red.pivots[static_cast<std::size_t>(r)])] = (p - red.form(r, free)) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix is not square");
  const int n = m.rows();
  FpMatrix aug(m.p(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[static_cast<std::size_t>(n - 1)] != n - 1)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  FpMatrix inv(m.p(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv(i, j) = red.form(i, n + j);
  }
  return inv;
}

mpz_class gl_order(int n, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class pn;
  mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class out = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    out *= pn - pi;
    pi *= pz;
  }
  return out;
}

mpz_class gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  // row-by-row q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<mpz_class> row(static_cast<std::size_t>(n + 1), 0);
  row[0] = 1;
  mpz_class qz(static_cast<unsigned long>(q));
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      mpz_class qj;
      mpz_pow_ui(qj.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(j));
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + qj * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

void for_each_combination(int n, int k, std::vector<int>& cur, int start,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    for_each_combination(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FpMatrix> enumerate_subspaces(int n, int k, Residue p) {
  std::vector<FpMatrix> out;
  if (k < 0 || k > n) return out;
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> cur;
  for_each_combination(n, k, cur, 0, pivot_sets);
  for (const auto& pivots : pivot_sets) {
    // free slots: (row r, column c) with c > pivots[r] and c not a pivot column
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) slots.emplace_back(r, c);
      }
    }
    std::vector<Residue> digits(slots.size(), 0);
    while (true) {
      FpMatrix m(p, k, n);
      for (int r = 0; r < k; ++r) m(r, pivots[static_cast<std::size_t>(r)]) = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = digits[s];
      out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return out;
}

std::vector<FpMatrix> enumerate_gl(int n, Residue p) {
  std::vector<FpMatrix> out;
  const int entries = n * n;
  std::vector<Residue> digits(static_cast<std::size_t>(entries), 0);
  while (true) {
    FpMatrix m(p, n, n, digits);
    if (rank(m) == n) out.push_back(m);
    int i = 0;
    while (i < entries && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i++)] = 0;
    if (i == entries) break;
  }
  return out;
}

}  // namespace semihall
