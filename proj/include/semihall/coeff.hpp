#pragma once

/**
 * @file coeff.hpp
 * @brief Exact arithmetic in the quadratic field Q(sqrt q).
 *
 * Every structure constant of the twisted Hall algebras lives in Q(v) with
 * v = sqrt(q): automorphism counts are integers and every twist is a power
 * of v. A value is stored as rat + surd * sqrt(q) with GMP rationals.
 *
 * A coefficient with q == 0 is a plain rational that has not been bound to
 * a field yet; it adopts the field of whatever it is combined with. Two
 * bound coefficients with different q raise ContextError.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace semihall {

class QSqrt {
 public:
  QSqrt() = default;
  QSqrt(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  QSqrt(mpq_class v) : rat_(std::move(v)) { rat_.canonicalize(); }  // NOLINT
  QSqrt(mpq_class rat, mpq_class surd, std::uint64_t q);

  /// v^n for v = sqrt(q); n may be negative.
  static QSqrt vpow(long n, std::uint64_t q);
  /// sqrt(q) itself.
  static QSqrt v(std::uint64_t q) { return vpow(1, q); }

  const mpq_class& rat_part() const { return rat_; }
  const mpq_class& surd_part() const { return surd_; }
  std::uint64_t field() const { return q_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  QSqrt inv() const;

  QSqrt& operator+=(const QSqrt& o);
  QSqrt& operator-=(const QSqrt& o);
  QSqrt& operator*=(const QSqrt& o);
  QSqrt& operator/=(const QSqrt& o) { return *this *= o.inv(); }

  friend QSqrt operator+(QSqrt a, const QSqrt& b) { return a += b; }
  friend QSqrt operator-(QSqrt a, const QSqrt& b) { return a -= b; }
  friend QSqrt operator*(QSqrt a, const QSqrt& b) { return a *= b; }
  friend QSqrt operator/(QSqrt a, const QSqrt& b) { return a /= b; }
  QSqrt operator-() const;

  friend bool operator==(const QSqrt& a, const QSqrt& b);
  friend bool operator!=(const QSqrt& a, const QSqrt& b) { return !(a == b); }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const QSqrt& c);

 private:
  void adopt(const QSqrt& o);
  void normalize();

  mpq_class rat_{0};
  mpq_class surd_{0};
  std::uint64_t q_ = 0;
};

/// Integer square root when q is a perfect square, 0 otherwise.
std::uint64_t exact_sqrt(std::uint64_t q);

nlohmann::json to_json(const QSqrt& c);
QSqrt coeff_from_json(const nlohmann::json& j, std::uint64_t q);

}  // namespace semihall
