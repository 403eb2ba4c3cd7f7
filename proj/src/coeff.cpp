#include "semihall/coeff.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "semihall/errors.hpp"

namespace semihall {

std::uint64_t exact_sqrt(std::uint64_t q) {
  auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  for (std::uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
    if (c * c == q) return c;
  }
  return 0;
}

QSqrt::QSqrt(mpq_class rat, mpq_class surd, std::uint64_t q)
    : rat_(std::move(rat)), surd_(std::move(surd)), q_(q) {
  if (q_ == 0 && sgn(surd_) != 0) throw ContextError("surd part requires a field size q > 0");
  normalize();
}

void QSqrt::normalize() {
  rat_.canonicalize();
  surd_.canonicalize();
  if (q_ != 0 && sgn(surd_) != 0) {
    if (auto r = exact_sqrt(q_); r != 0) {
      rat_ += surd_ * mpz_class(static_cast<unsigned long>(r));
      surd_ = 0;
    }
  }
}

void QSqrt::adopt(const QSqrt& o) {
  if (o.q_ == 0) return;
  if (q_ == 0) {
    q_ = o.q_;
    return;
  }
  if (q_ != o.q_) {
    throw ContextError("coefficients from Q(sqrt " + std::to_string(q_) + ") and Q(sqrt " +
                       std::to_string(o.q_) + ") cannot be combined");
  }
}

QSqrt QSqrt::vpow(long n, std::uint64_t q) {
  if (q == 0) throw ContextError("vpow needs q > 0");
  const mpz_class qz(static_cast<unsigned long>(q));
  long half = n >= 0 ? n / 2 : -((-n + 1) / 2);  // floor(n / 2)
  bool odd = (n - 2 * half) != 0;
  mpz_class mag;
  mpz_pow_ui(mag.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(half >= 0 ? half : -half));
  mpq_class scale = half >= 0 ? mpq_class(mag) : mpq_class(mpz_class(1), mag);
  if (odd) return QSqrt(0, scale, q);
  return QSqrt(scale, 0, q);
}

QSqrt QSqrt::inv() const {
  if (is_zero()) throw std::domain_error("QSqrt: division by zero");
  if (sgn(surd_) == 0) return QSqrt(1 / rat_, 0, q_);
  // 1/(a + b r) = (a - b r) / (a^2 - b^2 q)
  mpq_class norm = rat_ * rat_ - surd_ * surd_ * mpq_class(static_cast<unsigned long>(q_));
  return QSqrt(rat_ / norm, -surd_ / norm, q_);
}

QSqrt& QSqrt::operator+=(const QSqrt& o) {
  adopt(o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o) {
  adopt(o);
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

QSqrt& QSqrt::operator*=(const QSqrt& o) {
  adopt(o);
  if (sgn(surd_) == 0 && sgn(o.surd_) == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  mpq_class a = rat_ * o.rat_ + surd_ * o.surd_ * mpq_class(static_cast<unsigned long>(q_));
  mpq_class b = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(a);
  surd_ = std::move(b);
  return *this;
}

QSqrt QSqrt::operator-() const {
  QSqrt r = *this;
  r.rat_ = -r.rat_;
  r.surd_ = -r.surd_;
  return r;
}

bool operator==(const QSqrt& a, const QSqrt& b) {
  if (a.q_ != 0 && b.q_ != 0 && a.q_ != b.q_) {
    throw ContextError("comparing coefficients from different fields");
  }
  return a.rat_ == b.rat_ && a.surd_ == b.surd_;
}

std::string QSqrt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSqrt& c) {
  if (sgn(c.surd_) == 0) return os << c.rat_.get_str();
  if (sgn(c.rat_) != 0) os << c.rat_.get_str() << (sgn(c.surd_) > 0 ? " + " : " - ");
  else if (sgn(c.surd_) < 0) os << "-";
  mpq_class mag = abs(c.surd_);
  if (mag != 1) os << mag.get_str() << "*";
  return os << "sqrt(" << c.q_ << ")";
}

nlohmann::json to_json(const QSqrt& c) {
  return nlohmann::json{{"rat", c.rat_part().get_str()}, {"surd", c.surd_part().get_str()}};
}

QSqrt coeff_from_json(const nlohmann::json& j, std::uint64_t q) {
  mpq_class rat(j.at("rat").get<std::string>());
  mpq_class surd(j.at("surd").get<std::string>());
  return QSqrt(std::move(rat), std::move(surd), q);
}

}  // namespace semihall
