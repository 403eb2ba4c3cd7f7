#include "semihall/k0.hpp"

#include <cassert>
#include <cstdlib>
#include <functional>

namespace semihall {

bool K0Class::is_zero() const {
  for (int x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool K0Class::nonnegative() const {
  for (int x : v) {
    if (x < 0) return false;
  }
  return true;
}

bool K0Class::within(const K0Class& bound) const {
  assert(bound.rank() == rank());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > bound.v[i]) return false;
  }
  return true;
}

int K0Class::l1() const {
  int s = 0;
  for (int x : v) s += std::abs(x);
  return s;
}

K0Class& K0Class::operator+=(const K0Class& o) {
  assert(o.rank() == rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
  assert(o.rank() == rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}

K0Class K0Class::operator-() const {
  K0Class r = *this;
  for (int& x : r.v) x = -x;
  return r;
}

std::string K0Class::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<K0Class> classes_within(const K0Class& bound) {
  std::vector<K0Class> out;
  K0Class cur = K0Class::zero(bound.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.rank()) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= bound.v[i]; ++x) {
      cur.v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<K0Class> classes_in_ball(std::size_t rank, int radius) {
  std::vector<K0Class> out;
  K0Class cur = K0Class::zero(rank);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (int x = -left; x <= left; ++x) {
      cur.v[i] = x;
      rec(i + 1, left - std::abs(x));
    }
  };
  rec(0, radius);
  return out;
}

}  // namespace semihall
