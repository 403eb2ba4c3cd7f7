#pragma once

#include <compare>
#include <string>
#include <vector>

namespace semihall {

/// Element of a Grothendieck group Z^n, stored as an integer vector.
struct K0Class {
  std::vector<int> v;

  K0Class() = default;
  explicit K0Class(std::vector<int> c) : v(std::move(c)) {}
  static K0Class zero(std::size_t rank) { return K0Class(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return v.size(); }
  bool is_zero() const;
  bool nonnegative() const;
  /// Componentwise <=.
  bool within(const K0Class& bound) const;
  /// Sum of the absolute values of the components.
  int l1() const;

  K0Class& operator+=(const K0Class& o);
  K0Class& operator-=(const K0Class& o);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  K0Class operator-() const;

  friend bool operator==(const K0Class&, const K0Class&) = default;
  friend auto operator<=>(const K0Class&, const K0Class&) = default;

  std::string to_string() const;
};

/// Every nonnegative class componentwise <= bound, in lexicographic order.
std::vector<K0Class> classes_within(const K0Class& bound);

/// Every class with entries in [-radius, radius] and l1 norm <= radius.
std::vector<K0Class> classes_in_ball(std::size_t rank, int radius);

}  // namespace semihall
