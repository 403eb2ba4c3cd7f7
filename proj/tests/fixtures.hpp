#pragma once

#include <stdexcept>

#include "semihall/backends.hpp"

namespace fixtures {

using semihall::ClassId;
using semihall::K0Class;

/// Named objects of the A2 quiver 1 -> 2 up to dimension vector (1,1).
struct A2Objects {
  ClassId zero, s1, s2, split, p1;

  explicit A2Objects(const semihall::HereditaryCategory& cat) {
    zero = cat.zero();
    s1 = cat.objects_of_class(K0Class({1, 0})).at(0);
    s2 = cat.objects_of_class(K0Class({0, 1})).at(0);
    const auto mids = cat.objects_of_class(K0Class({1, 1}));
    if (mids.size() != 2) throw std::logic_error("expected two classes of vector (1,1)");
    for (ClassId m : mids) {
      if (cat.representative(m).maps.at(0).is_zero()) {
        split = m;
      } else {
        p1 = m;
      }
    }
  }
};

inline K0Class uniform(std::size_t rank, int x) { return K0Class(std::vector<int>(rank, x)); }

}  // namespace fixtures
