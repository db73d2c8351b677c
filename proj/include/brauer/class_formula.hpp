#pragma once

// Closed-form description of the p-regular classes of SD_{8n}, written out
// case by case with no reference to element orders. Used as an independent
// check of the generic computation in pregular().

#include <algorithm>
#include <vector>

#include "brauer/groups.hpp"

namespace brauer {

struct ClassFormula {
  PrimeSplit split;
  long expected_count = 0;
  std::vector<std::vector<int>> classes;  // element indices, each sorted
};

/// Classes listed from the (n, p) case split. For odd exponents above l/2
/// the partner of a^{j p^t} is a^{(3l/2 - j) p^t} (the twist sends odd x to
/// 2n - x); the even families pair j with l - j.
inline ClassFormula semidihedral_class_formula(int n, int p) {
  const Group g = Group::build(Family::Semidihedral, n);
  ClassFormula f;
  f.split = split_prime(4 * n, p);
  const int l = f.split.l, pt = f.split.pt;
  auto rot = [&](long j) { return g.rotation(static_cast<int>(((j % l + l) % l) * pt)); };
  auto add = [&](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    f.classes.push_back(std::move(c));
  };

  if (p == 2) {
    f.expected_count = (l + 1) / 2;
    add({g.identity()});
    for (int j = 1; 2 * j <= l - 1; ++j) add({rot(j), rot(l - j)});
    return f;
  }

  const int N = 4 * n;
  if (n % 2 == 0) {
    f.expected_count = l / 2 + 3;
    add({g.identity()});
    add({rot(l / 2)});
    for (int j = 2; j <= l / 2 - 2; j += 2) add({rot(j), rot(l - j)});
    for (int j = 1; j <= l / 4 - 1; j += 2) add({rot(j), rot(l / 2 - j)});
    for (int j = l / 2 + 1; j <= l / 2 + l / 4 - 1; j += 2) add({rot(j), rot(3 * l / 2 - j)});
    for (int r = 0; r < 2; ++r) {
      std::vector<int> c;
      for (int i = 0; i < 2 * n; ++i) c.push_back(g.reflection((2 * i + r) % N));
      add(c);
    }
  } else {
    f.expected_count = l / 2 + 6;
    add({g.identity()});
    add({rot(l / 4)});
    add({rot(l / 2)});
    add({rot(3 * l / 4)});
    for (int j = 2; j <= l / 2 - 2; j += 2) add({rot(j), rot(l - j)});
    for (int j = 1; j <= l / 4 - 2; j += 2) add({rot(j), rot(l / 2 - j)});
    for (int j = l / 2 + 1; j <= l / 2 + l / 4 - 2; j += 2) add({rot(j), rot(3 * l / 2 - j)});
    for (int r = 0; r < 4; ++r) {
      std::vector<int> c;
      for (int i = 0; i < n; ++i) c.push_back(g.reflection((4 * i + r) % N));
      add(c);
    }
  }
  return f;
}

/// True when the generic p-regular classes coincide, as sets of sets, with
/// the closed-form list, and the count matches the stated formula.
inline bool semidihedral_classes_conform(int n, int p) {
  const Group g = Group::build(Family::Semidihedral, n);
  const ClassFormula f = semidihedral_class_formula(n, p);
  auto generic = pregular(g, p).classes;
  for (auto& c : generic) std::sort(c.begin(), c.end());
  auto listed = f.classes;
  std::sort(generic.begin(), generic.end());
  std::sort(listed.begin(), listed.end());
  return static_cast<long>(listed.size()) == f.expected_count && generic == listed;
}

}  // namespace brauer
