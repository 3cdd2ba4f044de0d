#pragma once

// Test-only oracles, kept deliberately independent of the library code paths
// they cross-check: a brute-force reflection closure over plain std::set and
// a cofactor-expansion determinant.

#include <set>
#include <vector>

#include "lieform/rational.hpp"

namespace oracle {

// Closure of {+-alpha_i} under every simple reflection, no ordering, no
// worklist sharing with the library implementation.
inline std::set<std::vector<int>> reflection_closure(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    e[static_cast<std::size_t>(i)] = -1;
    roots.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = roots;
    for (const auto& v : snapshot) {
      for (int i = 0; i < n; ++i) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<long>(v[static_cast<std::size_t>(j)]) * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        std::vector<int> w = v;
        w[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
        if (roots.insert(w).second) grew = true;
      }
    }
  }
  return roots;
}

// Determinant by cofactor expansion along the first row.
inline lieform::Rat cofactor_det(const std::vector<std::vector<lieform::Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  lieform::Rat det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<lieform::Rat>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<lieform::Rat> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const lieform::Rat term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace oracle
