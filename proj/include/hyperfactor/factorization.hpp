#pragma once

#include <hyperfactor/combinatorics.hpp>

#include <vector>

namespace hyperfactor {

/// One 1-factor: a partition of [n] into sets with sizes in L.
using Factor = std::vector<Subset>;

struct Factorization {
  int n = 0;
  LevelSet levels;
  std::vector<Factor> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Orders the sets of a factor by minimum element (the file-format order).
void canonicalize_factor(Factor& factor);

}  // namespace hyperfactor
