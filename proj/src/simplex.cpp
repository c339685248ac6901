#include <hyperfactor/simplex.hpp>

#include <cstddef>

namespace hyperfactor::detail {

PhaseOneResult phase_one(const std::vector<std::vector<Integer>>& columns,
                         const std::vector<Integer>& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  const std::size_t width = cols + rows;  // structural + artificial
  const std::size_t rhs_col = width;

  std::vector<std::vector<Rational>> t(rows,
                                       std::vector<Rational>(width + 1));
  std::vector<Rational> obj(width + 1);
  std::vector<std::size_t> basis(rows);

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = columns[j][i];
    t[i][cols + i] = 1;
    t[i][rhs_col] = rhs[i];
    basis[i] = cols + i;
  }
  // Reduced costs for minimising the sum of artificials.
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) obj[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < rows; ++i) obj[rhs_col] -= t[i][rhs_col];

  while (true) {
    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs_col] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below, so some row always qualifies.

    std::vector<Rational>& prow = t[leave];
    const Rational pivot = prow[enter];
    for (std::size_t j = 0; j <= width; ++j) {
      if (sgn(prow[j]) != 0) prow[j] /= pivot;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[enter]) == 0) return;
      const Rational factor = row[enter];
      for (std::size_t j = 0; j <= width; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != leave) eliminate(t[i]);
    }
    eliminate(obj);
    basis[leave] = enter;
  }

  PhaseOneResult result;
  result.feasible = sgn(obj[rhs_col]) == 0;
  result.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) result.x[basis[i]] = t[i][rhs_col];
  }
  result.dual.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) result.dual[i] = 1 - obj[cols + i];
  return result;
}

}  // namespace hyperfactor::detail
