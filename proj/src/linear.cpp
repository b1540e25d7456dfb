#include "adj3/linear.hpp"

namespace adj3 {

std::optional<RationalVec> LinearSystem::solve() const {
  const int n = n_;
  std::vector<RationalVec> rows;
  rows.reserve(eqs_.size());
  for (const auto& eq : eqs_) {
    RationalVec row(n + 1, Rational(0));
    bool trivial = true;
    for (const auto& [i, c] : eq.coeffs) {
      row.at(i) = c;
      if (!is_zero(c)) trivial = false;
    }
    row[n] = eq.rhs;
    if (trivial) {
      if (!is_zero(eq.rhs)) return std::nullopt;
      continue;
    }
    rows.push_back(std::move(row));
  }

  // forward elimination with partial pivot-by-first-nonzero
  std::vector<int> pivot_col_of_row;
  size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = Rational(1) / rows[rank][col];
    for (int j = col; j <= n; ++j) rows[rank][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      Rational f = rows[r][col];
      for (int j = col; j <= n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (!is_zero(rows[r][n])) return std::nullopt;

  RationalVec x(n, Rational(0));
  for (size_t r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = rows[r][n];
  return x;
}

}  // namespace adj3
