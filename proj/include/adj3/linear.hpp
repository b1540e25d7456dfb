#pragma once

// Exact linear algebra over Q: a sparse equation collector and Gaussian
// elimination, used to solve for structure data (higher brackets, adjustment
// components) at fixture-construction time.

#include <map>
#include <optional>
#include <vector>

#include "adj3/rational.hpp"

namespace adj3 {

// One linear equation sum_i coeff_i * x_i = rhs.
struct LinearEquation {
  std::map<int, Rational> coeffs;
  Rational rhs = 0;
};

class LinearSystem {
 public:
  explicit LinearSystem(int num_unknowns) : n_(num_unknowns) {}

  void add_equation(LinearEquation eq) { eqs_.push_back(std::move(eq)); }
  int unknowns() const { return n_; }
  std::size_t equations() const { return eqs_.size(); }

  // Particular solution with all free variables set to zero, or nullopt if
  // the system is inconsistent.
  std::optional<RationalVec> solve() const;

 private:
  int n_;
  std::vector<LinearEquation> eqs_;
};

}  // namespace adj3
