#pragma once

// Graded vector spaces over Q, homogeneous multilinear maps and the sign
// conventions they share: Koszul signs for graded permutations and the
// unshuffle enumeration used by the homotopy Jacobi checker.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adj3/rational.hpp"

namespace adj3 {

// (degree, basis index) of a homogeneous basis vector.
struct BasisKey {
  int degree = 0;
  int index = 0;
  auto operator<=>(const BasisKey&) const = default;
};

using BasisTuple = std::vector<BasisKey>;

// Koszul sign accumulated when reordering a product x_1...x_n into
// x_{perm[0]} ... x_{perm[n-1]} in a graded-commutative algebra: each
// adjacent swap of factors with degrees p, q contributes (-1)^{pq}.
// `perm` holds 0-based positions; `degrees[i]` is the degree of x_{i+1}.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// Plain signature of a permutation (0-based positions).
int permutation_sign(const std::vector<int>& perm);

// Graded signature for antisymmetric words: sgn(perm) * koszul_sign(perm).
inline int graded_signature(const std::vector<int>& perm,
                            const std::vector<int>& degrees) {
  return permutation_sign(perm) * koszul_sign(perm, degrees);
}

// All permutations sigma of {0..i-1} with sigma(0)<...<sigma(j-1) and
// sigma(j)<...<sigma(i-1), in lexicographic order of the image sequence.
// |result| = binomial(i, j).
std::vector<std::vector<int>> unshuffles(int j, int i);

class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;

  // Adds a component of the given degree with the given basis labels.
  void add_component(int degree, std::vector<std::string> labels);
  void add_component(int degree, int dimension, const std::string& prefix);

  int dim(int degree) const;
  int total_dim() const;
  const std::vector<std::string>& labels(int degree) const;
  const std::string& label(const BasisKey& k) const;
  std::vector<int> degrees() const;
  std::vector<BasisKey> basis() const;                // all components
  std::vector<BasisKey> basis_of_degree(int d) const;

  // Same components, degrees shifted by `shift` (V[i] re-grades by i).
  GradedVectorSpace shifted(int shift) const;

  bool has(const BasisKey& k) const;

 private:
  std::map<int, std::vector<std::string>> components_;
  static const std::vector<std::string> kEmpty;
};

// Element of a graded vector space; coordinates over (degree, index).
class GradedElement {
 public:
  GradedElement() = default;
  static GradedElement basis(const BasisKey& k) {
    GradedElement e;
    e.coords_[k] = 1;
    return e;
  }

  bool is_zero() const { return coords_.empty(); }
  // Homogeneous iff all support keys share one degree (zero is homogeneous).
  bool is_homogeneous() const;
  // Degree of a homogeneous nonzero element.
  int degree() const;

  Rational coeff(const BasisKey& k) const;
  void set_coeff(const BasisKey& k, const Rational& c);
  const std::map<BasisKey, Rational>& coords() const { return coords_; }

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& c);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    a += b;
    return a;
  }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    a -= b;
    return a;
  }
  friend GradedElement operator*(const Rational& c, GradedElement a) {
    a *= c;
    return a;
  }
  friend GradedElement operator-(GradedElement a) {
    a *= Rational(-1);
    return a;
  }
  bool operator==(const GradedElement& o) const { return coords_ == o.coords_; }

  std::string to_string(const GradedVectorSpace* space = nullptr) const;

 private:
  std::map<BasisKey, Rational> coords_;  // zero coefficients pruned
};

enum class Symmetry { None, GradedAntisymmetric };

// Degree-homogeneous multilinear map given by its values on basis tuples.
// Output degree = sum of input degrees + intrinsic degree; a value whose
// support violates this is rejected.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(int arity, int intrinsic_degree,
                 Symmetry sym = Symmetry::None)
      : arity_(arity), degree_(intrinsic_degree), sym_(sym) {
    if (arity < 1) throw std::invalid_argument("multilinear map arity < 1");
  }

  int arity() const { return arity_; }
  int intrinsic_degree() const { return degree_; }
  Symmetry symmetry() const { return sym_; }
  bool is_zero_map() const { return values_.empty(); }

  // Sets the value on one basis tuple. For graded-antisymmetric maps the
  // whole permutation orbit is filled with graded signatures; conflicting
  // assignments throw.
  void set(const BasisTuple& args, const GradedElement& value);
  // Adds to the value on one basis tuple (orbit-filled as in set()).
  void add(const BasisTuple& args, const GradedElement& value);

  GradedElement value_on(const BasisTuple& args) const;

  // Exact multilinear contraction.
  GradedElement apply(const std::vector<GradedElement>& args) const;

  // True iff stored coefficients satisfy the Koszul-signed antisymmetry.
  bool antisymmetry_consistent() const;

  const std::map<BasisTuple, GradedElement>& values() const { return values_; }

 private:
  void set_raw(const BasisTuple& args, const GradedElement& value, bool add);

  int arity_ = 1;
  int degree_ = 0;
  Symmetry sym_ = Symmetry::None;
  std::map<BasisTuple, GradedElement> values_;
};

}  // namespace adj3
