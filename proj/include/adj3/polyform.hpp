#pragma once

// Polynomial differential forms on a coordinate chart R^n with exact
// rational coefficients, plus vector-space-valued forms and the evaluation
// of multilinear maps on them (componentwise with wedge products).

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "adj3/graded.hpp"
#include "adj3/rational.hpp"

namespace adj3 {

// One monomial x^exps dx_mask; mask bit i selects dx_i.
struct FormMono {
  std::vector<int> exps;
  std::uint32_t dxmask = 0;
  auto operator<=>(const FormMono&) const = default;
};

class PolyForm {
 public:
  PolyForm() : n_(0) {}
  explicit PolyForm(int n) : n_(n) {}

  static PolyForm scalar(int n, const Rational& c);
  static PolyForm coordinate(int n, int i);  // the function x_i
  static PolyForm dx(int n, int i);

  int chart_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormMono, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, std::uint32_t dxmask,
                const Rational& c);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) {
    a += b;
    return a;
  }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) {
    a -= b;
    return a;
  }
  friend PolyForm operator*(const Rational& c, PolyForm a) {
    a *= c;
    return a;
  }
  friend PolyForm operator-(PolyForm a) {
    a *= Rational(-1);
    return a;
  }
  bool operator==(const PolyForm& o) const { return terms_ == o.terms_; }

  // Graded-commutative wedge product (ordinary product on functions).
  friend PolyForm wedge(const PolyForm& a, const PolyForm& b);

  // Exterior derivative; exact on polynomial coefficients.
  PolyForm d() const;

  bool is_homogeneous() const;
  int form_degree() const;  // of a homogeneous nonzero form
  PolyForm degree_part(int p) const;

  // True iff the form is a constant function (rational multiple of 1).
  bool is_constant_function() const;
  // True iff it is a constant function with integer value.
  bool is_integer_constant() const;
  Rational constant_value() const;

  std::string to_string() const;

 private:
  int n_;
  std::map<FormMono, Rational> terms_;
};

// Form valued in a fixed Q^k; component i is a PolyForm.
class ValuedForm {
 public:
  ValuedForm() = default;
  ValuedForm(int value_dim, int chart_dim)
      : comps_(value_dim, PolyForm(chart_dim)), chart_dim_(chart_dim) {}

  int value_dim() const { return static_cast<int>(comps_.size()); }
  int chart_dim() const { return chart_dim_; }
  PolyForm& operator[](int i) { return comps_.at(i); }
  const PolyForm& operator[](int i) const { return comps_.at(i); }

  bool is_zero() const;
  ValuedForm& operator+=(const ValuedForm& o);
  ValuedForm& operator-=(const ValuedForm& o);
  ValuedForm& operator*=(const Rational& c);
  friend ValuedForm operator+(ValuedForm a, const ValuedForm& b) {
    a += b;
    return a;
  }
  friend ValuedForm operator-(ValuedForm a, const ValuedForm& b) {
    a -= b;
    return a;
  }
  friend ValuedForm operator*(const Rational& c, ValuedForm a) {
    a *= c;
    return a;
  }
  friend ValuedForm operator-(ValuedForm a) {
    a *= Rational(-1);
    return a;
  }
  bool operator==(const ValuedForm& o) const { return comps_ == o.comps_; }

  ValuedForm d() const;

  std::string to_string() const;

 private:
  std::vector<PolyForm> comps_;
  int chart_dim_ = 0;
};

// Evaluates a multilinear map on valued forms: the argument in slot s is
// valued in the degree-`arg_degrees[s]` component of the underlying graded
// space, the result in the degree-`out_degree` component of dimension
// `out_dim`. Components combine by wedge in slot order.
ValuedForm apply_on_forms(const MultilinearMap& m,
                          const std::vector<const ValuedForm*>& args,
                          const std::vector<int>& arg_degrees, int out_dim,
                          int out_degree, int chart_dim);

// Uniformly random polynomial form: homogeneous of the given form degree,
// polynomial coefficient degree <= poly_degree, integer coefficients in
// [-bound, bound].
PolyForm random_polyform(std::mt19937_64& rng, int n, int form_degree,
                         int poly_degree, int bound);
ValuedForm random_valued_form(std::mt19937_64& rng, int value_dim, int n,
                              int form_degree, int poly_degree, int bound);

}  // namespace adj3
