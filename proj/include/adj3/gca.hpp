#pragma once

// Free graded-commutative polynomial algebras on named graded generators,
// graded derivations and dgca morphisms. Elements are kept in a canonical
// normal form: monomials sorted by generator declaration order with Koszul
// signs applied, odd generators never repeated, zero coefficients pruned.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adj3/rational.hpp"
#include "adj3/report.hpp"

namespace adj3 {

struct GcaGenerator {
  std::string name;
  int degree = 0;      // total degree; controls all commutation signs
  int form_degree = 0;   // optional bigrading: degree = form + ghost
  int ghost_degree = 0;
};

class GeneratorSet {
 public:
  // Returns the id of the new generator. Total order = declaration order.
  int add(const std::string& name, int degree);
  int add(const std::string& name, int form_degree, int ghost_degree);

  int size() const { return static_cast<int>(gens_.size()); }
  const GcaGenerator& gen(int id) const { return gens_.at(id); }
  int degree(int id) const { return gens_.at(id).degree; }
  int ghost(int id) const { return gens_.at(id).ghost_degree; }
  bool is_odd(int id) const { return degree(id) % 2 != 0; }
  int id_of(const std::string& name) const;  // throws if absent

 private:
  std::vector<GcaGenerator> gens_;
  std::map<std::string, int> by_name_;
};

// Sorted list of generator ids (even generators may repeat).
using Monomial = std::vector<int>;

class GcaElement {
 public:
  GcaElement() = default;
  static GcaElement one() {
    GcaElement e;
    e.terms_[Monomial{}] = 1;
    return e;
  }
  static GcaElement scalar(const Rational& c) {
    GcaElement e;
    if (!adj3::is_zero(c)) e.terms_[Monomial{}] = c;
    return e;
  }
  static GcaElement generator(int id) {
    GcaElement e;
    e.terms_[Monomial{id}] = 1;
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  void add_term(const GeneratorSet& gens, const Monomial& unsorted,
                const Rational& c);

  GcaElement& operator+=(const GcaElement& o);
  GcaElement& operator-=(const GcaElement& o);
  GcaElement& operator*=(const Rational& c);
  friend GcaElement operator+(GcaElement a, const GcaElement& b) {
    a += b;
    return a;
  }
  friend GcaElement operator-(GcaElement a, const GcaElement& b) {
    a -= b;
    return a;
  }
  friend GcaElement operator*(const Rational& c, GcaElement a) {
    a *= c;
    return a;
  }
  friend GcaElement operator-(GcaElement a) {
    a *= Rational(-1);
    return a;
  }
  bool operator==(const GcaElement& o) const { return terms_ == o.terms_; }

  bool is_homogeneous(const GeneratorSet& gens) const;
  // Degree of a homogeneous nonzero element.
  int degree(const GeneratorSet& gens) const;

  // Sum of the terms whose ghost degree equals (resp. is at least) j.
  GcaElement ghost_part(const GeneratorSet& gens, int j) const;
  GcaElement ghost_at_least(const GeneratorSet& gens, int j) const;

  // Substitutes zero for every generator selected by the predicate.
  GcaElement killed(const std::function<bool(int)>& select) const;

  std::string to_string(const GeneratorSet& gens) const;

 private:
  friend GcaElement gca_multiply(const GeneratorSet&, const GcaElement&,
                                 const GcaElement&);
  std::map<Monomial, Rational> terms_;
};

// Normal-form product. Both factors must live over the same generator set.
GcaElement gca_multiply(const GeneratorSet& gens, const GcaElement& a,
                        const GcaElement& b);

// Graded derivation, defined by its action on every generator and extended
// by the graded Leibniz rule D(ab) = (Da)b + (-1)^{|D||a|} a(Db).
class Derivation {
 public:
  Derivation(const GeneratorSet* gens, int degree)
      : gens_(gens), degree_(degree) {}

  int degree() const { return degree_; }
  void set_action(int gen_id, GcaElement value);
  const GcaElement& action(int gen_id) const;
  bool defined_on(int gen_id) const;

  GcaElement apply(const GcaElement& a) const;

 private:
  const GeneratorSet* gens_;
  int degree_;
  std::map<int, GcaElement> action_;
};

// Degree-0 algebra morphism defined by generator images (which may live in a
// different generator set); extended multiplicatively.
class DgcaMorphism {
 public:
  DgcaMorphism(const GeneratorSet* source, const GeneratorSet* target)
      : source_(source), target_(target) {}

  void set_image(int gen_id, GcaElement value);
  const GcaElement& image(int gen_id) const;
  GcaElement apply(const GcaElement& a) const;

  // this-after-first: returns x -> this(first(x)).
  DgcaMorphism compose_after(const DgcaMorphism& first) const;

  const GeneratorSet* source() const { return source_; }
  const GeneratorSet* target() const { return target_; }

 private:
  const GeneratorSet* source_;
  const GeneratorSet* target_;
  std::map<int, GcaElement> images_;
};

// D(D(g)) for every generator; failures carry the exact residue.
VerificationReport check_derivation_squares_to_zero(const GeneratorSet& gens,
                                                    const Derivation& D,
                                                    const std::string& suite = "d-squared");

// phi(D_source(g)) - D_target(phi(g)) for every generator of the source.
VerificationReport check_morphism_chain(const GeneratorSet& source_gens,
                                        const DgcaMorphism& phi,
                                        const Derivation& D_source,
                                        const Derivation& D_target,
                                        const std::string& suite = "chain-map");

}  // namespace adj3
