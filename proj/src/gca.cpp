#include "adj3/gca.hpp"

#include <algorithm>
#include <stdexcept>

namespace adj3 {

int GeneratorSet::add(const std::string& name, int degree) {
  return add(name, degree, 0);
}

int GeneratorSet::add(const std::string& name, int form_degree, int ghost_degree) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate generator name: " + name);
  GcaGenerator g;
  g.name = name;
  g.form_degree = form_degree;
  g.ghost_degree = ghost_degree;
  g.degree = form_degree + ghost_degree;
  int id = static_cast<int>(gens_.size());
  gens_.push_back(g);
  by_name_[name] = id;
  return id;
}

int GeneratorSet::id_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::invalid_argument("unknown generator: " + name);
  return it->second;
}

// Sorts a monomial into normal form. Returns nullopt when it vanishes
// (repeated odd generator); otherwise the Koszul sign of the reordering.
static std::optional<int> normalize_monomial(const GeneratorSet& gens, Monomial& m) {
  int sign = 1;
  // insertion sort, counting graded transpositions
  for (size_t i = 1; i < m.size(); ++i) {
    size_t j = i;
    while (j > 0 && m[j - 1] > m[j]) {
      if (gens.is_odd(m[j - 1]) && gens.is_odd(m[j])) sign = -sign;
      std::swap(m[j - 1], m[j]);
      --j;
    }
  }
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && gens.is_odd(m[i])) return std::nullopt;
  return sign;
}

Rational GcaElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GcaElement::add_term(const GeneratorSet& gens, const Monomial& unsorted,
                          const Rational& c) {
  if (adj3::is_zero(c)) return;
  Monomial m = unsorted;
  auto sign = normalize_monomial(gens, m);
  if (!sign) return;
  Rational v = coeff(m) + Rational(*sign) * c;
  if (adj3::is_zero(v))
    terms_.erase(m);
  else
    terms_[m] = v;
}

GcaElement& GcaElement::operator+=(const GcaElement& o) {
  for (const auto& [m, c] : o.terms_) {
    Rational v = coeff(m) + c;
    if (adj3::is_zero(v))
      terms_.erase(m);
    else
      terms_[m] = v;
  }
  return *this;
}

GcaElement& GcaElement::operator-=(const GcaElement& o) {
  for (const auto& [m, c] : o.terms_) {
    Rational v = coeff(m) - c;
    if (adj3::is_zero(v))
      terms_.erase(m);
    else
      terms_[m] = v;
  }
  return *this;
}

GcaElement& GcaElement::operator*=(const Rational& c) {
  if (adj3::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GcaElement gca_multiply(const GeneratorSet& gens, const GcaElement& a, const GcaElement& b) {
  GcaElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(gens, m, ca * cb);
    }
  }
  return out;
}

bool GcaElement::is_homogeneous(const GeneratorSet& gens) const {
  if (terms_.empty()) return true;
  auto deg = [&](const Monomial& m) {
    int d = 0;
    for (int id : m) d += gens.degree(id);
    return d;
  };
  int d0 = deg(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (deg(m) != d0) return false;
  return true;
}

int GcaElement::degree(const GeneratorSet& gens) const {
  if (terms_.empty()) throw std::logic_error("degree of zero element");
  if (!is_homogeneous(gens)) throw std::logic_error("degree of inhomogeneous element");
  int d = 0;
  for (int id : terms_.begin()->first) d += gens.degree(id);
  return d;
}

GcaElement GcaElement::ghost_part(const GeneratorSet& gens, int j) const {
  GcaElement out;
  for (const auto& [m, c] : terms_) {
    int g = 0;
    for (int id : m) g += gens.ghost(id);
    if (g == j) out.terms_[m] = c;
  }
  return out;
}

GcaElement GcaElement::ghost_at_least(const GeneratorSet& gens, int j) const {
  GcaElement out;
  for (const auto& [m, c] : terms_) {
    int g = 0;
    for (int id : m) g += gens.ghost(id);
    if (g >= j) out.terms_[m] = c;
  }
  return out;
}

GcaElement GcaElement::killed(const std::function<bool(int)>& select) const {
  GcaElement out;
  for (const auto& [m, c] : terms_) {
    bool dead = false;
    for (int id : m)
      if (select(id)) {
        dead = true;
        break;
      }
    if (!dead) out.terms_[m] = c;
  }
  return out;
}

std::string GcaElement::to_string(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + adj3::to_string(c) + ")";
    for (int id : m) s += " " + gens.gen(id).name;
  }
  return s;
}

void Derivation::set_action(int gen_id, GcaElement value) {
  action_[gen_id] = std::move(value);
}

const GcaElement& Derivation::action(int gen_id) const {
  auto it = action_.find(gen_id);
  if (it == action_.end())
    throw std::invalid_argument("derivation undefined on generator " +
                                gens_->gen(gen_id).name);
  return it->second;
}

bool Derivation::defined_on(int gen_id) const { return action_.count(gen_id) > 0; }

GcaElement Derivation::apply(const GcaElement& a) const {
  GcaElement out;
  for (const auto& [m, c] : a.terms()) {
    // D(g_1...g_k) = sum_i (-1)^{|D| (|g_1|+...+|g_{i-1}|)} g_1..D(g_i)..g_k
    int prefix_degree = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      GcaElement term = GcaElement::scalar(c);
      if ((degree_ % 2 != 0) && (prefix_degree % 2 != 0)) term *= Rational(-1);
      Monomial prefix(m.begin(), m.begin() + i);
      Monomial suffix(m.begin() + i + 1, m.end());
      GcaElement pre;
      pre.add_term(*gens_, prefix, 1);
      GcaElement suf;
      suf.add_term(*gens_, suffix, 1);
      term = gca_multiply(*gens_, term, pre);
      term = gca_multiply(*gens_, term, action(m[i]));
      term = gca_multiply(*gens_, term, suf);
      out += term;
      prefix_degree += gens_->degree(m[i]);
    }
  }
  return out;
}

void DgcaMorphism::set_image(int gen_id, GcaElement value) {
  images_[gen_id] = std::move(value);
}

const GcaElement& DgcaMorphism::image(int gen_id) const {
  auto it = images_.find(gen_id);
  if (it == images_.end())
    throw std::invalid_argument("morphism undefined on generator " +
                                source_->gen(gen_id).name);
  return it->second;
}

GcaElement DgcaMorphism::apply(const GcaElement& a) const {
  GcaElement out;
  for (const auto& [m, c] : a.terms()) {
    GcaElement term = GcaElement::scalar(c);
    for (int id : m) term = gca_multiply(*target_, term, image(id));
    out += term;
  }
  return out;
}

DgcaMorphism DgcaMorphism::compose_after(const DgcaMorphism& first) const {
  if (first.target_ != source_)
    throw std::invalid_argument("morphism composition: algebra mismatch");
  DgcaMorphism out(first.source_, target_);
  for (const auto& [id, img] : first.images_) out.set_image(id, apply(img));
  return out;
}

VerificationReport check_derivation_squares_to_zero(const GeneratorSet& gens,
                                                    const Derivation& D,
                                                    const std::string& suite) {
  if (D.degree() % 2 == 0)
    throw std::invalid_argument("nilquadracity check requires an odd derivation");
  VerificationReport report(suite);
  for (int id = 0; id < gens.size(); ++id) {
    GcaElement r = D.apply(D.apply(GcaElement::generator(id)));
    report.record("dgca.d-squared", "(2.1)", gens.gen(id).name, r.is_zero(),
                  r.is_zero() ? "" : r.to_string(gens));
  }
  return report;
}

VerificationReport check_morphism_chain(const GeneratorSet& source_gens,
                                        const DgcaMorphism& phi,
                                        const Derivation& D_source,
                                        const Derivation& D_target,
                                        const std::string& suite) {
  VerificationReport report(suite);
  for (int id = 0; id < source_gens.size(); ++id) {
    GcaElement lhs = phi.apply(D_source.apply(GcaElement::generator(id)));
    GcaElement rhs = D_target.apply(phi.apply(GcaElement::generator(id)));
    GcaElement r = lhs - rhs;
    report.record("dgca.chain-map", "(2.14)", source_gens.gen(id).name, r.is_zero(),
                  r.is_zero() ? "" : r.to_string(*phi.target()));
  }
  return report;
}

}  // namespace adj3
