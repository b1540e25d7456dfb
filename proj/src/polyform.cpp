#include "adj3/polyform.hpp"

#include <bit>
#include <stdexcept>

namespace adj3 {

PolyForm PolyForm::scalar(int n, const Rational& c) {
  PolyForm f(n);
  f.add_term(std::vector<int>(n, 0), 0, c);
  return f;
}

PolyForm PolyForm::coordinate(int n, int i) {
  PolyForm f(n);
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  f.add_term(e, 0, 1);
  return f;
}

PolyForm PolyForm::dx(int n, int i) {
  PolyForm f(n);
  if (i < 0 || i >= n) throw std::out_of_range("dx index");
  f.add_term(std::vector<int>(n, 0), 1u << i, 1);
  return f;
}

void PolyForm::add_term(const std::vector<int>& exps, std::uint32_t dxmask,
                        const Rational& c) {
  if (static_cast<int>(exps.size()) != n_)
    throw std::invalid_argument("exponent vector dimension mismatch");
  if (adj3::is_zero(c)) return;
  FormMono m{exps, dxmask};
  auto it = terms_.find(m);
  Rational v = (it == terms_.end() ? Rational(0) : it->second) + c;
  if (adj3::is_zero(v))
    terms_.erase(m);
  else
    terms_[m] = v;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (n_ != o.n_) {
    if (is_zero() && terms_.empty()) n_ = o.n_;
    else if (!o.is_zero()) throw std::invalid_argument("chart dimension mismatch");
  }
  for (const auto& [m, c] : o.terms_) add_term(m.exps, m.dxmask, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  PolyForm neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (adj3::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

// Sign of dx_A ^ dx_B for disjoint masks: (-1)^{# pairs (a in A, b in B), a > b}.
static int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (int j = 0; j < 32; ++j) {
    if (b & (1u << j)) {
      std::uint32_t higher = a >> (j + 1);
      inversions += std::popcount(higher);
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.n_ != b.n_) throw std::invalid_argument("chart dimension mismatch");
  PolyForm out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.dxmask & mb.dxmask) continue;
      std::vector<int> e(a.n_);
      for (int i = 0; i < a.n_; ++i) e[i] = ma.exps[i] + mb.exps[i];
      int s = merge_sign(ma.dxmask, mb.dxmask);
      out.add_term(e, ma.dxmask | mb.dxmask, Rational(s) * ca * cb);
    }
  }
  return out;
}

PolyForm PolyForm::d() const {
  PolyForm out(n_);
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      if (m.exps[i] == 0) continue;
      if (m.dxmask & (1u << i)) continue;
      std::vector<int> e = m.exps;
      Rational coeff = c * Rational(e[i]);
      e[i] -= 1;
      // sign of dx_i ^ dx_mask = (-1)^{# mask bits below i}
      std::uint32_t below = m.dxmask & ((1u << i) - 1);
      if (std::popcount(below) % 2 != 0) coeff = -coeff;
      out.add_term(e, m.dxmask | (1u << i), coeff);
    }
  }
  return out;
}

bool PolyForm::is_homogeneous() const {
  if (terms_.empty()) return true;
  int p = std::popcount(terms_.begin()->first.dxmask);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m.dxmask) != p) return false;
  return true;
}

int PolyForm::form_degree() const {
  if (terms_.empty()) throw std::logic_error("form degree of zero form");
  if (!is_homogeneous()) throw std::logic_error("form degree of mixed form");
  return std::popcount(terms_.begin()->first.dxmask);
}

PolyForm PolyForm::degree_part(int p) const {
  PolyForm out(n_);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m.dxmask) == static_cast<unsigned>(p)) out.add_term(m.exps, m.dxmask, c);
  return out;
}

bool PolyForm::is_constant_function() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  if (m.dxmask != 0) return false;
  for (int e : m.exps)
    if (e != 0) return false;
  return true;
}

bool PolyForm::is_integer_constant() const {
  if (!is_constant_function()) return false;
  return terms_.empty() || terms_.begin()->second.get_den() == 1;
}

Rational PolyForm::constant_value() const {
  if (!is_constant_function()) throw std::logic_error("not a constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + adj3::to_string(c) + ")";
    for (int i = 0; i < n_; ++i) {
      if (m.exps[i] > 0) {
        s += " x" + std::to_string(i + 1);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
      }
    }
    for (int i = 0; i < n_; ++i)
      if (m.dxmask & (1u << i)) s += " dx" + std::to_string(i + 1);
  }
  return s;
}

bool ValuedForm::is_zero() const {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

ValuedForm& ValuedForm::operator+=(const ValuedForm& o) {
  if (comps_.empty()) {
    *this = o;
    return *this;
  }
  if (o.comps_.empty()) return *this;
  if (value_dim() != o.value_dim()) throw std::invalid_argument("value dimension mismatch");
  for (int i = 0; i < value_dim(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

ValuedForm& ValuedForm::operator-=(const ValuedForm& o) {
  ValuedForm neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

ValuedForm& ValuedForm::operator*=(const Rational& c) {
  for (auto& f : comps_) f *= c;
  return *this;
}

ValuedForm ValuedForm::d() const {
  ValuedForm out = *this;
  for (auto& f : out.comps_) f = f.d();
  return out;
}

std::string ValuedForm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < value_dim(); ++i) {
    if (i) s += "; ";
    s += comps_[i].to_string();
  }
  return s + "]";
}

ValuedForm apply_on_forms(const MultilinearMap& m,
                          const std::vector<const ValuedForm*>& args,
                          const std::vector<int>& arg_degrees, int out_dim,
                          int out_degree, int chart_dim) {
  if (static_cast<int>(args.size()) != m.arity() || args.size() != arg_degrees.size())
    throw std::invalid_argument("apply_on_forms: arity mismatch");
  ValuedForm out(out_dim, chart_dim);
  // Iterate over the stored basis tuples instead of all index combinations.
  for (const auto& [tuple, value] : m.values()) {
    bool relevant = true;
    for (size_t s = 0; s < tuple.size(); ++s)
      if (tuple[s].degree != arg_degrees[s]) {
        relevant = false;
        break;
      }
    if (!relevant) continue;
    PolyForm w = PolyForm::scalar(chart_dim, 1);
    bool zero = false;
    for (size_t s = 0; s < tuple.size(); ++s) {
      const PolyForm& comp = (*args[s])[tuple[s].index];
      if (comp.is_zero()) {
        zero = true;
        break;
      }
      w = wedge(w, comp);
      if (w.is_zero()) {
        zero = true;
        break;
      }
    }
    if (zero) continue;
    for (const auto& [key, coeff] : value.coords()) {
      if (key.degree != out_degree)
        throw std::logic_error("apply_on_forms: output degree mismatch");
      out[key.index] += coeff * w;
    }
  }
  return out;
}

PolyForm random_polyform(std::mt19937_64& rng, int n, int form_degree,
                         int poly_degree, int bound) {
  PolyForm out(n);
  // enumerate dx subsets of the requested size
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != form_degree) continue;
    // a couple of random monomials per dx subset
    for (int t = 0; t < 2; ++t) {
      std::vector<int> e(n, 0);
      int total = static_cast<int>(rng() % (poly_degree + 1));
      for (int k = 0; k < total; ++k) e[rng() % n] += 1;
      long c = static_cast<long>(rng() % (2 * bound + 1)) - bound;
      out.add_term(e, mask, Rational(c));
    }
  }
  return out;
}

ValuedForm random_valued_form(std::mt19937_64& rng, int value_dim, int n,
                              int form_degree, int poly_degree, int bound) {
  ValuedForm out(value_dim, n);
  for (int i = 0; i < value_dim; ++i)
    out[i] = random_polyform(rng, n, form_degree, poly_degree, bound);
  return out;
}

}  // namespace adj3
