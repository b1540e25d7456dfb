#include "adj3/graded.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace adj3 {

const std::vector<std::string> GradedVectorSpace::kEmpty;

static void check_is_permutation(const std::vector<int>& perm, size_t n) {
  std::vector<bool> seen(n, false);
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  for (int v : perm) {
    if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  check_is_permutation(perm, degrees.size());
  // Selection sort back to the identity, tracking the graded swap signs.
  std::vector<int> cur = perm;
  int sign = 1;
  for (size_t pos = 0; pos < cur.size(); ++pos) {
    size_t where = pos;
    while (cur[where] != static_cast<int>(pos)) ++where;
    for (size_t q = where; q > pos; --q) {
      if ((degrees[cur[q]] % 2 != 0) && (degrees[cur[q - 1]] % 2 != 0))
        sign = -sign;
      std::swap(cur[q], cur[q - 1]);
    }
  }
  return sign;
}

int permutation_sign(const std::vector<int>& perm) {
  check_is_permutation(perm, perm.size());
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

std::vector<std::vector<int>> unshuffles(int j, int i) {
  if (j < 0 || i < 0 || j > i) throw std::invalid_argument("unshuffles: need 0 <= j <= i");
  std::vector<std::vector<int>> out;
  std::vector<int> pick(j);
  for (int k = 0; k < j; ++k) pick[k] = k;
  while (true) {
    std::vector<int> perm;
    perm.reserve(i);
    std::vector<bool> used(i, false);
    for (int v : pick) {
      perm.push_back(v);
      used[v] = true;
    }
    for (int v = 0; v < i; ++v)
      if (!used[v]) perm.push_back(v);
    out.push_back(std::move(perm));
    // next j-combination of {0..i-1} in lexicographic order
    int k = j - 1;
    while (k >= 0 && pick[k] == i - j + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int m = k + 1; m < j; ++m) pick[m] = pick[m - 1] + 1;
  }
  return out;
}

void GradedVectorSpace::add_component(int degree, std::vector<std::string> labels) {
  if (labels.empty()) return;
  auto& slot = components_[degree];
  if (!slot.empty()) throw std::invalid_argument("component already present");
  slot = std::move(labels);
}

void GradedVectorSpace::add_component(int degree, int dimension, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int k = 0; k < dimension; ++k) labels.push_back(prefix + std::to_string(k + 1));
  add_component(degree, std::move(labels));
}

int GradedVectorSpace::dim(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? 0 : static_cast<int>(it->second.size());
}

int GradedVectorSpace::total_dim() const {
  int n = 0;
  for (const auto& [d, ls] : components_) n += static_cast<int>(ls.size());
  return n;
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? kEmpty : it->second;
}

const std::string& GradedVectorSpace::label(const BasisKey& k) const {
  const auto& ls = labels(k.degree);
  if (k.index < 0 || static_cast<size_t>(k.index) >= ls.size())
    throw std::out_of_range("basis key outside space");
  return ls[k.index];
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, ls] : components_) out.push_back(d);
  return out;
}

std::vector<BasisKey> GradedVectorSpace::basis() const {
  std::vector<BasisKey> out;
  for (const auto& [d, ls] : components_)
    for (int k = 0; k < static_cast<int>(ls.size()); ++k) out.push_back({d, k});
  return out;
}

std::vector<BasisKey> GradedVectorSpace::basis_of_degree(int d) const {
  std::vector<BasisKey> out;
  for (int k = 0; k < dim(d); ++k) out.push_back({d, k});
  return out;
}

GradedVectorSpace GradedVectorSpace::shifted(int shift) const {
  GradedVectorSpace s;
  for (const auto& [d, ls] : components_) s.add_component(d - shift, ls);
  return s;
}

bool GradedVectorSpace::has(const BasisKey& k) const {
  return k.index >= 0 && k.index < dim(k.degree);
}

bool GradedElement::is_homogeneous() const {
  if (coords_.empty()) return true;
  int d = coords_.begin()->first.degree;
  for (const auto& [k, c] : coords_)
    if (k.degree != d) return false;
  return true;
}

int GradedElement::degree() const {
  if (coords_.empty()) throw std::logic_error("degree of zero element");
  if (!is_homogeneous()) throw std::logic_error("degree of inhomogeneous element");
  return coords_.begin()->first.degree;
}

Rational GradedElement::coeff(const BasisKey& k) const {
  auto it = coords_.find(k);
  return it == coords_.end() ? Rational(0) : it->second;
}

void GradedElement::set_coeff(const BasisKey& k, const Rational& c) {
  if (adj3::is_zero(c))
    coords_.erase(k);
  else
    coords_[k] = c;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [k, c] : o.coords_) set_coeff(k, coeff(k) + c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (const auto& [k, c] : o.coords_) set_coeff(k, coeff(k) - c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (adj3::is_zero(c)) {
    coords_.clear();
    return *this;
  }
  for (auto& [k, v] : coords_) v *= c;
  return *this;
}

std::string GradedElement::to_string(const GradedVectorSpace* space) const {
  if (coords_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : coords_) {
    if (!first) s += " + ";
    first = false;
    s += adj3::to_string(c) + "*";
    if (space && space->has(k))
      s += space->label(k);
    else
      s += "e(" + std::to_string(k.degree) + "," + std::to_string(k.index) + ")";
  }
  return s;
}

void MultilinearMap::set(const BasisTuple& args, const GradedElement& value) {
  set_raw(args, value, /*add=*/false);
}

void MultilinearMap::add(const BasisTuple& args, const GradedElement& value) {
  set_raw(args, value, /*add=*/true);
}

void MultilinearMap::set_raw(const BasisTuple& args, const GradedElement& value, bool add) {
  if (static_cast<int>(args.size()) != arity_)
    throw std::invalid_argument("basis tuple arity mismatch");
  int out_degree = degree_;
  for (const auto& k : args) out_degree += k.degree;
  if (!value.is_zero()) {
    if (!value.is_homogeneous() || value.degree() != out_degree)
      throw std::invalid_argument("map value violates degree homogeneity");
  }
  auto assign = [&](const BasisTuple& t, const GradedElement& v) {
    if (add) {
      GradedElement cur = value_on(t);
      cur += v;
      if (cur.is_zero())
        values_.erase(t);
      else
        values_[t] = cur;
      return;
    }
    auto it = values_.find(t);
    if (it != values_.end() && !(it->second == v))
      throw std::invalid_argument("conflicting assignment on permuted tuple");
    if (v.is_zero())
      values_.erase(t);
    else
      values_[t] = v;
  };
  if (sym_ != Symmetry::GradedAntisymmetric) {
    assign(args, value);
    return;
  }
  if (add)
    throw std::logic_error("add() is only supported for unconstrained maps");
  // Fill the permutation orbit with graded signatures. Distinct permutations
  // of a tuple with repeated keys land on the same tuple; assign() rejects
  // inconsistent orbit values, which catches ill-posed assignments exactly.
  std::vector<int> degs;
  for (const auto& k : args) degs.push_back(k.degree);
  std::vector<int> perm(args.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end());
  do {
    BasisTuple t(args.size());
    for (size_t i = 0; i < perm.size(); ++i) t[i] = args[perm[i]];
    int chi = graded_signature(perm, degs);
    GradedElement v = value;
    v *= Rational(chi);
    assign(t, v);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

GradedElement MultilinearMap::value_on(const BasisTuple& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw std::invalid_argument("basis tuple arity mismatch");
  auto it = values_.find(args);
  return it == values_.end() ? GradedElement() : it->second;
}

GradedElement MultilinearMap::apply(const std::vector<GradedElement>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw std::invalid_argument("apply: arity mismatch");
  GradedElement out;
  // Expand multilinearly over the support of every argument.
  BasisTuple tuple(args.size());
  Rational factor;
  std::function<void(size_t, const Rational&)> rec = [&](size_t slot, const Rational& acc) {
    if (slot == args.size()) {
      GradedElement v = value_on(tuple);
      v *= acc;
      out += v;
      return;
    }
    for (const auto& [k, c] : args[slot].coords()) {
      tuple[slot] = k;
      rec(slot + 1, acc * c);
    }
  };
  rec(0, Rational(1));
  return out;
}

bool MultilinearMap::antisymmetry_consistent() const {
  if (sym_ != Symmetry::GradedAntisymmetric) return true;
  for (const auto& [args, value] : values_) {
    std::vector<int> degs;
    for (const auto& k : args) degs.push_back(k.degree);
    std::vector<int> perm(args.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      BasisTuple t(args.size());
      for (size_t i = 0; i < perm.size(); ++i) t[i] = args[perm[i]];
      GradedElement expect = value;
      expect *= Rational(graded_signature(perm, degs));
      if (!(value_on(t) == expect)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

}  // namespace adj3
