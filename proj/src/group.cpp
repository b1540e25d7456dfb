#include "adj3/group.hpp"

#include <stdexcept>

namespace adj3 {

AddElt add_identity(const AddShape& s) {
  AddElt e;
  e.lat.assign(s.lat, Int(0));
  e.vec.assign(s.vec, PolyForm(s.chart));
  e.tor.assign(s.tor, PolyForm(s.chart));
  return e;
}

AddElt add_mul(const AddElt& a, const AddElt& b) {
  if (a.lat.size() != b.lat.size() || a.vec.size() != b.vec.size() ||
      a.tor.size() != b.tor.size())
    throw std::invalid_argument("additive group shape mismatch");
  AddElt e = a;
  for (size_t i = 0; i < e.lat.size(); ++i) e.lat[i] += b.lat[i];
  for (size_t i = 0; i < e.vec.size(); ++i) e.vec[i] += b.vec[i];
  for (size_t i = 0; i < e.tor.size(); ++i) e.tor[i] += b.tor[i];
  return e;
}

AddElt add_inv(const AddElt& a) {
  AddElt e = a;
  for (auto& v : e.lat) v = -v;
  for (auto& v : e.vec) v *= Rational(-1);
  for (auto& v : e.tor) v *= Rational(-1);
  return e;
}

bool add_eq(const AddElt& a, const AddElt& b) {
  if (a.lat != b.lat) return false;
  if (a.vec.size() != b.vec.size() || a.tor.size() != b.tor.size()) return false;
  for (size_t i = 0; i < a.vec.size(); ++i)
    if (!(a.vec[i] == b.vec[i])) return false;
  for (size_t i = 0; i < a.tor.size(); ++i) {
    PolyForm diff = a.tor[i] - b.tor[i];
    if (!diff.is_integer_constant()) return false;
  }
  return true;
}

std::string add_to_string(const AddElt& a) {
  std::string s = "(lat:";
  for (const auto& v : a.lat) s += " " + v.get_str();
  s += "; vec:";
  for (const auto& v : a.vec) s += " " + v.to_string();
  s += "; tor:";
  for (const auto& v : a.tor) s += " " + v.to_string();
  return s + ")";
}

AddElt add_const(const AddShape& s, const std::vector<Int>& lat,
                 const RationalVec& vec, const RationalVec& tor) {
  AddElt e = add_identity(s);
  if (static_cast<int>(lat.size()) != s.lat || static_cast<int>(vec.size()) != s.vec ||
      static_cast<int>(tor.size()) != s.tor)
    throw std::invalid_argument("additive constant shape mismatch");
  e.lat = lat;
  for (int i = 0; i < s.vec; ++i) e.vec[i] = PolyForm::scalar(s.chart, vec[i]);
  for (int i = 0; i < s.tor; ++i) e.tor[i] = PolyForm::scalar(s.chart, tor[i]);
  return e;
}

MatElt mat_identity(int n) {
  MatElt m(n, RationalVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatElt mat_mul(const MatElt& a, const MatElt& b) {
  size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix size mismatch");
  MatElt c(n, RationalVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (is_zero(a[i][k])) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

MatElt mat_inv(const MatElt& a) {
  size_t n = a.size();
  MatElt m = a;
  MatElt inv = mat_identity(static_cast<int>(n));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = Rational(1) / m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Rational g = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

bool mat_eq(const MatElt& a, const MatElt& b) { return a == b; }

std::string mat_to_string(const MatElt& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += "; ";
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (j) s += ",";
      s += to_string(a[i][j]);
    }
  }
  return s + "]";
}

RationalVec mat_apply(const MatElt& a, const RationalVec& v) {
  RationalVec out(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

bool FiniteTable::valid() const {
  size_t n = mul.size();
  if (inv.size() != n) return false;
  for (size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n) return false;
    if (mul[0][i] != static_cast<int>(i) || mul[i][0] != static_cast<int>(i)) return false;
    if (mul[i][inv[i]] != 0) return false;
  }
  return true;
}

std::string grp_to_string(const GrpElt& e) {
  if (std::holds_alternative<AddElt>(e)) return add_to_string(std::get<AddElt>(e));
  if (std::holds_alternative<MatElt>(e)) return mat_to_string(std::get<MatElt>(e));
  return "g" + std::to_string(std::get<FinElt>(e).index);
}

}  // namespace adj3
