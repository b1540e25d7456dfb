#include "adj3/crossed.hpp"

#include <random>
#include <stdexcept>

namespace adj3 {

RationalVec vzero(int n) { return RationalVec(n, Rational(0)); }

RationalVec vadd(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RationalVec out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RationalVec vsub(const RationalVec& a, const RationalVec& b) {
  return vadd(a, vneg(b));
}

RationalVec vneg(const RationalVec& a) {
  RationalVec out = a;
  for (auto& v : out) v = -v;
  return out;
}

RationalVec vscale(const Rational& c, const RationalVec& a) {
  RationalVec out = a;
  for (auto& v : out) v *= c;
  return out;
}

bool vis_zero(const RationalVec& a) {
  for (const auto& v : a)
    if (!is_zero(v)) return false;
  return true;
}

std::string vec_to_string(const RationalVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += to_string(a[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// tensor maps

RationalVec LinMap::apply(const RationalVec& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("LinMap arity");
  RationalVec out(rows, Rational(0));
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < cols; ++j)
      if (!adj3::is_zero(at(r, j))) out[r] += at(r, j) * v[j];
  return out;
}

std::vector<PolyForm> LinMap::apply(const std::vector<PolyForm>& v, int chart) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("LinMap arity");
  std::vector<PolyForm> out(rows, PolyForm(chart));
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < cols; ++j)
      if (!adj3::is_zero(at(r, j))) out[r] += at(r, j) * v[j];
  return out;
}

bool LinMap::is_zero() const {
  for (const auto& v : c)
    if (!adj3::is_zero(v)) return false;
  return true;
}

RationalVec BilinMap::apply(const RationalVec& a, const RationalVec& b) const {
  if (static_cast<int>(a.size()) != da || static_cast<int>(b.size()) != db)
    throw std::invalid_argument("BilinMap arity");
  RationalVec out(dout, Rational(0));
  for (int i = 0; i < da; ++i) {
    if (adj3::is_zero(a[i])) continue;
    for (int j = 0; j < db; ++j) {
      if (adj3::is_zero(b[j])) continue;
      for (int k = 0; k < dout; ++k)
        if (!adj3::is_zero(at(i, j, k))) out[k] += at(i, j, k) * a[i] * b[j];
    }
  }
  return out;
}

std::vector<PolyForm> BilinMap::apply(const std::vector<PolyForm>& a,
                                      const std::vector<PolyForm>& b, int chart) const {
  if (static_cast<int>(a.size()) != da || static_cast<int>(b.size()) != db)
    throw std::invalid_argument("BilinMap arity");
  std::vector<PolyForm> out(dout, PolyForm(chart));
  for (int i = 0; i < da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < db; ++j) {
      if (b[j].is_zero()) continue;
      PolyForm prod = wedge(a[i], b[j]);
      if (prod.is_zero()) continue;
      for (int k = 0; k < dout; ++k)
        if (!adj3::is_zero(at(i, j, k))) out[k] += at(i, j, k) * prod;
    }
  }
  return out;
}

bool BilinMap::is_zero() const {
  for (const auto& v : c)
    if (!adj3::is_zero(v)) return false;
  return true;
}

RationalVec TrilinMap::apply(const RationalVec& a, const RationalVec& b,
                             const RationalVec& x) const {
  RationalVec out(dout, Rational(0));
  for (int i = 0; i < da; ++i) {
    if (adj3::is_zero(a[i])) continue;
    for (int j = 0; j < db; ++j) {
      if (adj3::is_zero(b[j])) continue;
      for (int k = 0; k < dc; ++k) {
        if (adj3::is_zero(x[k])) continue;
        for (int m = 0; m < dout; ++m)
          if (!adj3::is_zero(at(i, j, k, m))) out[m] += at(i, j, k, m) * a[i] * b[j] * x[k];
      }
    }
  }
  return out;
}

std::vector<PolyForm> TrilinMap::apply(const std::vector<PolyForm>& a,
                                       const std::vector<PolyForm>& b,
                                       const std::vector<PolyForm>& x, int chart) const {
  std::vector<PolyForm> out(dout, PolyForm(chart));
  for (int i = 0; i < da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < db; ++j) {
      if (b[j].is_zero()) continue;
      PolyForm ab = wedge(a[i], b[j]);
      if (ab.is_zero()) continue;
      for (int k = 0; k < dc; ++k) {
        if (x[k].is_zero()) continue;
        PolyForm abx = wedge(ab, x[k]);
        if (abx.is_zero()) continue;
        for (int m = 0; m < dout; ++m)
          if (!adj3::is_zero(at(i, j, k, m))) out[m] += at(i, j, k, m) * abx;
      }
    }
  }
  return out;
}

bool TrilinMap::is_zero() const {
  for (const auto& v : c)
    if (!adj3::is_zero(v)) return false;
  return true;
}

std::vector<PolyForm> add_coords(const AddShape& s, const AddElt& e) {
  std::vector<PolyForm> out;
  out.reserve(s.lat + s.vec + s.tor);
  for (int i = 0; i < s.lat; ++i)
    out.push_back(PolyForm::scalar(s.chart, Rational(e.lat[i])));
  for (int i = 0; i < s.vec; ++i) out.push_back(e.vec[i]);
  for (int i = 0; i < s.tor; ++i) out.push_back(e.tor[i]);
  return out;
}

int add_alg_dim(const AddShape& s) { return s.vec + s.tor; }

// ---------------------------------------------------------------------------
// additive wrapper

namespace {

RationalVec const_coords(const AddShape& s, const AddElt& e) {
  RationalVec out;
  out.reserve(s.lat + s.vec + s.tor);
  for (int i = 0; i < s.lat; ++i) out.push_back(Rational(e.lat[i]));
  for (int i = 0; i < s.vec; ++i) out.push_back(e.vec[i].constant_value());
  for (int i = 0; i < s.tor; ++i) out.push_back(e.tor[i].constant_value());
  return out;
}

// algebra vector -> group coordinates [0_lat, vec, tor]
RationalVec alg_as_coords(const AddShape& s, const RationalVec& y) {
  RationalVec out(s.lat, Rational(0));
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

RationalVec lat_coords(const AddShape& s, const AddElt& e) {
  RationalVec out;
  for (int i = 0; i < s.lat; ++i) out.push_back(Rational(e.lat[i]));
  return out;
}

AddElt from_coords_shift(const AddShape& s, const AddElt& base, const RationalVec& alg_shift) {
  AddElt out = base;
  for (int i = 0; i < s.vec; ++i)
    out.vec[i] += PolyForm::scalar(s.chart, alg_shift[i]);
  for (int i = 0; i < s.tor; ++i)
    out.tor[i] += PolyForm::scalar(s.chart, alg_shift[s.vec + i]);
  return out;
}

AddElt elt_from_coords(const AddShape& s, const RationalVec& coords) {
  AddElt out = add_identity(s);
  for (int i = 0; i < s.lat; ++i) {
    if (coords[i].get_den() != 1)
      throw std::invalid_argument("lattice coordinate must be an integer");
    out.lat[i] = coords[i].get_num();
  }
  for (int i = 0; i < s.vec; ++i)
    out.vec[i] = PolyForm::scalar(s.chart, coords[s.lat + i]);
  for (int i = 0; i < s.tor; ++i)
    out.tor[i] = PolyForm::scalar(s.chart, coords[s.lat + s.vec + i]);
  return out;
}

std::vector<GrpElt> additive_sample(const AddShape& s, const SamplePlan& plan) {
  std::vector<GrpElt> out;
  auto push = [&](const AddElt& e) { out.push_back(e); };
  push(add_identity(s));
  int w = plan.lattice_window;
  for (int i = 0; i < s.lat; ++i) {
    for (int v : {1, -1, w, -w}) {
      AddElt e = add_identity(s);
      e.lat[i] = v;
      push(e);
      if (v == w && w == 1) break;
    }
  }
  if (s.lat >= 2) {
    AddElt e = add_identity(s);
    e.lat[0] = 1;
    e.lat[1] = -1;
    push(e);
  }
  std::vector<Rational> vals = {rat(1), rat(-1, 2)};
  if (plan.max_denominator >= 3) vals.push_back(rat(2, 3));
  if (plan.max_denominator >= 4) vals.push_back(rat(-3, 4));
  for (int i = 0; i < s.vec; ++i)
    for (const auto& v : vals) {
      AddElt e = add_identity(s);
      e.vec[i] = PolyForm::scalar(s.chart, v);
      push(e);
    }
  for (int i = 0; i < s.tor; ++i)
    for (const auto& v : vals) {
      AddElt e = add_identity(s);
      e.tor[i] = PolyForm::scalar(s.chart, v);
      push(e);
    }
  // one mixed element
  if (s.lat > 0 && s.vec > 0) {
    AddElt e = add_identity(s);
    e.lat[0] = 1;
    e.vec[s.vec - 1] = PolyForm::scalar(s.chart, rat(1, 2));
    push(e);
  }
  return out;
}

std::vector<RationalVec> alg_sample(int dim) {
  std::vector<RationalVec> out;
  out.push_back(vzero(dim));
  for (int i = 0; i < dim; ++i) {
    RationalVec e = vzero(dim);
    e[i] = 1;
    out.push_back(e);
  }
  if (dim >= 2) {
    RationalVec e = vzero(dim);
    e[0] = rat(1, 2);
    e[1] = rat(-2, 3);
    out.push_back(e);
  }
  return out;
}

const AddElt& as_add(const GrpElt& e) { return std::get<AddElt>(e); }

}  // namespace

TwoCrossedModule wrap_additive(const AdditiveTwoXM& data, const SamplePlan& plan,
                               const std::string& name) {
  TwoCrossedModule X;
  X.name = name;
  X.additive = data;
  const AddShape L = data.L, H = data.H, G = data.G;
  auto ops = [](const AddShape& s) {
    GroupOps o;
    o.id = [s]() { return GrpElt(add_identity(s)); };
    o.mul = [](const GrpElt& a, const GrpElt& b) {
      return GrpElt(add_mul(as_add(a), as_add(b)));
    };
    o.inv = [](const GrpElt& a) { return GrpElt(add_inv(as_add(a))); };
    o.eq = [](const GrpElt& a, const GrpElt& b) { return add_eq(as_add(a), as_add(b)); };
    return o;
  };
  X.L = ops(L);
  X.H = ops(H);
  X.G = ops(G);
  AdditiveTwoXM d = data;
  X.t_L = [d, H](const GrpElt& a) {
    RationalVec img = d.tL.apply(const_coords(d.L, as_add(a)));
    return GrpElt(elt_from_coords(H, img));
  };
  X.t_H = [d, G](const GrpElt& a) {
    RationalVec img = d.tH.apply(const_coords(d.H, as_add(a)));
    return GrpElt(elt_from_coords(G, img));
  };
  X.act_H = [d, H](const GrpElt& g, const GrpElt& h) {
    RationalVec shift = d.actH.apply(const_coords(d.G, as_add(g)), lat_coords(H, as_add(h)));
    return GrpElt(from_coords_shift(H, as_add(h), shift));
  };
  X.act_L = [d, L](const GrpElt& g, const GrpElt& l) {
    RationalVec shift = d.actL.apply(const_coords(d.G, as_add(g)), lat_coords(L, as_add(l)));
    return GrpElt(from_coords_shift(L, as_add(l), shift));
  };
  X.peif = [d, L](const GrpElt& h1, const GrpElt& h2) {
    RationalVec img = d.peif.apply(const_coords(d.H, as_add(h1)), const_coords(d.H, as_add(h2)));
    return GrpElt(elt_from_coords(L, img));
  };

  LieShadow lie;
  lie.dim_l = add_alg_dim(L);
  lie.dim_h = add_alg_dim(H);
  lie.dim_g = add_alg_dim(G);
  lie.t_l = [d, L, H](const RationalVec& z) {
    RationalVec img = d.tL.apply(alg_as_coords(L, z));
    return RationalVec(img.begin() + H.lat, img.end());
  };
  lie.t_h = [d, H, G](const RationalVec& y) {
    RationalVec img = d.tH.apply(alg_as_coords(H, y));
    return RationalVec(img.begin() + G.lat, img.end());
  };
  // shifts depend only on lattice parts, so group actions on the algebras
  // are trivial (identity) and algebra-on-algebra actions vanish
  lie.g_on_h = [](const GrpElt&, const RationalVec& y) { return y; };
  lie.g_on_l = [](const GrpElt&, const RationalVec& z) { return z; };
  lie.ad_g = [](const GrpElt&, const RationalVec& x) { return x; };
  lie.conj_h = [](const GrpElt&, const RationalVec& y) { return y; };
  lie.x_on_h = [H](const RationalVec&, const RationalVec&) {
    return vzero(add_alg_dim(H));
  };
  lie.x_on_l = [L](const RationalVec&, const RationalVec&) {
    return vzero(add_alg_dim(L));
  };
  lie.bra_g = [G](const RationalVec&, const RationalVec&) {
    return vzero(add_alg_dim(G));
  };
  lie.bra_h = [H](const RationalVec&, const RationalVec&) {
    return vzero(add_alg_dim(H));
  };
  lie.adtri_h = [d, H](const GrpElt& h, const RationalVec& x) {
    return vneg(d.actH.apply(alg_as_coords(d.G, x), lat_coords(H, as_add(h))));
  };
  lie.adtri_l = [d, L](const GrpElt& l, const RationalVec& x) {
    return vneg(d.actL.apply(alg_as_coords(d.G, x), lat_coords(L, as_add(l))));
  };
  lie.pull_h = [d, H](const RationalVec& x, const GrpElt& h) {
    return d.actH.apply(alg_as_coords(d.G, x), lat_coords(H, as_add(h)));
  };
  lie.peif_hY = [d, H, L](const GrpElt& h, const RationalVec& y) {
    RationalVec img =
        d.peif.apply(const_coords(d.H, as_add(h)), alg_as_coords(H, y));
    return RationalVec(img.begin() + L.lat, img.end());
  };
  lie.peif_Yh = [d, H, L](const RationalVec& y, const GrpElt& h) {
    RationalVec img =
        d.peif.apply(alg_as_coords(H, y), const_coords(d.H, as_add(h)));
    return RationalVec(img.begin() + L.lat, img.end());
  };
  lie.peif_YY = [d, H, L](const RationalVec& y1, const RationalVec& y2) {
    RationalVec img = d.peif.apply(alg_as_coords(H, y1), alg_as_coords(H, y2));
    return RationalVec(img.begin() + L.lat, img.end());
  };
  X.lie = std::move(lie);

  X.sample_L = additive_sample(L, plan);
  X.sample_H = additive_sample(H, plan);
  X.sample_G = additive_sample(G, plan);
  X.alg_g = alg_sample(add_alg_dim(G));
  X.alg_h = alg_sample(add_alg_dim(H));
  X.alg_l = alg_sample(add_alg_dim(L));
  return X;
}

FiniteAdjustment wrap_additive_adjustment(const TwoCrossedModule& X,
                                          const AdditiveAdjustment& adj) {
  if (!X.additive) throw std::invalid_argument("additive 2-crossed module required");
  const AdditiveTwoXM d = *X.additive;
  FiniteAdjustment k;
  k.additive = adj;
  AdditiveAdjustment a = adj;
  k.k1 = [a, d](const GrpElt& g, const RationalVec& x) {
    return a.k1.apply(const_coords(d.G, as_add(g)), x);
  };
  k.k2 = [a, d](const GrpElt& g, const RationalVec& y) {
    return a.k2.apply(const_coords(d.G, as_add(g)), y);
  };
  k.k3 = [a, d](const GrpElt& h, const RationalVec& x) {
    return a.k3.apply(const_coords(d.H, as_add(h)), x);
  };
  k.k4 = [a, d](const GrpElt& g1, const GrpElt& g2, const RationalVec& x) {
    return a.k4.apply(const_coords(d.G, as_add(g1)), const_coords(d.G, as_add(g2)), x);
  };
  k.lk1 = [a, d](const RationalVec& x1, const RationalVec& x2) {
    return a.k1.apply(alg_as_coords(d.G, x1), x2);
  };
  k.lk2 = [a, d](const RationalVec& x, const RationalVec& y) {
    return a.k2.apply(alg_as_coords(d.G, x), y);
  };
  k.lk3 = [a, d](const RationalVec& y, const RationalVec& x) {
    return a.k3.apply(alg_as_coords(d.H, y), x);
  };
  k.k4_ag = [a, d](const RationalVec& x1, const GrpElt& g, const RationalVec& x2) {
    return a.k4.apply(alg_as_coords(d.G, x1), const_coords(d.G, as_add(g)), x2);
  };
  k.k4_ga = [a, d](const GrpElt& g, const RationalVec& x1, const RationalVec& x2) {
    return a.k4.apply(const_coords(d.G, as_add(g)), alg_as_coords(d.G, x1), x2);
  };
  k.lk4 = [a, d](const RationalVec& x1, const RationalVec& x2, const RationalVec& x3) {
    return a.k4.apply(alg_as_coords(d.G, x1), alg_as_coords(d.G, x2), x3);
  };
  return k;
}

// ---------------------------------------------------------------------------
// fixtures

TwoCrossedModule make_trivial_2xm() {
  AdditiveTwoXM d;
  d.L = AddShape{0, 1, 0};
  d.H = AddShape{0, 1, 0};
  d.G = AddShape{0, 1, 0};
  d.tL = LinMap(1, 1);
  d.tH = LinMap(1, 1);
  d.actH = BilinMap(1, 0, 1);
  d.actL = BilinMap(1, 0, 1);
  d.peif = BilinMap(1, 1, 1);
  return wrap_additive(d, SamplePlan{}, "trivial");
}

FiniteAdjustment zero_adjustment(const TwoCrossedModule& X) {
  FiniteAdjustment k;
  int dg = X.lie ? X.lie->dim_g : 0;
  int dh = X.lie ? X.lie->dim_h : 0;
  int dl = X.lie ? X.lie->dim_l : 0;
  k.k1 = [dh](const GrpElt&, const RationalVec&) { return vzero(dh); };
  k.k2 = [dl](const GrpElt&, const RationalVec&) { return vzero(dl); };
  k.k3 = [dl](const GrpElt&, const RationalVec&) { return vzero(dl); };
  k.k4 = [dl](const GrpElt&, const GrpElt&, const RationalVec&) { return vzero(dl); };
  k.lk1 = [dh](const RationalVec&, const RationalVec&) { return vzero(dh); };
  k.lk2 = [dl](const RationalVec&, const RationalVec&) { return vzero(dl); };
  k.lk3 = [dl](const RationalVec&, const RationalVec&) { return vzero(dl); };
  k.k4_ag = [dl](const RationalVec&, const GrpElt&, const RationalVec&) { return vzero(dl); };
  k.k4_ga = [dl](const GrpElt&, const RationalVec&, const RationalVec&) { return vzero(dl); };
  k.lk4 = [dl](const RationalVec&, const RationalVec&, const RationalVec&) { return vzero(dl); };
  (void)dg;
  return k;
}

TwoCrossedModule make_heisenberg_2xm() {
  TwoCrossedModule X;
  X.name = "heisenberg";
  const AddShape HS{0, 3, 0};   // H = Q^3
  const AddShape LS{0, 0, 0};   // L trivial
  // G: unitriangular 3x3 matrices
  X.G.id = []() { return GrpElt(mat_identity(3)); };
  X.G.mul = [](const GrpElt& a, const GrpElt& b) {
    return GrpElt(mat_mul(std::get<MatElt>(a), std::get<MatElt>(b)));
  };
  X.G.inv = [](const GrpElt& a) { return GrpElt(mat_inv(std::get<MatElt>(a))); };
  X.G.eq = [](const GrpElt& a, const GrpElt& b) {
    return mat_eq(std::get<MatElt>(a), std::get<MatElt>(b));
  };
  auto addops = [](const AddShape& s) {
    GroupOps o;
    o.id = [s]() { return GrpElt(add_identity(s)); };
    o.mul = [](const GrpElt& a, const GrpElt& b) {
      return GrpElt(add_mul(as_add(a), as_add(b)));
    };
    o.inv = [](const GrpElt& a) { return GrpElt(add_inv(as_add(a))); };
    o.eq = [](const GrpElt& a, const GrpElt& b) { return add_eq(as_add(a), as_add(b)); };
    return o;
  };
  X.H = addops(HS);
  X.L = addops(LS);
  X.t_L = [HS](const GrpElt&) { return GrpElt(add_identity(HS)); };
  X.t_H = [](const GrpElt&) { return GrpElt(mat_identity(3)); };
  X.act_H = [HS](const GrpElt& g, const GrpElt& h) {
    const MatElt& m = std::get<MatElt>(g);
    const AddElt& v = as_add(h);
    RationalVec coords(3, Rational(0));
    for (int i = 0; i < 3; ++i) coords[i] = v.vec[i].constant_value();
    RationalVec img = mat_apply(m, coords);
    return GrpElt(add_const(HS, {}, img, {}));
  };
  X.act_L = [LS](const GrpElt&, const GrpElt& l) { return l; };
  X.peif = [LS](const GrpElt&, const GrpElt&) { return GrpElt(add_identity(LS)); };

  LieShadow lie;
  lie.dim_l = 0;
  lie.dim_h = 3;
  lie.dim_g = 3;  // basis E12, E23, E13
  auto mat_of = [](const RationalVec& x) {
    MatElt m(3, RationalVec(3, Rational(0)));
    m[0][1] = x[0];
    m[1][2] = x[1];
    m[0][2] = x[2];
    return m;
  };
  auto coords_of = [](const MatElt& m) {
    return RationalVec{m[0][1], m[1][2], m[0][2]};
  };
  lie.t_l = [](const RationalVec&) { return vzero(3); };
  lie.t_h = [](const RationalVec&) { return vzero(3); };
  lie.g_on_h = [](const GrpElt& g, const RationalVec& y) {
    return mat_apply(std::get<MatElt>(g), y);
  };
  lie.g_on_l = [](const GrpElt&, const RationalVec&) { return vzero(0); };
  lie.ad_g = [mat_of, coords_of](const GrpElt& g, const RationalVec& x) {
    const MatElt& m = std::get<MatElt>(g);
    return coords_of(mat_mul(mat_mul(m, mat_of(x)), mat_inv(m)));
  };
  lie.conj_h = [](const GrpElt&, const RationalVec& y) { return y; };  // H abelian
  lie.x_on_h = [mat_of](const RationalVec& x, const RationalVec& y) {
    return mat_apply(mat_of(x), y);
  };
  lie.x_on_l = [](const RationalVec&, const RationalVec&) { return vzero(0); };
  lie.bra_g = [mat_of, coords_of](const RationalVec& a, const RationalVec& b) {
    MatElt ma = mat_of(a), mb = mat_of(b);
    MatElt ab = mat_mul(ma, mb), ba = mat_mul(mb, ma);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ab[i][j] -= ba[i][j];
    return coords_of(ab);
  };
  lie.bra_h = [](const RationalVec&, const RationalVec&) { return vzero(3); };
  lie.adtri_h = [mat_of](const GrpElt& h, const RationalVec& x) {
    const AddElt& v = as_add(h);
    RationalVec coords(3, Rational(0));
    for (int i = 0; i < 3; ++i) coords[i] = v.vec[i].constant_value();
    return vneg(mat_apply(mat_of(x), coords));
  };
  lie.adtri_l = [](const GrpElt&, const RationalVec&) { return vzero(0); };
  lie.pull_h = [mat_of](const RationalVec& x, const GrpElt& h) {
    const AddElt& v = as_add(h);
    RationalVec coords(3, Rational(0));
    for (int i = 0; i < 3; ++i) coords[i] = v.vec[i].constant_value();
    return mat_apply(mat_of(x), coords);
  };
  lie.peif_hY = [](const GrpElt&, const RationalVec&) { return vzero(0); };
  lie.peif_Yh = [](const RationalVec&, const GrpElt&) { return vzero(0); };
  lie.peif_YY = [](const RationalVec&, const RationalVec&) { return vzero(0); };
  X.lie = std::move(lie);

  // samples: unitriangular matrices with small rational entries
  std::vector<RationalVec> triples = {
      {rat(0), rat(0), rat(0)},  {rat(1), rat(0), rat(0)},  {rat(0), rat(1), rat(0)},
      {rat(0), rat(0), rat(1)},  {rat(-1), rat(1, 2), rat(0)}, {rat(1, 2), rat(-1), rat(1)},
      {rat(2), rat(1), rat(-1, 2)}};
  for (const auto& t : triples) {
    MatElt m = mat_identity(3);
    m[0][1] = t[0];
    m[1][2] = t[1];
    m[0][2] = t[2];
    X.sample_G.push_back(m);
  }
  for (const auto& t : triples) X.sample_H.push_back(add_const(HS, {}, t, {}));
  X.sample_L.push_back(add_identity(LS));
  X.alg_g = alg_sample(3);
  X.alg_h = alg_sample(3);
  X.alg_l = alg_sample(0);
  return X;
}

// ---------------------------------------------------------------------------
// checkers

namespace {

struct Cx {
  const TwoCrossedModule& X;
  GrpElt mulL(const GrpElt& a, const GrpElt& b) const { return X.L.mul(a, b); }
  GrpElt mulH(const GrpElt& a, const GrpElt& b) const { return X.H.mul(a, b); }
  GrpElt mulG(const GrpElt& a, const GrpElt& b) const { return X.G.mul(a, b); }
  GrpElt invL(const GrpElt& a) const { return X.L.inv(a); }
  GrpElt invH(const GrpElt& a) const { return X.H.inv(a); }
  GrpElt invG(const GrpElt& a) const { return X.G.inv(a); }
  GrpElt tL(const GrpElt& a) const { return X.t_L(a); }
  GrpElt tH(const GrpElt& a) const { return X.t_H(a); }
  GrpElt actH(const GrpElt& g, const GrpElt& h) const { return X.act_H(g, h); }
  GrpElt actL(const GrpElt& g, const GrpElt& l) const { return X.act_L(g, l); }
  GrpElt pf(const GrpElt& a, const GrpElt& b) const { return X.peif(a, b); }
  // derived H-action on L
  GrpElt dact(const GrpElt& h, const GrpElt& l) const {
    return mulL(l, pf(invH(tL(l)), h));
  }
  // Peiffer pairing <h1,h2> = h1 h2 h1^-1 (t(h1) |> h2^-1)
  GrpElt pairing(const GrpElt& h1, const GrpElt& h2) const {
    return mulH(mulH(mulH(h1, h2), invH(h1)), actH(tH(h1), invH(h2)));
  }
  GrpElt conjH(const GrpElt& a, const GrpElt& b) const {  // a b a^-1
    return mulH(mulH(a, b), invH(a));
  }
};

void rec(VerificationReport& rep, bool& ok, const std::string& id, const std::string& anchor,
         const std::string& inst, bool passed, const std::string& residue) {
  if (!passed) {
    ok = false;
    rep.record(id, anchor, inst, false, residue);
  }
}

void summarize(VerificationReport& rep, bool ok, const std::string& id,
               const std::string& anchor, const std::string& what) {
  if (ok) rep.record(id, anchor, what, true);
}

}  // namespace

GrpElt derived_h_action(const TwoCrossedModule& X, const GrpElt& h, const GrpElt& l) {
  return Cx{X}.dact(h, l);
}

VerificationReport check_2xm_axioms(const TwoCrossedModule& X, const SamplePlan& plan) {
  VerificationReport rep("2xm-axioms/" + X.name, plan.seed);
  Cx c{X};
  const auto& SL = X.sample_L;
  const auto& SH = X.sample_H;
  const auto& SG = X.sample_G;

  {  // group axiom spot checks on H (associativity, inverses)
    bool ok = true;
    for (const auto& a : SH)
      for (const auto& b : SH) {
        bool inv_ok = X.H.eq(c.mulH(a, c.invH(a)), X.H.id());
        rec(rep, ok, "2xm.group", "(A.1)", grp_to_string(a), inv_ok, "inverse failed");
        for (const auto& d : SH) {
          bool assoc = X.H.eq(c.mulH(c.mulH(a, b), d), c.mulH(a, c.mulH(b, d)));
          if (!assoc) rec(rep, ok, "2xm.group", "(A.1)", grp_to_string(a), false, "assoc failed");
        }
      }
    summarize(rep, ok, "2xm.group", "(A.1)", "group axioms on sample");
  }
  {  // t equivariance
    bool ok = true;
    for (const auto& g : SG) {
      for (const auto& h : SH) {
        GrpElt lhs = c.tH(c.actH(g, h));
        GrpElt rhs = c.mulG(c.mulG(g, c.tH(h)), c.invG(g));
        rec(rep, ok, "2xm.t-equivariance-H", "(A.2a)",
            grp_to_string(g) + "," + grp_to_string(h), X.G.eq(lhs, rhs), "t(g|>h) != g t(h) g^-1");
      }
      for (const auto& l : SL) {
        GrpElt lhs = c.tL(c.actL(g, l));
        GrpElt rhs = c.actH(g, c.tL(l));
        rec(rep, ok, "2xm.t-equivariance-L", "(A.2b)",
            grp_to_string(g) + "," + grp_to_string(l), X.H.eq(lhs, rhs), "t(g|>l) != g|>t(l)");
      }
    }
    summarize(rep, ok, "2xm.t-equivariance-H", "(A.2)", "t equivariance on sample");
  }
  {  // actions by automorphisms
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& h1 : SH)
        for (const auto& h2 : SH) {
          GrpElt lhs = c.actH(g, c.mulH(h1, h2));
          GrpElt rhs = c.mulH(c.actH(g, h1), c.actH(g, h2));
          rec(rep, ok, "2xm.action-automorphism", "(A.1)", grp_to_string(g),
              X.H.eq(lhs, rhs), "g|>(h1 h2) != (g|>h1)(g|>h2)");
        }
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& h : SH) {
          GrpElt lhs = c.actH(c.mulG(g1, g2), h);
          GrpElt rhs = c.actH(g1, c.actH(g2, h));
          rec(rep, ok, "2xm.action-composition", "(A.1)", grp_to_string(h),
              X.H.eq(lhs, rhs), "(g1 g2)|>h != g1|>(g2|>h)");
        }
    summarize(rep, ok, "2xm.action-automorphism", "(A.1)", "action laws on sample");
  }
  {  // Peiffer pairing realized by the lifting
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH) {
        GrpElt lhs = c.pairing(h1, h2);
        GrpElt rhs = c.tL(c.pf(h1, h2));
        rec(rep, ok, "2xm.peiffer-pairing", "(A.3)",
            grp_to_string(h1) + "," + grp_to_string(h2), X.H.eq(lhs, rhs),
            "<h1,h2> != t({h1,h2})");
      }
    summarize(rep, ok, "2xm.peiffer-pairing", "(A.3)", "pairing on sample");
  }
  {  // {t l1, t l2} = l1 l2 l1^-1 l2^-1
    bool ok = true;
    for (const auto& l1 : SL)
      for (const auto& l2 : SL) {
        GrpElt lhs = c.pf(c.tL(l1), c.tL(l2));
        GrpElt rhs = c.mulL(c.mulL(c.mulL(l1, l2), c.invL(l1)), c.invL(l2));
        rec(rep, ok, "2xm.lifting.tt", "(A.4)", grp_to_string(l1), X.L.eq(lhs, rhs),
            "{t l1, t l2} != [l1,l2]");
      }
    summarize(rep, ok, "2xm.lifting.tt", "(A.4)", "commutator law on sample");
  }
  {  // {h1 h2, h3} = {h1, h2 h3 h2^-1} (t(h1) |> {h2,h3})
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& h3 : SH) {
          GrpElt lhs = c.pf(c.mulH(h1, h2), h3);
          GrpElt rhs = c.mulL(c.pf(h1, c.conjH(h2, h3)), c.actL(c.tH(h1), c.pf(h2, h3)));
          rec(rep, ok, "2xm.lifting.compose-left", "(A.5)",
              grp_to_string(h1) + "," + grp_to_string(h2) + "," + grp_to_string(h3),
              X.L.eq(lhs, rhs), "left composition law failed");
        }
    summarize(rep, ok, "2xm.lifting.compose-left", "(A.5)", "all sampled triples");
  }
  {  // {h1, h2 h3} = {h1,h2}{h1,h3}{<h1,h3>^-1, t(h1)|>h2}
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& h3 : SH) {
          GrpElt lhs = c.pf(h1, c.mulH(h2, h3));
          GrpElt rhs = c.mulL(c.mulL(c.pf(h1, h2), c.pf(h1, h3)),
                              c.pf(c.invH(c.pairing(h1, h3)), c.actH(c.tH(h1), h2)));
          rec(rep, ok, "2xm.lifting.compose-right", "(A.6)",
              grp_to_string(h1) + "," + grp_to_string(h2) + "," + grp_to_string(h3),
              X.L.eq(lhs, rhs), "right composition law failed");
        }
    summarize(rep, ok, "2xm.lifting.compose-right", "(A.6)", "all sampled triples");
  }
  {  // {t(l), h}{h, t(l)} = l (t(h) |> l^-1)
    bool ok = true;
    for (const auto& l : SL)
      for (const auto& h : SH) {
        GrpElt lhs = c.mulL(c.pf(c.tL(l), h), c.pf(h, c.tL(l)));
        GrpElt rhs = c.mulL(l, c.actL(c.tH(h), c.invL(l)));
        rec(rep, ok, "2xm.lifting.tl", "(A.7)", grp_to_string(l) + "," + grp_to_string(h),
            X.L.eq(lhs, rhs), "mixed lifting law failed");
      }
    summarize(rep, ok, "2xm.lifting.tl", "(A.7)", "all sampled pairs");
  }
  {  // G-equivariance of the lifting
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& h1 : SH)
        for (const auto& h2 : SH) {
          GrpElt lhs = c.actL(g, c.pf(h1, h2));
          GrpElt rhs = c.pf(c.actH(g, h1), c.actH(g, h2));
          rec(rep, ok, "2xm.lifting.equivariance", "(A.8)",
              grp_to_string(g) + "," + grp_to_string(h1) + "," + grp_to_string(h2),
              X.L.eq(lhs, rhs), "g|>{h1,h2} != {g|>h1,g|>h2}");
        }
    summarize(rep, ok, "2xm.lifting.equivariance", "(A.8)", "all sampled triples");
  }
  {  // derived action makes (L -> H) a crossed module
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& l : SL) {
        GrpElt lhs = c.tL(c.dact(h, l));
        GrpElt rhs = c.conjH(h, c.tL(l));
        rec(rep, ok, "2xm.derived-action.t", "(A.9)",
            grp_to_string(h) + "," + grp_to_string(l), X.H.eq(lhs, rhs),
            "t(h|>l) != h t(l) h^-1");
      }
    for (const auto& l1 : SL)
      for (const auto& l2 : SL) {
        GrpElt lhs = c.dact(c.tL(l1), l2);
        GrpElt rhs = c.mulL(c.mulL(l1, l2), c.invL(l1));
        rec(rep, ok, "2xm.derived-action.peiffer", "(A.10)",
            grp_to_string(l1) + "," + grp_to_string(l2), X.L.eq(lhs, rhs),
            "t(l1)|>l2 != l1 l2 l1^-1");
      }
    summarize(rep, ok, "2xm.derived-action.t", "(A.9)", "derived action laws");
  }
  return rep;
}

VerificationReport check_helper_identities(const TwoCrossedModule& X, const SamplePlan& plan) {
  VerificationReport rep("2xm-helper-identities/" + X.name, plan.seed);
  Cx c{X};
  const auto& SL = X.sample_L;
  const auto& SH = X.sample_H;
  const auto& SG = X.sample_G;

  {  // {1,h} = {h,1} = 1
    bool ok = true;
    for (const auto& h : SH) {
      bool a = X.L.eq(c.pf(X.H.id(), h), X.L.id());
      bool b = X.L.eq(c.pf(h, X.H.id()), X.L.id());
      rec(rep, ok, "2xm.helper.unit", "(A.11)", grp_to_string(h), a && b, "{1,h} or {h,1} != 1");
    }
    summarize(rep, ok, "2xm.helper.unit", "(A.11)", "unitality of the lifting");
  }
  {  // t({h1,h2}^-1) = t((h1 h2 h1^-1) |> {h1, h2^-1})
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH) {
        GrpElt lhs = c.tL(c.invL(c.pf(h1, h2)));
        GrpElt rhs = c.tL(c.dact(c.conjH(h1, h2), c.pf(h1, c.invH(h2))));
        rec(rep, ok, "2xm.helper.inv-image", "(A.12)",
            grp_to_string(h1) + "," + grp_to_string(h2), X.H.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.inv-image", "(A.12)", "all sampled pairs");
  }
  {  // l1 l2 = {t l1, t l2} l2 l1
    bool ok = true;
    for (const auto& l1 : SL)
      for (const auto& l2 : SL) {
        GrpElt lhs = c.mulL(l1, l2);
        GrpElt rhs = c.mulL(c.mulL(c.pf(c.tL(l1), c.tL(l2)), l2), l1);
        rec(rep, ok, "2xm.helper.commutation", "(A.13)",
            grp_to_string(l1) + "," + grp_to_string(l2), X.L.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.commutation", "(A.13)", "all sampled pairs");
  }
  {  // h|>l = t(h) |> ( l {h^-1, h t(l^-1) h^-1} )
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& l : SL) {
        GrpElt lhs = c.dact(h, l);
        GrpElt inner = c.mulL(l, c.pf(c.invH(h), c.conjH(h, c.tL(c.invL(l)))));
        GrpElt rhs = c.actL(c.tH(h), inner);
        rec(rep, ok, "2xm.helper.derived-via-t", "(A.14)",
            grp_to_string(h) + "," + grp_to_string(l), X.L.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.derived-via-t", "(A.14)", "all sampled pairs");
  }
  {  // {h1,h2} l = (t({h1,h2}) |> l) {h1,h2}
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& l : SL) {
          GrpElt p = c.pf(h1, h2);
          GrpElt lhs = c.mulL(p, l);
          GrpElt rhs = c.mulL(c.dact(c.tL(p), l), p);
          rec(rep, ok, "2xm.helper.lifting-commutes", "(A.15)",
              grp_to_string(h1) + "," + grp_to_string(h2), X.L.eq(lhs, rhs), "identity failed");
        }
    summarize(rep, ok, "2xm.helper.lifting-commutes", "(A.15)", "all sampled triples");
  }
  {  // t(h1)|>h2 = h1 t(h1^-1 |> {h1,h2}^-1) h2 h1^-1
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH) {
        GrpElt lhs = c.actH(c.tH(h1), h2);
        GrpElt rhs = c.mulH(
            c.mulH(c.mulH(h1, c.tL(c.dact(c.invH(h1), c.invL(c.pf(h1, h2))))), h2),
            c.invH(h1));
        rec(rep, ok, "2xm.helper.act-via-lifting", "(A.16)",
            grp_to_string(h1) + "," + grp_to_string(h2), X.H.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.act-via-lifting", "(A.16)", "all sampled pairs");
  }

  if (!X.lie) return rep;
  const LieShadow& S = *X.lie;
  const auto& AG = X.alg_g;
  const auto& AH = X.alg_h;
  const auto& AL = X.alg_l;

  {  // X|>{Y,h} = {X|>Y,h} + {Y,h^-1 X|>h} - {[Y,h^-1 X|>h] - t(Y)|>(h^-1 X|>h), h}
    bool ok = true;
    for (const auto& x : AG)
      for (const auto& y : AH)
        for (const auto& h : SH) {
          RationalVec pull = S.pull_h(x, h);
          RationalVec lhs = S.x_on_l(x, S.peif_Yh(y, h));
          RationalVec t3arg =
              vsub(S.bra_h(y, pull), S.x_on_h(S.t_h(y), pull));
          // the middle term {Y, h^-1 X|>h} has both slots algebra-valued
          RationalVec rhs = vadd(S.peif_Yh(S.x_on_h(x, y), h),
                                 vsub(S.peif_YY(y, pull), S.peif_Yh(t3arg, h)));
          rec(rep, ok, "2xm.half.act-peif-Yh", "(A.17a)", vec_to_string(x),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.act-peif-Yh", "(A.17a)", "all sampled instances");
  }
  {  // X|>{h,Y} = {h,[h^-1 X |> h, Y]} + t(h)|>{h^-1 X|>h, Y} + {h, X|>Y}
    bool ok = true;
    for (const auto& x : AG)
      for (const auto& y : AH)
        for (const auto& h : SH) {
          RationalVec pull = S.pull_h(x, h);
          RationalVec lhs = S.x_on_l(x, S.peif_hY(h, y));
          RationalVec rhs = vadd(S.peif_hY(h, S.bra_h(pull, y)),
                                 vadd(S.g_on_l(c.tH(h), S.peif_YY(pull, y)),
                                      S.peif_hY(h, S.x_on_h(x, y))));
          rec(rep, ok, "2xm.half.act-peif-hY", "(A.17b)", vec_to_string(x),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.act-peif-hY", "(A.17b)", "all sampled instances");
  }
  {  // t({h,Y}) = h Y h^-1 - t(h)|>Y
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = S.t_l(S.peif_hY(h, y));
        RationalVec rhs = vsub(S.conj_h(h, y), S.g_on_h(c.tH(h), y));
        rec(rep, ok, "2xm.half.t-peif", "(A.17c)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.t-peif", "(A.17c)", "all sampled instances");
  }
  {  // Y - t(h)|>Y = t({h,Y} + {Y,h}) - h (t(Y)|>h^-1)
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = vsub(y, S.g_on_h(c.tH(h), y));
        RationalVec rhs = vsub(S.t_l(vadd(S.peif_hY(h, y), S.peif_Yh(y, h))),
                               S.adtri_h(h, S.t_h(y)));
        rec(rep, ok, "2xm.half.defect", "(A.17d)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.defect", "(A.17d)", "all sampled instances");
  }
  {  // Z - t(h)|>Z = {t(Z),h} + {h,t(Z)}
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& z : AL) {
        RationalVec lhs = vsub(z, S.g_on_l(c.tH(h), z));
        RationalVec rhs = vadd(S.peif_Yh(S.t_l(z), h), S.peif_hY(h, S.t_l(z)));
        rec(rep, ok, "2xm.half.defect-l", "(A.17e)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.defect-l", "(A.17e)", "all sampled instances");
  }
  {  // {[Y1,Y2],h} = {t{Y1,Y2},h} - {t{Y1,h},Y2} - {t{Y2,Y1},h} + {t{Y2,h},Y1}
    //               + t(Y1)|>{Y2,h} - t(Y2)|>{Y1,h}
    bool ok = true;
    for (const auto& y1 : AH)
      for (const auto& y2 : AH)
        for (const auto& h : SH) {
          RationalVec lhs = S.peif_Yh(S.bra_h(y1, y2), h);
          RationalVec rhs = S.peif_Yh(S.t_l(S.peif_YY(y1, y2)), h);
          rhs = vsub(rhs, S.peif_YY(S.t_l(S.peif_Yh(y1, h)), y2));
          rhs = vsub(rhs, S.peif_Yh(S.t_l(S.peif_YY(y2, y1)), h));
          rhs = vadd(rhs, S.peif_YY(S.t_l(S.peif_Yh(y2, h)), y1));
          rhs = vadd(rhs, S.x_on_l(S.t_h(y1), S.peif_Yh(y2, h)));
          rhs = vsub(rhs, S.x_on_l(S.t_h(y2), S.peif_Yh(y1, h)));
          rec(rep, ok, "2xm.half.bracket-left", "(A.18a)", grp_to_string(h),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.bracket-left", "(A.18a)", "all sampled instances");
  }
  {  // {h,[Y1,Y2]} = {t{h,Y1}, t(h)|>Y2} - {t{h,Y2}, t(h)|>Y1}
    bool ok = true;
    for (const auto& y1 : AH)
      for (const auto& y2 : AH)
        for (const auto& h : SH) {
          RationalVec lhs = S.peif_hY(h, S.bra_h(y1, y2));
          RationalVec rhs =
              vsub(S.peif_YY(S.t_l(S.peif_hY(h, y1)), S.g_on_h(c.tH(h), y2)),
                   S.peif_YY(S.t_l(S.peif_hY(h, y2)), S.g_on_h(c.tH(h), y1)));
          rec(rep, ok, "2xm.half.bracket-right", "(A.18b)", grp_to_string(h),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.bracket-right", "(A.18b)", "all sampled instances");
  }
  {  // {h Y1 h^-1, Y2} = {h,[Y1,h^-1 Y2 h]} + t(h)|>{Y1,h^-1 Y2 h}
    //                    + t(h Y1 h^-1)|> t(h)|> {h^-1, Y2}
    bool ok = true;
    for (const auto& y1 : AH)
      for (const auto& y2 : AH)
        for (const auto& h : SH) {
          RationalVec cj = S.conj_h(h, y1);
          RationalVec cji = S.conj_h(c.invH(h), y2);
          RationalVec lhs = S.peif_YY(cj, y2);
          RationalVec rhs = S.peif_hY(h, S.bra_h(y1, cji));
          rhs = vadd(rhs, S.g_on_l(c.tH(h), S.peif_YY(y1, cji)));
          rhs = vadd(rhs, S.x_on_l(S.t_h(cj), S.g_on_l(c.tH(h), S.peif_hY(c.invH(h), y2))));
          rec(rep, ok, "2xm.half.conj-left", "(A.18c)", grp_to_string(h),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.conj-left", "(A.18c)", "all sampled instances");
  }
  {  // {Y1, h Y2 h^-1} = {Y1,Y2} - {t{Y1,Y2},h} - {t{Y1,h^-1},Y2}
    //                    + {t({t{Y1,h^-1},Y2}),h}
    bool ok = true;
    for (const auto& y1 : AH)
      for (const auto& y2 : AH)
        for (const auto& h : SH) {
          RationalVec lhs = S.peif_YY(y1, S.conj_h(h, y2));
          RationalVec rhs = S.peif_YY(y1, y2);
          rhs = vsub(rhs, S.peif_Yh(S.t_l(S.peif_YY(y1, y2)), h));
          RationalVec inner = S.t_l(S.peif_Yh(y1, c.invH(h)));
          rhs = vsub(rhs, S.peif_YY(inner, y2));
          rhs = vadd(rhs, S.peif_Yh(S.t_l(S.peif_YY(inner, y2)), h));
          rec(rep, ok, "2xm.half.conj-right", "(A.18d)", grp_to_string(h),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.conj-right", "(A.18d)", "all sampled instances");
  }
  {  // t(h (X|>h^-1)) = Ad_{t(h)}(X) - X
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& x : AG) {
        RationalVec lhs = S.t_h(S.adtri_h(h, x));
        RationalVec rhs = vsub(S.ad_g(c.tH(h), x), x);
        rec(rep, ok, "2xm.half.adtri-t", "(A.18e)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.adtri-t", "(A.18e)", "all sampled instances");
  }
  {  // h (t(Y)|>h^-1) = h Y h^-1 + t({Y,h}) - Y
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = S.adtri_h(h, S.t_h(y));
        RationalVec rhs = vsub(vadd(S.conj_h(h, y), S.t_l(S.peif_Yh(y, h))), y);
        rec(rep, ok, "2xm.half.adtri-Y", "(A.18f)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.adtri-Y", "(A.18f)", "all sampled instances");
  }
  {  // {h1 h2, Y} = {h1, h2 Y h2^-1} + t(h1)|>{h2,Y}
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& y : AH) {
          RationalVec lhs = S.peif_hY(c.mulH(h1, h2), y);
          RationalVec rhs = vadd(S.peif_hY(h1, S.conj_h(h2, y)),
                                 S.g_on_l(c.tH(h1), S.peif_hY(h2, y)));
          rec(rep, ok, "2xm.half.product-left", "(A.19a)",
              grp_to_string(h1) + "," + grp_to_string(h2), vis_zero(vsub(lhs, rhs)),
              vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.product-left", "(A.19a)", "all sampled instances");
  }
  {  // {Y, h1 h2} = {Y,h2} - {h2 Y h2^-1 + h2(t(Y)|>h2^-1), h1}
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& y : AH) {
          RationalVec lhs = S.peif_Yh(y, c.mulH(h1, h2));
          RationalVec first = vadd(S.conj_h(h2, y), S.adtri_h(h2, S.t_h(y)));
          RationalVec rhs = vsub(S.peif_Yh(y, h2), S.peif_Yh(first, h1));
          rec(rep, ok, "2xm.half.product-right", "(A.19b)",
              grp_to_string(h1) + "," + grp_to_string(h2), vis_zero(vsub(lhs, rhs)),
              vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "2xm.half.product-right", "(A.19b)", "all sampled instances");
  }
  {  // {h1^-1,h2} = (t(h1^-1) |> {h1, h1^-1 h2 h1})^-1   (group level)
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH) {
        GrpElt lhs = c.pf(c.invH(h1), h2);
        GrpElt rhs = c.invL(c.actL(c.tH(c.invH(h1)), c.pf(h1, c.conjH(c.invH(h1), h2))));
        rec(rep, ok, "2xm.helper.inverse-left", "(A.20a)",
            grp_to_string(h1) + "," + grp_to_string(h2), X.L.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.inverse-left", "(A.20a)", "all sampled pairs");
  }
  {  // {h1,h2^-1} = {h1,h2}^-1 {(t(h1)|>h2^-1) h1 h2 h1^-1, t(h1)|>h2}^-1
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH) {
        GrpElt lhs = c.pf(h1, c.invH(h2));
        GrpElt arg1 = c.mulH(c.actH(c.tH(h1), c.invH(h2)), c.conjH(h1, h2));
        GrpElt rhs = c.mulL(c.invL(c.pf(h1, h2)), c.invL(c.pf(arg1, c.actH(c.tH(h1), h2))));
        rec(rep, ok, "2xm.helper.inverse-right", "(A.20b)",
            grp_to_string(h1) + "," + grp_to_string(h2), X.L.eq(lhs, rhs), "identity failed");
      }
    summarize(rep, ok, "2xm.helper.inverse-right", "(A.20b)", "all sampled pairs");
  }
  {  // {h^-1, Y} = - t(h^-1) |> {h, h^-1 Y h}
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = S.peif_hY(c.invH(h), y);
        RationalVec rhs = vneg(S.g_on_l(c.tH(c.invH(h)), S.peif_hY(h, S.conj_h(c.invH(h), y))));
        rec(rep, ok, "2xm.half.inverse-left", "(A.21a)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.inverse-left", "(A.21a)", "all sampled instances");
  }
  {  // {Y,h^-1} = {h^-1(t(Y)|>h), h} - {h^-1 Y h, h}
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = S.peif_Yh(y, c.invH(h));
        RationalVec rhs = vsub(S.peif_Yh(S.pull_h(S.t_h(y), h), h),
                               S.peif_Yh(S.conj_h(c.invH(h), y), h));
        rec(rep, ok, "2xm.half.inverse-right", "(A.21b)", grp_to_string(h),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "2xm.half.inverse-right", "(A.21b)", "all sampled instances");
  }
  return rep;
}

VerificationReport check_adjusted_2xm(const TwoCrossedModule& X, const FiniteAdjustment& k,
                                      const SamplePlan& plan) {
  VerificationReport rep("adjusted-2xm/" + X.name, plan.seed);
  if (!X.lie) throw std::invalid_argument("adjustment checks require a Lie shadow");
  Cx c{X};
  const LieShadow& S = *X.lie;
  const auto& SL = X.sample_L;
  const auto& SH = X.sample_H;
  const auto& SG = X.sample_G;
  const auto& AG = X.alg_g;
  const auto& AH = X.alg_h;

  {  // unital-linearity
    bool ok = true;
    for (const auto& x : AG) {
      bool u1 = vis_zero(k.k1(X.G.id(), x));
      bool u3 = vis_zero(k.k3(X.H.id(), x));
      bool u4 = SG.empty() || vis_zero(k.k4(X.G.id(), SG[0], x)) &&
                                  vis_zero(k.k4(SG[0], X.G.id(), x));
      rec(rep, ok, "adj2xm.unital", "(3.37)", vec_to_string(x), u1 && u3 && u4,
          "kappa with identity group slot is nonzero");
    }
    for (const auto& y : AH) {
      bool u2 = vis_zero(k.k2(X.G.id(), y));
      rec(rep, ok, "adj2xm.unital", "(3.37)", vec_to_string(y), u2,
          "kappa2(1,Y) nonzero");
    }
    // linearity probes in the algebra slot
    for (const auto& g : SG)
      for (size_t i = 1; i + 1 < AG.size(); ++i) {
        RationalVec sum = vadd(AG[i], AG[i + 1]);
        bool lin = vis_zero(vsub(k.k1(g, sum), vadd(k.k1(g, AG[i]), k.k1(g, AG[i + 1]))));
        rec(rep, ok, "adj2xm.linear", "(3.37)", grp_to_string(g), lin,
            "kappa1 not linear in the algebra slot");
      }
    summarize(rep, ok, "adj2xm.unital", "(3.37)", "unital-linearity");
  }
  {  // kappa1(t(h),X) = -(t(h) |> Ad|>_{h^-1}(X)) - t(kappa3(h^-1,X))
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& x : AG) {
        RationalVec adtri_inv = S.pull_h(x, h);  // h^-1 (X|>h) = Ad|>_{h^-1}(X)
        RationalVec lhs = k.k1(c.tH(h), x);
        RationalVec rhs = vneg(S.g_on_h(c.tH(h), adtri_inv));
        rhs = vsub(rhs, S.t_l(k.k3(c.invH(h), x)));
        rec(rep, ok, "adj2xm.k1-t", "(3.38a)", grp_to_string(h) + "," + vec_to_string(x),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "adj2xm.k1-t", "(3.38a)", "all sampled instances");
  }
  {  // g1|>k1(g2,X) = -k1(g1, Ad_{g2}X - t(k1(g2,X))) + k1(g1 g2,X) - t(k4(g2^-1,g1^-1,X))
    bool ok = true;
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& x : AG) {
          RationalVec lhs = S.g_on_h(g1, k.k1(g2, x));
          RationalVec tw = vsub(S.ad_g(g2, x), S.t_h(k.k1(g2, x)));
          RationalVec rhs = vneg(k.k1(g1, tw));
          rhs = vadd(rhs, k.k1(c.mulG(g1, g2), x));
          rhs = vsub(rhs, S.t_l(k.k4(c.invG(g2), c.invG(g1), x)));
          rec(rep, ok, "adj2xm.k1-act", "(3.38b)",
              grp_to_string(g1) + "," + grp_to_string(g2) + "," + vec_to_string(x),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "adj2xm.k1-act", "(3.38b)", "all sampled instances");
  }
  {  // kappa2(t(h),Y) = -t(h)|>{Y,h^-1} - t(h)|>{h^-1,Y} - kappa3(h^-1,t(Y))
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& y : AH) {
        RationalVec lhs = k.k2(c.tH(h), y);
        RationalVec rhs = vneg(S.g_on_l(c.tH(h), S.peif_Yh(y, c.invH(h))));
        rhs = vsub(rhs, S.g_on_l(c.tH(h), S.peif_hY(c.invH(h), y)));
        rhs = vsub(rhs, k.k3(c.invH(h), S.t_h(y)));
        rec(rep, ok, "adj2xm.k2-t", "(3.38c)", grp_to_string(h) + "," + vec_to_string(y),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "adj2xm.k2-t", "(3.38c)", "all sampled instances");
  }
  {  // g1|>k2(g2,Y) = k2(g1 g2,Y) - k2(g1, g2|>Y) - k2(g1, t(k2(g2,Y)) - k1(g2,t(Y)))
    //                - k4(g2^-1,g1^-1,t(Y))
    bool ok = true;
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& y : AH) {
          RationalVec lhs = S.g_on_l(g1, k.k2(g2, y));
          RationalVec rhs = k.k2(c.mulG(g1, g2), y);
          rhs = vsub(rhs, k.k2(g1, S.g_on_h(g2, y)));
          RationalVec mix = vsub(S.t_l(k.k2(g2, y)), k.k1(g2, S.t_h(y)));
          rhs = vsub(rhs, k.k2(g1, mix));
          rhs = vsub(rhs, k.k4(c.invG(g2), c.invG(g1), S.t_h(y)));
          rec(rep, ok, "adj2xm.k2-act", "(3.38d)",
              grp_to_string(g1) + "," + grp_to_string(g2) + "," + vec_to_string(y),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "adj2xm.k2-act", "(3.38d)", "all sampled instances");
  }
  {  // kappa3(t(l),X) = -Ad|>_l(X)
    bool ok = true;
    for (const auto& l : SL)
      for (const auto& x : AG) {
        RationalVec lhs = k.k3(c.tL(l), x);
        RationalVec rhs = vneg(S.adtri_l(l, x));
        rec(rep, ok, "adj2xm.k3-t", "(3.38e)", grp_to_string(l) + "," + vec_to_string(x),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "adj2xm.k3-t", "(3.38e)", "all sampled instances");
  }
  {  // kappa3(h1 h2,X) = -t(h1 h2)^-1 |> {h1, Ad|>_{h2}(X)} + t(h2^-1)|>kappa3(h1,X)
    //                    - kappa4(t(h1),t(h2),X) + kappa3(h2,X)
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& x : AG) {
          RationalVec lhs = k.k3(c.mulH(h1, h2), x);
          RationalVec adx = S.adtri_h(h2, x);  // Ad|>_{h2}(X) = h2 (X|>h2^-1)
          RationalVec rhs = vneg(S.g_on_l(c.invG(c.tH(c.mulH(h1, h2))), S.peif_hY(h1, adx)));
          rhs = vadd(rhs, S.g_on_l(c.tH(c.invH(h2)), k.k3(h1, x)));
          rhs = vsub(rhs, k.k4(c.tH(h1), c.tH(h2), x));
          rhs = vadd(rhs, k.k3(h2, x));
          rec(rep, ok, "adj2xm.k3-mul", "(3.38f)",
              grp_to_string(h1) + "," + grp_to_string(h2) + "," + vec_to_string(x),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "adj2xm.k3-mul", "(3.38f)", "all sampled instances");
  }
  {  // g|>kappa3(h,X) = -t((g|>h)^-1)|>({k1(g,X), g|>h} + {g|>h, k1(g,X)})
    //                   + kappa3(g|>h, Ad_g X - t(k1(g,X))) + kappa4(t(h),g^-1,X)
    //                   - kappa4(g^-1, t(g|>h), X)
    // Derived from the elementary corner conditions via the reconstruction;
    // the assembled display differs in the sign of the last term and the
    // inverse in the prefactor, and fails on the categorified torus.
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& h : SH)
        for (const auto& x : AG) {
          GrpElt gh = c.actH(g, h);
          RationalVec k1gx = k.k1(g, x);
          RationalVec lhs = S.g_on_l(g, k.k3(h, x));
          RationalVec inner = vadd(S.peif_Yh(k1gx, gh), S.peif_hY(gh, k1gx));
          RationalVec rhs = vneg(S.g_on_l(c.tH(c.invH(gh)), inner));
          rhs = vadd(rhs, k.k3(gh, vsub(S.ad_g(g, x), S.t_h(k1gx))));
          rhs = vadd(rhs, k.k4(c.tH(h), c.invG(g), x));
          rhs = vsub(rhs, k.k4(c.invG(g), c.tH(gh), x));
          rec(rep, ok, "adj2xm.k3-act", "(3.38g)",
              grp_to_string(g) + "," + grp_to_string(h) + "," + vec_to_string(x),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "adj2xm.k3-act", "(3.38g)", "all sampled instances");
  }
  {  // g1|>k4(g2,g3,X) = k4(g3,g1^-1, Ad_{g2^-1}X - t(k1(g2^-1,X))) - k4(g2 g3, g1^-1, X)
    //                    + k4(g2, g3 g1^-1, X)
    bool ok = true;
    std::mt19937_64 rng(plan.seed);
    std::size_t count = 0;
    auto pick = [&](const std::vector<GrpElt>& v) { return v[rng() % v.size()]; };
    auto pickx = [&](const std::vector<RationalVec>& v) { return v[rng() % v.size()]; };
    while (count < plan.arity4_tuples) {
      GrpElt g1 = pick(SG), g2 = pick(SG), g3 = pick(SG);
      RationalVec x = pickx(AG);
      RationalVec lhs = S.g_on_l(g1, k.k4(g2, g3, x));
      RationalVec tw = vsub(S.ad_g(c.invG(g2), x), S.t_h(k.k1(c.invG(g2), x)));
      RationalVec rhs = k.k4(g3, c.invG(g1), tw);
      rhs = vsub(rhs, k.k4(c.mulG(g2, g3), c.invG(g1), x));
      rhs = vadd(rhs, k.k4(g2, c.mulG(g3, c.invG(g1)), x));
      rec(rep, ok, "adj2xm.k4-act", "(3.38h)",
          grp_to_string(g1) + "," + grp_to_string(g2) + "," + grp_to_string(g3) + "," +
              vec_to_string(x),
          vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      ++count;
    }
    summarize(rep, ok, "adj2xm.k4-act", "(3.38h)", "randomized arity-4 sample");
  }
  return rep;
}

VerificationReport check_linearized_adjustment(const TwoCrossedModule& X,
                                               const FiniteAdjustment& k,
                                               const SamplePlan& plan) {
  VerificationReport rep("linearized-adjustment/" + X.name, plan.seed);
  if (!X.lie) throw std::invalid_argument("linearized checks require a Lie shadow");
  Cx c{X};
  const LieShadow& S = *X.lie;
  const auto& SG = X.sample_G;
  const auto& AG = X.alg_g;
  const auto& AH = X.alg_h;
  const auto& AL = X.alg_l;

  {  // k1(t(Y),X) = -X|>Y + t(k3(Y,X))
    bool ok = true;
    for (const auto& y : AH)
      for (const auto& x : AG) {
        RationalVec lhs = k.lk1(S.t_h(y), x);
        RationalVec rhs = vadd(vneg(S.x_on_h(x, y)), S.t_l(k.lk3(y, x)));
        rec(rep, ok, "linadj.k1-t", "(3.39a)", vec_to_string(y) + "," + vec_to_string(x),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "linadj.k1-t", "(3.39a)", "all sampled instances");
  }
  {  // X1|>k1(g,X2) = g|>k1(Ad_{g^-1}X1,X2)
    //   + k1(g,[Ad_{g^-1}X1,X2] - t(k1(Ad_{g^-1}X1,X2))) + t(k4(Ad_{g^-1}X1,g^-1,X2))
    //   - k1(X1, Ad_g X2 - t(k1(g,X2))) + t(k4(g^-1,X1,X2))
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& x1 : AG)
        for (const auto& x2 : AG) {
          RationalVec adx1 = S.ad_g(c.invG(g), x1);
          RationalVec lhs = S.x_on_h(x1, k.k1(g, x2));
          RationalVec rhs = S.g_on_h(g, k.lk1(adx1, x2));
          RationalVec inner = vsub(S.bra_g(adx1, x2), S.t_h(k.lk1(adx1, x2)));
          rhs = vadd(rhs, k.k1(g, inner));
          rhs = vadd(rhs, S.t_l(k.k4_ag(adx1, c.invG(g), x2)));
          RationalVec tw = vsub(S.ad_g(g, x2), S.t_h(k.k1(g, x2)));
          rhs = vsub(rhs, k.lk1(x1, tw));
          rhs = vadd(rhs, S.t_l(k.k4_ga(c.invG(g), x1, x2)));
          rec(rep, ok, "linadj.k1-mixed1", "(3.39b)",
              grp_to_string(g) + "," + vec_to_string(x1) + "," + vec_to_string(x2),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "linadj.k1-mixed1", "(3.39b)", "all sampled instances");
  }
  {  // g|>k1(X1,X2) = Ad_g(X1)|>k1(g,X2) + k1(Ad_gX1, Ad_gX2 - t(k1(g,X2)))
    //   - t(k4(g^-1, Ad_gX1, X2)) - k1(g, [X1,X2] - t(k1(X1,X2))) + t(k4(X1,g^-1,X2))
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& x1 : AG)
        for (const auto& x2 : AG) {
          RationalVec adx1 = S.ad_g(g, x1);
          RationalVec lhs = S.g_on_h(g, k.lk1(x1, x2));
          RationalVec rhs = S.x_on_h(adx1, k.k1(g, x2));
          rhs = vadd(rhs, k.lk1(adx1, vsub(S.ad_g(g, x2), S.t_h(k.k1(g, x2)))));
          rhs = vsub(rhs, S.t_l(k.k4_ga(c.invG(g), adx1, x2)));
          rhs = vsub(rhs, k.k1(g, vsub(S.bra_g(x1, x2), S.t_h(k.lk1(x1, x2)))));
          rhs = vadd(rhs, S.t_l(k.k4_ag(x1, c.invG(g), x2)));
          rec(rep, ok, "linadj.k1-mixed2", "(3.39c)",
              grp_to_string(g) + "," + vec_to_string(x1) + "," + vec_to_string(x2),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "linadj.k1-mixed2", "(3.39c)", "all sampled instances");
  }
  {  // k1([X1,X2],X3) = X1|>k1(X2,X3) - X2|>k1(X1,X3)
    //   - k1(X2,[X1,X3]-t(k1(X1,X3))) + k1(X1,[X2,X3]-t(k1(X2,X3))) - t(k4(X1,X2,X3))
    bool ok = true;
    for (const auto& x1 : AG)
      for (const auto& x2 : AG)
        for (const auto& x3 : AG) {
          RationalVec lhs = k.lk1(S.bra_g(x1, x2), x3);
          RationalVec rhs = vsub(S.x_on_h(x1, k.lk1(x2, x3)), S.x_on_h(x2, k.lk1(x1, x3)));
          rhs = vsub(rhs, k.lk1(x2, vsub(S.bra_g(x1, x3), S.t_h(k.lk1(x1, x3)))));
          rhs = vadd(rhs, k.lk1(x1, vsub(S.bra_g(x2, x3), S.t_h(k.lk1(x2, x3)))));
          rhs = vsub(rhs, S.t_l(k.lk4(x1, x2, x3)));
          rec(rep, ok, "linadj.k1-bracket", "(3.39d)",
              vec_to_string(x1) + "," + vec_to_string(x2) + "," + vec_to_string(x3),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "linadj.k1-bracket", "(3.39d)", "all sampled instances");
  }
  {  // k2(t(Y1),Y2) = {Y1,Y2} + {Y2,Y1} + k3(Y1,t(Y2))
    bool ok = true;
    for (const auto& y1 : AH)
      for (const auto& y2 : AH) {
        RationalVec lhs = k.lk2(S.t_h(y1), y2);
        RationalVec rhs = vadd(S.peif_YY(y1, y2), S.peif_YY(y2, y1));
        rhs = vadd(rhs, k.lk3(y1, S.t_h(y2)));
        rec(rep, ok, "linadj.k2-t", "(3.39e)", vec_to_string(y1) + "," + vec_to_string(y2),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "linadj.k2-t", "(3.39e)", "all sampled instances");
  }
  {  // k2([X1,X2],Y) = k2(X1, X2|>Y - k1(X2,t(Y)) + t(k2(X2,Y))) - (1<->2)
    //   + X1|>k2(X2,Y) - X2|>k2(X1,Y) - k4(X1,X2,t(Y))
    bool ok = true;
    for (const auto& x1 : AG)
      for (const auto& x2 : AG)
        for (const auto& y : AH) {
          RationalVec lhs = k.lk2(S.bra_g(x1, x2), y);
          auto mix = [&](const RationalVec& a, const RationalVec& b) {
            RationalVec m = S.x_on_h(a, y);
            m = vsub(m, k.lk1(a, S.t_h(y)));
            m = vadd(m, S.t_l(k.lk2(a, y)));
            (void)b;
            return m;
          };
          RationalVec rhs = vsub(k.lk2(x1, mix(x2, x1)), k.lk2(x2, mix(x1, x2)));
          rhs = vadd(rhs, vsub(S.x_on_l(x1, k.lk2(x2, y)), S.x_on_l(x2, k.lk2(x1, y))));
          rhs = vsub(rhs, k.lk4(x1, x2, S.t_h(y)));
          rec(rep, ok, "linadj.k2-bracket", "(3.39f)",
              vec_to_string(x1) + "," + vec_to_string(x2) + "," + vec_to_string(y),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "linadj.k2-bracket", "(3.39f)", "all sampled instances");
  }
  {  // k3(t(Z),X) = X|>Z
    bool ok = true;
    for (const auto& z : AL)
      for (const auto& x : AG) {
        RationalVec lhs = k.lk3(S.t_l(z), x);
        RationalVec rhs = S.x_on_l(x, z);
        rec(rep, ok, "linadj.k3-t", "(3.39g)", vec_to_string(z) + "," + vec_to_string(x),
            vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
      }
    summarize(rep, ok, "linadj.k3-t", "(3.39g)", "all sampled instances");
  }
  {  // X1|>k3(Y,X2) = {k1(X1,X2),Y} + {Y,k1(X1,X2)} + k3(X1|>Y,X2)
    //   + k3(Y,[X1,X2]-t(k1(X1,X2))) + k4(X1,t(Y),X2)
    bool ok = true;
    for (const auto& x1 : AG)
      for (const auto& y : AH)
        for (const auto& x2 : AG) {
          RationalVec x1x2 = k.lk1(x1, x2);
          RationalVec lhs = S.x_on_l(x1, k.lk3(y, x2));
          RationalVec rhs = vadd(S.peif_YY(x1x2, y), S.peif_YY(y, x1x2));
          rhs = vadd(rhs, k.lk3(S.x_on_h(x1, y), x2));
          rhs = vadd(rhs, k.lk3(y, vsub(S.bra_g(x1, x2), S.t_h(x1x2))));
          rhs = vadd(rhs, k.lk4(x1, S.t_h(y), x2));
          rec(rep, ok, "linadj.k3-mixed", "(3.39h)",
              vec_to_string(x1) + "," + vec_to_string(y) + "," + vec_to_string(x2),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "linadj.k3-mixed", "(3.39h)", "all sampled instances");
  }
  {  // cyclic: sum_cyc X1|>k4(X2,X3,Xt) = sum_cyc [ k4(X1,X2,[X3,Xt]-t(k1(X3,Xt)))
    //                                              - k4([X1,X2],X3,Xt) ]
    bool ok = true;
    for (const auto& x1 : AG)
      for (const auto& x2 : AG)
        for (const auto& x3 : AG)
          for (const auto& xt : AG) {
            std::array<const RationalVec*, 3> xs = {&x1, &x2, &x3};
            RationalVec lhs = vzero(S.dim_l);
            RationalVec rhs = vzero(S.dim_l);
            for (int s = 0; s < 3; ++s) {
              const RationalVec& a = *xs[s % 3];
              const RationalVec& b = *xs[(s + 1) % 3];
              const RationalVec& d = *xs[(s + 2) % 3];
              lhs = vadd(lhs, S.x_on_l(a, k.lk4(b, d, xt)));
              rhs = vadd(rhs, k.lk4(a, b, vsub(S.bra_g(d, xt), S.t_h(k.lk1(d, xt)))));
              rhs = vsub(rhs, k.lk4(S.bra_g(a, b), d, xt));
            }
            rec(rep, ok, "linadj.k4-cyclic", "(3.39i)",
                vec_to_string(x1) + "," + vec_to_string(x2) + "," + vec_to_string(x3) +
                    "," + vec_to_string(xt),
                vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
          }
    summarize(rep, ok, "linadj.k4-cyclic", "(3.39i)", "all sampled instances");
  }
  return rep;
}

KappaPrimes reconstruct_kappa_primes(const TwoCrossedModule& X, const FiniteAdjustment& k) {
  if (!X.lie) throw std::invalid_argument("reconstruction requires a Lie shadow");
  KappaPrimes P;
  const TwoCrossedModule* Xp = &X;
  FiniteAdjustment kc = k;
  P.k3pp = [Xp, kc](const GrpElt& g1, const GrpElt& g2, const GrpElt& h,
                    const RationalVec& x) {
    Cx c{*Xp};
    const LieShadow& S = *Xp->lie;
    GrpElt g12 = c.mulG(g1, g2);
    RationalVec out = vneg(kc.k4(g1, g2, x));
    out = vsub(out, kc.k4(c.tH(h), g12, x));
    out = vadd(out, S.g_on_l(c.invG(g12), kc.k3(h, x)));
    return out;
  };
  P.k3p = [Xp, kc](const GrpElt& g, const RationalVec& y, const RationalVec& x2) {
    Cx c{*Xp};
    const LieShadow& S = *Xp->lie;
    RationalVec tw = vsub(S.ad_g(c.invG(g), x2), S.t_h(kc.k1(c.invG(g), x2)));
    return kc.lk3(y, tw);
  };
  return P;
}

VerificationReport check_kappa_prime_conditions(const TwoCrossedModule& X,
                                                const FiniteAdjustment& k,
                                                const SamplePlan& plan) {
  VerificationReport rep("kappa-prime-conditions/" + X.name, plan.seed);
  if (!X.lie) throw std::invalid_argument("reconstruction requires a Lie shadow");
  Cx c{X};
  const LieShadow& S = *X.lie;
  auto P = reconstruct_kappa_primes(X, k);
  const auto& SL = X.sample_L;
  const auto& SH = X.sample_H;
  const auto& SG = X.sample_G;
  const auto& AG = X.alg_g;
  const auto& AH = X.alg_h;
  GrpElt eG = X.G.id(), eH = X.H.id();

  {  // definitional corners: k3''(1,1,h,X) = k3(h,X); k3''(g1,g2,1,X) = -k4(g1,g2,X)
    bool ok = true;
    for (const auto& h : SH)
      for (const auto& x : AG) {
        RationalVec d = vsub(P.k3pp(eG, eG, h, x), k.k3(h, x));
        rec(rep, ok, "kprime.def-k3", "(3.33a)", grp_to_string(h), vis_zero(d),
            vec_to_string(d));
      }
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& x : AG) {
          RationalVec d = vadd(P.k3pp(g1, g2, eH, x), k.k4(g1, g2, x));
          rec(rep, ok, "kprime.def-k4", "(3.33b)", grp_to_string(g1), vis_zero(d),
              vec_to_string(d));
        }
    summarize(rep, ok, "kprime.def-k3", "(3.33)", "definitional corners");
  }
  {  // (3.34a): k3''(1,1,t(l),X) = -Ad|>_l(X)
    bool ok = true;
    for (const auto& l : SL)
      for (const auto& x : AG) {
        RationalVec d = vadd(P.k3pp(eG, eG, c.tL(l), x), S.adtri_l(l, x));
        rec(rep, ok, "kprime.tl", "(3.34a)", grp_to_string(l), vis_zero(d), vec_to_string(d));
      }
    summarize(rep, ok, "kprime.tl", "(3.34a)", "all sampled instances");
  }
  {  // (3.34b): k3''(g,1,1,X) = 0 and (3.34e): k3''(1,g,1,X) = 0
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& x : AG) {
        bool b1 = vis_zero(P.k3pp(g, eG, eH, x));
        bool b2 = vis_zero(P.k3pp(eG, g, eH, x));
        rec(rep, ok, "kprime.unital", "(3.34b)", grp_to_string(g), b1 && b2,
            "corner value nonzero");
      }
    summarize(rep, ok, "kprime.unital", "(3.34b)", "all sampled instances");
  }
  {  // (3.34c): k3''(g1 g2,1,h,X) = k3''(g1,g2,h,X) - k3''(g1,g2,1,X)
    bool ok = true;
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& h : SH)
          for (const auto& x : AG) {
            RationalVec lhs = P.k3pp(c.mulG(g1, g2), eG, h, x);
            RationalVec rhs = vsub(P.k3pp(g1, g2, h, x), P.k3pp(g1, g2, eH, x));
            rec(rep, ok, "kprime.split", "(3.34c)", grp_to_string(g1) + "," + grp_to_string(g2),
                vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
          }
    summarize(rep, ok, "kprime.split", "(3.34c)", "all sampled instances");
  }
  {  // (3.34d): k3''(g,1,t(l),X) = -(g^-1 |> Ad|>_l(X))
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& l : SL)
        for (const auto& x : AG) {
          RationalVec lhs = P.k3pp(g, eG, c.tL(l), x);
          RationalVec rhs = vneg(S.g_on_l(c.invG(g), S.adtri_l(l, x)));
          rec(rep, ok, "kprime.g-tl", "(3.34d)", grp_to_string(g) + "," + grp_to_string(l),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "kprime.g-tl", "(3.34d)", "all sampled instances");
  }
  {  // (3.34f): k3''(g,1,h,X) = g^-1|>k3''(1,1,h,X) + k3''(t(h),g,1,X)
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& h : SH)
        for (const auto& x : AG) {
          RationalVec lhs = P.k3pp(g, eG, h, x);
          RationalVec rhs = vadd(S.g_on_l(c.invG(g), P.k3pp(eG, eG, h, x)),
                                 P.k3pp(c.tH(h), g, eH, x));
          rec(rep, ok, "kprime.g-h", "(3.34f)", grp_to_string(g) + "," + grp_to_string(h),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "kprime.g-h", "(3.34f)", "all sampled instances");
  }
  {  // (3.34g): k3''(1,1,h1 h2,X) = -(t(h1 h2))^-1|>{h1,Ad|>_{h2}(X)}
    //   + t(h2^-1)|>k3''(1,1,h1,X) + k3''(t h1, t h2, 1, X) + k3''(1,1,h2,X)
    bool ok = true;
    for (const auto& h1 : SH)
      for (const auto& h2 : SH)
        for (const auto& x : AG) {
          RationalVec lhs = P.k3pp(eG, eG, c.mulH(h1, h2), x);
          RationalVec adv = S.adtri_h(h2, x);
          RationalVec rhs =
              vneg(S.g_on_l(c.invG(c.tH(c.mulH(h1, h2))), S.peif_hY(h1, adv)));
          rhs = vadd(rhs, S.g_on_l(c.tH(c.invH(h2)), P.k3pp(eG, eG, h1, x)));
          rhs = vadd(rhs, P.k3pp(c.tH(h1), c.tH(h2), eH, x));
          rhs = vadd(rhs, P.k3pp(eG, eG, h2, x));
          rec(rep, ok, "kprime.hh", "(3.34g)", grp_to_string(h1) + "," + grp_to_string(h2),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "kprime.hh", "(3.34g)", "all sampled instances");
  }
  {  // (3.34i): k3''(g1,g2 g3,1,X) = g3^-1|>k3''(g1,g2,1,X)
    //   - k3''(g2,g3,1, Ad_{g1^-1}X - t(k1(g1^-1,X))) + k3''(g1 g2,g3,1,X)
    bool ok = true;
    for (const auto& g1 : SG)
      for (const auto& g2 : SG)
        for (const auto& g3 : SG)
          for (const auto& x : AG) {
            RationalVec lhs = P.k3pp(g1, c.mulG(g2, g3), eH, x);
            RationalVec tw = vsub(S.ad_g(c.invG(g1), x), S.t_h(k.k1(c.invG(g1), x)));
            RationalVec rhs = S.g_on_l(c.invG(g3), P.k3pp(g1, g2, eH, x));
            rhs = vsub(rhs, P.k3pp(g2, g3, eH, tw));
            rhs = vadd(rhs, P.k3pp(c.mulG(g1, g2), g3, eH, x));
            rec(rep, ok, "kprime.ggg", "(3.34i)",
                grp_to_string(g1) + "," + grp_to_string(g2) + "," + grp_to_string(g3),
                vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
          }
    summarize(rep, ok, "kprime.ggg", "(3.34i)", "all sampled instances");
  }
  {  // (3.35a): k3'(g, t(Z), X1, X2) = (Ad_{g^-1}X2 - t(k1(g^-1,X2))) |> Z
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& z : X.alg_l)
        for (const auto& x2 : AG) {
          RationalVec lhs = P.k3p(g, S.t_l(z), x2);
          RationalVec tw = vsub(S.ad_g(c.invG(g), x2), S.t_h(k.k1(c.invG(g), x2)));
          RationalVec rhs = S.x_on_l(tw, z);
          rec(rep, ok, "kprime.k3p-tz", "(3.35a)", grp_to_string(g) + "," + vec_to_string(z),
              vis_zero(vsub(lhs, rhs)), vec_to_string(vsub(lhs, rhs)));
        }
    summarize(rep, ok, "kprime.k3p-tz", "(3.35a)", "all sampled instances");
  }
  {  // (3.35b): k2(g, k1(g^-1, t(Y))) = 0
    bool ok = true;
    for (const auto& g : SG)
      for (const auto& y : AH) {
        RationalVec d = k.k2(g, k.k1(c.invG(g), S.t_h(y)));
        rec(rep, ok, "kprime.k2k1", "(3.35b)", grp_to_string(g) + "," + vec_to_string(y),
            vis_zero(d), vec_to_string(d));
      }
    summarize(rep, ok, "kprime.k2k1", "(3.35b)", "all sampled instances");
  }
  return rep;
}

LInfty3 to_strict_linfty(const TwoCrossedModule& X) {
  if (!X.lie) throw std::invalid_argument("strict image requires a Lie shadow");
  const LieShadow& S = *X.lie;
  LInfty3 L(S.dim_g, S.dim_h, S.dim_l);
  auto unit = [](int dim, int i) {
    RationalVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  auto put = [](MultilinearMap& m, const BasisTuple& t, int out_deg, const RationalVec& val) {
    GradedElement e;
    for (size_t i = 0; i < val.size(); ++i)
      e.set_coeff({out_deg, static_cast<int>(i)}, val[i]);
    if (!e.is_zero()) m.set(t, e);
  };
  for (int i = 0; i < S.dim_h; ++i)
    put(L.mu(1), {BasisKey{-1, i}}, 0, S.t_h(unit(S.dim_h, i)));
  for (int i = 0; i < S.dim_l; ++i)
    put(L.mu(1), {BasisKey{-2, i}}, -1, S.t_l(unit(S.dim_l, i)));
  for (int i = 0; i < S.dim_g; ++i) {
    for (int j = i + 1; j < S.dim_g; ++j)
      put(L.mu(2), {BasisKey{0, i}, BasisKey{0, j}}, 0,
          S.bra_g(unit(S.dim_g, i), unit(S.dim_g, j)));
    for (int m = 0; m < S.dim_h; ++m)
      put(L.mu(2), {BasisKey{0, i}, BasisKey{-1, m}}, -1,
          S.x_on_h(unit(S.dim_g, i), unit(S.dim_h, m)));
    for (int p = 0; p < S.dim_l; ++p)
      put(L.mu(2), {BasisKey{0, i}, BasisKey{-2, p}}, -2,
          S.x_on_l(unit(S.dim_g, i), unit(S.dim_l, p)));
  }
  // mu2 on h x h = -{Y1,Y2} - {Y2,Y1}: graded-symmetric in two odd slots
  for (int m = 0; m < S.dim_h; ++m)
    for (int n = m; n < S.dim_h; ++n) {
      RationalVec v = vneg(vadd(S.peif_YY(unit(S.dim_h, m), unit(S.dim_h, n)),
                                S.peif_YY(unit(S.dim_h, n), unit(S.dim_h, m))));
      put(L.mu(2), {BasisKey{-1, m}, BasisKey{-1, n}}, -2, v);
    }
  return L;
}

AdjustmentInf linearized_adjustment_inf(const TwoCrossedModule& X, const FiniteAdjustment& k) {
  if (!X.lie) throw std::invalid_argument("linearization requires a Lie shadow");
  const LieShadow& S = *X.lie;
  AdjustmentInf out;
  auto unit = [](int dim, int i) {
    RationalVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  auto put = [](MultilinearMap& m, const BasisTuple& t, int out_deg, const RationalVec& val) {
    GradedElement e;
    for (size_t i = 0; i < val.size(); ++i)
      e.set_coeff({out_deg, static_cast<int>(i)}, val[i]);
    if (!e.is_zero()) m.set(t, e);
  };
  for (int a = 0; a < S.dim_g; ++a)
    for (int b = 0; b < S.dim_g; ++b) {
      put(out.k1, {BasisKey{0, a}, BasisKey{0, b}}, -1,
          k.lk1(unit(S.dim_g, a), unit(S.dim_g, b)));
      for (int cc = 0; cc < S.dim_g; ++cc)
        put(out.k4, {BasisKey{0, a}, BasisKey{0, b}, BasisKey{0, cc}}, -2,
            k.lk4(unit(S.dim_g, a), unit(S.dim_g, b), unit(S.dim_g, cc)));
    }
  for (int a = 0; a < S.dim_g; ++a)
    for (int m = 0; m < S.dim_h; ++m) {
      put(out.k2, {BasisKey{0, a}, BasisKey{-1, m}}, -2,
          k.lk2(unit(S.dim_g, a), unit(S.dim_h, m)));
      put(out.k3, {BasisKey{-1, m}, BasisKey{0, a}}, -2,
          k.lk3(unit(S.dim_h, m), unit(S.dim_g, a)));
    }
  return out;
}

VerificationReport check_linearization_bridge(const TwoCrossedModule& X,
                                              const FiniteAdjustment& k,
                                              const SamplePlan& plan) {
  VerificationReport rep("linearization-bridge/" + X.name, plan.seed);
  LInfty3 L = to_strict_linfty(X);
  auto jac = check_homotopy_jacobi(L);
  rep.record("bridge.strict-image", "(B.4)", "homotopy Jacobi of the image", jac.ok(),
             jac.ok() ? "" : jac.first_failure().residue);

  AdjustmentInf lin = linearized_adjustment_inf(X, k);
  auto bracket_side = check_adjustment_inf(L, lin);
  auto finite_side = check_linearized_adjustment(X, k, plan);

  // relation-family correspondence between the two catalogs
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"linadj.k1-t", "adj.k1-mu1"},     {"linadj.k2-t", "adj.k2-mu1"},
      {"linadj.k3-t", "adj.k3-mu1"},     {"linadj.k1-bracket", "adj.k1-mu2"},
      {"linadj.k2-bracket", "adj.k2-mu2"}, {"linadj.k3-mixed", "adj.k3-mu2"},
      {"linadj.k4-cyclic", "adj.k3-mu3"}};
  auto family_ok = [](const VerificationReport& r, const std::string& fam) {
    for (const auto& e : r.entries())
      if (e.relation == fam && !e.passed) return false;
    return true;
  };
  bool agree = true;
  for (const auto& [fin, bra] : pairs) {
    bool f = family_ok(finite_side, fin);
    bool b = family_ok(bracket_side, bra);
    rep.record("bridge.agreement", "(3.40)", fin + " vs " + bra, f == b,
               f == b ? "" : (std::string("finite=") + (f ? "pass" : "fail") +
                              " bracket=" + (b ? "pass" : "fail")));
    if (f != b) agree = false;
  }
  rep.record("bridge.overall", "(3.40)", "pass/fail agreement", agree,
             agree ? "" : "correspondence violated");
  return rep;
}

}  // namespace adj3
