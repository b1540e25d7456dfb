#include "adj3/constructions.hpp"

#include <stdexcept>

#include "adj3/linear.hpp"

namespace adj3 {

std::optional<std::array<int, 3>> torus_compatibility_witness(const CategorifiedTorusData& d) {
  auto unit = [](int dim, int i) {
    RationalVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  for (int u = 0; u < d.v0; ++u)
    for (int v = 0; v < d.v0; ++v)
      for (int w = 0; w < d.v0; ++w) {
        RationalVec a = d.p1.apply(unit(d.v0, u), d.p0.apply(unit(d.v0, v), unit(d.v0, w)));
        RationalVec b = d.p1.apply(unit(d.v0, v), d.p0.apply(unit(d.v0, u), unit(d.v0, w)));
        if (!vis_zero(vadd(a, b))) return std::array<int, 3>{u, v, w};
      }
  return std::nullopt;
}

CategorifiedTorusData ex_tor_data() {
  CategorifiedTorusData d;
  d.v0 = 2;
  d.v1 = 2;
  d.v2 = 1;
  d.p0 = BilinMap(2, 2, 2);
  d.p0.at(0, 0, 0) = 1;  // <v,w>_0 component 1 = v1 w1
  d.p0.at(1, 0, 1) = 1;  // component 2 = v2 w1
  d.p1 = BilinMap(2, 2, 1);
  d.p1.at(0, 1, 0) = 1;   // <u,m>_1 = u1 m2 - u2 m1
  d.p1.at(1, 0, 0) = -1;
  return d;
}

CategorifiedTorus build_categorifed_torus_impl(const CategorifiedTorusData& d,
                                               const SamplePlan& plan) {
  if (auto w = torus_compatibility_witness(d)) {
    throw std::invalid_argument(
        "torus construction rejected: compatibility fails on basis triple (" +
        std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
        std::to_string((*w)[2]) + ")");
  }
  CategorifiedTorus T;
  const int v0 = d.v0, v1 = d.v1, v2 = d.v2;
  AdditiveTwoXM& a = T.data;
  a.L = AddShape{v1, 0, v2};  // Lambda_1 x V2/Lambda_2
  a.H = AddShape{v0, v1, 0};  // Lambda_0 x V1
  a.G = AddShape{0, v0, 0};   // V0
  // t(lambda_1, [w]) = (0, lambda_1)
  a.tL = LinMap(v0 + v1, v1 + v2);
  for (int i = 0; i < v1; ++i) a.tL.at(v0 + i, i) = 1;
  // t(lambda_0, u1) = lambda_0
  a.tH = LinMap(v0, v0 + v1);
  for (int i = 0; i < v0; ++i) a.tH.at(i, i) = 1;
  // u0 |> (l0, u1) = (l0, u1 + <u0, l0>_0)
  a.actH = BilinMap(v0, v0, v1);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v0; ++j)
      for (int k = 0; k < v1; ++k) a.actH.at(i, j, k) = d.p0.at(i, j, k);
  // u0 |> (l1, [w]) = (l1, [w + <u0, l1>_1])
  a.actL = BilinMap(v0, v1, v2);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v1; ++j)
      for (int k = 0; k < v2; ++k) a.actL.at(i, j, k) = d.p1.at(i, j, k);
  // {(l0,u1),(m0,v1)} = (-<l0,m0>_0, [<l0,v1>_1])
  a.peif = BilinMap(v0 + v1, v0 + v1, v1 + v2);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v0; ++j)
      for (int k = 0; k < v1; ++k) a.peif.at(i, j, k) = -d.p0.at(i, j, k);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v1; ++j)
      for (int k = 0; k < v2; ++k) a.peif.at(i, v0 + j, v1 + k) = d.p1.at(i, j, k);

  AdditiveAdjustment& k = T.adj_data;
  // kappa1(u0, x) = -<x, u0>_0
  k.k1 = BilinMap(v0, v0, v1);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v0; ++j)
      for (int m = 0; m < v1; ++m) k.k1.at(i, j, m) = -d.p0.at(j, i, m);
  // kappa2(u0, y) = [<u0, y>_1]
  k.k2 = BilinMap(v0, v1, v2);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v1; ++j)
      for (int m = 0; m < v2; ++m) k.k2.at(i, j, m) = d.p1.at(i, j, m);
  // kappa3((l0,u1), x) = [<x, u1>_1]
  k.k3 = BilinMap(v0 + v1, v0, v2);
  for (int j = 0; j < v1; ++j)
    for (int i = 0; i < v0; ++i)
      for (int m = 0; m < v2; ++m) k.k3.at(v0 + j, i, m) = d.p1.at(i, j, m);
  // kappa4(u,v,w) = [<u, <w,v>_0>_1]
  k.k4 = TrilinMap(v0, v0, v0, v2);
  for (int i = 0; i < v0; ++i)
    for (int j = 0; j < v0; ++j)
      for (int m = 0; m < v0; ++m)
        for (int t = 0; t < v2; ++t) {
          Rational s = 0;
          for (int n = 0; n < v1; ++n) s += d.p0.at(m, j, n) * d.p1.at(i, n, t);
          k.k4.at(i, j, m, t) = s;
        }

  T.xm = wrap_additive(T.data, plan, "categorified-torus");
  T.adj = wrap_additive_adjustment(T.xm, T.adj_data);
  return T;
}

CategorifiedTorus build_categorified_torus(const CategorifiedTorusData& d,
                                           const SamplePlan& plan) {
  return build_categorifed_torus_impl(d, plan);
}

VerificationReport check_torus_extension_structure(const CategorifiedTorus& T,
                                                   const SamplePlan& plan) {
  VerificationReport rep("torus-extension", plan.seed);
  const TwoCrossedModule& X = T.xm;
  bool central = true, kernel = true;
  for (const auto& l : X.sample_L) {
    GrpElt tl = X.t_L(l);
    for (const auto& h : X.sample_H) {
      GrpElt lhs = X.H.mul(tl, h);
      GrpElt rhs = X.H.mul(h, tl);
      if (!X.H.eq(lhs, rhs)) {
        central = false;
        rep.record("torus.central", "(4.4)", grp_to_string(l) + "," + grp_to_string(h),
                   false, "t(l) does not commute");
      }
    }
    if (!X.G.eq(X.t_H(tl), X.G.id())) {
      kernel = false;
      rep.record("torus.kernel", "(4.4)", grp_to_string(l), false,
                 "t(t(l)) != identity");
    }
  }
  if (central) rep.record("torus.central", "(4.4)", "image of t central", true);
  if (kernel) rep.record("torus.kernel", "(4.4)", "t o t trivial", true);
  return rep;
}

// ---------------------------------------------------------------------------
// dgLa

RationalVec DgLa::diff(int k, const RationalVec& x) const {
  if (k < 1 || k > 3) throw std::invalid_argument("diff degree out of range");
  return d[k].apply(x);
}

RationalVec DgLa::bracket(int a, int b, const RationalVec& x, const RationalVec& y) const {
  if (a > b) {
    // [x,y] = -(-1)^{|x||y|} [y,x], degrees -a, -b
    RationalVec r = bracket(b, a, y, x);
    int sign = (a * b) % 2 == 0 ? -1 : 1;
    return vscale(Rational(sign), r);
  }
  auto it = bra.find({a, b});
  if (it == bra.end()) return vzero(a + b <= 3 ? dim[a + b] : 0);
  return it->second.apply(x, y);
}

VerificationReport check_dgla(const DgLa& h) {
  VerificationReport rep("dgla-axioms");
  auto unit = [&](int k, int i) {
    RationalVec v(h.dim[k], Rational(0));
    v[i] = 1;
    return v;
  };
  bool ok = true;
  // d^2 = 0
  for (int k = 2; k <= 3; ++k)
    for (int i = 0; i < h.dim[k]; ++i) {
      RationalVec r = h.diff(k - 1, h.diff(k, unit(k, i)));
      if (!vis_zero(r)) {
        ok = false;
        rep.record("dgla.d-squared", "(4.1)", "degree -" + std::to_string(k),
                   false, vec_to_string(r));
      }
    }
  // graded Leibniz: d[x,y] = [dx,y] + (-1)^{-a}[x,dy]
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) {
      if (a + b > 3) continue;
      int out = a + b;
      for (int i = 0; i < h.dim[a]; ++i)
        for (int j = 0; j < h.dim[b]; ++j) {
          RationalVec lhs = out >= 1 ? h.diff(out, h.bracket(a, b, unit(a, i), unit(b, j)))
                                     : vzero(h.dim[0]);
          if (out == 0) lhs = vzero(0);
          RationalVec rhs1 = a >= 1 ? h.bracket(a - 1, b, h.diff(a, unit(a, i)), unit(b, j))
                                    : vzero(out >= 1 ? h.dim[out - 1] : 0);
          RationalVec rhs2 = b >= 1 ? h.bracket(a, b - 1, unit(a, i), h.diff(b, unit(b, j)))
                                    : vzero(out >= 1 ? h.dim[out - 1] : 0);
          if (a % 2 != 0) rhs2 = vneg(rhs2);
          if (out == 0) continue;  // both sides land in degree +1 = 0
          RationalVec r = vsub(lhs, vadd(rhs1, rhs2));
          if (!vis_zero(r)) {
            ok = false;
            rep.record("dgla.leibniz", "(4.1)",
                       "degrees (-" + std::to_string(a) + ",-" + std::to_string(b) + ") @ (" +
                           std::to_string(i) + "," + std::to_string(j) + ")",
                       false, vec_to_string(r));
          }
        }
    }
  // graded antisymmetry encoded by the bracket() accessor; graded Jacobi:
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int cdeg = 0; cdeg <= 3; ++cdeg) {
        if (a + b + cdeg > 3) continue;
        for (int i = 0; i < h.dim[a]; ++i)
          for (int j = 0; j < h.dim[b]; ++j)
            for (int k = 0; k < h.dim[cdeg]; ++k) {
              RationalVec lhs =
                  h.bracket(a, b + cdeg, unit(a, i), h.bracket(b, cdeg, unit(b, j), unit(cdeg, k)));
              RationalVec rhs1 =
                  h.bracket(a + b, cdeg, h.bracket(a, b, unit(a, i), unit(b, j)), unit(cdeg, k));
              RationalVec rhs2 =
                  h.bracket(b, a + cdeg, unit(b, j), h.bracket(a, cdeg, unit(a, i), unit(cdeg, k)));
              if ((a * b) % 2 != 0) rhs2 = vneg(rhs2);
              RationalVec r = vsub(lhs, vadd(rhs1, rhs2));
              if (!vis_zero(r)) {
                ok = false;
                rep.record("dgla.jacobi", "(4.1)",
                           "degrees (-" + std::to_string(a) + ",-" + std::to_string(b) + ",-" +
                               std::to_string(cdeg) + ") @ (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")",
                           false, vec_to_string(r));
              }
            }
      }
  if (ok) rep.record("dgla.axioms", "(4.1)", "d^2, Leibniz, Jacobi on basis", true);
  return rep;
}

// ---------------------------------------------------------------------------
// derived brackets

namespace {

GradedElement ge_of(const RationalVec& v, int degree) {
  GradedElement e;
  for (size_t i = 0; i < v.size(); ++i) e.set_coeff({degree, static_cast<int>(i)}, v[i]);
  return e;
}

RationalVec unitvec(int dim, int i) {
  RationalVec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

DerivedBracket build_derived_bracket_linfty(const DgLa& h) {
  auto ax = check_dgla(h);
  if (!ax.ok())
    throw std::invalid_argument("derived bracket: dgLa axioms fail: " +
                                ax.first_failure().instance);
  const int dg = h.dim[1], dh = h.dim[2], dl = h.dim[3];
  if (dg == 0) throw std::invalid_argument("derived bracket: empty degree -1 part");

  LInfty3 L(dg, dh, dl);
  // mu1 = d
  for (int i = 0; i < dh; ++i)
    L.mu(1).set({BasisKey{-1, i}}, ge_of(h.diff(2, unitvec(dh, i)), 0));
  for (int i = 0; i < dl; ++i)
    L.mu(1).set({BasisKey{-2, i}}, ge_of(h.diff(3, unitvec(dl, i)), -1));
  // mu2 = graded antisymmetrization of [d.,.]
  // [d x, y] for x in L_{ka} = h_{ka-1}, y in L_{kb}; ka, kb in {0,-1,-2}
  auto eps = [&](int ka, int kb, const RationalVec& x, const RationalVec& y) {
    return h.bracket(-ka, 1 - kb, h.diff(1 - ka, x), y);
  };
  // The top component of mu2 is the displayed antisymmetrization of the
  // derived product.
  for (int i = 0; i < dg; ++i)
    for (int j = i + 1; j < dg; ++j) {
      RationalVec v = vscale(rat(1, 2), vsub(eps(0, 0, unitvec(dg, i), unitvec(dg, j)),
                                             eps(0, 0, unitvec(dg, j), unitvec(dg, i))));
      if (!vis_zero(v)) L.mu(2).set({BasisKey{0, i}, BasisKey{0, j}}, ge_of(v, 0));
    }

  // The lower mu2 components and the normalizations of the alternator
  // components kappa_1..3 are identified only up to prefactors; pin them by
  // solving the binary homotopy identities together with the three
  // t-compatibility relations, which are linear in these coefficients.
  // Ansatz: mu2(X,Y) = a [dX,Y] + b [dY,X]; mu2(X,Z) = p [dX,Z] + q [dZ,X];
  //         mu2(Y1,Y2) = m ([dY1,Y2] + [dY2,Y1]);
  //         kappa1 = c1 [.,.], kappa2 = c2 [.,.], kappa3 = c3 [.,.].
  auto build_stage1 = [&](const RationalVec& w) {
    LInfty3 M = L;
    AdjustmentInf a2;
    const Rational &a = w[0], &b = w[1], &p = w[2], &q = w[3], &m = w[4];
    const Rational &c1 = w[5], &c2 = w[6], &c3 = w[7];
    for (int i = 0; i < dg; ++i) {
      for (int mm = 0; mm < dh; ++mm) {
        RationalVec v = vadd(vscale(a, eps(0, -1, unitvec(dg, i), unitvec(dh, mm))),
                             vscale(b, h.bracket(1, 1, h.diff(2, unitvec(dh, mm)),
                                                 unitvec(dg, i))));
        if (!vis_zero(v)) M.mu(2).set({BasisKey{0, i}, BasisKey{-1, mm}}, ge_of(v, -1));
      }
      for (int pp = 0; pp < dl; ++pp) {
        RationalVec v = vadd(vscale(p, eps(0, -2, unitvec(dg, i), unitvec(dl, pp))),
                             vscale(q, h.bracket(2, 1, h.diff(3, unitvec(dl, pp)),
                                                 unitvec(dg, i))));
        if (!vis_zero(v)) M.mu(2).set({BasisKey{0, i}, BasisKey{-2, pp}}, ge_of(v, -2));
      }
    }
    for (int mm = 0; mm < dh; ++mm)
      for (int nn = mm; nn < dh; ++nn) {
        RationalVec v = vscale(
            m, vadd(h.bracket(1, 2, h.diff(2, unitvec(dh, mm)), unitvec(dh, nn)),
                    h.bracket(1, 2, h.diff(2, unitvec(dh, nn)), unitvec(dh, mm))));
        if (!vis_zero(v)) M.mu(2).set({BasisKey{-1, mm}, BasisKey{-1, nn}}, ge_of(v, -2));
      }
    for (int i = 0; i < dg; ++i)
      for (int j = 0; j < dg; ++j) {
        RationalVec v = vscale(c1, h.bracket(1, 1, unitvec(dg, i), unitvec(dg, j)));
        if (!vis_zero(v)) a2.k1.set({BasisKey{0, i}, BasisKey{0, j}}, ge_of(v, -1));
      }
    for (int i = 0; i < dg; ++i)
      for (int mm = 0; mm < dh; ++mm) {
        RationalVec v2 = vscale(c2, h.bracket(1, 2, unitvec(dg, i), unitvec(dh, mm)));
        if (!vis_zero(v2)) a2.k2.set({BasisKey{0, i}, BasisKey{-1, mm}}, ge_of(v2, -2));
        RationalVec v3 = vscale(c3, h.bracket(2, 1, unitvec(dh, mm), unitvec(dg, i)));
        if (!vis_zero(v3)) a2.k3.set({BasisKey{-1, mm}, BasisKey{0, i}}, ge_of(v3, -2));
      }
    return std::make_pair(std::move(M), std::move(a2));
  };
  auto stage1_residues = [&](const RationalVec& w) {
    auto [M, a2] = build_stage1(w);
    RationalVec out;
    auto flatten = [&](const GradedElement& e) {
      for (int i = 0; i < dg; ++i) out.push_back(e.coeff({0, i}));
      for (int i = 0; i < dh; ++i) out.push_back(e.coeff({-1, i}));
      for (int i = 0; i < dl; ++i) out.push_back(e.coeff({-2, i}));
    };
    for (const auto& r : collect_jacobi_residues(M))
      if (r.instance.find("arity 1") != std::string::npos ||
          r.instance.find("arity 2") != std::string::npos)
        flatten(r.value);
    for (const auto& r : collect_adjustment_residues(M, a2))
      if (r.anchor == "(2.33a)" || r.anchor == "(2.33b)" || r.anchor == "(2.33c)")
        flatten(r.value);
    return out;
  };
  const int n1 = 8;
  RationalVec w0(n1, Rational(0));
  RationalVec s0 = stage1_residues(w0);
  std::vector<RationalVec> scols(n1);
  for (int i = 0; i < n1; ++i) {
    RationalVec e = w0;
    e[i] = 1;
    scols[i] = stage1_residues(e);
  }
  auto solve_stage1 =
      [&](const std::vector<std::pair<int, Rational>>& pins) -> std::optional<RationalVec> {
    LinearSystem sys1(n1);
    for (size_t row = 0; row < s0.size(); ++row) {
      LinearEquation eq;
      for (int i = 0; i < n1; ++i) {
        Rational cc = scols[i][row] - s0[row];
        if (!is_zero(cc)) eq.coeffs[i] = cc;
      }
      eq.rhs = -s0[row];
      if (!eq.coeffs.empty() || !is_zero(eq.rhs)) sys1.add_equation(std::move(eq));
    }
    for (const auto& [i, v] : pins) {
      LinearEquation eq;
      eq.coeffs[i] = 1;
      eq.rhs = v;
      sys1.add_equation(std::move(eq));
    }
    return sys1.solve();
  };
  // prefer solutions with nonzero alternator normalizations; the stage-2
  // solve below may also reject a pinned choice, so iterate over the pin-set
  // list from the caller
  const std::vector<std::vector<std::pair<int, Rational>>> pin_sets = {
      {{6, 1}, {7, 1}},  {{6, 1}, {7, -1}}, {{6, -1}, {7, 1}},
      {{6, 1}},          {{7, 1}},          {},
  };
  std::vector<RationalVec> stage1_solutions;
  for (const auto& pins : pin_sets) {
    auto w = solve_stage1(pins);
    if (!w) continue;
    bool clean = true;
    for (const auto& r : stage1_residues(*w))
      if (!is_zero(r)) clean = false;
    if (!clean)
      throw std::invalid_argument("derived bracket: stage-1 solve not affine");
    stage1_solutions.push_back(*w);
  }
  if (stage1_solutions.empty())
    throw std::invalid_argument("derived bracket: binary identities unsolvable");
  AdjustmentInf adj;
  bool have_stage1 = false;
  std::string last_error;
  for (const auto& wsol : stage1_solutions) {
    auto [Lsolved, adj_solved] = build_stage1(wsol);
    L = Lsolved;
    adj = adj_solved;
    have_stage1 = true;

  // unknowns: canonical mu3 tuples and all kappa4 tuples; everything that is
  // still undetermined enters the Jacobi and adjustment residues affinely at
  // these dimensions, so probe and solve exactly.
  struct Unknown {
    bool is_mu3;
    BasisTuple tuple;
    int out_degree;
    int out_index;
  };
  std::vector<Unknown> unknowns;
  auto add_mu3_tuples = [&](const std::vector<BasisKey>& keys, int out_degree, int out_dim) {
    (void)out_dim;
    for (int o = 0; o < (out_degree == 0 ? dg : (out_degree == -1 ? dh : dl)); ++o)
      unknowns.push_back({true, keys, out_degree, o});
  };
  // degree patterns for mu3 with nonzero target: (0,0,0) -> -1, (0,0,-1) -> -2
  for (int i = 0; i < dg; ++i)
    for (int j = i + 1; j < dg; ++j) {
      for (int k = j + 1; k < dg; ++k)
        add_mu3_tuples({BasisKey{0, i}, BasisKey{0, j}, BasisKey{0, k}}, -1, dh);
      for (int m = 0; m < dh; ++m)
        add_mu3_tuples({BasisKey{0, i}, BasisKey{0, j}, BasisKey{-1, m}}, -2, dl);
    }
  // mu4 on four distinct degree-0 slots only exists for dg >= 4; treat as an
  // unknown family as well so larger searches stay honest
  std::vector<std::pair<BasisTuple, int>> mu4_tuples;
  for (int i = 0; i < dg; ++i)
    for (int j = i + 1; j < dg; ++j)
      for (int k = j + 1; k < dg; ++k)
        for (int l = k + 1; l < dg; ++l)
          mu4_tuples.push_back({{BasisKey{0, i}, BasisKey{0, j}, BasisKey{0, k}, BasisKey{0, l}}, dl});
  size_t mu3_count = unknowns.size();
  for (auto& [t, od] : mu4_tuples)
    for (int o = 0; o < od; ++o) unknowns.push_back({false, t, -2, o});
  size_t mu4_end = unknowns.size();
  // kappa4 unknowns
  std::vector<std::array<int, 4>> k4_idx;
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j)
      for (int k = 0; k < dg; ++k)
        for (int o = 0; o < dl; ++o) k4_idx.push_back({i, j, k, o});
  const size_t total = mu4_end + k4_idx.size();

  auto instantiate = [&](const RationalVec& u) {
    LInfty3 M = L;
    AdjustmentInf a2 = adj;
    std::map<BasisTuple, GradedElement> mu3_acc, mu4_acc, k4_acc;
    for (size_t q = 0; q < mu3_count; ++q)
      if (!is_zero(u[q]))
        mu3_acc[unknowns[q].tuple].set_coeff(
            {unknowns[q].out_degree, unknowns[q].out_index}, u[q]);
    for (size_t q = mu3_count; q < mu4_end; ++q)
      if (!is_zero(u[q]))
        mu4_acc[unknowns[q].tuple].set_coeff({-2, unknowns[q].out_index}, u[q]);
    for (size_t q = 0; q < k4_idx.size(); ++q) {
      const auto& ix = k4_idx[q];
      if (!is_zero(u[mu4_end + q]))
        k4_acc[{BasisKey{0, ix[0]}, BasisKey{0, ix[1]}, BasisKey{0, ix[2]}}].set_coeff(
            {-2, ix[3]}, u[mu4_end + q]);
    }
    for (const auto& [t, e] : mu3_acc) M.mu(3).set(t, e);
    for (const auto& [t, e] : mu4_acc) M.mu(4).set(t, e);
    for (const auto& [t, e] : k4_acc) a2.k4.set(t, e);
    return std::make_pair(std::move(M), std::move(a2));
  };

  auto residues = [&](const RationalVec& u) {
    auto [M, a2] = instantiate(u);
    RationalVec out;
    for (const auto& r : collect_jacobi_residues(M))
      for (const auto& [key, c] : r.value.coords()) out.push_back(c);
    for (const auto& r : collect_adjustment_residues(M, a2))
      for (const auto& [key, c] : r.value.coords()) out.push_back(c);
    return out;
  };
  // residue streams must align between probes: collect full coordinate
  // vectors instead of sparse supports
  auto residues_dense = [&](const RationalVec& u) {
    auto [M, a2] = instantiate(u);
    RationalVec out;
    auto flatten = [&](const GradedElement& e) {
      for (int i = 0; i < dg; ++i) out.push_back(e.coeff({0, i}));
      for (int i = 0; i < dh; ++i) out.push_back(e.coeff({-1, i}));
      for (int i = 0; i < dl; ++i) out.push_back(e.coeff({-2, i}));
    };
    for (const auto& r : collect_jacobi_residues(M)) flatten(r.value);
    for (const auto& r : collect_adjustment_residues(M, a2)) flatten(r.value);
    return out;
  };
  (void)residues;

  RationalVec zero_u(total, Rational(0));
  RationalVec r0 = residues_dense(zero_u);
  LinearSystem sys(static_cast<int>(total));
  std::vector<RationalVec> cols(total);
  for (size_t q = 0; q < total; ++q) {
    RationalVec e = zero_u;
    e[q] = 1;
    cols[q] = residues_dense(e);
  }
  for (size_t row = 0; row < r0.size(); ++row) {
    LinearEquation eq;
    for (size_t q = 0; q < total; ++q) {
      Rational coeff = cols[q][row] - r0[row];
      if (!is_zero(coeff)) eq.coeffs[static_cast<int>(q)] = coeff;
    }
    eq.rhs = -r0[row];
    if (!eq.coeffs.empty() || !is_zero(eq.rhs)) sys.add_equation(std::move(eq));
  }
  auto sol = sys.solve();
  if (!sol) {
    last_error = "no consistent mu3/kappa4";
    continue;
  }
  auto [M, a2] = instantiate(*sol);
  // honest post-check: the probes assumed affine dependence
  if (!check_homotopy_jacobi(M).ok()) {
    last_error = "solved mu3 violates homotopy Jacobi";
    continue;
  }
  return DerivedBracket{std::move(M), std::move(a2)};
  }
  (void)have_stage1;
  throw std::invalid_argument("derived bracket: " +
                              (last_error.empty() ? std::string("unsolvable") : last_error));
}

VerificationReport check_supergravity_shape(const LInfty3& L, const AdjustmentInf& adj) {
  VerificationReport rep("derived-shape");
  auto inner = check_adjustment_inf(L, adj);
  rep.merge(inner);
  return rep;
}

// ---------------------------------------------------------------------------
// fixture search

bool for_each_dgla_candidate(const std::function<bool(const DgLa&)>& accept) {
  // Deterministic staged search at dims (1,2,2,1) over integer structure
  // constants in [-2,2]. Basis: w (deg 0), x1,x2 (-1), y1,y2 (-2), z (-3).
  // Data: d x1 = w, d x2 = 0; [w,x_j] = A[.][j] x; d y_j = D[.][j] x;
  // d z = gamma[.] y; [w,y_j] = B[.][j] y; [w,z] = cz z;
  // [x_i,x_j] = S[.](pair ij) y (symmetric); [x_i,y_j] = P[i][j] z.
  // All dgLa axioms reduce to the integer identities below; the first
  // candidate with nonzero S, P and [w,x] wins and is re-verified.
  const std::array<long, 5> grid = {1, -1, 2, -2, 0};
  auto pair_index = [](int i, int j) { return i == j ? (i == 0 ? 0 : 2) : 1; };
  long A[2][2] = {{0, 0}, {0, 0}};
  long D[2][2] = {{0, 0}, {0, 0}};
  long B[2][2];
  long S[2][3];
  long P[2][2];
  long gam[2];
  const long alpha[2] = {1, 0};
  long cz = 0;
  for (long czv : grid) {
   cz = czv;
  for (long a21 : grid)
    for (long a22 : grid) {
      if (a22 == 0) continue;  // want a nonzero induced binary bracket
      A[1][0] = a21;
      A[1][1] = a22;
      for (long d21 : grid)
        for (long d22 : grid) {
          D[1][0] = d21;
          D[1][1] = d22;
          for (long g1 : grid)
            for (long g2 : grid) {
              gam[0] = g1;
              gam[1] = g2;
              if (D[0][0] * g1 + D[0][1] * g2 != 0) continue;  // d^2 on z
              if (D[1][0] * g1 + D[1][1] * g2 != 0) continue;
              for (long b11 : grid)
                for (long b12 : grid)
                  for (long b21 : grid)
                    for (long b22 : grid) {
                      B[0][0] = b11;
                      B[0][1] = b12;
                      B[1][0] = b21;
                      B[1][1] = b22;
                      // Leibniz(w,y): D B = A D
                      bool ok = true;
                      for (int k = 0; k < 2 && ok; ++k)
                        for (int j = 0; j < 2 && ok; ++j) {
                          long lhs = D[k][0] * B[0][j] + D[k][1] * B[1][j];
                          long rhs = A[k][0] * D[0][j] + A[k][1] * D[1][j];
                          if (lhs != rhs) ok = false;
                        }
                      if (!ok) continue;
                      // Leibniz(w,z): cz gamma = B gamma
                      for (int k = 0; k < 2 && ok; ++k)
                        if (B[k][0] * gam[0] + B[k][1] * gam[1] != cz * gam[k]) ok = false;
                      if (!ok) continue;
                      for (long s10 : grid)
                        for (long s11 : grid)
                          for (long s12 : grid)
                            for (long s20 : grid)
                              for (long s21 : grid)
                                for (long s22 : grid) {
                                  S[0][0] = s10;
                                  S[0][1] = s11;
                                  S[0][2] = s12;
                                  S[1][0] = s20;
                                  S[1][1] = s21;
                                  S[1][2] = s22;
                                  if (s10 == 0 && s11 == 0 && s12 == 0 && s20 == 0 &&
                                      s21 == 0 && s22 == 0)
                                    continue;
                                  // Leibniz(x,x): D S_ij = alpha_i A_. j + alpha_j A_. i
                                  bool oks = true;
                                  for (int i = 0; i < 2 && oks; ++i)
                                    for (int j = i; j < 2 && oks; ++j) {
                                      int p = pair_index(i, j);
                                      for (int k = 0; k < 2 && oks; ++k) {
                                        long lhs = D[k][0] * S[0][p] + D[k][1] * S[1][p];
                                        long rhs = alpha[i] * A[k][j] + alpha[j] * A[k][i];
                                        if (lhs != rhs) oks = false;
                                      }
                                    }
                                  if (!oks) continue;
                                  // Jacobi(w,x,x): B S_ij = A-twisted
                                  for (int i = 0; i < 2 && oks; ++i)
                                    for (int j = i; j < 2 && oks; ++j) {
                                      int p = pair_index(i, j);
                                      for (int k = 0; k < 2 && oks; ++k) {
                                        long lhs = B[k][0] * S[0][p] + B[k][1] * S[1][p];
                                        long rhs = 0;
                                        for (int m = 0; m < 2; ++m) {
                                          rhs += A[m][i] * S[k][pair_index(m, j)];
                                          rhs += A[m][j] * S[k][pair_index(i, m)];
                                        }
                                        if (lhs != rhs) oks = false;
                                      }
                                    }
                                  if (!oks) continue;
                                  for (long p11 : grid)
                                    for (long p12 : grid)
                                      for (long p21 : grid)
                                        for (long p22 : grid) {
                                          if (p11 == 0 && p12 == 0 && p21 == 0 && p22 == 0)
                                            continue;
                                          P[0][0] = p11;
                                          P[0][1] = p12;
                                          P[1][0] = p21;
                                          P[1][1] = p22;
                                          bool okp = true;
                                          // Leibniz(x,y): P_ij gam_m = alpha_i B_mj - D_kj S^m_ik
                                          for (int i = 0; i < 2 && okp; ++i)
                                            for (int j = 0; j < 2 && okp; ++j)
                                              for (int m = 0; m < 2 && okp; ++m) {
                                                long lhs = P[i][j] * gam[m];
                                                long rhs = alpha[i] * B[m][j];
                                                for (int k = 0; k < 2; ++k)
                                                  rhs -= D[k][j] * S[m][pair_index(i, k)];
                                                if (lhs != rhs) okp = false;
                                              }
                                          if (!okp) continue;
                                          // Leibniz(x,z): alpha_i cz = P_i. gam
                                          for (int i = 0; i < 2 && okp; ++i)
                                            if (P[i][0] * gam[0] + P[i][1] * gam[1] !=
                                                alpha[i] * cz)
                                              okp = false;
                                          if (!okp) continue;
                                          // d(y y): D^T P symmetric
                                          {
                                            long lhs = D[0][0] * P[0][1] + D[1][0] * P[1][1];
                                            long rhs = D[0][1] * P[0][0] + D[1][1] * P[1][0];
                                            if (lhs != rhs) okp = false;
                                          }
                                          if (!okp) continue;
                                          // Jacobi(w,x,y): cz P_ij = A_ki P_kj + B_kj P_ik
                                          for (int i = 0; i < 2 && okp; ++i)
                                            for (int j = 0; j < 2 && okp; ++j) {
                                              long rhs = 0;
                                              for (int k = 0; k < 2; ++k)
                                                rhs += A[k][i] * P[k][j] + B[k][j] * P[i][k];
                                              if (cz * P[i][j] != rhs) okp = false;
                                            }
                                          if (!okp) continue;
                                          // Jacobi(x,x,x)
                                          for (int i = 0; i < 2 && okp; ++i)
                                            for (int j = 0; j < 2 && okp; ++j)
                                              for (int k = 0; k < 2 && okp; ++k) {
                                                long sum = 0;
                                                for (int m = 0; m < 2; ++m) {
                                                  sum += S[m][pair_index(j, k)] * P[i][m];
                                                  sum += S[m][pair_index(i, j)] * P[k][m];
                                                  sum += S[m][pair_index(i, k)] * P[j][m];
                                                }
                                                if (sum != 0) okp = false;
                                              }
                                          if (!okp) continue;
                                          // assemble and re-verify through the axiom checker
                                          DgLa h;
                                          h.dim = {1, 2, 2, 1};
                                          h.d[1] = LinMap(1, 2);
                                          h.d[1].at(0, 0) = alpha[0];
                                          h.d[1].at(0, 1) = alpha[1];
                                          h.d[2] = LinMap(2, 2);
                                          for (int i = 0; i < 2; ++i)
                                            for (int j = 0; j < 2; ++j)
                                              h.d[2].at(i, j) = Rational(D[i][j]);
                                          h.d[3] = LinMap(2, 1);
                                          h.d[3].at(0, 0) = Rational(gam[0]);
                                          h.d[3].at(1, 0) = Rational(gam[1]);
                                          BilinMap b01(1, 2, 2);
                                          for (int i = 0; i < 2; ++i)
                                            for (int j = 0; j < 2; ++j)
                                              b01.at(0, j, i) = Rational(A[i][j]);
                                          h.bra[{0, 1}] = b01;
                                          BilinMap b02(1, 2, 2);
                                          for (int i = 0; i < 2; ++i)
                                            for (int j = 0; j < 2; ++j)
                                              b02.at(0, j, i) = Rational(B[i][j]);
                                          h.bra[{0, 2}] = b02;
                                          BilinMap b03(1, 1, 1);
                                          b03.at(0, 0, 0) = Rational(cz);
                                          h.bra[{0, 3}] = b03;
                                          BilinMap b11(2, 2, 2);
                                          for (int i = 0; i < 2; ++i)
                                            for (int j = 0; j < 2; ++j)
                                              for (int k = 0; k < 2; ++k)
                                                b11.at(i, j, k) =
                                                    Rational(S[k][pair_index(i, j)]);
                                          h.bra[{1, 1}] = b11;
                                          BilinMap b12(2, 2, 1);
                                          for (int i = 0; i < 2; ++i)
                                            for (int j = 0; j < 2; ++j)
                                              b12.at(i, j, 0) = Rational(P[i][j]);
                                          h.bra[{1, 2}] = b12;
                                          if (!check_dgla(h).ok()) continue;
                                          if (accept(h)) return true;
                                        }
                                }
                    }
            }
        }
    }
  }
  return false;
}

DgLa find_fix_dgla() {
  // Prefer a candidate whose derived structure has every alternator
  // component nonzero; fall back to the first valid one.
  std::optional<DgLa> first_valid;
  std::optional<DgLa> rich;
  int tried = 0;
  for_each_dgla_candidate([&](const DgLa& h) {
    if (!first_valid) first_valid = h;
    if (++tried > 40) return true;  // settle for the fallback
    try {
      DerivedBracket db = build_derived_bracket_linfty(h);
      bool rich_enough = !db.adj.k1.is_zero_map() && !db.adj.k2.is_zero_map() &&
                         !db.adj.k3.is_zero_map();
      if (rich_enough) {
        rich = h;
        return true;
      }
    } catch (const std::exception&) {
    }
    return false;
  });
  if (rich) return *rich;
  if (first_valid) return *first_valid;
  throw std::logic_error("dgla search exhausted without a candidate");
}

}  // namespace adj3
