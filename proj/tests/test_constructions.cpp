#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adj3/constructions.hpp"

using namespace adj3;

TEST_CASE("compatibility condition accepts the standard pairings and rejects bad ones") {
  auto d = ex_tor_data();
  CHECK_FALSE(torus_compatibility_witness(d).has_value());

  // <u,<v,w>_0>_1 = w1 (u1 v2 - u2 v1), antisymmetric in (u,v): spot value
  // on basis: u=e1,v=e2,w=e1 gives 1; the rejected rank-1 example:
  CategorifiedTorusData bad;
  bad.v0 = 1;
  bad.v1 = 1;
  bad.v2 = 1;
  bad.p0 = BilinMap(1, 1, 1);
  bad.p0.at(0, 0, 0) = 1;  // <v,w>_0 = v w
  bad.p1 = BilinMap(1, 1, 1);
  bad.p1.at(0, 0, 0) = 1;  // <u,m>_1 = u m
  auto w = torus_compatibility_witness(bad);
  REQUIRE(w.has_value());
  CHECK(*w == std::array<int, 3>{0, 0, 0});
  CHECK_THROWS_AS(build_categorified_torus(bad, SamplePlan{}), std::invalid_argument);
}

TEST_CASE("categorified torus passes the two-crossed-module stack") {
  SamplePlan plan;
  auto T = build_categorified_torus(ex_tor_data(), plan);
  CHECK(check_2xm_axioms(T.xm, plan).ok());
  CHECK(check_helper_identities(T.xm, plan).ok());
  auto adj_rep = check_adjusted_2xm(T.xm, T.adj, plan);
  if (!adj_rep.ok()) {
    auto f = adj_rep.first_failure();
    INFO(f.relation << " @ " << f.instance << " -> " << f.residue);
  }
  CHECK(adj_rep.ok());
  CHECK(check_linearized_adjustment(T.xm, T.adj, plan).ok());
  CHECK(check_kappa_prime_conditions(T.xm, T.adj, plan).ok());
  CHECK(check_torus_extension_structure(T, plan).ok());
  auto bridge = check_linearization_bridge(T.xm, T.adj, plan);
  CHECK(bridge.ok());
}

TEST_CASE("torus strict image is abelian with nonzero inherited adjustment") {
  SamplePlan plan;
  auto T = build_categorified_torus(ex_tor_data(), plan);
  auto L = to_strict_linfty(T.xm);
  CHECK(L.is_abelian());
  auto lin = linearized_adjustment_inf(T.xm, T.adj);
  CHECK_FALSE(lin.k1.is_zero_map());
  CHECK_FALSE(lin.k4.is_zero_map());
  CHECK(check_adjustment_inf(L, lin).ok());
  CHECK(check_brst_truncation(L, lin).ok());
}

TEST_CASE("derived action and the finite kappa3 relation on the torus") {
  SamplePlan plan;
  auto T = build_categorified_torus(ex_tor_data(), plan);
  // t(l1) |> l2 = l1 l2 l1^-1 (abelian L: the derived action is trivial on
  // sampled arguments only when the lifting part vanishes; check the law)
  for (const auto& l1 : T.xm.sample_L)
    for (const auto& l2 : T.xm.sample_L) {
      auto lhs = derived_h_action(T.xm, T.xm.t_L(l1), l2);
      auto rhs = T.xm.L.mul(T.xm.L.mul(l1, l2), T.xm.L.inv(l1));
      CHECK(T.xm.L.eq(lhs, rhs));
    }
}

TEST_CASE("mutating the torus structure or adjustment is detected") {
  SamplePlan plan;
  auto base = ex_tor_data();

  SUBCASE("pairing entry breaks the lifting axioms") {
    auto T = build_categorified_torus(base, plan);
    // mutate the action tensor only (structure no longer matches lifting)
    T.data.actH.at(0, 0, 0) += 1;
    auto Xm = wrap_additive(T.data, plan, "mutated-torus");
    CHECK_FALSE(check_2xm_axioms(Xm, plan).ok());
  }
  SUBCASE("kappa3 mutation breaks the adjustment relations") {
    auto T = build_categorified_torus(base, plan);
    T.adj_data.k3.at(2, 0, 0) += 1;  // vec-part slot of H
    auto bad = wrap_additive_adjustment(T.xm, T.adj_data);
    CHECK_FALSE(check_adjusted_2xm(T.xm, bad, plan).ok());
  }
  SUBCASE("kappa4 dropped is caught") {
    auto T = build_categorified_torus(base, plan);
    T.adj_data.k4 = TrilinMap(2, 2, 2, 1);
    auto bad = wrap_additive_adjustment(T.xm, T.adj_data);
    auto rep = check_adjusted_2xm(T.xm, bad, plan);
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("t sending the L lattice into the H lattice breaks the extension") {
    auto T = build_categorified_torus(base, plan);
    T.data.tL.at(0, 0) = 1;  // lat(L) -> lat(H) block
    auto Xm = wrap_additive(T.data, plan, "mutated-t");
    CategorifiedTorus Tm = T;
    Tm.xm = Xm;
    CHECK_FALSE(check_torus_extension_structure(Tm, plan).ok());
  }
}

TEST_CASE("dgla fixture search and axioms") {
  DgLa h = find_fix_dgla();
  CHECK(check_dgla(h).ok());
  // mutate a bracket entry: Jacobi or Leibniz must fail
  DgLa bad = h;
  bad.bra[{1, 1}].at(0, 0, 0) += 1;
  CHECK_FALSE(check_dgla(bad).ok());
}

TEST_CASE("derived bracket structure passes everything") {
  DgLa h = find_fix_dgla();
  auto db = build_derived_bracket_linfty(h);
  CHECK(check_homotopy_jacobi(db.L).ok());
  CHECK(check_adjustment_inf(db.L, db.adj).ok());
  CHECK(check_brst_truncation(db.L, db.adj).ok());
  CHECK(check_supergravity_shape(db.L, db.adj).ok());
  CHECK_FALSE(db.adj.k1.is_zero_map());
  CHECK_FALSE(db.adj.k2.is_zero_map());
  CHECK_FALSE(db.adj.k3.is_zero_map());
  // the Weil differential of the solved structure is nilquadratic
  auto W = build_weil(db.L);
  CHECK(check_derivation_squares_to_zero(*W.w_gens, *W.d_w).ok());
}

TEST_CASE("abelian dgla gives the abelian structure with zero adjustment") {
  DgLa h;
  h.dim = {1, 2, 2, 1};
  h.d[1] = LinMap(1, 2);
  h.d[2] = LinMap(2, 2);
  h.d[3] = LinMap(2, 1);
  REQUIRE(check_dgla(h).ok());
  auto db = build_derived_bracket_linfty(h);
  CHECK(db.L.is_abelian());
  CHECK(db.adj.k1.is_zero_map());
  CHECK(db.adj.k2.is_zero_map());
  CHECK(check_adjustment_inf(db.L, db.adj).ok());
}

TEST_CASE("degree range is enforced") {
  // a "dgLa" with support below degree -3 cannot be encoded in this shape;
  // the builder rejects an axiom violation instead
  DgLa h;
  h.dim = {1, 2, 2, 1};
  h.d[1] = LinMap(1, 2);
  h.d[2] = LinMap(2, 2);
  h.d[3] = LinMap(2, 1);
  h.d[2].at(0, 0) = 1;
  h.d[1].at(0, 0) = 1;  // d^2 != 0
  CHECK_FALSE(check_dgla(h).ok());
  CHECK_THROWS_AS(build_derived_bracket_linfty(h), std::invalid_argument);
}

TEST_CASE("mis-signing kappa1 in the curvature H breaks the F-Bianchi") {
  // The mutation lives in the curvature formula: computing H with the wrong
  // kappa1 sign while checking the identities with the true adjustment
  // leaves a residue -2 mu1(kappa1(A,F)) in the first identity.
  DgLa h = find_fix_dgla();
  auto db = build_derived_bracket_linfty(h);
  AdjustmentInf bad = db.adj;
  MultilinearMap flipped(2, -1);
  for (const auto& [t, v] : db.adj.k1.values()) flipped.set(t, -v);
  bad.k1 = flipped;
  std::mt19937_64 rng(99);
  const int n = 3;
  bool detected = false;
  for (int trial = 0; trial < 4 && !detected; ++trial) {
    LocalConnection conn;
    conn.A = random_valued_form(rng, db.L.dim_g(), n, 1, 2, 3);
    conn.B = random_valued_form(rng, db.L.dim_h(), n, 2, 2, 3);
    conn.C = random_valued_form(rng, db.L.dim_l(), n, 3, 2, 3);
    auto cur = compute_curvatures(db.L, bad, conn);  // H built with bad kappa1
    ValuedForm b1 = cur.F.d() + lx_mu2(db.L, 0, 0, conn.A, cur.F) -
                    lx_mu1_h(db.L, lx_k1(db.adj, conn.A, cur.F, db.L.dim_h())) -
                    lx_mu1_h(db.L, cur.H);
    if (!b1.is_zero()) detected = true;
  }
  CHECK(detected);
}

TEST_CASE("Bianchi replay on the derived fixture") {
  DgLa h = find_fix_dgla();
  auto db = build_derived_bracket_linfty(h);
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 5; ++trial) {
    LocalConnection conn;
    conn.A = random_valued_form(rng, db.L.dim_g(), 3, 1, 2, 3);
    conn.B = random_valued_form(rng, db.L.dim_h(), 3, 2, 2, 3);
    conn.C = random_valued_form(rng, db.L.dim_l(), 3, 3, 2, 3);
    auto rep = check_bianchi_inf(db.L, db.adj, conn);
    if (!rep.ok()) {
      auto f = rep.first_failure();
      INFO(f.relation << " " << f.residue);
    }
    CHECK(rep.ok());
    CHECK(check_gauge_consistency(db.L, db.adj, conn, GaugeParams{
      random_valued_form(rng, db.L.dim_g(), 3, 0, 2, 2),
      random_valued_form(rng, db.L.dim_h(), 3, 1, 2, 2),
      random_valued_form(rng, db.L.dim_l(), 3, 2, 2, 2),
      ValuedForm(db.L.dim_h(), 3), ValuedForm(db.L.dim_l(), 3),
      ValuedForm(db.L.dim_l(), 3)}).ok());
  }
}
