#pragma once

// 2-crossed modules of groups with Peiffer lifting, their Lie-algebra
// shadows, finite adjustments kappa_1..kappa_4 and the relation checkers:
// structure axioms, helper identities, adjustment relations and their
// partially/fully linearized versions, and the bridge to strict 3-term
// L-infinity algebras.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adj3/group.hpp"
#include "adj3/linfty.hpp"
#include "adj3/report.hpp"

namespace adj3 {

// small exact-vector helpers
RationalVec vzero(int n);
RationalVec vadd(const RationalVec& a, const RationalVec& b);
RationalVec vsub(const RationalVec& a, const RationalVec& b);
RationalVec vneg(const RationalVec& a);
RationalVec vscale(const Rational& c, const RationalVec& a);
bool vis_zero(const RationalVec& a);
std::string vec_to_string(const RationalVec& a);

// Dense linear / bilinear / trilinear maps over packed coordinates; they
// evaluate on PolyForm coordinate vectors so the same tensors serve constant
// group elements, group-valued functions and algebra-valued forms.
struct LinMap {
  int rows = 0, cols = 0;
  std::vector<Rational> c;  // c[r*cols + j]
  LinMap() = default;
  LinMap(int r, int k) : rows(r), cols(k), c(static_cast<size_t>(r) * k, Rational(0)) {}
  Rational& at(int r, int j) { return c[static_cast<size_t>(r) * cols + j]; }
  const Rational& at(int r, int j) const { return c[static_cast<size_t>(r) * cols + j]; }
  RationalVec apply(const RationalVec& v) const;
  std::vector<PolyForm> apply(const std::vector<PolyForm>& v, int chart) const;
  bool is_zero() const;
};

struct BilinMap {
  int da = 0, db = 0, dout = 0;
  std::vector<Rational> c;  // c[(i*db + j)*dout + k]
  BilinMap() = default;
  BilinMap(int a, int b, int out)
      : da(a), db(b), dout(out), c(static_cast<size_t>(a) * b * out, Rational(0)) {}
  Rational& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * db + j) * dout + k]; }
  const Rational& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * db + j) * dout + k];
  }
  RationalVec apply(const RationalVec& a, const RationalVec& b) const;
  std::vector<PolyForm> apply(const std::vector<PolyForm>& a,
                              const std::vector<PolyForm>& b, int chart) const;
  bool is_zero() const;
};

struct TrilinMap {
  int da = 0, db = 0, dc = 0, dout = 0;
  std::vector<Rational> c;
  TrilinMap() = default;
  TrilinMap(int a, int b, int cc, int out)
      : da(a), db(b), dc(cc), dout(out),
        c(static_cast<size_t>(a) * b * cc * out, Rational(0)) {}
  Rational& at(int i, int j, int k, int m) {
    return c[((static_cast<size_t>(i) * db + j) * dc + k) * dout + m];
  }
  const Rational& at(int i, int j, int k, int m) const {
    return c[((static_cast<size_t>(i) * db + j) * dc + k) * dout + m];
  }
  RationalVec apply(const RationalVec&, const RationalVec&, const RationalVec&) const;
  std::vector<PolyForm> apply(const std::vector<PolyForm>&, const std::vector<PolyForm>&,
                              const std::vector<PolyForm>&, int chart) const;
  bool is_zero() const;
};

// packed coordinates of an additive element: [lat..., vec..., tor...]
std::vector<PolyForm> add_coords(const AddShape& s, const AddElt& e);
// algebra coordinates: [vec..., tor...]
int add_alg_dim(const AddShape& s);

// Tensor description of an additive 2-crossed module: three additive groups
// with linear t-maps, lattice-driven action shifts and a bilinear lifting.
// Both the sampled axiom checks and the differential-cocycle machinery
// evaluate these tensors.
struct AdditiveTwoXM {
  AddShape L, H, G;
  LinMap tL;    // coords(L) -> coords(H)
  LinMap tH;    // coords(H) -> coords(G)
  BilinMap actH;  // coords(G) x lat(H) -> alg(H) shift
  BilinMap actL;  // coords(G) x lat(L) -> alg(L) shift
  BilinMap peif;  // coords(H) x coords(H) -> coords(L)
};

// Finite adjustment tensors over an additive 2-crossed module: linear in the
// group coordinates (hence unital) and linear in the algebra slots.
struct AdditiveAdjustment {
  BilinMap k1;   // coords(G) x alg(G) -> alg(H)
  BilinMap k2;   // coords(G) x alg(H) -> alg(L)
  BilinMap k3;   // coords(H) x alg(G) -> alg(L)
  TrilinMap k4;  // coords(G) x coords(G) x alg(G) -> alg(L)
};

struct GroupOps {
  std::function<GrpElt()> id;
  std::function<GrpElt(const GrpElt&, const GrpElt&)> mul;
  std::function<GrpElt(const GrpElt&)> inv;
  std::function<bool(const GrpElt&, const GrpElt&)> eq;
};

// exact linearization data of the groups and structure maps
struct LieShadow {
  int dim_l = 0, dim_h = 0, dim_g = 0;
  std::function<RationalVec(const RationalVec&)> t_l;  // l -> h
  std::function<RationalVec(const RationalVec&)> t_h;  // h -> g
  std::function<RationalVec(const GrpElt&, const RationalVec&)> g_on_h, g_on_l;
  std::function<RationalVec(const GrpElt&, const RationalVec&)> ad_g;    // Ad_g X
  std::function<RationalVec(const GrpElt&, const RationalVec&)> conj_h;  // h Y h^-1
  std::function<RationalVec(const RationalVec&, const RationalVec&)> x_on_h, x_on_l;
  std::function<RationalVec(const RationalVec&, const RationalVec&)> bra_g, bra_h;
  std::function<RationalVec(const GrpElt&, const RationalVec&)> adtri_h;  // h (X |> h^-1)
  std::function<RationalVec(const GrpElt&, const RationalVec&)> adtri_l;
  std::function<RationalVec(const RationalVec&, const GrpElt&)> pull_h;   // h^-1 (X |> h)
  std::function<RationalVec(const GrpElt&, const RationalVec&)> peif_hY;
  std::function<RationalVec(const RationalVec&, const GrpElt&)> peif_Yh;
  std::function<RationalVec(const RationalVec&, const RationalVec&)> peif_YY;
};

struct TwoCrossedModule {
  std::string name;
  GroupOps L, H, G;
  std::function<GrpElt(const GrpElt&)> t_L, t_H;
  std::function<GrpElt(const GrpElt&, const GrpElt&)> act_H, act_L;
  std::function<GrpElt(const GrpElt&, const GrpElt&)> peif;
  std::optional<LieShadow> lie;
  std::vector<GrpElt> sample_L, sample_H, sample_G;
  std::vector<RationalVec> alg_g, alg_h, alg_l;
  // present when built from additive tensors (used by the cocycle machinery)
  std::optional<AdditiveTwoXM> additive;
};

struct FiniteAdjustment {
  std::function<RationalVec(const GrpElt&, const RationalVec&)> k1;  // G x g -> h
  std::function<RationalVec(const GrpElt&, const RationalVec&)> k2;  // G x h -> l
  std::function<RationalVec(const GrpElt&, const RationalVec&)> k3;  // H x g -> l
  std::function<RationalVec(const GrpElt&, const GrpElt&, const RationalVec&)> k4;
  // exact linearizations in the group slots
  std::function<RationalVec(const RationalVec&, const RationalVec&)> lk1, lk2, lk3;
  std::function<RationalVec(const RationalVec&, const GrpElt&, const RationalVec&)> k4_ag;
  std::function<RationalVec(const GrpElt&, const RationalVec&, const RationalVec&)> k4_ga;
  std::function<RationalVec(const RationalVec&, const RationalVec&, const RationalVec&)> lk4;
  std::optional<AdditiveAdjustment> additive;
};

struct SamplePlan {
  int lattice_window = 2;
  int max_denominator = 4;
  std::size_t arity3_cap = 0;        // 0 = full Cartesian
  std::size_t arity4_tuples = 200;   // randomized sample for arity 4
  std::uint64_t seed = 17;
};

// ---------------------------------------------------------------------------

// derived action h |> l = l {t(l)^-1, h}
GrpElt derived_h_action(const TwoCrossedModule& X, const GrpElt& h, const GrpElt& l);

// structure axioms, on the stored samples
VerificationReport check_2xm_axioms(const TwoCrossedModule& X, const SamplePlan& plan);

// the helper-identity catalog (group level and half-linearized level)
VerificationReport check_helper_identities(const TwoCrossedModule& X, const SamplePlan& plan);

// adjustment relations for the finite maps
VerificationReport check_adjusted_2xm(const TwoCrossedModule& X,
                                      const FiniteAdjustment& k, const SamplePlan& plan);

// partially and fully linearized adjustment relations
VerificationReport check_linearized_adjustment(const TwoCrossedModule& X,
                                               const FiniteAdjustment& k,
                                               const SamplePlan& plan);

struct KappaPrimes {
  // k3''(g1,g2,h,X) and k3'(g,Y,X) (independent of the gauge-potential slot)
  std::function<RationalVec(const GrpElt&, const GrpElt&, const GrpElt&, const RationalVec&)> k3pp;
  std::function<RationalVec(const GrpElt&, const RationalVec&, const RationalVec&)> k3p;
};

KappaPrimes reconstruct_kappa_primes(const TwoCrossedModule& X, const FiniteAdjustment& k);

// elementary conditions on the reconstructed maps
VerificationReport check_kappa_prime_conditions(const TwoCrossedModule& X,
                                                const FiniteAdjustment& k,
                                                const SamplePlan& plan);

// strict 3-term image of the Lie shadow; the antisymmetric part of the
// lifting is dropped by construction
LInfty3 to_strict_linfty(const TwoCrossedModule& X);
AdjustmentInf linearized_adjustment_inf(const TwoCrossedModule& X, const FiniteAdjustment& k);

// agreement between the linearized finite relations and the bracket-level
// relations on the strict image
VerificationReport check_linearization_bridge(const TwoCrossedModule& X,
                                              const FiniteAdjustment& k,
                                              const SamplePlan& plan);

// fixtures
TwoCrossedModule make_trivial_2xm();
FiniteAdjustment zero_adjustment(const TwoCrossedModule& X);
// Heisenberg matrix group acting on Q^3; L trivial, lifting trivial. This
// 2-crossed module admits no adjustment (the kappa_1(t(h),X) relation is
// unsatisfiable), which the checkers demonstrate.
TwoCrossedModule make_heisenberg_2xm();

// generic wrapper: additive tensors -> TwoCrossedModule + FiniteAdjustment
TwoCrossedModule wrap_additive(const AdditiveTwoXM& data, const SamplePlan& plan,
                               const std::string& name);
FiniteAdjustment wrap_additive_adjustment(const TwoCrossedModule& X,
                                          const AdditiveAdjustment& adj);

}  // namespace adj3
