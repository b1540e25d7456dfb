#pragma once

// Builders for the example structures: categorified tori from lattice data
// with two compatible pairings, and adjusted 3-term algebras produced from a
// differential graded Lie algebra by the derived-bracket construction, with
// the undetermined structure solved exactly.

#include <optional>

#include "adj3/crossed.hpp"
#include "adj3/linfty.hpp"
#include "adj3/report.hpp"

namespace adj3 {

struct CategorifiedTorusData {
  int v0 = 0, v1 = 0, v2 = 0;  // vector space dims = lattice ranks
  BilinMap p0;                 // <.,.>_0 : L0 x L0 -> L1, integer entries
  BilinMap p1;                 // <.,.>_1 : L0 x L1 -> L2, integer entries
};

// compatibility <u,<v,w>_0>_1 + <v,<u,w>_0>_1 = 0 on basis triples;
// returns a witness triple on failure
std::optional<std::array<int, 3>> torus_compatibility_witness(const CategorifiedTorusData& d);

struct CategorifiedTorus {
  AdditiveTwoXM data;
  AdditiveAdjustment adj_data;
  TwoCrossedModule xm;
  FiniteAdjustment adj;
};

// throws construction-rejected (std::invalid_argument naming a witness) when
// the compatibility condition fails
CategorifiedTorus build_categorified_torus(const CategorifiedTorusData& d,
                                           const SamplePlan& plan);

// image of t: L -> H is central and lands in the kernel of t: H -> G
VerificationReport check_torus_extension_structure(const CategorifiedTorus& T,
                                                   const SamplePlan& plan);

// the standard example: rank-2 lattices with <v,w>_0 = (v1 w1, v2 w1) and
// <u,m>_1 = u1 m2 - u2 m1
CategorifiedTorusData ex_tor_data();

// ---------------------------------------------------------------------------

// dgLa concentrated in degrees 0..-3: dim[k] = dim of the degree-(-k) part
struct DgLa {
  std::array<int, 4> dim{0, 0, 0, 0};
  std::array<LinMap, 4> d;  // d[k]: degree -k -> -k+1, k = 1..3
  std::map<std::pair<int, int>, BilinMap> bra;  // [(a,b)] for a<=b, a+b<=3
  RationalVec bracket(int a, int b, const RationalVec& x, const RationalVec& y) const;
  RationalVec diff(int k, const RationalVec& x) const;
};

// d^2 = 0, graded Leibniz, graded Jacobi on basis tuples
VerificationReport check_dgla(const DgLa& h);

struct DerivedBracket {
  LInfty3 L;
  AdjustmentInf adj;
};

// L_{-k} = h_{-k-1}; mu1 = d, mu2 the antisymmetrized derived bracket,
// kappa_1..3 the bracket components; mu3 (and kappa_4) are solved exactly so
// that the homotopy Jacobi identities and the adjustment relations hold.
// Throws when the dgLa violates its axioms or no solution exists.
DerivedBracket build_derived_bracket_linfty(const DgLa& h);

// re-runs the bracket-level adjustment relations on a derived structure
VerificationReport check_supergravity_shape(const LInfty3& L, const AdjustmentInf& adj);

// deterministic staged search over integer structure constants in [-2,2]
// at dims (1,2,2,1): calls accept on every candidate satisfying the dgLa
// axioms, stopping when it returns true
bool for_each_dgla_candidate(const std::function<bool(const DgLa&)>& accept);

// first candidate whose derived structure has all alternator components
// nonzero (falls back to the first valid candidate)
DgLa find_fix_dgla();

}  // namespace adj3
