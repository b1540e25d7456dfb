#pragma once

// Concrete group families. AddElt covers the additive family
// Z^a x Q^b x (Q^c mod Z^c) with the vector and torus parts allowed to be
// polynomial functions on a chart (constants are the degenerate case used
// during axiom sampling); MatElt covers exact rational matrix groups and
// FinElt finite groups given by a multiplication table.

#include <variant>
#include <vector>

#include "adj3/polyform.hpp"
#include "adj3/rational.hpp"

namespace adj3 {

struct AddShape {
  int lat = 0;
  int vec = 0;
  int tor = 0;
  int chart = 3;  // chart dimension for function-valued parts
  int alg_dim() const { return vec + tor; }
};

struct AddElt {
  std::vector<Int> lat;
  std::vector<PolyForm> vec;
  std::vector<PolyForm> tor;  // defined modulo constant integer vectors
};

AddElt add_identity(const AddShape& s);
AddElt add_mul(const AddElt& a, const AddElt& b);
AddElt add_inv(const AddElt& a);
// equality on the nose in lat/vec; modulo a constant integer on tor
bool add_eq(const AddElt& a, const AddElt& b);
std::string add_to_string(const AddElt& a);

// constant element from rational coordinates
AddElt add_const(const AddShape& s, const std::vector<Int>& lat,
                 const RationalVec& vec, const RationalVec& tor);

using MatElt = std::vector<RationalVec>;  // square, row-major

MatElt mat_identity(int n);
MatElt mat_mul(const MatElt& a, const MatElt& b);
MatElt mat_inv(const MatElt& a);  // throws if singular
bool mat_eq(const MatElt& a, const MatElt& b);
std::string mat_to_string(const MatElt& a);
RationalVec mat_apply(const MatElt& a, const RationalVec& v);

struct FinElt {
  int index = 0;
  auto operator<=>(const FinElt&) const = default;
};

// finite group by table: mul[i][j] = index of g_i g_j, identity at 0
struct FiniteTable {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  bool valid() const;
};

using GrpElt = std::variant<AddElt, MatElt, FinElt>;

std::string grp_to_string(const GrpElt& e);

}  // namespace adj3
