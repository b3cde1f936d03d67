#pragma once

#include <set>
#include <string>
#include <vector>

#include "cone.hpp"
#include "core.hpp"
#include "quadform.hpp"

// Finite-type root data. Conventions:
//   cartan a_ij = <alpha_j, alpha_i^vee>  (row i indexed by coroots)
//   sc flavor: X = weight lattice in the fundamental-weight basis,
//              V_T = coroot lattice in the simple-coroot basis
//   ad flavor: X = root lattice in the simple-root basis,
//              V_T = coweight lattice in the fundamental-coweight basis
// In both flavors the chosen bases are dual, so <mu, eta> is the dot product
// of coordinate vectors.

namespace weyl {

enum class Flavor { SimplyConnected, Adjoint };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

struct RootDatum {
  char type = 'A';
  int rank = 0;
  Flavor flavor = Flavor::SimplyConnected;
  IMat cartan;                       // a_ij = <alpha_j, alpha_i^vee>
  std::vector<IVec> simple_roots;    // X coordinates
  std::vector<IVec> simple_coroots;  // V_T coordinates

  Int pair(const IVec& mu, const IVec& eta) const { return idot(mu, eta); }
  // X coordinates of a weight given in the simple-root basis.
  IVec weight_from_alpha(const IVec& alpha_coords) const;
  // simple-root coordinates of a weight given in X coordinates (rational).
  QVec alpha_from_weight(const IVec& mu) const;
};

// Cartan matrix of a supported irreducible type (A..G, rank bounds enforced).
IMat cartan_matrix(char type, int rank);
Int weyl_order(char type, int rank);

RootDatum build_root_datum(char type, int rank, Flavor flavor);

// Positive roots in simple-root coordinates, closed under reflections;
// sorted by (height, lex).
std::vector<IVec> positive_roots_alpha(const RootDatum& rd);
// Same roots in X coordinates.
std::vector<IVec> positive_roots(const RootDatum& rd);
// Highest root, simple-root coordinates / X coordinates.
IVec highest_root_alpha(const RootDatum& rd);
IVec highest_root(const RootDatum& rd);

struct WeylElement {
  IMat mat_x;             // action on X coordinates
  std::vector<int> word;  // reduced word in s_1..s_r (1-based indices)
};

// All Weyl elements (BFS by length). Throws unsupported_error if |W| > cap.
std::vector<WeylElement> weyl_group(const RootDatum& rd, Int order_cap);
// Action on V_T coordinates for a given X-action matrix: (M^T)^{-1}.
IMat coweight_action(const IMat& mat_x);

// Dominant chamber C = { v : alpha_i(v) >= 0 } in V_T.
Cone dominant_chamber(const RootDatum& rd);
// Primitive generators u_i of the chamber rays, indexed like the fundamental
// coweights (u_i is the primitive point on the ray through omega_i^vee).
std::vector<IVec> chamber_rays(const RootDatum& rd);

bool is_dominant(const RootDatum& rd, const IVec& lambda);
bool is_regular_dominant(const RootDatum& rd, const IVec& lambda);

// Normal fan of the weight polytope of V(lambda) for regular lambda: the
// fan of Weyl chambers { w(-C) }. Rejects non-regular lambda.
Fan torus_closure_fan(const RootDatum& rd, const IVec& lambda, Int order_cap = 2000000);

// J = { i : <alpha_i, eta> < 0 } for eta in the closure of -C; identifies
// the idempotent e_J reached along eta.
std::set<int> one_param_limit_J(const RootDatum& rd, const IVec& eta);

// W-invariant positive-definite form on V_T: Gram_ij = a_ij * d_j with
// integer d_j normalized so that min d_j = 1 (A1 -> [2]).
QuadraticForm basic_form(const RootDatum& rd);
// The d_j above (squared-length ratios of the simple coroots).
std::vector<Int> coroot_length_ratios(const IMat& cartan);

}  // namespace weyl
