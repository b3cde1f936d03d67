#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affine.hpp"
#include "cone.hpp"
#include "root_datum.hpp"

// Combinatorial data of wonderful (stacky) compactifications: the chamber
// stacky fan (C', beta), the cone C_Delta with its dual-generator
// certificate, validity of candidate embedding fans, monoid lifts, orbit
// posets and Picard presentations.

namespace weyl {

struct StackyFan {
  Fan fan;    // fan in the source lattice Z^k
  IMat beta;  // source -> V_T, columns are the images of the basis
};

// (C' = standard orthant in Z^r, beta : e_i |-> u_i).
StackyFan weyl_chamber_stacky_fan(const RootDatum& rd);

// Torsion of coker(beta); beta must have finite cokernel.
FiniteAbelianGroup z_beta(const StackyFan& sf);

struct CDeltaResult {
  Cone c_delta;                       // in V_T + Z^r
  Cone dual;                          // dual_cone(c_delta)
  std::vector<IVec> expected_dual_generators;  // {(0,a_i)} u {+-(omega_i,w_i)}, primitive
  bool certificate_ok = false;        // dual == cone(expected), all primitive
  int dual_lineality_dim = 0;
};

// C_Delta = preimage of the antidiagonal cone {(-c, c) : c in C} under
// (v, x) |-> (v, beta x); equals the graph cone on {(-u_i, e_i)}.
CDeltaResult c_delta(const RootDatum& rd);

enum class EmbeddingFlavor { Adjoint, Stacky };

struct EmbeddingReport {
  bool valid = false;
  std::string first_violation;  // empty when valid
};

// Validity of a candidate embedding fan: support inside the negative chamber
// (finite) or the cone over the negative alcove (affine); for the stacky
// flavor additionally every lattice point of the support must lie in the
// monoid generated by the chamber/alcove ray generators.
EmbeddingReport check_embedding_fan(const Fan& fan, const RootDatum& rd, EmbeddingFlavor flavor);
EmbeddingReport check_embedding_fan_affine(const Fan& fan, const AffineRootDatum& ard,
                                           EmbeddingFlavor flavor);

// Solve beta . l = beta_p with l(M') inside the orthant; fails when some
// generator of M' does not land in the chamber monoid M.
std::optional<IMat> monoid_lift(const IMat& beta_p, const std::vector<IVec>& mp_generators,
                                const RootDatum& rd);

struct OrbitPosetElement {
  std::vector<int> j;      // sorted index set
  std::string levi_type;   // type of the subdiagram on the complement of j
  bool is_divisor = false;
  int center_torus_rank = 0;
  std::string stabilizer_shape;  // "T(J).S(J)" descriptor
};

struct OrbitPoset {
  bool affine = false;
  int rank = 0;  // r
  std::vector<OrbitPosetElement> elements;       // sorted by (size, lex)
  std::vector<std::pair<int, int>> cover_relations;  // indices into elements
  // closure order: J <= J' iff J subset of J' (empty set = open orbit)
  static bool leq(const std::vector<int>& a, const std::vector<int>& b);
};

OrbitPoset orbit_poset(const RootDatum& rd);
OrbitPoset orbit_poset_affine(const AffineRootDatum& ard);

struct StabilizerDescriptor {
  std::vector<int> j;
  std::string levi_type;        // L_J on the complement of J
  int center_torus_rank = 0;    // dim of the center torus of L_J
  std::string shape;            // Delta(L_J) x| (U_J x U_J^-) with T(J) = Z(L_J)^2
};

StabilizerDescriptor orbit_stabilizer_descriptor(const AffineRootDatum& ard,
                                                 const std::set<int>& j);

struct PicardPresentation {
  int free_rank = 0;
  FiniteAbelianGroup torsion;
  std::vector<std::string> divisor_labels;
};

PicardPresentation picard_presentation(const RootDatum& rd, EmbeddingFlavor flavor);
PicardPresentation picard_presentation_affine(const AffineRootDatum& ard,
                                              EmbeddingFlavor flavor);

// Alcove-vertex ray map: Z^{r+1} -> V_T + Z, e_j |-> primitive (eta_j, 1).
IMat alcove_vertex_ray_map(const AffineRootDatum& ard);

// Monoid membership: is target a nonnegative integer combination of the
// columns of gens (columns linearly independent)?
bool in_monoid(const IMat& gens_cols, const IVec& target);

}  // namespace weyl
