#pragma once

#include <string>
#include <vector>

#include "quadform.hpp"
#include "root_datum.hpp"

// Affine root data built on a finite RootDatum: alcove, affine Dynkin
// diagram, parahoric Levi types and the center quotients Z_j. Node 0 is the
// affine node; nodes 1..r are the finite ones.

namespace weyl {

// Character of the torus C* x T x C*_c, written (n, lambda, h). The n
// component is kept rational so the level-h action never truncates.
struct AffineCharacter {
  Rat n;        // loop-rotation weight
  IVec lambda;  // finite part, X coordinates
  Int h = 0;    // level

  bool operator==(const AffineCharacter& o) const {
    return n == o.n && lambda == o.lambda && h == o.h;
  }
};

struct AffineRootDatum {
  RootDatum base;
  IVec theta;        // highest root, X coordinates
  IVec theta_alpha;  // highest root in simple-root coordinates (the marks)
  IVec theta_covee;  // theta^vee in V_T coordinates
  IVec marks;        // n_0 = 1, n_1..n_r
  IVec comarks;      // n_0^vee = 1, ...
  IMat affine_cartan;  // (r+1) x (r+1), node 0 first

  int nodes() const { return base.rank + 1; }
};

AffineRootDatum build_affine_root_datum(const RootDatum& rd);

// [(1,-theta,0), (0,alpha_1,0), ..., (0,alpha_r,0)]
std::vector<AffineCharacter> affine_simple_roots(const AffineRootDatum& ard);

// Affine linear form c + <l, .> on V_T (x) Q.
struct AffineForm {
  Rat constant;
  IVec linear;  // X coordinates, paired with V_T

  Rat value(const QVec& zeta) const;
};

struct Alcove {
  std::vector<AffineForm> walls;  // indexed by node 0..r; wall i is alpha_i >= 0
  std::vector<QVec> vertices;     // vertex j has alpha_j > 0, alpha_i = 0 else
};

Alcove alcove(const AffineRootDatum& ard);
// (j, eta_j) pairs, j = 0..r.
std::vector<std::pair<int, QVec>> alcove_vertices(const AffineRootDatum& ard);

struct DiagramBond {
  int from, to;   // from < to
  int multiplicity;  // a_ij * a_ji
  int direction;  // 0 symmetric, +1 arrow from->to (to is shorter), -1 reverse
  bool operator==(const DiagramBond& o) const {
    return from == o.from && to == o.to && multiplicity == o.multiplicity &&
           direction == o.direction;
  }
};

struct AffineDynkinDiagram {
  int nodes = 0;
  std::vector<DiagramBond> bonds;
  std::vector<std::vector<int>> automorphisms;  // node permutations, sorted
};

AffineDynkinDiagram affine_dynkin(const AffineRootDatum& ard);

// Finite Dynkin type of a Cartan matrix (possibly reducible), e.g. "A1xA1",
// "B2"; "T" for the empty matrix. Throws if not of finite type.
std::string finite_type_name(const IMat& cartan);
// Principal submatrix on the given node subset.
IMat principal_submatrix(const IMat& m, const std::vector<int>& nodes);

// Levi type of the standard maximal parahoric P_j: diagram with node j
// deleted.
std::string parahoric_levi_type(const AffineRootDatum& ard, int j);

// Z_j = Z(L_j)/Z(G), computed as (root lattice) / (sublattice spanned by the
// restrictions of the simple affine roots with node j removed).
FiniteAbelianGroup levi_center_quotient(const AffineRootDatum& ard, int j);

}  // namespace weyl
