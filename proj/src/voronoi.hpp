#pragma once

#include <string>
#include <vector>

#include "cone.hpp"
#include "core.hpp"
#include "quadform.hpp"

// Lattice combinatorics of a positive-definite integral form Q on V_T = Z^n:
// Voronoi/Delaunay cells, relevant vectors, the exponent function and its
// minimizer sets, the loop-torus fan (cone over the Voronoi subdivision at
// height 1), and the central-extension cocycle data.

namespace weyl {

// Torsion of coker(Q : V_T -> X); Q positive definite integral.
FiniteAbelianGroup z_q(const QuadraticForm& q);

struct CocycleValue {
  IVec character_weight;  // Q(eta, .) in X coordinates
  Int character_value = 0;  // Q(eta, H)
  Rat central_exponent;     // Q(eta, eta)/2
};

CocycleValue cocycle_eval(const QuadraticForm& q, const IVec& eta, const IVec& h);

struct LTWeightAction {
  IVec new_weight;    // mu + Q(eta)
  IVec t_character;   // the torus character mu (symbolic)
  Rat u_exponent;     // Q*(mu, mu)/2 with Q*(Q a, Q b) = Q(a, b)
};

// Action of (u, t, eta) on the weight mu of V_1; mu must lie in Q(V_T).
LTWeightAction lt_weight_action(const QuadraticForm& q, const IVec& eta, const IVec& mu);

// f(t, beta; eta) = t Q(eta,eta)/2 + Q(beta, eta); strictly convex, t > 0.
Rat exponent_f(const QuadraticForm& q, Int t, const IVec& beta, const IVec& eta);

// All lattice points x with |x - center|_Q^2 <= radius2 (exact).
std::vector<IVec> enumerate_ball(const QuadraticForm& q, const QVec& center, const Rat& radius2);
// Lattice points nearest to target; certified by a shrinking ball search.
std::vector<IVec> nearest_lattice_points(const QuadraticForm& q, const QVec& target);

// argmin of exponent_f over the lattice; equals the nearest points to -beta/t.
std::vector<IVec> minimizer_set(const QuadraticForm& q, Int t, const IVec& beta);

// Voronoi-relevant vectors: v with {+-v} the strict minima of v + 2 V_T.
std::vector<IVec> relevant_vectors(const QuadraticForm& q);

struct VoronoiCell {
  IVec center;
  // facet: Q(x, v) <= rhs, one per relevant vector v (shifted to the center)
  struct Facet {
    IVec vector;
    Rat rhs;
  };
  std::vector<Facet> facets;
  std::vector<QVec> vertices;  // rank <= 3 only, sorted

  bool contains(const QuadraticForm& q, const QVec& x) const;
};

VoronoiCell voronoi_cell(const QuadraticForm& q, const IVec& center);

struct DelaunayCell {
  QVec witness;
  Rat radius2;
  std::vector<IVec> vertices;
};

DelaunayCell delaunay_cell(const QuadraticForm& q, const QVec& p);

struct LTFan {
  QuadraticForm q;
  Int window = 0;
  Fan fan;  // in V_T + Z, loop-rotation coordinate last, cells at height 1
  std::vector<IVec> rays;  // primitive ray generators, sorted
};

// Cone over the Voronoi cells with centers |n|_inf <= window, at height 1.
LTFan lt_fan(const QuadraticForm& q, Int window);

struct LTCheckReport {
  bool ok = false;
  Int points_checked = 0;
  Int class_count = 0;
  std::string failure;  // first mismatch if any
};

// Executable content of the loop-torus fan theorem: minimizer_set(Q,t,beta)
// equals the set of Voronoi cells of V_T containing -beta/t, for all beta in
// the window; classes C(beta) then match the nearest-cell classification.
LTCheckReport lt_fan_vs_minimizers_check(const QuadraticForm& q, Int t, Int window);

}  // namespace weyl
