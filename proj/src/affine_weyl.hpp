#pragma once

#include <set>

#include "affine.hpp"

// W^aff = W (x) V_T with elements (w, eta) acting on V_T tensor Q by
// zeta |-> w(zeta + eta). Generators s_0..s_r; s_0 = (s_theta, -theta^vee).

namespace weyl {

struct AffineWeylElement {
  IMat w;     // action on V_T coordinates
  IVec eta;   // translation part, V_T coordinates
  std::vector<int> word;  // affine node indices 0..r
  int length = 0;

  QVec act(const QVec& zeta) const;
  bool same_element(const AffineWeylElement& o) const { return w == o.w && eta == o.eta; }
  std::string key() const;
};

// (w1,eta1)(w2,eta2) = (w1 w2, w2^{-1} eta1 + eta2)
AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);

// Simple affine reflections as elements; index 0..r.
std::vector<AffineWeylElement> affine_simple_reflections(const AffineRootDatum& ard);

// All elements of word length <= bound (BFS; lengths are BFS depths).
// Throws unsupported_error when the element count exceeds cap.
std::vector<AffineWeylElement> affine_weyl_enumerate(const AffineRootDatum& ard,
                                                     int length_bound, Int cap = 2000000);

// Iwahori-Matsumoto length of (w, eta) = t_{w eta} . w, cross-check for BFS:
// l = sum over positive roots of | <alpha, w eta> + [w^{-1} alpha < 0] |.
Int inversion_length(const AffineRootDatum& ard, const AffineWeylElement& el);

// Minimal-length representatives of W^aff / W_J among elements of length <=
// bound; J is a set of affine node indices spanning a finite subgroup
// (any proper subset of {0..r}).
std::vector<AffineWeylElement> coset_representatives(const AffineRootDatum& ard,
                                                     const std::set<int>& j, int length_bound,
                                                     Int cap = 2000000);

// The finite parabolic subgroup W_J (J proper).
std::vector<AffineWeylElement> parabolic_subgroup(const AffineRootDatum& ard,
                                                  const std::set<int>& j, Int cap = 2000000);

struct BirkhoffTriple {
  AffineWeylElement w1, w2, w3;  // minimal left rep, minimal right rep, W_J
};

// Index set of the B^- x B strata of Orbit(e_J): w1 in minimal reps of
// W^aff/W_J, w2 in minimal reps of W_J\W^aff, w3 in W_J, all lengths <= bound.
std::vector<BirkhoffTriple> birkhoff_strata_index(const AffineRootDatum& ard,
                                                  const std::set<int>& j, int length_bound,
                                                  Int cap = 2000000);

// Translation action of eta on affine characters for the form Q:
//   (n, lambda, h) |-> (n - lambda(eta) + (h/2) Q(eta,eta), lambda + h Q(eta,.), h)
AffineCharacter affine_weyl_translation_action(const QuadraticForm& q, const IVec& eta,
                                               const AffineCharacter& chi);

}  // namespace weyl
