#pragma once

#include "core.hpp"

// Positive-definite integral symmetric form on a cocharacter lattice, viewed
// also as the lattice map V_T -> X, eta |-> Q(eta, .). Coordinates of X are
// assumed dual to those of V_T, so the matrix of the map is the Gram matrix.

namespace weyl {

class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(IMat gram);

  const IMat& gram() const { return gram_; }
  int rank() const { return gram_.rows(); }

  Int eval(const IVec& a, const IVec& b) const;   // Q(a, b)
  Rat eval(const QVec& a, const QVec& b) const;
  IVec weight_of(const IVec& eta) const;          // Q(eta, .) in X coords
  Rat norm_half(const IVec& eta) const { return Rat(eval(eta, eta), 2); }

 private:
  IMat gram_;
};

}  // namespace weyl
