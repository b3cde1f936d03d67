#pragma once

#include <map>

#include "root_datum.hpp"

namespace weyl {

// Exact weight multiplicities of the irreducible module V(lambda).
struct WeightMultiplicityTable {
  IVec lambda;                 // highest weight, X coordinates
  std::map<IVec, Int> mult;    // weight (X coords) -> multiplicity
  Int dimension() const;
};

// Freudenthal recursion, top-down by depth below lambda. lambda must be
// dominant integral.
WeightMultiplicityTable freudenthal_multiplicities(const RootDatum& rd, const IVec& lambda);

// W-invariant form on X x X (rational), normalized like basic_form; used by
// the recursion and exposed for tests.
std::vector<QVec> weight_form(const RootDatum& rd);

}  // namespace weyl
