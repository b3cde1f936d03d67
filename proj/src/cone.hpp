#pragma once

#include <string>
#include <vector>

#include "core.hpp"

// Rational polyhedral cones in both descriptions, kept synchronized on
// construction. Generators are primitive integer vectors; the H-description
// is split into inequality normals and equality normals (the latter cut out
// the linear span). Everything is exact; intended for ambient rank <= ~6.

namespace weyl {

struct VHRep {
  std::vector<IVec> lines;  // lineality basis, canonical (RREF-derived)
  std::vector<IVec> rays;   // extreme rays mod lineality, primitive, sorted
};

// Double description: generators of { x : ineq . x >= 0, eq . x = 0 }.
VHRep double_description(int dim, const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs);

class Cone {
 public:
  Cone() : dim_(0) {}

  static Cone from_generators(int dim, const std::vector<QVec>& gens);
  static Cone from_generators_int(int dim, const std::vector<IVec>& gens);
  // { x : ineq . x >= 0 for all given normals }
  static Cone from_inequalities(int dim, const std::vector<IVec>& ineqs,
                                const std::vector<IVec>& eqs = {});
  static Cone zero(int dim);
  static Cone full_space(int dim);

  int ambient_dim() const { return dim_; }
  int dim() const;            // dimension of the linear span
  int lineality_dim() const { return (int)lines_.size(); }
  bool is_zero() const { return rays_.empty() && lines_.empty(); }

  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<IVec>& lines() const { return lines_; }
  const std::vector<IVec>& ineq_normals() const { return ineqs_; }
  const std::vector<IVec>& eq_normals() const { return eqs_; }
  // rays plus +-(each lineality basis vector), sorted
  std::vector<IVec> generators() const;

  bool contains(const QVec& x) const;
  bool contains(const IVec& x) const { return contains(to_qvec(x)); }
  bool contains_cone(const Cone& o) const;
  bool equals(const Cone& o) const;

  Cone dual() const;
  Cone intersect(const Cone& o) const;
  // Preimage under f : Z^d -> Z^{ambient_dim} (matrix with ambient_dim rows).
  Cone preimage(const IMat& f) const;

  // Proper faces of codimension 1 inside the span.
  std::vector<Cone> facets() const;
  // All faces including the cone itself and its minimal face.
  std::vector<Cone> all_faces() const;
  bool is_face_of(const Cone& o) const;

  // Canonical serialization key (used for set semantics in fans).
  std::string key() const;

 private:
  int dim_;
  std::vector<IVec> rays_, lines_;   // canonical V-rep
  std::vector<IVec> ineqs_, eqs_;    // canonical H-rep
  void canonicalize_from_h(const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs);
  size_t rays_rank() const;
};

class Fan {
 public:
  Fan() : dim_(0) {}
  // Face-closes the given cones and checks pairwise intersections are faces.
  static Fan from_cones(int dim, const std::vector<Cone>& cones);

  int ambient_dim() const { return dim_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<Cone> maximal_cones() const;
  bool contains_cone_of(const QVec& x) const;  // x in support?
  bool operator==(const Fan& o) const;

 private:
  int dim_;
  std::vector<Cone> cones_;  // face-closed, sorted by key
};

// Every cone of f1 contained in a cone of f2, and the supports agree.
bool is_refinement(const Fan& f1, const Fan& f2);

}  // namespace weyl
