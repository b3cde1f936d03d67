#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cone.hpp"

using namespace weyl;

namespace {
Cone orthant(int n) {
  std::vector<IVec> ineqs;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    ineqs.push_back(e);
  }
  return Cone::from_inequalities(n, ineqs);
}
}  // namespace

TEST_CASE("orthant round trip") {
  Cone c = orthant(2);
  CHECK(c.rays() == std::vector<IVec>{{0, 1}, {1, 0}});
  CHECK(c.lines().empty());
  CHECK(c.dim() == 2);
  CHECK(c.contains(IVec{3, 5}));
  CHECK(!c.contains(IVec{-1, 0}));
  // self-dual
  CHECK(c.dual().equals(c));
}

TEST_CASE("dual cone examples") {
  // cone<(1,0),(1,2)> -> cone<(0,1),(2,-1)>
  Cone c = Cone::from_generators_int(2, {{1, 0}, {1, 2}});
  Cone d = c.dual();
  CHECK(d.rays() == std::vector<IVec>{{0, 1}, {2, -1}});
  // {0} in rank n -> full space
  Cone z = Cone::zero(3);
  CHECK(z.dim() == 0);
  Cone f = z.dual();
  CHECK(f.dim() == 3);
  CHECK(f.lineality_dim() == 3);
  CHECK(f.rays().empty());
}

TEST_CASE("dual dual is identity on random cones") {
  std::mt19937 rng(23);
  for (int it = 0; it < 120; ++it) {
    int n = 2 + (int)(rng() % 2);  // 2D and 3D
    int k = 1 + (int)(rng() % 5);
    std::vector<IVec> gens;
    for (int i = 0; i < k; ++i) {
      IVec v(n);
      bool zero = true;
      for (auto& x : v) {
        x = (Int)(rng() % 9) - 4;
        if (x != 0) zero = false;
      }
      if (!zero) gens.push_back(v);
    }
    Cone c = Cone::from_generators_int(n, gens);
    CHECK(c.dual().dual().equals(c));
    // H and V representations describe the same set: generators satisfy
    // the normals, and each normal is nonnegative on all generators
    for (const auto& g : c.generators()) {
      for (const auto& q : c.ineq_normals()) CHECK(idot(q, g) >= 0);
      for (const auto& e : c.eq_normals()) CHECK(idot(e, g) == 0);
    }
  }
}

TEST_CASE("cone with lineality") {
  // half-plane x + y >= 0 in rank 2
  Cone h = Cone::from_inequalities(2, {{1, 1}});
  CHECK(h.dim() == 2);
  CHECK(h.lineality_dim() == 1);
  CHECK(h.contains(IVec{5, -5}));
  CHECK(h.contains(IVec{-5, 5}));
  CHECK(!h.contains(IVec{-1, 0}));
  // a full line given by generators v, -v
  Cone l = Cone::from_generators_int(2, {{1, 2}, {-1, -2}});
  CHECK(l.lineality_dim() == 1);
  CHECK(l.rays().empty());
}

TEST_CASE("cone preimage") {
  // identity preimage
  Cone c = orthant(2);
  CHECK(c.preimage(IMat::identity(2)).equals(c));
  // f : Z^2 -> Z, (x,y) |-> x+y ; preimage of R>=0 is the half-plane
  Cone ray = Cone::from_inequalities(1, {{1}});
  IMat f(1, 2);
  f.at(0, 0) = 1;
  f.at(0, 1) = 1;
  Cone pre = ray.preimage(f);
  CHECK(pre.equals(Cone::from_inequalities(2, {{1, 1}})));
  // preimage of {0} under injective map is {0}
  IMat inj(2, 1);
  inj.at(0, 0) = 1;
  inj.at(1, 0) = 2;
  CHECK(Cone::zero(2).preimage(inj).equals(Cone::zero(1)));
  // dimension mismatch rejected
  CHECK_THROWS_AS(ray.preimage(IMat::identity(2)), config_error);
}

TEST_CASE("preimage commutes with dual in the adjoint sense") {
  std::mt19937 rng(37);
  for (int it = 0; it < 60; ++it) {
    int n = 2, m = 2;
    IMat f(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) f.at(i, j) = (Int)(rng() % 7) - 3;
    std::vector<IVec> gens;
    for (int i = 0; i < 3; ++i) {
      IVec v{(Int)(rng() % 9) - 4, (Int)(rng() % 9) - 4};
      if (v[0] || v[1]) gens.push_back(v);
    }
    if (gens.empty()) continue;
    Cone c = Cone::from_generators_int(n, gens);
    Cone lhs = c.preimage(f).dual();
    // f^T(C dual) subset of (f^{-1} C) dual
    IMat ft = f.transpose();
    std::vector<QVec> pushed;
    for (const auto& g : c.dual().generators()) pushed.push_back(to_qvec(ft.apply(g)));
    Cone rhs = Cone::from_generators(m, pushed);
    CHECK(lhs.contains_cone(rhs));
    // equality when f is surjective (rank 2 here)
    std::vector<QVec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(to_qvec(f.row(i)));
    if (rank_of(rows) == n) CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("facets and faces") {
  Cone c = orthant(3);
  auto fs = c.facets();
  CHECK(fs.size() == 3);
  auto all = c.all_faces();
  CHECK(all.size() == 8);  // 1 + 3 + 3 + 1
  Cone ray = Cone::from_generators_int(3, {{1, 0, 0}});
  CHECK(ray.is_face_of(c));
  Cone inner = Cone::from_generators_int(3, {{1, 1, 1}});
  CHECK(!inner.is_face_of(c));
}

TEST_CASE("fan construction and refinement") {
  // fan of the two halves of the plane split by the y-axis
  Cone right = Cone::from_generators_int(2, {{1, 0}, {0, 1}, {0, -1}});
  Cone left = Cone::from_generators_int(2, {{-1, 0}, {0, 1}, {0, -1}});
  Fan halves = Fan::from_cones(2, {right, left});
  CHECK(halves.maximal_cones().size() == 2);

  Cone q1 = Cone::from_generators_int(2, {{1, 0}, {0, 1}});
  Cone q2 = Cone::from_generators_int(2, {{0, 1}, {-1, 0}});
  Cone q3 = Cone::from_generators_int(2, {{-1, 0}, {0, -1}});
  Cone q4 = Cone::from_generators_int(2, {{0, -1}, {1, 0}});
  Fan quadrants = Fan::from_cones(2, {q1, q2, q3, q4});

  CHECK(is_refinement(quadrants, halves));
  CHECK(!is_refinement(halves, quadrants));
  CHECK(is_refinement(quadrants, quadrants));

  // subdivided orthant vs orthant
  Cone low = Cone::from_generators_int(2, {{1, 0}, {1, 1}});
  Cone high = Cone::from_generators_int(2, {{1, 1}, {0, 1}});
  Fan sub = Fan::from_cones(2, {low, high});
  Fan orth = Fan::from_cones(2, {q1});
  CHECK(is_refinement(sub, orth));
  // orthant vs opposite orthant: containment fails
  Fan opp = Fan::from_cones(2, {q3});
  CHECK(!is_refinement(orth, opp));
  // same cones, smaller support: not a refinement of the quadrant fan
  CHECK(!is_refinement(orth, quadrants));

  // overlapping cones are rejected
  Cone skew = Cone::from_generators_int(2, {{1, 1}, {1, -1}});
  CHECK_THROWS_AS(Fan::from_cones(2, {q1, skew}), config_error);
}
