#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affine_weyl.hpp"
#include "oracles.hpp"

using namespace weyl;

namespace {
AffineRootDatum so5() {
  return build_affine_root_datum(build_root_datum('B', 2, Flavor::SimplyConnected));
}
AffineRootDatum sl2() {
  return build_affine_root_datum(build_root_datum('A', 1, Flavor::SimplyConnected));
}
}  // namespace

TEST_CASE("affine root datum structure") {
  AffineRootDatum ard = sl2();
  CHECK(ard.affine_cartan == IMat::from_rows({{2, -2}, {-2, 2}}));
  CHECK(ard.theta == IVec{2});
  CHECK(ard.theta_covee == IVec{1});

  AffineRootDatum b2 = so5();
  CHECK(b2.affine_cartan == IMat::from_rows({{2, 0, -1}, {0, 2, -1}, {-2, -2, 2}}));
  CHECK(b2.marks == IVec{1, 1, 2});
  CHECK(b2.comarks == IVec{1, 1, 1});

  // affine Cartan is of affine type: corank 1, positive semidefinite
  for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}, {'D', 4}}) {
    AffineRootDatum a = build_affine_root_datum(build_root_datum(t, r, Flavor::SimplyConnected));
    const IMat& ac = a.affine_cartan;
    std::vector<QVec> rows;
    for (int i = 0; i < ac.rows(); ++i) rows.push_back(to_qvec(ac.row(i)));
    CHECK(rank_of(rows) == r);
    // the marks span the kernel: sum_j a_ij n_j = 0
    for (int i = 0; i <= r; ++i) {
      Int s = 0;
      for (int j = 0; j <= r; ++j) s += ac.at(i, j) * a.marks[j];
      CHECK(s == 0);
    }
    // deleting any node leaves a finite-type matrix
    for (int j = 0; j <= r; ++j) CHECK_NOTHROW(parahoric_levi_type(a, j));
  }
}

TEST_CASE("affine simple roots") {
  AffineRootDatum ard = sl2();
  auto roots = affine_simple_roots(ard);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].n == Rat(1));
  CHECK(roots[0].lambda == IVec{-2});  // -theta = -alpha
  CHECK(roots[0].h == 0);
  CHECK(roots[1].n == Rat(0));
  CHECK(roots[1].lambda == IVec{2});
  for (const auto& r : roots) CHECK(r.h == 0);

  AffineRootDatum b2 = so5();
  auto rb = affine_simple_roots(b2);
  IVec neg_theta = highest_root(b2.base);
  for (auto& x : neg_theta) x = -x;
  CHECK(rb[0].lambda == neg_theta);
}

TEST_CASE("alcove of SL2") {
  AffineRootDatum ard = sl2();
  Alcove al = alcove(ard);
  REQUIRE(al.vertices.size() == 2);
  CHECK(al.vertices[0] == QVec{Rat(0)});
  CHECK(al.vertices[1] == QVec{Rat(1, 2)});  // alpha^vee / 2
}

TEST_CASE("alcove of SO5 matches the (H1,H2) presentation") {
  AffineRootDatum ard = so5();
  Alcove al = alcove(ard);
  // supporting hyperplanes y=x, y=x/2, y=1/2 as primitive forms a x + b y = c
  // walls: alpha_1 -> 2x-2y=0 -> (1,-1,0); alpha_2 -> -x+2y=0 -> (1,-2,0);
  // alpha_0 -> 1-2y=0 -> (0,2,1)
  std::set<std::vector<Int>> walls;
  for (const auto& w : al.walls) {
    QVec v = {Rat(w.linear[0]), Rat(w.linear[1]), -w.constant};
    IVec p = primitive(v);
    if (p[0] < 0 || (p[0] == 0 && p[1] < 0))
      for (auto& x : p) x = -x;
    walls.insert({p[0], p[1], p[2]});
  }
  std::set<std::vector<Int>> expected = {{1, -1, 0}, {1, -2, 0}, {0, 2, 1}};
  CHECK(walls == expected);
  // vertices: the three distinct points (0,0), (1/2,1/2), (1,1/2)
  std::set<std::vector<std::string>> verts;
  for (const auto& v : al.vertices) verts.insert({v[0].str(), v[1].str()});
  std::set<std::vector<std::string>> vexp = {{"0", "0"}, {"1/2", "1/2"}, {"1", "1/2"}};
  CHECK(verts == vexp);
  // eta_j incidences
  auto pairs = alcove_vertices(ard);
  CHECK(pairs[0].second == QVec{Rat(0), Rat(0)});
  CHECK(pairs[1].second == QVec{Rat(1), Rat(1, 2)});
  CHECK(pairs[2].second == QVec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("affine dynkin diagrams") {
  // SO5: 0 => 2 <= 1 with automorphism group of order 2 swapping 0,1
  AffineDynkinDiagram d = affine_dynkin(so5());
  CHECK(d.nodes == 3);
  REQUIRE(d.bonds.size() == 2);
  CHECK(d.bonds[0] == DiagramBond{0, 2, 2, +1});
  CHECK(d.bonds[1] == DiagramBond{1, 2, 2, +1});
  REQUIRE(d.automorphisms.size() == 2);
  CHECK(d.automorphisms[0] == std::vector<int>{0, 1, 2});
  CHECK(d.automorphisms[1] == std::vector<int>{1, 0, 2});

  // affine A1: quadruple bond, swap automorphism
  AffineDynkinDiagram a1 = affine_dynkin(sl2());
  REQUIRE(a1.bonds.size() == 1);
  CHECK(a1.bonds[0] == DiagramBond{0, 1, 4, 0});
  CHECK(a1.automorphisms.size() == 2);

  // affine A2: triangle with automorphism group of order 6
  AffineDynkinDiagram a2 =
      affine_dynkin(build_affine_root_datum(build_root_datum('A', 2, Flavor::SimplyConnected)));
  CHECK(a2.bonds.size() == 3);
  CHECK(a2.automorphisms.size() == 6);
}

TEST_CASE("parahoric levi types") {
  AffineRootDatum b2 = so5();
  CHECK(parahoric_levi_type(b2, 0) == "B2");  // deleting the affine node gives G
  CHECK(parahoric_levi_type(b2, 1) == "B2");  // P_0 iso P_1 via the diagram flip
  CHECK(parahoric_levi_type(b2, 2) == "A1xA1");
  // affine A_n is a cycle: deleting any node leaves the full A_n chain,
  // matching the fact that all maximal parahorics of SL_n are conjugate
  AffineRootDatum a3 =
      build_affine_root_datum(build_root_datum('A', 3, Flavor::SimplyConnected));
  for (int j = 0; j <= 3; ++j) CHECK(parahoric_levi_type(a3, j) == "A3");
  AffineRootDatum c3 =
      build_affine_root_datum(build_root_datum('C', 3, Flavor::SimplyConnected));
  CHECK(parahoric_levi_type(c3, 1) == "A1xB2");
  CHECK_THROWS_AS(parahoric_levi_type(b2, 3), config_error);
}

TEST_CASE("levi center quotients Z_j") {
  AffineRootDatum b2 = so5();
  CHECK(levi_center_quotient(b2, 0).trivial());
  CHECK(levi_center_quotient(b2, 2) == FiniteAbelianGroup({2}));
  // SL_n: all Z_j trivial
  for (int r = 1; r <= 3; ++r) {
    AffineRootDatum a =
        build_affine_root_datum(build_root_datum('A', r, Flavor::SimplyConnected));
    for (int j = 0; j <= r; ++j) CHECK(levi_center_quotient(a, j).trivial());
  }
  // |Z_j| equals the mark n_j (cross-check against the lattice route)
  for (auto [t, r] : {std::pair<char, int>{'B', 2}, {'G', 2}, {'C', 3}, {'B', 3}}) {
    AffineRootDatum a =
        build_affine_root_datum(build_root_datum(t, r, Flavor::SimplyConnected));
    for (int j = 0; j <= r; ++j)
      CHECK(levi_center_quotient(a, j).order() == a.marks[j]);
  }
  // quotient-of-cokernels route: |Z(L_j)| = |Z_j| * |Z(G)| for sc flavor
  for (int j = 0; j <= 2; ++j) {
    AffineRootDatum a = so5();
    // Z(L_j) = coker(Lambda_j -> X), Z(G) = coker(Lambda -> X)
    std::vector<IVec> cols;
    for (int i = 0; i <= 2; ++i) {
      if (i == j) continue;
      if (i == 0) {
        IVec v = a.theta;
        for (auto& x : v) x = -x;
        cols.push_back(v);
      } else {
        cols.push_back(a.base.simple_roots[i - 1]);
      }
    }
    Int zl = cokernel(IMat::from_cols(cols)).torsion.order();
    Int zg = cokernel(IMat::from_cols(a.base.simple_roots)).torsion.order();
    CHECK(zl == levi_center_quotient(a, j).order() * zg);
  }
}

TEST_CASE("affine weyl enumeration") {
  AffineRootDatum a1 = sl2();
  auto elems = affine_weyl_enumerate(a1, 2);
  CHECK(elems.size() == 5);  // 1; s0, s1; s0 s1, s1 s0
  CHECK(elems[0].length == 0);
  int by_len[3] = {0, 0, 0};
  for (const auto& e : elems) by_len[e.length]++;
  CHECK(by_len[0] == 1);
  CHECK(by_len[1] == 2);
  CHECK(by_len[2] == 2);
  CHECK(affine_weyl_enumerate(a1, 0).size() == 1);

  // infinite dihedral growth: 2 elements per positive length
  auto e8 = affine_weyl_enumerate(a1, 8);
  CHECK(e8.size() == 17);

  // B2 affine: counts match an independent brute-force closure
  AffineRootDatum b2 = so5();
  auto eb = affine_weyl_enumerate(b2, 3);
  std::set<std::string> brute;
  auto gens = affine_simple_reflections(b2);
  std::vector<AffineWeylElement> layer = {[&] {
    AffineWeylElement id;
    id.w = IMat::identity(2);
    id.eta = {0, 0};
    return id;
  }()};
  brute.insert(layer[0].key());
  size_t total = 1;
  for (int l = 1; l <= 3; ++l) {
    std::vector<AffineWeylElement> next;
    for (const auto& e : layer)
      for (const auto& g : gens) {
        auto c = compose(e, g);
        if (brute.insert(c.key()).second) next.push_back(c);
      }
    total += next.size();
    layer = next;
  }
  CHECK(eb.size() == total);

  // group law (w1,e1)(w2,e2) = (w1w2, w2^{-1} e1 + e2) respected by actions
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    const auto& x = eb[rng() % eb.size()];
    const auto& y = eb[rng() % eb.size()];
    auto xy = compose(x, y);
    QVec p = {Rat((Int)(rng() % 7) - 3, 2), Rat((Int)(rng() % 7) - 3, 3)};
    CHECK(xy.act(p) == x.act(y.act(p)));
  }

  // lengths agree with the inversion-count formula
  for (const auto& e : eb) CHECK(inversion_length(b2, e) == e.length);
  for (const auto& e : e8) CHECK(inversion_length(a1, e) == e.length);

  CHECK_THROWS_AS(affine_weyl_enumerate(b2, 3, 4), unsupported_error);
}

TEST_CASE("coset representatives") {
  AffineRootDatum a1 = sl2();
  // J = {1}, bound 2 -> {1, s0, s1 s0}
  auto reps = coset_representatives(a1, {1}, 2);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].word.empty());
  CHECK(reps[1].word == std::vector<int>{0});
  CHECK(reps[2].word == std::vector<int>{1, 0});
  // J = {} -> all elements
  CHECK(coset_representatives(a1, {}, 2).size() == affine_weyl_enumerate(a1, 2).size());
  // representative minimality within W_J
  auto wj = parabolic_subgroup(a1, {1});
  for (const auto& rep : reps)
    for (const auto& v : wj) {
      if (v.word.empty()) continue;
      auto longer = compose(rep, v);
      // the coset partner found in the enumeration has length >= rep
      for (const auto& e : affine_weyl_enumerate(a1, 2))
        if (e.same_element(longer)) CHECK(e.length >= rep.length);
    }
  CHECK_THROWS_AS(parabolic_subgroup(a1, {0, 1}), config_error);
}

TEST_CASE("birkhoff strata index") {
  AffineRootDatum a1 = sl2();
  // J = {}: pairs (w1, w2) over all elements, w3 = identity
  auto t0 = birkhoff_strata_index(a1, {}, 2);
  auto all = affine_weyl_enumerate(a1, 2);
  CHECK(t0.size() == all.size() * all.size());
  for (const auto& tr : t0) CHECK(tr.w3.word.empty());
  // J = {1}: triple list from coset representatives
  auto t1 = birkhoff_strata_index(a1, {1}, 2);
  auto reps = coset_representatives(a1, {1}, 2);
  CHECK(t1.size() == reps.size() * reps.size() * 2);
}

TEST_CASE("affine weyl action on characters") {
  RootDatum a1 = build_root_datum('A', 1, Flavor::SimplyConnected);
  QuadraticForm q = basic_form(a1);
  // h = 0 collapse: (n, lambda, 0) -> (n - lambda(eta), lambda, 0)
  AffineCharacter chi{Rat(3), IVec{5}, 0};
  auto out = affine_weyl_translation_action(q, IVec{2}, chi);
  CHECK(out.n == Rat(3 - 5 * 2));
  CHECK(out.lambda == IVec{5});
  CHECK(out.h == 0);
  // A1: eta = alpha^vee on the level-1 vacuum: lambda shifts by
  // Q(alpha^vee,.) = alpha and n drops by Q(alpha^vee,alpha^vee)/2 = 1
  AffineCharacter vac{Rat(0), IVec{0}, 1};
  auto lvl = affine_weyl_translation_action(q, IVec{1}, vac);
  CHECK(lvl.n == Rat(-1));
  CHECK(lvl.lambda == IVec{2});  // alpha = 2 omega
  CHECK(lvl.h == 1);
  // eta = 0 is the identity
  auto idem = affine_weyl_translation_action(q, IVec{0}, chi);
  CHECK(idem.n == chi.n);
  CHECK(idem.lambda == chi.lambda);

  // additivity and level invariance over random inputs, ranks 1 and 2
  std::mt19937 rng(17);
  for (auto [t, r] : {std::pair<char, int>{'A', 1}, {'A', 2}, {'B', 2}}) {
    RootDatum rd = build_root_datum(t, r, Flavor::SimplyConnected);
    QuadraticForm bf = basic_form(rd);
    for (int it = 0; it < 100; ++it) {
      IVec e1(r), e2(r), lam(r);
      for (int i = 0; i < r; ++i) {
        e1[i] = (Int)(rng() % 7) - 3;
        e2[i] = (Int)(rng() % 7) - 3;
        lam[i] = (Int)(rng() % 9) - 4;
      }
      Int h = (Int)(rng() % 5) - 2;
      AffineCharacter c{Rat((Int)(rng() % 11) - 5), lam, h};
      auto ab = affine_weyl_translation_action(bf, e1, affine_weyl_translation_action(bf, e2, c));
      IVec sum(r);
      for (int i = 0; i < r; ++i) sum[i] = e1[i] + e2[i];
      auto once = affine_weyl_translation_action(bf, sum, c);
      CHECK(ab.n == once.n);
      CHECK(ab.lambda == once.lambda);
      CHECK(ab.h == once.h);
      CHECK(ab.h == c.h);  // level invariance
    }
  }
}

TEST_CASE("level-shifted norm invariance for h in {1,2}") {
  // 2 h n + Q*(lambda, lambda) is preserved, Q*(Q a, Q b) = Q(a, b)
  std::mt19937 rng(29);
  for (auto [t, r] : {std::pair<char, int>{'A', 1}, {'A', 2}, {'B', 2}}) {
    RootDatum rd = build_root_datum(t, r, Flavor::SimplyConnected);
    QuadraticForm q = basic_form(rd);
    // rational inverse of the Gram matrix
    std::vector<QVec> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = to_qvec(q.gram().row(i));
    std::vector<QVec> ginv(r);
    for (int i = 0; i < r; ++i) {
      QVec e(r, Rat(0));
      e[i] = Rat(1);
      REQUIRE(solve_rational(rows, e, ginv[i]));
    }
    auto qstar = [&](const IVec& a, const IVec& b) {
      Rat s;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += Rat(a[i]) * ginv[i][j] * Rat(b[j]);
      return s;
    };
    for (Int h : {1, 2}) {
      for (int it = 0; it < 60; ++it) {
        IVec eta(r), lam(r);
        for (int i = 0; i < r; ++i) {
          eta[i] = (Int)(rng() % 7) - 3;
          lam[i] = (Int)(rng() % 9) - 4;
        }
        AffineCharacter c{Rat((Int)(rng() % 11) - 5), lam, h};
        auto c2 = affine_weyl_translation_action(q, eta, c);
        Rat inv1 = Rat(2 * h) * c.n + qstar(c.lambda, c.lambda);
        Rat inv2 = Rat(2 * h) * c2.n + qstar(c2.lambda, c2.lambda);
        CHECK(inv1 == inv2);
      }
    }
  }
}

TEST_CASE("alcove is a fundamental domain at desk scale") {
  // generic rational points have exactly one W^aff image in the open alcove;
  // lattice points land on walls only
  AffineRootDatum a1 = sl2();
  Alcove al1 = alcove(a1);
  auto elems = affine_weyl_enumerate(a1, 8);
  auto interior = [&](const Alcove& al, const QVec& p) {
    for (const auto& w : al.walls)
      if (!(w.value(p) > Rat(0))) return false;
    return true;
  };
  auto closure = [&](const Alcove& al, const QVec& p) {
    for (const auto& w : al.walls)
      if (w.value(p) < Rat(0)) return false;
    return true;
  };
  // orbit points of an interior point: exactly one interior image, and it is
  // the original point (spread by elements of length <= 4, searched <= 8)
  std::mt19937 rng(31);
  QVec q1 = {Rat(1, 5)};
  REQUIRE(interior(al1, q1));
  auto short1 = affine_weyl_enumerate(a1, 4);
  for (const auto& g : short1) {
    QVec p = g.act(q1);
    int count = 0;
    QVec found;
    for (const auto& e : elems)
      if (interior(al1, e.act(p))) {
        ++count;
        found = e.act(p);
      }
    CHECK(count == 1);
    CHECK(found == q1);
  }
  // lattice points: at least one image in the closed alcove, all on walls
  for (Int n = -3; n <= 3; ++n) {
    int in_closure = 0;
    for (const auto& e : elems) {
      QVec img = e.act(QVec{Rat(n)});
      if (closure(al1, img)) {
        ++in_closure;
        CHECK(!interior(al1, img));
      }
    }
    CHECK(in_closure >= 1);
  }
  // B2: same statement over the so5 alcove
  AffineRootDatum b2 = so5();
  Alcove al2 = alcove(b2);
  auto elems2 = affine_weyl_enumerate(b2, 8);
  auto short2 = affine_weyl_enumerate(b2, 4);
  QVec q2 = {Rat(2, 5), Rat(3, 10)};
  REQUIRE(interior(al2, q2));
  for (int it = 0; it < 25; ++it) {
    const auto& g = short2[rng() % short2.size()];
    QVec p = g.act(q2);
    int count = 0;
    for (const auto& e : elems2)
      if (interior(al2, e.act(p))) ++count;
    CHECK(count == 1);
  }
}
