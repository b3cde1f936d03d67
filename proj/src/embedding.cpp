#include "embedding.hpp"

#include <algorithm>
#include <functional>

namespace weyl {

StackyFan weyl_chamber_stacky_fan(const RootDatum& rd) {
  const int r = rd.rank;
  std::vector<IVec> orthant_ineqs;
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    orthant_ineqs.push_back(e);
  }
  StackyFan sf;
  sf.fan = Fan::from_cones(r, {Cone::from_inequalities(r, orthant_ineqs)});
  sf.beta = IMat::from_cols(chamber_rays(rd));
  if (cokernel(sf.beta).free_rank != 0) throw internal_error("chamber beta not finite index");
  return sf;
}

FiniteAbelianGroup z_beta(const StackyFan& sf) {
  Cokernel ck = cokernel(sf.beta);
  if (ck.free_rank != 0) throw config_error("z_beta: beta does not have finite cokernel");
  return ck.torsion;
}

namespace {

// fundamental weights in X coordinates (rational for the adjoint flavor)
std::vector<QVec> fundamental_weights(const RootDatum& rd) {
  const int r = rd.rank;
  std::vector<QVec> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = to_qvec(rd.simple_coroots[i]);
  std::vector<QVec> out(r);
  for (int i = 0; i < r; ++i) {
    QVec e(r, Rat(0));
    e[i] = Rat(1);
    if (!solve_rational(rows, e, out[i])) throw internal_error("singular coroot matrix");
  }
  return out;
}

IVec concat(const IVec& a, const IVec& b) {
  IVec c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

QVec concat(const QVec& a, const QVec& b) {
  QVec c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

}  // namespace

CDeltaResult c_delta(const RootDatum& rd) {
  const int r = rd.rank;
  auto u = chamber_rays(rd);
  // antidiagonal cone {(-c, c)} in V_T + V_T
  std::vector<IVec> anti_gens;
  for (const auto& ui : u) {
    IVec neg = ui;
    for (auto& x : neg) x = -x;
    anti_gens.push_back(concat(neg, ui));
  }
  Cone anti = Cone::from_generators_int(2 * r, anti_gens);
  // (v, x) |-> (v, beta x)
  IMat f(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) f.at(i, i) = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) f.at(r + i, r + j) = u[j][i];
  CDeltaResult res;
  res.c_delta = anti.preimage(f);
  res.dual = res.c_delta.dual();
  res.dual_lineality_dim = res.dual.lineality_dim();

  // expected dual generators {(0, a_i)} u {+-(omega_i, w_i)}
  auto omegas = fundamental_weights(rd);
  for (int i = 0; i < r; ++i) {
    IVec a_i(r);
    for (int j = 0; j < r; ++j) a_i[j] = idot(rd.simple_roots[i], u[j]);
    res.expected_dual_generators.push_back(primitive(concat(IVec(r, 0), a_i)));
  }
  for (int i = 0; i < r; ++i) {
    QVec w_i(r);
    for (int j = 0; j < r; ++j) w_i[j] = qdot(omegas[i], to_qvec(u[j]));
    IVec g = primitive(concat(omegas[i], w_i));
    IVec ng = g;
    for (auto& x : ng) x = -x;
    res.expected_dual_generators.push_back(g);
    res.expected_dual_generators.push_back(ng);
  }
  std::sort(res.expected_dual_generators.begin(), res.expected_dual_generators.end(),
            [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  Cone expected = Cone::from_generators_int(2 * r, res.expected_dual_generators);
  res.certificate_ok = expected.equals(res.dual) && res.dual_lineality_dim == r;
  return res;
}

bool in_monoid(const IMat& gens_cols, const IVec& target) {
  std::vector<QVec> rows(gens_cols.rows());
  for (int i = 0; i < gens_cols.rows(); ++i) rows[i] = to_qvec(gens_cols.row(i));
  QVec c;
  if (!solve_rational(rows, to_qvec(target), c)) return false;
  for (const auto& x : c)
    if (!x.is_integer() || x.sign() < 0) return false;
  return true;
}

namespace {

// Triangulate a pointed cone into simplicial subcones on subsets of its rays.
std::vector<std::vector<IVec>> triangulate(const Cone& c) {
  if (c.lineality_dim() != 0) throw internal_error("triangulate: cone has lineality");
  const auto& rays = c.rays();
  const int d = c.dim();
  if ((int)rays.size() == d) return {rays};
  std::vector<std::vector<IVec>> out;
  const IVec& apex = rays[0];
  for (const auto& facet : c.facets()) {
    if (facet.contains(apex)) continue;
    for (auto piece : triangulate(facet)) {
      piece.push_back(apex);
      out.push_back(piece);
    }
  }
  if (out.empty()) return {rays};  // dim <= 1
  return out;
}

// Integer points of the half-open parallelepiped { sum t_i g_i : 0 <= t_i < 1 }.
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& gens) {
  const int n = (int)gens[0].size();
  const int k = (int)gens.size();
  // bounding box over the closed parallelepiped corners
  IVec lo(n, 0), hi(n, 0);
  for (int mask = 0; mask < (1 << k); ++mask) {
    IVec corner(n, 0);
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i))
        for (int a = 0; a < n; ++a) corner[a] += gens[i][a];
    for (int a = 0; a < n; ++a) {
      lo[a] = std::min(lo[a], corner[a]);
      hi[a] = std::max(hi[a], corner[a]);
    }
  }
  std::vector<QVec> rows(n, QVec(k));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < k; ++i) rows[a][i] = Rat(gens[i][a]);
  std::vector<IVec> out;
  IVec p(n);
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      QVec t;
      if (!solve_rational(rows, to_qvec(p), t)) return;
      for (const auto& x : t)
        if (x.sign() < 0 || x >= Rat(1)) return;
      // consistency: the solve may be underdetermined only if gens dependent
      out.push_back(p);
      return;
    }
    for (Int v = lo[a]; v <= hi[a]; ++v) {
      p[a] = v;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

// Every lattice point of the cone lies in the monoid generated by the
// columns of monoid_gens. Returns an offending point if not.
bool cone_lattice_in_monoid(const Cone& c, const IMat& monoid_gens, IVec* witness) {
  if (c.is_zero()) return true;
  for (const auto& simplex : triangulate(c)) {
    if (simplex.empty()) continue;
    for (const auto& g : simplex)
      if (!in_monoid(monoid_gens, g)) {
        if (witness) *witness = g;
        return false;
      }
    for (const auto& p : parallelepiped_points(simplex)) {
      bool zero = std::all_of(p.begin(), p.end(), [](Int x) { return x == 0; });
      if (zero) continue;
      if (!in_monoid(monoid_gens, p)) {
        if (witness) *witness = p;
        return false;
      }
    }
  }
  return true;
}

std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

EmbeddingReport check_fan_impl(const Fan& fan, const Cone& support,
                               const std::vector<IVec>& monoid_ray_gens,
                               EmbeddingFlavor flavor) {
  EmbeddingReport rep;
  for (const auto& c : fan.cones())
    for (const auto& g : c.generators())
      if (!support.contains(g)) {
        rep.first_violation = "support: generator " + ivec_str(g) + " outside the chamber";
        return rep;
      }
  if (flavor == EmbeddingFlavor::Stacky) {
    IMat m = IMat::from_cols(monoid_ray_gens);
    for (const auto& c : fan.maximal_cones()) {
      IVec bad;
      if (!cone_lattice_in_monoid(c, m, &bad)) {
        rep.first_violation = "monoid: lattice point " + ivec_str(bad) + " not in M";
        return rep;
      }
    }
  }
  rep.valid = true;
  return rep;
}

}  // namespace

EmbeddingReport check_embedding_fan(const Fan& fan, const RootDatum& rd,
                                    EmbeddingFlavor flavor) {
  if (fan.ambient_dim() != rd.rank) throw config_error("fan ambient must be V_T");
  std::vector<IVec> neg_roots;
  for (const auto& a : rd.simple_roots) {
    IVec n = a;
    for (auto& x : n) x = -x;
    neg_roots.push_back(n);
  }
  Cone neg_chamber = Cone::from_inequalities(rd.rank, neg_roots);
  std::vector<IVec> neg_rays;
  for (const auto& u : chamber_rays(rd)) {
    IVec n = u;
    for (auto& x : n) x = -x;
    neg_rays.push_back(n);
  }
  return check_fan_impl(fan, neg_chamber, neg_rays, flavor);
}

EmbeddingReport check_embedding_fan_affine(const Fan& fan, const AffineRootDatum& ard,
                                           EmbeddingFlavor flavor) {
  const int r = ard.base.rank;
  if (fan.ambient_dim() != r + 1)
    throw config_error("affine fan ambient must be V_T + Z (loop direction last)");
  // cone over -Al_0: alpha_i(v) <= 0 and h <= theta(v)
  std::vector<IVec> ineqs;
  for (const auto& a : ard.base.simple_roots) {
    IVec n = a;
    for (auto& x : n) x = -x;
    n.push_back(0);
    ineqs.push_back(n);
  }
  IVec top = ard.theta;
  top.push_back(-1);
  ineqs.push_back(top);
  Cone support = Cone::from_inequalities(r + 1, ineqs);
  std::vector<IVec> ray_gens;
  for (const auto& [j, eta] : alcove_vertices(ard)) {
    (void)j;
    QVec v = eta;
    v.push_back(Rat(1));
    IVec g = primitive(v);
    for (auto& x : g) x = -x;
    ray_gens.push_back(g);
  }
  return check_fan_impl(fan, support, ray_gens, flavor);
}

std::optional<IMat> monoid_lift(const IMat& beta_p, const std::vector<IVec>& mp_generators,
                                const RootDatum& rd) {
  StackyFan sf = weyl_chamber_stacky_fan(rd);
  if (beta_p.rows() != sf.beta.rows()) throw config_error("monoid_lift: codomain mismatch");
  // beta'(M') must land in M
  for (const auto& m : mp_generators)
    if (!in_monoid(sf.beta, beta_p.apply(m))) return std::nullopt;
  // solve beta . l = beta' columnwise over Z
  IMat l(sf.beta.cols(), beta_p.cols());
  for (int j = 0; j < beta_p.cols(); ++j) {
    IVec col;
    if (!solve_integer(sf.beta, beta_p.col(j), col)) return std::nullopt;
    for (int i = 0; i < l.rows(); ++i) l.at(i, j) = col[i];
  }
  // l(M') inside the orthant C'
  for (const auto& m : mp_generators)
    for (Int x : l.apply(m))
      if (x < 0) return std::nullopt;
  return l;
}

bool OrbitPoset::leq(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

OrbitPoset orbit_poset_impl(const IMat& diagram, const std::vector<int>& node_names,
                            bool affine, int rank, const std::string& whole_group_name) {
  const int n = (int)node_names.size();
  OrbitPoset p;
  p.affine = affine;
  p.rank = rank;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> j;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) j.push_back(node_names[i]);
    subsets.push_back(j);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& j : subsets) {
    OrbitPosetElement el;
    el.j = j;
    std::vector<int> complement_pos;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(j.begin(), j.end(), node_names[i])) complement_pos.push_back(i);
    if (j.empty()) {
      el.levi_type = whole_group_name;  // L_empty is the whole group
    } else {
      el.levi_type = finite_type_name(principal_submatrix(diagram, complement_pos));
    }
    el.is_divisor = j.size() == 1;
    el.center_torus_rank = (int)j.size();
    el.stabilizer_shape = "Z(L_J)^2 . (Delta(L_J) |x (U_J x U_J^-))";
    p.elements.push_back(el);
  }
  for (int a = 0; a < (int)p.elements.size(); ++a)
    for (int b = 0; b < (int)p.elements.size(); ++b) {
      const auto& ja = p.elements[a].j;
      const auto& jb = p.elements[b].j;
      if (jb.size() == ja.size() + 1 && OrbitPoset::leq(ja, jb))
        p.cover_relations.emplace_back(a, b);
    }
  return p;
}

}  // namespace

OrbitPoset orbit_poset(const RootDatum& rd) {
  std::vector<int> names(rd.rank);
  for (int i = 0; i < rd.rank; ++i) names[i] = i + 1;
  return orbit_poset_impl(rd.cartan, names, false, rd.rank, finite_type_name(rd.cartan));
}

OrbitPoset orbit_poset_affine(const AffineRootDatum& ard) {
  std::vector<int> names(ard.nodes());
  for (int i = 0; i < ard.nodes(); ++i) names[i] = i;
  return orbit_poset_impl(ard.affine_cartan, names, true, ard.base.rank,
                          finite_type_name(ard.base.cartan) + "^aff");
}

StabilizerDescriptor orbit_stabilizer_descriptor(const AffineRootDatum& ard,
                                                 const std::set<int>& j) {
  if ((int)j.size() >= ard.nodes())
    throw config_error("stabilizer descriptor requires a proper subset");
  StabilizerDescriptor d;
  d.j.assign(j.begin(), j.end());
  if (j.empty()) {
    d.levi_type = finite_type_name(ard.base.cartan) + "^aff";
    d.shape = "Delta(L^x G) (open orbit)";
  } else {
    std::vector<int> complement;
    for (int i = 0; i < ard.nodes(); ++i)
      if (!j.count(i)) complement.push_back(i);
    d.levi_type = finite_type_name(principal_submatrix(ard.affine_cartan, complement));
    d.shape = "Z(L_J)^2 . (Delta(L_J) |x (U_J x U_J^-))";
  }
  d.center_torus_rank = (int)j.size();
  return d;
}

PicardPresentation picard_presentation(const RootDatum& rd, EmbeddingFlavor flavor) {
  PicardPresentation p;
  p.free_rank = rd.rank;
  for (int i = 1; i <= rd.rank; ++i) p.divisor_labels.push_back("D" + std::to_string(i));
  if (flavor == EmbeddingFlavor::Stacky) p.torsion = z_beta(weyl_chamber_stacky_fan(rd));
  return p;
}

IMat alcove_vertex_ray_map(const AffineRootDatum& ard) {
  std::vector<IVec> cols;
  for (const auto& [j, eta] : alcove_vertices(ard)) {
    (void)j;
    QVec v = eta;
    v.push_back(Rat(1));
    cols.push_back(primitive(v));
  }
  return IMat::from_cols(cols);
}

PicardPresentation picard_presentation_affine(const AffineRootDatum& ard,
                                              EmbeddingFlavor flavor) {
  PicardPresentation p;
  p.free_rank = ard.nodes();
  for (int i = 0; i < ard.nodes(); ++i) p.divisor_labels.push_back("D" + std::to_string(i));
  if (flavor == EmbeddingFlavor::Stacky) {
    Cokernel ck = cokernel(alcove_vertex_ray_map(ard));
    if (ck.free_rank != 0) throw internal_error("alcove ray map not finite index");
    p.torsion = ck.torsion;
  }
  return p;
}

}  // namespace weyl
