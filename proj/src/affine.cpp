#include "affine.hpp"

#include <algorithm>
#include <numeric>

namespace weyl {

AffineRootDatum build_affine_root_datum(const RootDatum& rd) {
  AffineRootDatum ard;
  ard.base = rd;
  ard.theta_alpha = highest_root_alpha(rd);
  ard.theta = rd.weight_from_alpha(ard.theta_alpha);
  auto d = coroot_length_ratios(rd.cartan);
  const int r = rd.rank;
  // theta^vee = sum (mark_i / d_i) alpha_i^vee
  ard.theta_covee.assign(r, 0);
  ard.comarks.assign(r + 1, 0);
  ard.marks.assign(r + 1, 0);
  ard.marks[0] = 1;
  ard.comarks[0] = 1;
  for (int i = 0; i < r; ++i) {
    ard.marks[i + 1] = ard.theta_alpha[i];
    if (ard.theta_alpha[i] % d[i] != 0) throw internal_error("non-integral comark");
    Int cm = ard.theta_alpha[i] / d[i];
    ard.comarks[i + 1] = cm;
    for (int a = 0; a < r; ++a)
      ard.theta_covee[a] =
          checked_cast((i128)ard.theta_covee[a] + (i128)cm * rd.simple_coroots[i][a]);
  }
  if (idot(ard.theta, ard.theta_covee) != 2) throw internal_error("theta^vee normalization");

  IMat ac(r + 1, r + 1);
  ac.at(0, 0) = 2;
  for (int j = 0; j < r; ++j) {
    ac.at(0, j + 1) = -idot(rd.simple_roots[j], ard.theta_covee);
    ac.at(j + 1, 0) = -idot(ard.theta, rd.simple_coroots[j]);
    for (int i = 0; i < r; ++i) ac.at(i + 1, j + 1) = rd.cartan.at(i, j);
  }
  ard.affine_cartan = ac;
  return ard;
}

std::vector<AffineCharacter> affine_simple_roots(const AffineRootDatum& ard) {
  std::vector<AffineCharacter> out;
  IVec neg_theta = ard.theta;
  for (auto& x : neg_theta) x = -x;
  out.push_back(AffineCharacter{Rat(1), neg_theta, 0});
  for (int i = 0; i < ard.base.rank; ++i)
    out.push_back(AffineCharacter{Rat(0), ard.base.simple_roots[i], 0});
  return out;
}

Rat AffineForm::value(const QVec& zeta) const {
  Rat s = constant;
  for (size_t i = 0; i < zeta.size(); ++i) s += Rat(linear[i]) * zeta[i];
  return s;
}

Alcove alcove(const AffineRootDatum& ard) {
  const RootDatum& rd = ard.base;
  const int r = rd.rank;
  Alcove al;
  IVec neg_theta = ard.theta;
  for (auto& x : neg_theta) x = -x;
  al.walls.push_back(AffineForm{Rat(1), neg_theta});
  for (int i = 0; i < r; ++i) al.walls.push_back(AffineForm{Rat(0), rd.simple_roots[i]});

  // vertex j: alpha_i = 0 for finite i != j, theta = 1 when j != 0
  al.vertices.push_back(QVec(r, Rat(0)));  // eta_0 = 0
  std::vector<QVec> rows;
  for (int j = 1; j <= r; ++j) {
    rows.clear();
    QVec rhs;
    for (int i = 1; i <= r; ++i) {
      if (i == j) continue;
      rows.push_back(to_qvec(rd.simple_roots[i - 1]));
      rhs.push_back(Rat(0));
    }
    rows.push_back(to_qvec(ard.theta));
    rhs.push_back(Rat(1));
    QVec eta;
    if (!solve_rational(rows, rhs, eta)) throw internal_error("alcove vertex solve failed");
    al.vertices.push_back(eta);
  }
  // each vertex annihilates all walls but its own
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= r; ++i) {
      Rat v = al.walls[i].value(al.vertices[j]);
      if (i == j ? !(v > Rat(0)) : !v.is_zero())
        throw internal_error("alcove vertex/wall incidence failed");
    }
  return al;
}

std::vector<std::pair<int, QVec>> alcove_vertices(const AffineRootDatum& ard) {
  Alcove al = alcove(ard);
  std::vector<std::pair<int, QVec>> out;
  for (int j = 0; j < (int)al.vertices.size(); ++j) out.emplace_back(j, al.vertices[j]);
  return out;
}

namespace {

// all permutations sigma with m[sigma(i)][sigma(j)] == m[i][j], backtracking
void automorphism_search(const IMat& m, std::vector<int>& perm, std::vector<bool>& used,
                         std::vector<std::vector<int>>& out) {
  const int n = m.rows();
  int k = (int)perm.size();
  if (k == n) {
    out.push_back(perm);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    if (m.at(v, v) != m.at(k, k)) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (m.at(perm[i], v) != m.at(i, k)) ok = false;
      if (m.at(v, perm[i]) != m.at(k, i)) ok = false;
    }
    if (!ok) continue;
    perm.push_back(v);
    used[v] = true;
    automorphism_search(m, perm, used, out);
    perm.pop_back();
    used[v] = false;
  }
}

}  // namespace

AffineDynkinDiagram affine_dynkin(const AffineRootDatum& ard) {
  const IMat& ac = ard.affine_cartan;
  AffineDynkinDiagram d;
  d.nodes = ac.rows();
  for (int i = 0; i < d.nodes; ++i)
    for (int j = i + 1; j < d.nodes; ++j) {
      if (ac.at(i, j) == 0) continue;
      DiagramBond b;
      b.from = i;
      b.to = j;
      b.multiplicity = (int)(ac.at(i, j) * ac.at(j, i));
      Int aij = ac.at(i, j) < 0 ? -ac.at(i, j) : ac.at(i, j);
      Int aji = ac.at(j, i) < 0 ? -ac.at(j, i) : ac.at(j, i);
      b.direction = aij == aji ? 0 : (aij < aji ? +1 : -1);
      d.bonds.push_back(b);
    }
  std::vector<int> perm;
  std::vector<bool> used(d.nodes, false);
  automorphism_search(ac, perm, used, d.automorphisms);
  std::sort(d.automorphisms.begin(), d.automorphisms.end());
  return d;
}

IMat principal_submatrix(const IMat& m, const std::vector<int>& nodes) {
  IMat s((int)nodes.size(), (int)nodes.size());
  for (int i = 0; i < (int)nodes.size(); ++i)
    for (int j = 0; j < (int)nodes.size(); ++j) s.at(i, j) = m.at(nodes[i], nodes[j]);
  return s;
}

namespace {

bool match_cartan(const IMat& a, const IMat& b, std::vector<int>& perm,
                  std::vector<bool>& used) {
  const int n = a.rows();
  int k = (int)perm.size();
  if (k == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    if (b.at(v, v) != a.at(k, k)) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (b.at(perm[i], v) != a.at(i, k)) ok = false;
      if (b.at(v, perm[i]) != a.at(k, i)) ok = false;
    }
    if (!ok) continue;
    perm.push_back(v);
    used[v] = true;
    if (match_cartan(a, b, perm, used)) return true;
    perm.pop_back();
    used[v] = false;
  }
  return false;
}

bool cartan_isomorphic(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<int> perm;
  std::vector<bool> used(a.rows(), false);
  return match_cartan(a, b, perm, used);
}

std::vector<std::vector<int>> connected_components(const IMat& m) {
  const int n = m.rows();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && m.at(v, w) != 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

std::string finite_type_name(const IMat& cartan) {
  if (cartan.rows() == 0) return "T";
  struct Piece {
    char type;
    int rank;
  };
  std::vector<Piece> pieces;
  for (const auto& nodes : connected_components(cartan)) {
    IMat sub = principal_submatrix(cartan, nodes);
    const int n = sub.rows();
    bool found = false;
    for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
      IMat cand;
      try {
        cand = cartan_matrix(t, n);
      } catch (const unsupported_error&) {
        continue;
      }
      if (cartan_isomorphic(sub, cand)) {
        pieces.push_back({t, n});
        found = true;
        break;
      }
    }
    if (!found) throw config_error("Cartan matrix is not of finite type");
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.rank < b.rank;
  });
  std::string s;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) s += "x";
    s += pieces[i].type + std::to_string(pieces[i].rank);
  }
  return s;
}

std::string parahoric_levi_type(const AffineRootDatum& ard, int j) {
  if (j < 0 || j >= ard.nodes()) throw config_error("parahoric node out of range");
  std::vector<int> keep;
  for (int i = 0; i < ard.nodes(); ++i)
    if (i != j) keep.push_back(i);
  return finite_type_name(principal_submatrix(ard.affine_cartan, keep));
}

FiniteAbelianGroup levi_center_quotient(const AffineRootDatum& ard, int j) {
  if (j < 0 || j >= ard.nodes()) throw config_error("parahoric node out of range");
  const int r = ard.base.rank;
  // columns: restrictions to T of the simple affine roots with node j removed,
  // in root-lattice coordinates (node 0 restricts to -theta)
  std::vector<IVec> cols;
  for (int i = 0; i < ard.nodes(); ++i) {
    if (i == j) continue;
    if (i == 0) {
      IVec v = ard.theta_alpha;
      for (auto& x : v) x = -x;
      cols.push_back(v);
    } else {
      IVec e(r, 0);
      e[i - 1] = 1;
      cols.push_back(e);
    }
  }
  Cokernel ck = cokernel(IMat::from_cols(cols));
  if (ck.free_rank != 0) throw internal_error("Levi sublattice is not finite index");
  return ck.torsion;
}

}  // namespace weyl
