#include "voronoi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace weyl {

FiniteAbelianGroup z_q(const QuadraticForm& q) {
  Cokernel ck = cokernel(q.gram());
  if (ck.free_rank != 0) throw internal_error("positive-definite form with singular Gram");
  return ck.torsion;
}

CocycleValue cocycle_eval(const QuadraticForm& q, const IVec& eta, const IVec& h) {
  CocycleValue v;
  v.character_weight = q.weight_of(eta);
  v.character_value = q.eval(eta, h);
  v.central_exponent = q.norm_half(eta);
  return v;
}

LTWeightAction lt_weight_action(const QuadraticForm& q, const IVec& eta, const IVec& mu) {
  IVec a;
  if (!solve_integer(q.gram(), mu, a))
    throw config_error("weight does not lie in Q(V_T)");
  LTWeightAction act;
  act.t_character = mu;
  act.u_exponent = Rat(q.eval(a, a), 2);
  IVec qeta = q.weight_of(eta);
  act.new_weight = mu;
  for (size_t i = 0; i < mu.size(); ++i)
    act.new_weight[i] = checked_cast((i128)mu[i] + qeta[i]);
  return act;
}

Rat exponent_f(const QuadraticForm& q, Int t, const IVec& beta, const IVec& eta) {
  if (t <= 0) throw config_error("exponent_f requires t > 0");
  return Rat(t) * q.norm_half(eta) + Rat(q.eval(beta, eta));
}

namespace {

// q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 with exact rational d, u.
struct LdlDecomposition {
  std::vector<Rat> d;
  std::vector<QVec> u;  // u[i][j] defined for j > i
};

LdlDecomposition ldl(const IMat& gram) {
  const int n = gram.rows();
  std::vector<QVec> g(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = Rat(gram.at(i, j));
  LdlDecomposition out;
  out.d.assign(n, Rat(0));
  out.u.assign(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    out.d[i] = g[i][i];
    if (!(out.d[i] > Rat(0))) throw internal_error("LDL pivot not positive");
    for (int j = i + 1; j < n; ++j) out.u[i][j] = g[i][j] / g[i][i];
    for (int a = i + 1; a < n; ++a)
      for (int b = i + 1; b < n; ++b) g[a][b] -= out.d[i] * out.u[i][a] * out.u[i][b];
  }
  return out;
}

}  // namespace

std::vector<IVec> enumerate_ball(const QuadraticForm& q, const QVec& center,
                                 const Rat& radius2) {
  const int n = q.rank();
  if ((int)center.size() != n) throw config_error("enumerate_ball: center dimension");
  std::vector<IVec> out;
  if (radius2 < Rat(0)) return out;
  LdlDecomposition l = ldl(q.gram());
  IVec x(n, 0);
  // levels from n-1 down to 0; budget shrinks by d_i y_i^2
  std::function<void(int, Rat)> rec = [&](int i, Rat budget) {
    if (i < 0) {
      out.push_back(x);
      return;
    }
    Rat s;  // sum_{j>i} u_ij (x_j - c_j)
    for (int j = i + 1; j < n; ++j) s += l.u[i][j] * (Rat(x[j]) - center[j]);
    // iterate x_i outward from the real center c_i - s
    Rat center_i = center[i] - s;
    Int base = center_i.round();
    auto term = [&](Int xi) {
      Rat y = Rat(xi) - center_i;
      return l.d[i] * y * y;
    };
    for (Int xi = base;; ++xi) {
      Rat ti = term(xi);
      if (ti > budget) break;
      x[i] = xi;
      rec(i - 1, budget - ti);
    }
    for (Int xi = base - 1;; --xi) {
      Rat ti = term(xi);
      if (ti > budget) break;
      x[i] = xi;
      rec(i - 1, budget - ti);
    }
  };
  rec(n - 1, radius2);
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return out;
}

std::vector<IVec> nearest_lattice_points(const QuadraticForm& q, const QVec& target) {
  const int n = q.rank();
  QVec diff(n);
  IVec seed(n);
  for (int i = 0; i < n; ++i) seed[i] = target[i].round();
  for (int i = 0; i < n; ++i) diff[i] = Rat(seed[i]) - target[i];
  Rat r2 = q.eval(diff, diff);
  auto pts = enumerate_ball(q, target, r2);
  Rat best = r2;
  for (const auto& p : pts) {
    QVec d(n);
    for (int i = 0; i < n; ++i) d[i] = Rat(p[i]) - target[i];
    Rat v = q.eval(d, d);
    if (v < best) best = v;
  }
  std::vector<IVec> out;
  for (const auto& p : pts) {
    QVec d(n);
    for (int i = 0; i < n; ++i) d[i] = Rat(p[i]) - target[i];
    if (q.eval(d, d) == best) out.push_back(p);
  }
  return out;
}

std::vector<IVec> minimizer_set(const QuadraticForm& q, Int t, const IVec& beta) {
  if (t <= 0) throw config_error("minimizer_set requires t > 0");
  const int n = q.rank();
  // continuous minimum at eta* = -beta/t; f(eta) - f(eta*) = (t/2)|eta-eta*|^2
  QVec star(n);
  for (int i = 0; i < n; ++i) star[i] = Rat(-beta[i], t);
  IVec seed(n);
  for (int i = 0; i < n; ++i) seed[i] = star[i].round();
  Rat f_star = -Rat(q.eval(beta, beta), 2 * t);
  Rat radius2 = (exponent_f(q, t, beta, seed) - f_star) * Rat(2, t);
  auto candidates = enumerate_ball(q, star, radius2);
  Rat best;
  bool first = true;
  std::vector<IVec> out;
  for (const auto& eta : candidates) {
    Rat v = exponent_f(q, t, beta, eta);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  for (const auto& eta : candidates)
    if (exponent_f(q, t, beta, eta) == best) out.push_back(eta);
  return out;
}

std::vector<IVec> relevant_vectors(const QuadraticForm& q) {
  const int n = q.rank();
  std::set<IVec> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    QVec half(n);  // -w/2 for the coset representative w
    IVec w(n);
    for (int i = 0; i < n; ++i) {
      w[i] = (mask >> i) & 1;
      half[i] = Rat(-w[i], 2);
    }
    auto mins = nearest_lattice_points(q, half);
    if (mins.size() != 2) continue;  // minima not a unique +- pair
    for (const auto& u : mins) {
      IVec v(n);
      for (int i = 0; i < n; ++i) v[i] = w[i] + 2 * u[i];
      out.insert(v);
    }
  }
  return std::vector<IVec>(out.begin(), out.end());
}

bool VoronoiCell::contains(const QuadraticForm& q, const QVec& x) const {
  for (const auto& f : facets) {
    QVec gv = to_qvec(q.gram().apply(f.vector));
    if (qdot(gv, x) > f.rhs) return false;
  }
  return true;
}

VoronoiCell voronoi_cell(const QuadraticForm& q, const IVec& center) {
  const int n = q.rank();
  if ((int)center.size() != n) throw config_error("voronoi_cell: center dimension");
  VoronoiCell cell;
  cell.center = center;
  for (const auto& v : relevant_vectors(q)) {
    VoronoiCell::Facet f;
    f.vector = v;
    f.rhs = Rat(q.eval(v, v), 2) + Rat(q.eval(center, v));
    cell.facets.push_back(f);
  }
  if (n <= 3) {
    std::vector<QVec> verts;
    const int m = (int)cell.facets.size();
    std::vector<int> idx(n);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == n) {
        std::vector<QVec> rows;
        QVec rhs;
        for (int k = 0; k < n; ++k) {
          rows.push_back(to_qvec(q.gram().apply(cell.facets[idx[k]].vector)));
          rhs.push_back(cell.facets[idx[k]].rhs);
        }
        if (rank_of(rows) != n) return;
        QVec x;
        if (!solve_rational(rows, rhs, x)) return;
        if (!cell.contains(q, x)) return;
        verts.push_back(x);
        return;
      }
      for (int i = start; i < m; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    std::sort(verts.begin(), verts.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    cell.vertices = verts;
  }
  return cell;
}

DelaunayCell delaunay_cell(const QuadraticForm& q, const QVec& p) {
  DelaunayCell cell;
  cell.witness = p;
  auto mins = nearest_lattice_points(q, p);
  const int n = q.rank();
  QVec d(n);
  for (int i = 0; i < n; ++i) d[i] = Rat(mins[0][i]) - p[i];
  cell.radius2 = q.eval(d, d);
  cell.vertices = mins;
  return cell;
}

LTFan lt_fan(const QuadraticForm& q, Int window) {
  const int n = q.rank();
  if (n > 3) throw unsupported_error("lt_fan supported for rank <= 3");
  if (window < 0) throw config_error("lt_fan window must be >= 0");
  LTFan out;
  out.q = q;
  out.window = window;
  std::vector<Cone> cones;
  IVec center(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      VoronoiCell cell = voronoi_cell(q, center);
      std::vector<QVec> gens;
      for (const auto& v : cell.vertices) {
        QVec g = v;
        g.push_back(Rat(1));
        gens.push_back(g);
      }
      cones.push_back(Cone::from_generators(n + 1, gens));
      return;
    }
    for (Int c = -window; c <= window; ++c) {
      center[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  out.fan = Fan::from_cones(n + 1, cones);
  std::set<IVec> rays;
  for (const auto& c : out.fan.cones())
    for (const auto& r : c.rays()) rays.insert(r);
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

LTCheckReport lt_fan_vs_minimizers_check(const QuadraticForm& q, Int t, Int window) {
  LTCheckReport rep;
  const int n = q.rank();
  std::map<std::vector<IVec>, Int> classes;
  IVec beta(n, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) {
      auto m1 = minimizer_set(q, t, beta);
      QVec target(n);
      for (int a = 0; a < n; ++a) target[a] = Rat(-beta[a], t);
      auto m2 = nearest_lattice_points(q, target);
      ++rep.points_checked;
      if (m1 != m2) {
        std::string s = "beta=(";
        for (int a = 0; a < n; ++a) s += (a ? "," : "") + std::to_string(beta[a]);
        rep.failure = s + "): minimizer set differs from nearest-cell classification";
        return false;
      }
      classes[m1] += 1;
      return true;
    }
    for (Int c = -window; c <= window; ++c) {
      beta[i] = c;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rep.ok = rec(0);
  rep.class_count = (Int)classes.size();
  return rep;
}

}  // namespace weyl
