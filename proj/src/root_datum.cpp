#include "root_datum.hpp"

#include <algorithm>
#include <map>

namespace weyl {

std::string flavor_name(Flavor f) {
  return f == Flavor::SimplyConnected ? "sc" : "ad";
}

Flavor flavor_from_name(const std::string& s) {
  if (s == "sc" || s == "simply-connected") return Flavor::SimplyConnected;
  if (s == "ad" || s == "adjoint") return Flavor::Adjoint;
  throw config_error("unknown flavor: " + s);
}

IMat cartan_matrix(char type, int rank) {
  auto chain = [](int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = 2;
      if (i + 1 < n) {
        m.at(i, i + 1) = -1;
        m.at(i + 1, i) = -1;
      }
    }
    return m;
  };
  switch (type) {
    case 'A': {
      if (rank < 1 || rank > 8) throw unsupported_error("A_n supported for 1 <= n <= 8");
      return chain(rank);
    }
    case 'B': {
      if (rank < 2 || rank > 8) throw unsupported_error("B_n supported for 2 <= n <= 8");
      IMat m = chain(rank);
      m.at(rank - 1, rank - 2) = -2;  // alpha_rank short
      return m;
    }
    case 'C': {
      if (rank < 2 || rank > 8) throw unsupported_error("C_n supported for 2 <= n <= 8");
      IMat m = chain(rank);
      m.at(rank - 2, rank - 1) = -2;  // alpha_rank long
      return m;
    }
    case 'D': {
      if (rank < 4 || rank > 8) throw unsupported_error("D_n supported for 4 <= n <= 8");
      IMat m = chain(rank - 1);
      IMat d(rank, rank);
      for (int i = 0; i < rank - 1; ++i)
        for (int j = 0; j < rank - 1; ++j) d.at(i, j) = m.at(i, j);
      d.at(rank - 1, rank - 1) = 2;
      d.at(rank - 1, rank - 3) = -1;  // fork at node rank-2
      d.at(rank - 3, rank - 1) = -1;
      return d;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw unsupported_error("E_n supported for 6 <= n <= 8");
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
      IMat m(rank, rank);
      for (int i = 0; i < rank; ++i) m.at(i, i) = 2;
      auto bond = [&](int a, int b) {
        m.at(a - 1, b - 1) = -1;
        m.at(b - 1, a - 1) = -1;
      };
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int k = 4; k < rank; ++k) bond(k, k + 1);
      return m;
    }
    case 'F': {
      if (rank != 4) throw unsupported_error("F_n supported only for n = 4");
      IMat m = chain(4);
      m.at(2, 1) = -2;  // alpha_3, alpha_4 short
      return m;
    }
    case 'G': {
      if (rank != 2) throw unsupported_error("G_n supported only for n = 2");
      IMat m(2, 2);
      m.at(0, 0) = 2;
      m.at(0, 1) = -1;  // alpha_1 long
      m.at(1, 0) = -3;
      m.at(1, 1) = 2;
      return m;
    }
    default:
      throw config_error(std::string("unknown type: ") + type);
  }
}

Int weyl_order(char type, int rank) {
  auto fact = [](int n) {
    i128 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  i128 v = 0;
  switch (type) {
    case 'A': v = fact(rank + 1); break;
    case 'B':
    case 'C': v = fact(rank) * ((i128)1 << rank); break;
    case 'D': v = fact(rank) * ((i128)1 << (rank - 1)); break;
    case 'E': v = rank == 6 ? 51840 : (rank == 7 ? 2903040 : (i128)696729600); break;
    case 'F': v = 1152; break;
    case 'G': v = 12; break;
    default: throw config_error(std::string("unknown type: ") + type);
  }
  return checked_cast(v);
}

IVec RootDatum::weight_from_alpha(const IVec& alpha_coords) const {
  IVec out(rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i)
      out[i] = checked_cast((i128)out[i] + (i128)alpha_coords[j] * simple_roots[j][i]);
  return out;
}

QVec RootDatum::alpha_from_weight(const IVec& mu) const {
  std::vector<QVec> cols(rank);
  for (int i = 0; i < rank; ++i) {
    cols[i].resize(rank);
    for (int j = 0; j < rank; ++j) cols[i][j] = Rat(simple_roots[j][i]);
  }
  QVec out;
  if (!solve_rational(cols, to_qvec(mu), out))
    throw internal_error("weight outside the root-lattice span");
  return out;
}

RootDatum build_root_datum(char type, int rank, Flavor flavor) {
  RootDatum rd;
  rd.type = type;
  rd.rank = rank;
  rd.flavor = flavor;
  rd.cartan = cartan_matrix(type, rank);
  rd.simple_roots.resize(rank);
  rd.simple_coroots.resize(rank);
  for (int j = 0; j < rank; ++j) {
    if (flavor == Flavor::SimplyConnected) {
      rd.simple_roots[j] = rd.cartan.col(j);  // alpha_j in the omega basis
      IVec e(rank, 0);
      e[j] = 1;
      rd.simple_coroots[j] = e;
    } else {
      IVec e(rank, 0);
      e[j] = 1;
      rd.simple_roots[j] = e;                     // alpha_j is a basis vector
      rd.simple_coroots[j] = rd.cartan.row(j);    // alpha_j^vee in omega^vee basis
    }
  }
  // sanity: <alpha_j, alpha_i^vee> = a_ij
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (idot(rd.simple_roots[j], rd.simple_coroots[i]) != rd.cartan.at(i, j))
        throw internal_error("root datum pairing mismatch");
  return rd;
}

std::vector<IVec> positive_roots_alpha(const RootDatum& rd) {
  const int r = rd.rank;
  const IMat& a = rd.cartan;
  std::set<IVec> roots;
  std::vector<IVec> frontier;
  for (int j = 0; j < r; ++j) {
    IVec e(r, 0);
    e[j] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        Int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += a.at(i, j) * beta[j];
        IVec refl = beta;
        refl[i] -= pairing;
        if (roots.insert(refl).second) next.push_back(refl);
      }
    }
    frontier = next;
  }
  std::vector<IVec> pos;
  for (const auto& beta : roots) {
    bool nonneg = std::all_of(beta.begin(), beta.end(), [](Int c) { return c >= 0; });
    if (nonneg) pos.push_back(beta);
  }
  auto height = [](const IVec& v) {
    Int h = 0;
    for (Int c : v) h += c;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const IVec& x, const IVec& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return lex_less(x, y);
  });
  return pos;
}

std::vector<IVec> positive_roots(const RootDatum& rd) {
  std::vector<IVec> out;
  for (const auto& beta : positive_roots_alpha(rd)) out.push_back(rd.weight_from_alpha(beta));
  return out;
}

IVec highest_root_alpha(const RootDatum& rd) {
  auto pos = positive_roots_alpha(rd);
  std::set<IVec> root_set(pos.begin(), pos.end());
  const int r = rd.rank;
  std::vector<IVec> maximal;
  for (const auto& beta : pos) {
    bool top = true;
    for (int i = 0; i < r && top; ++i) {
      IVec up = beta;
      up[i] += 1;
      if (root_set.count(up)) top = false;
    }
    if (top) maximal.push_back(beta);
  }
  if (maximal.size() != 1)
    throw config_error("highest root requires an irreducible root system");
  return maximal[0];
}

IVec highest_root(const RootDatum& rd) { return rd.weight_from_alpha(highest_root_alpha(rd)); }

IMat coweight_action(const IMat& mat_x) {
  const int n = mat_x.rows();
  std::vector<QVec> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = to_qvec(mat_x.row(i));
  // solve M^T y = e_i columnwise to build (M^T)^{-1}
  IMat t(n, n);
  std::vector<QVec> mt(n);
  for (int i = 0; i < n; ++i) mt[i] = to_qvec(mat_x.col(i));  // rows of M^T
  for (int i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = Rat(1);
    QVec sol;
    if (!solve_rational(mt, e, sol)) throw internal_error("Weyl matrix not invertible");
    for (int j = 0; j < n; ++j) {
      if (!sol[j].is_integer()) throw internal_error("Weyl coweight action not integral");
      t.at(j, i) = sol[j].num();
    }
  }
  return t;
}

std::vector<WeylElement> weyl_group(const RootDatum& rd, Int order_cap) {
  const int r = rd.rank;
  Int order = weyl_order(rd.type, rd.rank);
  if (order > order_cap)
    throw unsupported_error("Weyl group order " + std::to_string(order) +
                            " exceeds cap " + std::to_string(order_cap));
  std::vector<IMat> gens(r);
  for (int i = 0; i < r; ++i) {
    IMat m = IMat::identity(r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        m.at(a, b) -= rd.simple_roots[i][a] * rd.simple_coroots[i][b];
    gens[i] = m;
  }
  std::vector<WeylElement> out;
  std::map<std::string, int> seen;
  auto push = [&](const IMat& m, const std::vector<int>& word) {
    std::string k = m.str();
    if (seen.count(k)) return false;
    seen[k] = (int)out.size();
    out.push_back(WeylElement{m, word});
    return true;
  };
  push(IMat::identity(r), {});
  size_t head = 0;
  while (head < out.size()) {
    WeylElement cur = out[head++];
    for (int i = 0; i < r; ++i) {
      IMat next = cur.mat_x.mul(gens[i]);  // right multiplication: word + s_i
      std::vector<int> w = cur.word;
      w.push_back(i + 1);
      push(next, w);
    }
  }
  if ((Int)out.size() != order) throw internal_error("Weyl group enumeration mismatch");
  return out;
}

Cone dominant_chamber(const RootDatum& rd) {
  std::vector<IVec> ineqs;
  for (const auto& a : rd.simple_roots) ineqs.push_back(a);
  return Cone::from_inequalities(rd.rank, ineqs);
}

std::vector<IVec> chamber_rays(const RootDatum& rd) {
  const int r = rd.rank;
  std::vector<QVec> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = to_qvec(rd.simple_roots[i]);
  std::vector<IVec> rays(r);
  for (int i = 0; i < r; ++i) {
    QVec e(r, Rat(0));
    e[i] = Rat(1);
    QVec omega;
    if (!solve_rational(rows, e, omega)) throw internal_error("degenerate simple roots");
    rays[i] = primitive(omega);
  }
  return rays;
}

bool is_dominant(const RootDatum& rd, const IVec& lambda) {
  for (const auto& cv : rd.simple_coroots)
    if (idot(lambda, cv) < 0) return false;
  return true;
}

bool is_regular_dominant(const RootDatum& rd, const IVec& lambda) {
  for (const auto& cv : rd.simple_coroots)
    if (idot(lambda, cv) <= 0) return false;
  return true;
}

Fan torus_closure_fan(const RootDatum& rd, const IVec& lambda, Int order_cap) {
  if ((int)lambda.size() != rd.rank) throw config_error("lambda dimension mismatch");
  if (!is_regular_dominant(rd, lambda))
    throw config_error("torus closure fan requires a regular dominant weight");
  auto rays = chamber_rays(rd);
  auto w = weyl_group(rd, order_cap);
  std::vector<Cone> chambers;
  for (const auto& el : w) {
    IMat wv = coweight_action(el.mat_x);
    std::vector<IVec> gens;
    for (const auto& u : rays) {
      IVec img = wv.apply(u);
      for (auto& x : img) x = -x;
      gens.push_back(img);
    }
    chambers.push_back(Cone::from_generators_int(rd.rank, gens));
  }
  return Fan::from_cones(rd.rank, chambers);
}

std::set<int> one_param_limit_J(const RootDatum& rd, const IVec& eta) {
  std::set<int> j;
  for (int i = 0; i < rd.rank; ++i) {
    Int v = idot(rd.simple_roots[i], eta);
    if (v > 0) throw config_error("coweight is outside the negative chamber");
    if (v < 0) j.insert(i + 1);
  }
  return j;
}

std::vector<Int> coroot_length_ratios(const IMat& cartan) {
  const int r = cartan.rows();
  std::vector<Rat> d(r, Rat(0));
  d[0] = Rat(1);
  // propagate d_j = d_i * a_ji / a_ij over bonds; the graph is connected
  for (int pass = 0; pass < r; ++pass)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j || cartan.at(i, j) == 0) continue;
        if (!d[i].is_zero() && d[j].is_zero())
          d[j] = d[i] * Rat(cartan.at(j, i), 1) / Rat(cartan.at(i, j), 1);
      }
  for (const auto& x : d)
    if (x.is_zero()) throw config_error("Cartan matrix is not connected/irreducible");
  Int l = 1;
  for (const auto& x : d) l = l / gcd_ll(l, x.den()) * x.den();
  std::vector<Int> out(r);
  Int g = 0;
  for (int i = 0; i < r; ++i) {
    out[i] = d[i].num() * (l / d[i].den());
    g = gcd_ll(g, out[i]);
  }
  for (auto& x : out) x /= g;
  return out;
}

QuadraticForm basic_form(const RootDatum& rd) {
  if (rd.flavor != Flavor::SimplyConnected)
    throw unsupported_error(
        "basic_form is integral on the coroot lattice only; use the sc flavor");
  auto d = coroot_length_ratios(rd.cartan);
  IMat gram(rd.rank, rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      gram.at(i, j) = rd.cartan.at(i, j) * d[j];
  return QuadraticForm(gram);
}

}  // namespace weyl
