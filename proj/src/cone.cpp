#include "cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace weyl {

namespace {

Rat eval(const IVec& phi, const QVec& x) {
  Rat s;
  for (size_t i = 0; i < phi.size(); ++i) s += Rat(phi[i]) * x[i];
  return s;
}

Int eval_i(const IVec& phi, const IVec& x) { return idot(phi, x); }

std::vector<IVec> sorted_unique(std::vector<IVec> v) {
  std::sort(v.begin(), v.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Canonical basis of the span of the given vectors: primitive integer rows
// of the reduced row echelon form.
std::vector<IVec> canonical_span_basis(const std::vector<QVec>& vecs) {
  std::vector<QVec> rows = vecs;
  rref(rows);
  std::vector<IVec> out;
  for (const auto& r : rows)
    if (!is_zero(r)) out.push_back(primitive(r));
  return sorted_unique(out);
}

// Subtract the projection onto span(lines); canonical representative mod L.
QVec reduce_mod_lines(const QVec& v, const std::vector<IVec>& lines) {
  if (lines.empty()) return v;
  // solve (L L^T) c = L v, subtract L^T c
  const int k = (int)lines.size();
  std::vector<QVec> gram(k, QVec(k));
  QVec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram[i][j] = Rat(idot(lines[i], lines[j]));
    rhs[i] = qdot(to_qvec(lines[i]), v);
  }
  QVec c;
  if (!solve_rational(gram, rhs, c)) throw internal_error("line projection failed");
  QVec out = v;
  for (int i = 0; i < k; ++i) out = qsub(out, qscale(c[i], to_qvec(lines[i])));
  return out;
}

}  // namespace

VHRep double_description(int dim, const std::vector<IVec>& ineqs_in,
                         const std::vector<IVec>& eqs_in) {
  // Equalities become +- inequality pairs; order is irrelevant to the
  // canonical output.
  std::vector<IVec> constraints;
  for (const auto& e : eqs_in) {
    IVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    constraints.push_back(e);
    constraints.push_back(ne);
  }
  for (const auto& q : ineqs_in) constraints.push_back(q);
  for (auto& c : constraints) {
    bool zero = std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
    if (!zero) c = primitive(c);
  }
  constraints = sorted_unique(constraints);

  std::vector<QVec> lines;
  for (int i = 0; i < dim; ++i) {
    QVec e(dim, Rat(0));
    e[i] = Rat(1);
    lines.push_back(e);
  }
  std::vector<QVec> rays;
  std::vector<IVec> processed;

  auto tight_set = [&](const QVec& r) {
    std::vector<int> t;
    for (int k = 0; k < (int)processed.size(); ++k)
      if (eval(processed[k], r).is_zero()) t.push_back(k);
    return t;
  };
  auto tight_rank = [&](const std::vector<int>& t) {
    std::vector<QVec> rows;
    for (int k : t) rows.push_back(to_qvec(processed[k]));
    return rank_of(rows);
  };

  for (const auto& phi : constraints) {
    bool zero = std::all_of(phi.begin(), phi.end(), [](Int x) { return x == 0; });
    if (zero) continue;
    // line elimination
    int bi = -1;
    for (int i = 0; i < (int)lines.size(); ++i)
      if (!eval(phi, lines[i]).is_zero()) {
        bi = i;
        break;
      }
    if (bi >= 0) {
      QVec b = lines[bi];
      if (eval(phi, b).sign() < 0) b = qscale(Rat(-1), b);
      Rat pb = eval(phi, b);
      std::vector<QVec> nl;
      for (int i = 0; i < (int)lines.size(); ++i) {
        if (i == bi) continue;
        nl.push_back(qsub(lines[i], qscale(eval(phi, lines[i]) / pb, b)));
      }
      for (auto& r : rays) r = qsub(r, qscale(eval(phi, r) / pb, b));
      rays.push_back(b);
      lines = nl;
      processed.push_back(phi);
      continue;
    }
    std::vector<QVec> pos, zer, neg;
    for (const auto& r : rays) {
      int s = eval(phi, r).sign();
      (s > 0 ? pos : (s == 0 ? zer : neg)).push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(phi);
      continue;
    }
    std::vector<QVec> next = pos;
    next.insert(next.end(), zer.begin(), zer.end());
    if (!pos.empty()) {
      // adjacency by the combinatorial criterion on current extreme rays
      std::vector<std::vector<int>> tights;
      for (const auto& r : rays) tights.push_back(tight_set(r));
      auto index_of = [&](const QVec& r) {
        for (int i = 0; i < (int)rays.size(); ++i)
          if (rays[i] == r) return i;
        return -1;
      };
      for (const auto& p : pos)
        for (const auto& n : neg) {
          int ip = index_of(p), in = index_of(n);
          std::vector<int> t;
          std::set_intersection(tights[ip].begin(), tights[ip].end(), tights[in].begin(),
                                tights[in].end(), std::back_inserter(t));
          bool adjacent = true;
          for (int q = 0; q < (int)rays.size() && adjacent; ++q) {
            if (q == ip || q == in) continue;
            if (std::includes(tights[q].begin(), tights[q].end(), t.begin(), t.end()))
              adjacent = false;
          }
          if (!adjacent) continue;
          QVec w = qsub(qscale(eval(phi, p), n), qscale(eval(phi, n), p));
          if (is_zero(w)) continue;
          next.push_back(to_qvec(primitive(w)));
        }
    }
    processed.push_back(phi);
    // dedupe and keep extreme rays only: tight rank >= dim - #lines - 1
    std::vector<QVec> kept;
    std::set<IVec> seen;
    for (const auto& r : next) {
      IVec p = primitive(r);
      if (seen.count(p)) continue;
      seen.insert(p);
      if (tight_rank(tight_set(to_qvec(p))) >= dim - (int)lines.size() - 1)
        kept.push_back(to_qvec(p));
    }
    rays = kept;
  }

  VHRep rep;
  rep.lines = canonical_span_basis(lines);
  std::set<IVec> out;
  for (const auto& r : rays) {
    QVec red = reduce_mod_lines(r, rep.lines);
    if (is_zero(red)) continue;
    out.insert(primitive(red));
  }
  rep.rays.assign(out.begin(), out.end());
  rep.rays = sorted_unique(rep.rays);
  return rep;
}

void Cone::canonicalize_from_h(const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs) {
  VHRep v = double_description(dim_, ineqs, eqs);
  lines_ = v.lines;
  rays_ = v.rays;
  VHRep h = double_description(dim_, rays_, lines_);
  ineqs_ = h.rays;
  eqs_ = h.lines;
}

Cone Cone::from_generators(int dim, const std::vector<QVec>& gens) {
  Cone c;
  c.dim_ = dim;
  std::vector<IVec> g;
  for (const auto& v : gens) {
    if ((int)v.size() != dim) throw config_error("generator dimension mismatch");
    if (!weyl::is_zero(v)) g.push_back(primitive(v));
  }
  VHRep dualrep = double_description(dim, g, {});
  c.canonicalize_from_h(dualrep.rays, dualrep.lines);
  return c;
}

Cone Cone::from_generators_int(int dim, const std::vector<IVec>& gens) {
  std::vector<QVec> q;
  q.reserve(gens.size());
  for (const auto& g : gens) q.push_back(to_qvec(g));
  return from_generators(dim, q);
}

Cone Cone::from_inequalities(int dim, const std::vector<IVec>& ineqs,
                             const std::vector<IVec>& eqs) {
  Cone c;
  c.dim_ = dim;
  for (const auto& v : ineqs)
    if ((int)v.size() != dim) throw config_error("inequality dimension mismatch");
  for (const auto& v : eqs)
    if ((int)v.size() != dim) throw config_error("equality dimension mismatch");
  c.canonicalize_from_h(ineqs, eqs);
  return c;
}

Cone Cone::zero(int dim) {
  std::vector<IVec> eqs;
  for (int i = 0; i < dim; ++i) {
    IVec e(dim, 0);
    e[i] = 1;
    eqs.push_back(e);
  }
  return from_inequalities(dim, {}, eqs);
}

Cone Cone::full_space(int dim) { return from_inequalities(dim, {}, {}); }

int Cone::dim() const { return (int)lines_.size() + (int)rays_rank(); }

std::vector<IVec> Cone::generators() const {
  std::vector<IVec> g = rays_;
  for (const auto& l : lines_) {
    g.push_back(l);
    IVec n(l.size());
    for (size_t i = 0; i < l.size(); ++i) n[i] = -l[i];
    g.push_back(n);
  }
  return sorted_unique(g);
}

bool Cone::contains(const QVec& x) const {
  if ((int)x.size() != dim_) throw config_error("point dimension mismatch");
  for (const auto& e : eqs_)
    if (!eval(e, x).is_zero()) return false;
  for (const auto& q : ineqs_)
    if (eval(q, x).sign() < 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& o) const {
  for (const auto& g : o.generators())
    if (!contains(to_qvec(g))) return false;
  return true;
}

bool Cone::equals(const Cone& o) const {
  return dim_ == o.dim_ && contains_cone(o) && o.contains_cone(*this);
}

Cone Cone::dual() const {
  Cone d;
  d.dim_ = dim_;
  VHRep v = double_description(dim_, rays_, lines_);
  d.lines_ = v.lines;
  d.rays_ = v.rays;
  // facet normals of the dual are the primal generators (already canonical)
  d.ineqs_ = rays_;
  d.eqs_ = lines_;
  return d;
}

Cone Cone::intersect(const Cone& o) const {
  if (dim_ != o.dim_) throw config_error("intersect: ambient mismatch");
  std::vector<IVec> ineqs = ineqs_, eqs = eqs_;
  ineqs.insert(ineqs.end(), o.ineqs_.begin(), o.ineqs_.end());
  eqs.insert(eqs.end(), o.eqs_.begin(), o.eqs_.end());
  return from_inequalities(dim_, ineqs, eqs);
}

Cone Cone::preimage(const IMat& f) const {
  if (f.rows() != dim_) throw config_error("preimage: map codomain mismatch");
  IMat ft = f.transpose();
  std::vector<IVec> ineqs, eqs;
  for (const auto& q : ineqs_) ineqs.push_back(ft.apply(q));
  for (const auto& e : eqs_) eqs.push_back(ft.apply(e));
  return from_inequalities(f.cols(), ineqs, eqs);
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  std::set<std::string> seen;
  const int d = dim();
  for (const auto& phi : ineqs_) {
    std::vector<IVec> eqs = eqs_;
    eqs.push_back(phi);
    Cone f = from_inequalities(dim_, ineqs_, eqs);
    if (f.dim() != d - 1) continue;
    if (seen.insert(f.key()).second) out.push_back(f);
  }
  return out;
}

std::vector<Cone> Cone::all_faces() const {
  std::vector<Cone> out;
  std::map<std::string, Cone> seen;
  std::vector<Cone> frontier = {*this};
  seen[key()] = *this;
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& c : frontier)
      for (const auto& f : c.facets())
        if (!seen.count(f.key())) {
          seen[f.key()] = f;
          next.push_back(f);
        }
    frontier = next;
  }
  for (auto& kv : seen) out.push_back(kv.second);
  return out;
}

bool Cone::is_face_of(const Cone& o) const {
  if (!o.contains_cone(*this)) return false;
  std::vector<IVec> eqs = o.eqs_;
  auto gens = generators();
  for (const auto& phi : o.ineqs_) {
    bool tight = true;
    for (const auto& g : gens)
      if (eval_i(phi, g) != 0) {
        tight = false;
        break;
      }
    if (tight) eqs.push_back(phi);
  }
  Cone f = from_inequalities(o.dim_, o.ineqs_, eqs);
  return equals(f);
}

std::string Cone::key() const {
  std::ostringstream os;
  os << "L";
  for (const auto& l : lines_) {
    os << "|";
    for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  }
  os << ";R";
  for (const auto& r : rays_) {
    os << "|";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  }
  return os.str();
}

size_t Cone::rays_rank() const {
  // rank of rays modulo the lineality space
  std::vector<QVec> rows;
  for (const auto& r : rays_) rows.push_back(to_qvec(r));
  return (size_t)rank_of(rows);
}

Fan Fan::from_cones(int dim, const std::vector<Cone>& cones) {
  Fan f;
  f.dim_ = dim;
  std::map<std::string, Cone> seen;
  for (const auto& c : cones) {
    if (c.ambient_dim() != dim) throw config_error("fan: ambient mismatch");
    for (const auto& face : c.all_faces()) seen.emplace(face.key(), face);
  }
  for (auto& kv : seen) f.cones_.push_back(kv.second);
  // fan axiom: pairwise intersections are common faces
  for (size_t i = 0; i < f.cones_.size(); ++i)
    for (size_t j = i + 1; j < f.cones_.size(); ++j) {
      Cone inter = f.cones_[i].intersect(f.cones_[j]);
      if (!inter.is_face_of(f.cones_[i]) || !inter.is_face_of(f.cones_[j]))
        throw config_error("cones do not form a fan: intersection is not a common face");
    }
  return f;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cones_.size() && maximal; ++j) {
      if (i == j) continue;
      if (cones_[j].contains_cone(cones_[i]) && !cones_[j].equals(cones_[i])) maximal = false;
    }
    if (maximal) out.push_back(cones_[i]);
  }
  return out;
}

bool Fan::contains_cone_of(const QVec& x) const {
  for (const auto& c : cones_)
    if (c.contains(x)) return true;
  return false;
}

bool Fan::operator==(const Fan& o) const {
  if (dim_ != o.dim_ || cones_.size() != o.cones_.size()) return false;
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].key() != o.cones_[i].key()) return false;
  return true;
}

namespace {

// sigma covered by the fan cones contained in it: every facet of a full-dim
// member is either on the boundary of sigma or matched by another member.
bool covered(const Cone& sigma, const std::vector<Cone>& members) {
  const int d = sigma.dim();
  if (d == 0) return true;
  std::vector<Cone> full;
  for (const auto& m : members)
    if (m.dim() == d) full.push_back(m);
  if (full.empty()) return false;
  for (const auto& tau : full) {
    for (const auto& g : tau.facets()) {
      bool on_boundary = false;
      auto gens = g.generators();
      for (const auto& phi : sigma.ineq_normals()) {
        bool tight = true;
        for (const auto& v : gens)
          if (idot(phi, v) != 0) {
            tight = false;
            break;
          }
        if (tight) {
          on_boundary = true;
          break;
        }
      }
      if (on_boundary) continue;
      bool matched = false;
      for (const auto& other : full) {
        if (other.equals(tau)) continue;
        if (other.contains_cone(g)) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

}  // namespace

bool is_refinement(const Fan& f1, const Fan& f2) {
  if (f1.ambient_dim() != f2.ambient_dim())
    throw config_error("is_refinement: ambient mismatch");
  std::vector<Cone> max1 = f1.maximal_cones();
  for (const auto& c : max1) {
    bool inside = false;
    for (const auto& d : f2.cones())
      if (d.contains_cone(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  for (const auto& sigma : f2.maximal_cones()) {
    std::vector<Cone> members;
    for (const auto& tau : max1)
      if (sigma.contains_cone(tau)) members.push_back(tau);
    if (!covered(sigma, members)) return false;
  }
  return true;
}

}  // namespace weyl
