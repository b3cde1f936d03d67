#include "affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weyl {

QVec AffineWeylElement::act(const QVec& zeta) const {
  return w.apply(qadd(zeta, to_qvec(eta)));
}

std::string AffineWeylElement::key() const {
  std::ostringstream os;
  os << w.str() << "|";
  for (size_t i = 0; i < eta.size(); ++i) os << (i ? "," : "") << eta[i];
  return os.str();
}

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
  AffineWeylElement c;
  c.w = a.w.mul(b.w);
  // w2^{-1} eta1 + eta2; for a V_T action M the inverse is ((M^T)^{-1})^T
  IMat w2inv = coweight_action(b.w).transpose();
  c.eta = w2inv.apply(a.eta);
  for (size_t i = 0; i < c.eta.size(); ++i)
    c.eta[i] = checked_cast((i128)c.eta[i] + b.eta[i]);
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  c.length = 0;
  return c;
}

std::vector<AffineWeylElement> affine_simple_reflections(const AffineRootDatum& ard) {
  const RootDatum& rd = ard.base;
  const int r = rd.rank;
  std::vector<AffineWeylElement> out;
  // s_0 = (s_theta, -theta^vee) acting on V_T coordinates
  {
    AffineWeylElement s0;
    IMat m = IMat::identity(r);
    // s_theta on V_T: eta |-> eta - <theta, eta> theta^vee
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) m.at(a, b) -= ard.theta_covee[a] * ard.theta[b];
    s0.w = m;
    s0.eta.assign(r, 0);
    for (int a = 0; a < r; ++a) s0.eta[a] = -ard.theta_covee[a];
    s0.word = {0};
    s0.length = 1;
    out.push_back(s0);
  }
  for (int i = 0; i < r; ++i) {
    AffineWeylElement s;
    IMat m = IMat::identity(r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) m.at(a, b) -= rd.simple_coroots[i][a] * rd.simple_roots[i][b];
    s.w = m;
    s.eta.assign(r, 0);
    s.word = {i + 1};
    s.length = 1;
    out.push_back(s);
  }
  return out;
}

namespace {

std::vector<AffineWeylElement> bfs_enumerate(const AffineRootDatum& ard,
                                             const std::vector<int>& generator_nodes,
                                             int length_bound, Int cap) {
  auto gens_all = affine_simple_reflections(ard);
  std::vector<AffineWeylElement> gens;
  for (int g : generator_nodes) gens.push_back(gens_all[g]);
  std::vector<AffineWeylElement> out;
  std::map<std::string, int> seen;
  AffineWeylElement id;
  id.w = IMat::identity(ard.base.rank);
  id.eta.assign(ard.base.rank, 0);
  id.length = 0;
  out.push_back(id);
  seen[id.key()] = 0;
  size_t head = 0;
  while (head < out.size()) {
    AffineWeylElement cur = out[head++];
    if (cur.length >= length_bound) continue;
    for (const auto& g : gens) {
      AffineWeylElement next = compose(cur, g);
      next.length = cur.length + 1;
      if (seen.count(next.key())) continue;
      if ((Int)out.size() >= cap)
        throw unsupported_error("affine Weyl enumeration exceeds cap");
      seen[next.key()] = (int)out.size();
      out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.key() < b.key();
  });
  return out;
}

}  // namespace

std::vector<AffineWeylElement> affine_weyl_enumerate(const AffineRootDatum& ard,
                                                     int length_bound, Int cap) {
  std::vector<int> nodes(ard.nodes());
  for (int i = 0; i < ard.nodes(); ++i) nodes[i] = i;
  return bfs_enumerate(ard, nodes, length_bound, cap);
}

Int inversion_length(const AffineRootDatum& ard, const AffineWeylElement& el) {
  // (w, eta) = t_{w eta} . w
  const RootDatum& rd = ard.base;
  IVec lambda = el.w.apply(el.eta);                // w eta
  IMat winv_x = el.w.transpose();                  // inverse of the X action
  i128 total = 0;
  for (const auto& alpha : positive_roots(rd)) {
    Int v = idot(alpha, lambda);
    IVec wa = winv_x.apply(alpha);
    QVec coords = rd.alpha_from_weight(wa);
    bool neg = true;  // a root is negative iff all alpha-coordinates <= 0
    for (const auto& c : coords)
      if (c > Rat(0)) neg = false;
    Int term = v - (neg ? 1 : 0);
    total += term < 0 ? -term : term;
  }
  return checked_cast(total);
}

std::vector<AffineWeylElement> parabolic_subgroup(const AffineRootDatum& ard,
                                                  const std::set<int>& j, Int cap) {
  if ((int)j.size() >= ard.nodes())
    throw config_error("parabolic subgroup requires a proper subset of nodes");
  std::vector<int> nodes(j.begin(), j.end());
  // finite group: closed BFS without a length bound
  return bfs_enumerate(ard, nodes, 1 << 20, cap);
}

std::vector<AffineWeylElement> coset_representatives(const AffineRootDatum& ard,
                                                     const std::set<int>& j, int length_bound,
                                                     Int cap) {
  auto all = affine_weyl_enumerate(ard, length_bound, cap);
  auto wj = parabolic_subgroup(ard, j, cap);
  std::map<std::string, AffineWeylElement> best;  // coset key -> minimal element
  for (const auto& el : all) {
    // canonical coset tag: lexicographically least key among el * W_J
    std::string tag;
    for (const auto& v : wj) {
      std::string k = compose(el, v).key();
      if (tag.empty() || k < tag) tag = k;
    }
    auto it = best.find(tag);
    if (it == best.end() || el.length < it->second.length) best[tag] = el;
  }
  std::vector<AffineWeylElement> out;
  for (auto& kv : best) out.push_back(kv.second);
  std::sort(out.begin(), out.end(), [](const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.key() < b.key();
  });
  return out;
}

std::vector<BirkhoffTriple> birkhoff_strata_index(const AffineRootDatum& ard,
                                                  const std::set<int>& j, int length_bound,
                                                  Int cap) {
  auto all = affine_weyl_enumerate(ard, length_bound, cap);
  auto wj = parabolic_subgroup(ard, j, cap);
  auto left = coset_representatives(ard, j, length_bound, cap);
  // right cosets W_J \ W^aff: minimal rep per tag of W_J * el
  std::map<std::string, AffineWeylElement> right_best;
  for (const auto& el : all) {
    std::string tag;
    for (const auto& v : wj) {
      std::string k = compose(v, el).key();
      if (tag.empty() || k < tag) tag = k;
    }
    auto it = right_best.find(tag);
    if (it == right_best.end() || el.length < it->second.length) right_best[tag] = el;
  }
  std::vector<AffineWeylElement> right;
  for (auto& kv : right_best) right.push_back(kv.second);
  std::sort(right.begin(), right.end(),
            [](const AffineWeylElement& a, const AffineWeylElement& b) {
              if (a.length != b.length) return a.length < b.length;
              return a.key() < b.key();
            });
  std::vector<BirkhoffTriple> out;
  for (const auto& w1 : left)
    for (const auto& w2 : right)
      for (const auto& w3 : wj) {
        if (w3.length > length_bound) continue;
        out.push_back(BirkhoffTriple{w1, w2, w3});
      }
  return out;
}

AffineCharacter affine_weyl_translation_action(const QuadraticForm& q, const IVec& eta,
                                               const AffineCharacter& chi) {
  AffineCharacter out;
  out.h = chi.h;
  Int pairing = idot(chi.lambda, eta);
  // n-shift carries -(h/2)Q(eta,eta): the unique sign for which the
  // translations compose additively at every level
  out.n = chi.n - Rat(pairing) - Rat(chi.h) * q.norm_half(eta);
  IVec qeta = q.weight_of(eta);
  out.lambda = chi.lambda;
  for (size_t i = 0; i < out.lambda.size(); ++i)
    out.lambda[i] = checked_cast((i128)out.lambda[i] + (i128)chi.h * qeta[i]);
  return out;
}

}  // namespace weyl
