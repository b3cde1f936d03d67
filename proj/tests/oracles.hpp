#pragma once

// Test-side oracles, independent of the library implementations they check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "core.hpp"
#include "root_datum.hpp"

namespace oracles {

using weyl::i128;
using weyl::Int;
using weyl::IVec;
using weyl::QVec;
using weyl::Rat;

// Invariant factors via gcds of k x k minors: d_k = g_k / g_{k-1}.
inline std::vector<Int> minor_gcd_invariant_factors(const weyl::IMat& m) {
  const int r = m.rows(), c = m.cols();
  const int n = std::min(r, c);
  std::vector<i128> g(n + 1, 0);
  g[0] = 1;
  std::vector<int> ri(r), ci(c);
  for (int k = 1; k <= n; ++k) {
    // iterate over all k-subsets of rows and columns
    std::vector<int> rs(k), cs(k);
    for (int i = 0; i < k; ++i) rs[i] = i;
    i128 acc = 0;
    auto det_k = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
      // exact integer determinant by fraction-free expansion (k <= 4 here)
      std::vector<std::vector<i128>> a(k, std::vector<i128>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = m.at(rows[i], cols[j]);
      // recursive Laplace
      std::function<i128(std::vector<std::vector<i128>>&)> rec =
          [&](std::vector<std::vector<i128>>& mm) -> i128 {
        int sz = (int)mm.size();
        if (sz == 1) return mm[0][0];
        i128 s = 0;
        for (int j = 0; j < sz; ++j) {
          if (mm[0][j] == 0) continue;
          std::vector<std::vector<i128>> sub(sz - 1, std::vector<i128>(sz - 1));
          for (int i = 1; i < sz; ++i) {
            int jj = 0;
            for (int j2 = 0; j2 < sz; ++j2) {
              if (j2 == j) continue;
              sub[i - 1][jj++] = mm[i][j2];
            }
          }
          i128 d = rec(sub);
          s += (j % 2 == 0 ? 1 : -1) * mm[0][j] * d;
        }
        return s;
      };
      return rec(a);
    };
    std::function<void(int, int)> loop_cols = [&](int start, int depth) {
      if (depth == k) {
        acc = weyl::gcd128(acc, det_k(rs, cs));
        return;
      }
      for (int j = start; j < c; ++j) {
        cs[depth] = j;
        loop_cols(j + 1, depth + 1);
      }
    };
    std::function<void(int, int)> loop_rows = [&](int start, int depth) {
      if (depth == k) {
        loop_cols(0, 0);
        return;
      }
      for (int i = start; i < r; ++i) {
        rs[depth] = i;
        loop_rows(i + 1, depth + 1);
      }
    };
    loop_rows(0, 0);
    g[k] = acc;
    if (acc == 0) break;
  }
  std::vector<Int> factors;
  for (int k = 1; k <= n; ++k) {
    if (g[k] == 0) break;
    i128 dk = g[k] / g[k - 1];
    if (dk >= 2) factors.push_back(weyl::checked_cast(dk));
    if (dk == 1 && !factors.empty())
      factors.push_back(1);  // would break the chain; surfaces as test failure
  }
  return factors;
}

// Brute-force nearest lattice points of Z^n to target under gram, searching
// the box |x_i| <= box around the rounded target.
inline std::vector<IVec> brute_nearest(const weyl::IMat& gram, const QVec& target, Int box) {
  const int n = gram.rows();
  IVec center(n);
  for (int i = 0; i < n; ++i) center[i] = target[i].round();
  std::vector<IVec> pts;
  IVec cur(n);
  std::function<void(int)> rec = [&](int d) {
    if (d == n) {
      pts.push_back(cur);
      return;
    }
    for (Int k = center[d] - box; k <= center[d] + box; ++k) {
      cur[d] = k;
      rec(d + 1);
    }
  };
  rec(0);
  auto dist2 = [&](const IVec& p) {
    QVec diff(n);
    for (int i = 0; i < n; ++i) diff[i] = Rat(p[i]) - target[i];
    Rat s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += Rat(gram.at(i, j)) * diff[i] * diff[j];
    return s;
  };
  Rat best = dist2(pts[0]);
  for (const auto& p : pts) best = std::min(best, dist2(p), [](const Rat& a, const Rat& b) { return a < b; });
  std::vector<IVec> out;
  for (const auto& p : pts)
    if (dist2(p) == best) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return weyl::lex_less(a, b); });
  return out;
}

// Kostant partition function for the given positive roots (in alpha coords).
struct KostantPartition {
  std::vector<IVec> pos_roots;
  std::map<IVec, i128> memo;
  i128 count(const IVec& v, size_t from = 0) {
    for (Int x : v)
      if (x < 0) return 0;
    bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
    if (zero) return 1;
    if (from == 0) {
      auto it = memo.find(v);
      if (it != memo.end()) return it->second;
    }
    i128 total = 0;
    for (size_t i = from; i < pos_roots.size(); ++i) {
      IVec w = v;
      bool ok = true;
      for (size_t j = 0; j < v.size(); ++j) {
        w[j] -= pos_roots[i][j];
        if (w[j] < 0) ok = false;
      }
      if (ok) total += count(w, i);
    }
    if (from == 0) memo[v] = total;
    return total;
  }
};

// Weyl character formula: mult(mu) = sum_w sgn(w) P(w(lambda+rho) - (mu+rho)),
// with P the Kostant partition function over the positive roots.
inline std::map<IVec, Int> wcf_multiplicities(const weyl::RootDatum& rd, const IVec& lambda) {
  auto pos_alpha = weyl::positive_roots_alpha(rd);
  KostantPartition kp;
  kp.pos_roots = pos_alpha;
  auto w = weyl::weyl_group(rd, 10000);
  const int r = rd.rank;
  QVec rho(r, Rat(0));
  for (const auto& beta : weyl::positive_roots(rd))
    rho = weyl::qadd(rho, weyl::qscale(Rat(1, 2), weyl::to_qvec(beta)));
  QVec lr = weyl::qadd(weyl::to_qvec(lambda), rho);
  std::map<IVec, Int> mult;
  std::set<IVec> seen;
  std::vector<IVec> frontier = {lambda};
  seen.insert(lambda);
  auto compute = [&](const IVec& mu) {
    i128 m = 0;
    for (const auto& el : w) {
      Int sign = el.word.size() % 2 == 0 ? 1 : -1;
      QVec img(r, Rat(0));
      for (int a = 0; a < r; ++a) {
        Rat s;
        for (int b = 0; b < r; ++b) s += Rat(el.mat_x.at(a, b)) * lr[b];
        img[a] = s - Rat(mu[a]) - rho[a];
      }
      std::vector<QVec> rows(r, QVec(r));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) rows[a][b] = Rat(rd.simple_roots[b][a]);
      QVec coords;
      if (!weyl::solve_rational(rows, img, coords)) continue;
      bool integral = true;
      IVec v(r);
      for (int a = 0; a < r; ++a) {
        if (!coords[a].is_integer())
          integral = false;
        else
          v[a] = coords[a].num();
      }
      if (!integral) continue;
      m += sign * kp.count(v);
    }
    return weyl::checked_cast(m);
  };
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& mu : frontier) {
      Int m = compute(mu);
      if (m < 0) throw weyl::internal_error("WCF oracle negative multiplicity");
      if (m == 0) continue;
      mult[mu] = m;
      for (int i = 0; i < rd.rank; ++i) {
        IVec nu = mu;
        for (int a = 0; a < rd.rank; ++a) nu[a] -= rd.simple_roots[i][a];
        if (seen.insert(nu).second) next.push_back(nu);
      }
    }
    frontier = next;
  }
  return mult;
}

}  // namespace oracles
