#include "freudenthal.hpp"

#include <algorithm>

namespace weyl {

Int WeightMultiplicityTable::dimension() const {
  i128 s = 0;
  for (const auto& kv : mult) s += kv.second;
  return checked_cast(s);
}

std::vector<QVec> weight_form(const RootDatum& rd) {
  const int r = rd.rank;
  auto d = coroot_length_ratios(rd.cartan);
  // (alpha_i, alpha_j) = a_ij / d_i in the simple-root basis
  std::vector<QVec> f_alpha(r, QVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) f_alpha[i][j] = Rat(rd.cartan.at(i, j), d[i]);
  // transport to X coordinates: F_X = S^{-T} F_alpha S^{-1}, S columns = roots
  std::vector<QVec> s_rows(r, QVec(r));  // rows of S
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) s_rows[i][j] = Rat(rd.simple_roots[j][i]);
  // S^{-1} columnwise
  std::vector<QVec> sinv_cols(r);
  for (int i = 0; i < r; ++i) {
    QVec e(r, Rat(0));
    e[i] = Rat(1);
    QVec sol;
    if (!solve_rational(s_rows, e, sol)) throw internal_error("singular root matrix");
    sinv_cols[i] = sol;  // column i of S^{-1}
  }
  std::vector<QVec> f_x(r, QVec(r, Rat(0)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Rat s;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += sinv_cols[a][i] * f_alpha[i][j] * sinv_cols[b][j];
      f_x[a][b] = s;
    }
  return f_x;
}

WeightMultiplicityTable freudenthal_multiplicities(const RootDatum& rd, const IVec& lambda) {
  if ((int)lambda.size() != rd.rank) throw config_error("lambda dimension mismatch");
  if (!is_dominant(rd, lambda)) throw config_error("freudenthal requires a dominant weight");
  const int r = rd.rank;
  auto pos = positive_roots(rd);
  auto f_x = weight_form(rd);
  auto form = [&](const QVec& a, const QVec& b) {
    Rat s;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += a[i] * f_x[i][j] * b[j];
    return s;
  };
  QVec rho(r, Rat(0));
  for (const auto& beta : pos) rho = qadd(rho, qscale(Rat(1, 2), to_qvec(beta)));

  WeightMultiplicityTable table;
  table.lambda = lambda;
  table.mult[lambda] = 1;
  QVec lam_rho = qadd(to_qvec(lambda), rho);
  Rat top = form(lam_rho, lam_rho);

  std::vector<IVec> level = {lambda};
  for (int depth = 1; depth < 10000 && !level.empty(); ++depth) {
    std::set<IVec> candidates;
    for (const auto& mu : level)
      for (int i = 0; i < r; ++i) {
        IVec nu = mu;
        for (int a = 0; a < r; ++a) nu[a] -= rd.simple_roots[i][a];
        candidates.insert(nu);
      }
    std::vector<IVec> next;
    for (const auto& mu : candidates) {
      Rat rhs;
      for (const auto& beta : pos) {
        for (Int k = 1;; ++k) {
          IVec up = mu;
          for (int a = 0; a < r; ++a)
            up[a] = checked_cast((i128)up[a] + (i128)k * beta[a]);
          auto it = table.mult.find(up);
          if (it == table.mult.end()) break;
          rhs += Rat(2 * it->second) * form(to_qvec(up), to_qvec(beta));
        }
      }
      QVec mu_rho = qadd(to_qvec(mu), rho);
      Rat c = top - form(mu_rho, mu_rho);
      if (c.is_zero()) {
        if (!rhs.is_zero()) throw internal_error("Freudenthal denominator vanished");
        continue;
      }
      Rat m = rhs / c;
      if (m.is_zero()) continue;
      if (!m.is_integer() || m.num() < 0)
        throw internal_error("Freudenthal produced a non-integral multiplicity");
      table.mult[mu] = m.num();
      next.push_back(mu);
    }
    level = next;
  }
  if (!level.empty()) throw internal_error("Freudenthal failed to terminate");
  return table;
}

}  // namespace weyl
