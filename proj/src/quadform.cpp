#include "quadform.hpp"

namespace weyl {

QuadraticForm::QuadraticForm(IMat gram) : gram_(std::move(gram)) {
  const int n = gram_.rows();
  if (gram_.cols() != n) throw config_error("Gram matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram_.at(i, j) != gram_.at(j, i)) throw config_error("Gram matrix must be symmetric");
  // positive definite: leading principal minors > 0
  for (int k = 1; k <= n; ++k) {
    std::vector<QVec> rows(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) rows[i][j] = Rat(gram_.at(i, j));
    if (!(det_rational(rows) > Rat(0)))
      throw config_error("Gram matrix must be positive definite");
  }
}

Int QuadraticForm::eval(const IVec& a, const IVec& b) const {
  i128 s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += (i128)a[i] * gram_.at(i, j) * b[j];
  return checked_cast(s);
}

Rat QuadraticForm::eval(const QVec& a, const QVec& b) const {
  Rat s;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * Rat(gram_.at(i, j)) * b[j];
  return s;
}

IVec QuadraticForm::weight_of(const IVec& eta) const {
  return gram_.transpose().apply(eta);  // symmetric; kept explicit
}

}  // namespace weyl
