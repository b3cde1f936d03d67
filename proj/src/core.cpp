#include "core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace weyl {

Int checked_cast(i128 v) {
  if (v > (i128)std::numeric_limits<Int>::max() || v < (i128)std::numeric_limits<Int>::min())
    throw internal_error("integer overflow in exact arithmetic");
  return (Int)v;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int gcd_ll(Int a, Int b) { return (Int)gcd128(a, b); }

Rat::Rat(Int n, Int d) { *this = make(n, d); }

Rat Rat::make(i128 n, i128 d) {
  if (d == 0) throw internal_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num_ = checked_cast(n);
  r.den_ = checked_cast(d);
  return r;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  return make((i128)num_ * o.den_ + (i128)o.num_ * den_, (i128)den_ * o.den_);
}
Rat Rat::operator-(const Rat& o) const {
  return make((i128)num_ * o.den_ - (i128)o.num_ * den_, (i128)den_ * o.den_);
}
Rat Rat::operator*(const Rat& o) const { return make((i128)num_ * o.num_, (i128)den_ * o.den_); }
Rat Rat::operator/(const Rat& o) const {
  if (o.num_ == 0) throw internal_error("rational division by zero");
  return make((i128)num_ * o.den_, (i128)den_ * o.num_);
}

Int Rat::floor() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Int Rat::ceil() const { return -(-*this).floor(); }

Int Rat::round() const {
  // floor(x + 1/2)
  return (*this + Rat(1, 2)).floor();
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

IVec to_ivec(const QVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer()) throw internal_error("expected integral vector");
    r[i] = v[i].num();
  }
  return r;
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool lex_less(const IVec& a, const IVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QVec qadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec qscale(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat qdot(const QVec& a, const QVec& b) {
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int idot(const IVec& a, const IVec& b) {
  i128 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (i128)a[i] * b[i];
  return checked_cast(s);
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

IVec primitive(const QVec& v) {
  bool zero = true;
  i128 l = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) zero = false;
    l = l / gcd128(l, x.den()) * x.den();
  }
  if (zero) throw config_error("primitive() of the zero vector");
  std::vector<i128> w(v.size());
  i128 g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = (i128)v[i].num() * (l / v[i].den());
    g = gcd128(g, w[i]);
  }
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_cast(w[i] / g);
  return r;
}

IVec primitive(const IVec& v) { return primitive(to_qvec(v)); }

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows) {
  int r = (int)rows.size();
  int c = r ? (int)rows[0].size() : 0;
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if ((int)rows[i].size() != c) throw internal_error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IMat IMat::from_cols(const std::vector<IVec>& cols) {
  int c = (int)cols.size();
  int r = c ? (int)cols[0].size() : 0;
  IMat m(r, c);
  for (int j = 0; j < c; ++j) {
    if ((int)cols[j].size() != r) throw internal_error("ragged matrix cols");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IVec IMat::row(int i) const {
  IVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IVec IMat::col(int j) const {
  IVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IMat IMat::transpose() const {
  IMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IMat IMat::mul(const IMat& o) const {
  if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
  IMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      i128 s = 0;
      for (int k = 0; k < cols_; ++k) s += (i128)at(i, k) * o.at(k, j);
      r.at(i, j) = checked_cast(s);
    }
  return r;
}

IVec IMat::apply(const IVec& x) const {
  if ((int)x.size() != cols_) throw internal_error("matrix apply shape mismatch");
  IVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    i128 s = 0;
    for (int j = 0; j < cols_; ++j) s += (i128)at(i, j) * x[j];
    r[i] = checked_cast(s);
  }
  return r;
}

QVec IMat::apply(const QVec& x) const {
  if ((int)x.size() != cols_) throw internal_error("matrix apply shape mismatch");
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s;
    for (int j = 0; j < cols_; ++j) s += Rat(at(i, j)) * x[j];
    r[i] = s;
  }
  return r;
}

std::string IMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void row_swap(IMat& m, int i, int j) {
  for (int k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}
void col_swap(IMat& m, int i, int j) {
  for (int k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}
// row i += f * row j
void row_add(IMat& m, int i, int j, Int f) {
  for (int k = 0; k < m.cols(); ++k)
    m.at(i, k) = checked_cast((i128)m.at(i, k) + (i128)f * m.at(j, k));
}
void col_add(IMat& m, int i, int j, Int f) {
  for (int k = 0; k < m.rows(); ++k)
    m.at(k, i) = checked_cast((i128)m.at(k, i) + (i128)f * m.at(k, j));
}
void row_neg(IMat& m, int i) {
  for (int k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
  const int rows = m.rows(), cols = m.cols();
  SmithDecomposition s;
  s.U = IMat::identity(rows);
  s.V = IMat::identity(cols);
  s.D = m;
  IMat& d = s.D;
  const int n = std::min(rows, cols);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // locate the minimal nonzero |entry| in the trailing block
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          Int a = d.at(i, j) < 0 ? -d.at(i, j) : d.at(i, j);
          if (a != 0 && (pi < 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero
      if (pi != t) {
        row_swap(d, t, pi);
        row_swap(s.U, t, pi);
      }
      if (pj != t) {
        col_swap(d, t, pj);
        col_swap(s.V, t, pj);
      }
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d.at(i, t) != 0) {
          Int q = d.at(i, t) / d.at(t, t);
          row_add(d, i, t, -q);
          row_add(s.U, i, t, -q);
          if (d.at(i, t) != 0) clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d.at(t, j) != 0) {
          Int q = d.at(t, j) / d.at(t, t);
          col_add(d, j, t, -q);
          col_add(s.V, j, t, -q);
          if (d.at(t, j) != 0) clean = false;
        }
      }
      if (!clean) continue;
      if (d.at(t, t) < 0) {
        row_neg(d, t);
        row_neg(s.U, t);
      }
      // enforce divisibility d_t | trailing entries
      int bi = -1, bj = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      row_add(d, t, bi, 1);
      row_add(s.U, t, bi, 1);
      (void)bj;
    }
  }
  return s;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw internal_error("invariant factor < 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw internal_error("invariant factors do not form a divisibility chain");
  }
}

Int FiniteAbelianGroup::order() const {
  i128 p = 1;
  for (Int f : factors_) p *= f;
  return checked_cast(p);
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

Cokernel cokernel(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  Cokernel c;
  int n = std::min(m.rows(), m.cols());
  int rank = 0;
  std::vector<Int> torsion;
  for (int i = 0; i < n; ++i) {
    Int di = s.D.at(i, i);
    if (di != 0) ++rank;
    if (di >= 2) torsion.push_back(di);
  }
  c.free_rank = m.rows() - rank;
  c.torsion = FiniteAbelianGroup(torsion);
  return c;
}

std::vector<int> rref(std::vector<QVec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = (int)rows[0].size();
  int r = 0;
  for (int c = 0; c < ncols && r < (int)rows.size(); ++c) {
    int p = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = Rat(1) / rows[r][c];
    rows[r] = qscale(inv, rows[r]);
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      rows[i] = qsub(rows[i], qscale(rows[i][c], rows[r]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

int rank_of(std::vector<QVec> rows) { return (int)rref(rows).size(); }

std::vector<QVec> nullspace(const std::vector<QVec>& in_rows, int ncols) {
  std::vector<QVec> rows = in_rows;
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(ncols, Rat(0));
    v[c] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    basis.push_back(v);
  }
  return basis;
}

bool solve_rational(const std::vector<QVec>& a_rows, const QVec& b, QVec& out) {
  if (a_rows.empty()) {
    for (const auto& x : b)
      if (!x.is_zero()) return false;
    out.clear();
    return true;
  }
  const int ncols = (int)a_rows[0].size();
  std::vector<QVec> aug(a_rows.size());
  for (size_t i = 0; i < a_rows.size(); ++i) {
    aug[i] = a_rows[i];
    aug[i].push_back(b[i]);
  }
  std::vector<int> pivots = rref(aug);
  out.assign(ncols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == ncols) return false;  // inconsistent
    out[pivots[i]] = aug[i][ncols];
  }
  return true;
}

bool solve_integer(const IMat& m, const IVec& b, IVec& out) {
  SmithDecomposition s = smith_normal_form(m);
  IVec ub = s.U.apply(b);
  const int n = std::min(m.rows(), m.cols());
  IVec y(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    Int di = i < n ? s.D.at(i, i) : 0;
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % di != 0) return false;
      y[i] = ub[i] / di;
    }
  }
  out = s.V.apply(y);
  return true;
}

Rat det_rational(std::vector<QVec> rows) {
  const int n = (int)rows.size();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    Rat inv = Rat(1) / rows[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      Rat f = rows[i][c] * inv;
      rows[i] = qsub(rows[i], qscale(f, rows[c]));
    }
  }
  return det;
}

}  // namespace weyl
