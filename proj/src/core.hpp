#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer / rational kernel shared by every other component.
// All arithmetic is exact; 64-bit overflow is detected and reported rather
// than wrapped. Inputs are desk-scale (ranks <= 8, small entries), so i128
// intermediates with a range check suffice.

namespace weyl {

using Int = long long;
using i128 = __int128;

// Thrown when a precondition on user input is violated.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Thrown when an input is structurally fine but outside supported caps.
struct unsupported_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Thrown when an internal invariant breaks (overflow, failed certificate).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

Int checked_cast(i128 v);
i128 gcd128(i128 a, i128 b);
Int gcd_ll(Int a, Int b);

// Exact rational with canonical representation (den > 0, gcd(num,den) = 1).
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d);

  static Rat make(i128 n, i128 d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return (i128)num_ * o.den_ < (i128)o.num_ * den_; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }
  Int floor() const;
  Int ceil() const;
  // nearest integer, ties toward -inf (only used to seed searches)
  Int round() const;
  double to_double() const { return (double)num_ / (double)den_; }
  std::string str() const;

 private:
  Int num_, den_;
};

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

QVec to_qvec(const IVec& v);
bool is_integral(const QVec& v);
IVec to_ivec(const QVec& v);  // throws internal_error if not integral
bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const IVec& a, const IVec& b);
QVec qadd(const QVec& a, const QVec& b);
QVec qsub(const QVec& a, const QVec& b);
QVec qscale(const Rat& c, const QVec& v);
Rat qdot(const QVec& a, const QVec& b);
Int idot(const IVec& a, const IVec& b);
bool is_zero(const QVec& v);

// Unique primitive integer vector on the ray R>=0 * v. Throws on v = 0.
IVec primitive(const QVec& v);
IVec primitive(const IVec& v);

// Dense integer matrix, row-major.
class IMat {
 public:
  IMat() : rows_(0), cols_(0) {}
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static IMat identity(int n);
  static IMat from_rows(const std::vector<IVec>& rows);
  static IMat from_cols(const std::vector<IVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IVec row(int i) const;
  IVec col(int j) const;
  IMat transpose() const;
  IMat mul(const IMat& o) const;
  IVec apply(const IVec& x) const;  // matrix * column vector
  QVec apply(const QVec& x) const;
  bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// U * M * V = D, U and V unimodular, D diagonal with d1 | d2 | ... >= 0.
struct SmithDecomposition {
  IMat U, D, V;
};
SmithDecomposition smith_normal_form(const IMat& m);

// Finite abelian group as an invariant-factor chain d1 | d2 | ..., each >= 2.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Int> factors);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  Int order() const;
  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
  std::string str() const;  // e.g. "1", "Z/2", "Z/2 x Z/6"

 private:
  std::vector<Int> factors_;
};

// Cokernel of the map Z^cols -> Z^rows given by x |-> M x.
struct Cokernel {
  int free_rank = 0;
  FiniteAbelianGroup torsion;
};
Cokernel cokernel(const IMat& m);

// --- rational linear algebra (small dense systems) ---

// Reduced row echelon form; returns pivot column indices.
std::vector<int> rref(std::vector<QVec>& rows);
int rank_of(std::vector<QVec> rows);
// Basis of { x : rows * x = 0 }.
std::vector<QVec> nullspace(const std::vector<QVec>& rows, int ncols);
// One solution of A x = b over Q, if any.
bool solve_rational(const std::vector<QVec>& a_rows, const QVec& b, QVec& out);
// Solve M x = b over Z (M as a map on column vectors). Empty optional if none.
bool solve_integer(const IMat& m, const IVec& b, IVec& out);
Rat det_rational(std::vector<QVec> rows);

}  // namespace weyl
