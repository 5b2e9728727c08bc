#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "univoque/digits.hpp"

namespace univoque {

using Int = mpz_class;
using Rat = mpq_class;

// Integer polynomial, little-endian coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c);
  static IntPoly constant(const Int& v);
  static IntPoly monomial(std::size_t k, const Int& v = 1);
  static IntPoly from_longs(const std::vector<long>& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lead() const { return c_.back(); }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  Rat eval(const Rat& x) const;
  // Horner evaluation over an interval [lo,hi] with lo > 0.
  std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;
  IntPoly operator-() const;
  IntPoly shifted(std::size_t k) const;  // times t^k
  IntPoly times_cyclotomic(std::size_t b) const;  // times (t^b - 1)
  IntPoly derivative() const;
  // remainder modulo a monic polynomial
  IntPoly mod_monic(const IntPoly& m) const;
  Int content() const;
  IntPoly primitive() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Int> c_;
};

IntPoly poly_gcd(IntPoly a, IntPoly b);
// Part of p without repeated factors.
IntPoly squarefree(const IntPoly& p);

struct Interval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
};

// Bisection with exact rational evaluation; P must have exactly one root in (1, M+1].
Interval isolate_root(const IntPoly& P, Digit M, const Rat& precision);

// The field generated by q: defining polynomial plus a refinable isolating interval.
class QField {
 public:
  QField(IntPoly P, Digit M, const Rat& precision);
  QField(const QField& o);

  const IntPoly& poly() const { return P_; }
  Digit M() const { return M_; }
  Interval interval() const;
  void refine(const Rat& width);
  // Exact sign of D at q.
  int sign(const IntPoly& D);
  // Rational interval enclosing D(q), at the current isolation.
  Interval enclose(const IntPoly& D) const;
  std::string approx(int places);
  double to_double();

 private:
  void bisect_locked();
  IntPoly P_;
  IntPoly S_;
  Digit M_;
  Interval iv_;
  int sign_lo_ = 0;
  mutable std::mutex mu_;
};

using FieldPtr = std::shared_ptr<QField>;

// Denominator q^qexp · Π (q^b − 1)^e, positive for q > 1.
struct Den {
  int qexp = 0;
  std::map<int, int> cyc;
  IntPoly poly() const;
  friend bool operator==(const Den&, const Den&) = default;
};

// num(q)/den(q) in the field of q.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(FieldPtr f, IntPoly num, Den den);

  static AlgebraicReal integer(FieldPtr f, long k);
  static AlgebraicReal of_sequence(FieldPtr f, const EpSeq& s);
  static AlgebraicReal upper_end(FieldPtr f);  // M/(q−1)
  static AlgebraicReal q(FieldPtr f);

  const FieldPtr& field() const { return f_; }
  const IntPoly& num() const { return num_; }
  const Den& den() const { return den_; }

  AlgebraicReal operator+(const AlgebraicReal& o) const;
  AlgebraicReal operator-(const AlgebraicReal& o) const;
  AlgebraicReal operator-() const;
  AlgebraicReal times(long k) const;
  AlgebraicReal times_q() const;
  AlgebraicReal divided_by_q() const;
  AlgebraicReal minus_int(long k) const;
  // T_k(x) = q·x − k
  AlgebraicReal apply_T(Digit k) const { return times_q().minus_int(k); }

  int sign() const;
  std::string approx(int places = 12) const;
  double to_double() const;

 private:
  FieldPtr f_;
  IntPoly num_;
  Den den_;
};

Cmp compare(const AlgebraicReal& x, const AlgebraicReal& y);

struct ExactLess {
  bool operator()(const AlgebraicReal& a, const AlgebraicReal& b) const {
    return compare(a, b) == Cmp::LT;
  }
};

// Clears denominators in 1 = (β)_q.
IntPoly base_polynomial(Digit M, const EpSeq& beta);

// Decimal rendering of a rational, rounded half up, fixed places.
std::string decimal(const Rat& v, int places);

}  // namespace univoque
