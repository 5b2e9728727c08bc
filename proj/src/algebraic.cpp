#include "univoque/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace univoque {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }

IntPoly IntPoly::monomial(std::size_t k, const Int& v) {
  std::vector<Int> c(k + 1);
  c[k] = v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_longs(const std::vector<long>& c) {
  std::vector<Int> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Rat, Rat> IntPoly::eval_interval(const Rat& lo, const Rat& hi) const {
  if (c_.empty()) return {Rat(0), Rat(0)};
  Rat a = c_.back(), b = c_.back();
  for (int i = degree() - 1; i >= 0; --i) {
    Rat p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    a = std::min({p1, p2, p3, p4});
    b = std::max({p1, p2, p3, p4});
    a += c_[i];
    b += c_[i];
  }
  return {a, b};
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
  std::vector<Int> r = c_;
  for (auto& x : r) x *= k;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const { return *this * Int(-1); }

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Int> r(k, Int(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::times_cyclotomic(std::size_t b) const { return shifted(b) - *this; }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::mod_monic(const IntPoly& m) const {
  if (m.is_zero() || m.lead() != 1) throw std::logic_error("mod_monic: divisor not monic");
  std::vector<Int> r = c_;
  const std::size_t dm = m.c_.size() - 1;
  while (r.size() > dm) {
    Int lc = r.back();
    if (lc != 0) {
      std::size_t off = r.size() - 1 - dm;
      for (std::size_t i = 0; i < dm; ++i) r[off + i] -= lc * m.c_[i];
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0 && r.size() > dm) r.pop_back();
  }
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) g = gcd(g, x);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (lead() < 0) g = -g;
  std::vector<Int> r = c_;
  for (auto& x : r) x /= g;
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b over the integers.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const Int lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    Int la = a.lead();
    IntPoly t = b.shifted(a.degree() - db) * la;
    a = a * lb - t;
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = prem(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

IntPoly squarefree(const IntPoly& p) {
  if (p.degree() < 1) return p;
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return p.primitive();
  // exact division p / g over the rationals, result rescaled to integers
  IntPoly num = p.primitive();
  std::vector<Rat> r(num.degree() - g.degree() + 1);
  std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().end());
  for (int i = num.degree() - g.degree(); i >= 0; --i) {
    Rat c = rem[i + g.degree()] / Rat(g.lead());
    r[i] = c;
    for (int j = 0; j <= g.degree(); ++j) rem[i + j] -= c * Rat(g.coeffs()[j]);
  }
  Int l = 1;
  for (auto& x : r) {
    x.canonicalize();
    l = lcm(l, x.get_den());
  }
  std::vector<Int> out;
  for (auto& x : r) out.push_back(Int(x * l));
  return IntPoly(std::move(out)).primitive();
}

// ---------------------------------------------------------------- isolation

namespace {

// P without repeated factors and without roots at t = 1.
IntPoly isolation_poly(const IntPoly& P) {
  IntPoly s = squarefree(P);
  const IntPoly t_minus_1 = IntPoly::from_longs({-1, 1});
  while (s.degree() >= 1 && s.eval(1) == 0) {
    std::vector<Int> q(s.degree());
    Int carry = 0;
    for (int i = s.degree(); i >= 1; --i) {
      carry += s.coeffs()[i];
      q[i - 1] = carry;
    }
    s = IntPoly(std::move(q));
  }
  return s;
}

}  // namespace

Interval isolate_root(const IntPoly& P, Digit M, const Rat& precision) {
  if (M < 1) throw ValidationError("alphabet bound must be at least 1");
  IntPoly S = isolation_poly(P);
  Interval iv{Rat(1), Rat(M + 1)};
  if (S.degree() < 1) throw ValidationError("degenerate polynomial: no root in (1, M+1]");
  int sl = S.sign_at(iv.lo), sh = S.sign_at(iv.hi);
  if (sh == 0) return {iv.hi, iv.hi};
  if (sl == 0 || sl == sh)
    throw ValidationError("degenerate polynomial: no sign change on (1, M+1] for " + P.to_string());
  while (iv.width() > precision) {
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = S.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == sl)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

// ---------------------------------------------------------------- QField

QField::QField(IntPoly P, Digit M, const Rat& precision) : P_(std::move(P)), M_(M) {
  if (P_.is_zero() || P_.lead() != 1) throw ValidationError("defining polynomial must be monic");
  iv_ = isolate_root(P_, M_, precision);
  S_ = isolation_poly(P_);
  sign_lo_ = S_.sign_at(iv_.lo);
}

QField::QField(const QField& o) : P_(o.P_), S_(o.S_), M_(o.M_) {
  std::lock_guard<std::mutex> g(o.mu_);
  iv_ = o.iv_;
  sign_lo_ = o.sign_lo_;
}

Interval QField::interval() const {
  std::lock_guard<std::mutex> g(mu_);
  return iv_;
}

void QField::bisect_locked() {
  if (iv_.lo == iv_.hi) return;
  Rat mid = (iv_.lo + iv_.hi) / 2;
  int sm = S_.sign_at(mid);
  if (sm == 0) {
    iv_ = {mid, mid};
  } else if (sm == sign_lo_) {
    iv_.lo = mid;
  } else {
    iv_.hi = mid;
  }
}

void QField::refine(const Rat& width) {
  std::lock_guard<std::mutex> g(mu_);
  while (iv_.width() > width) {
    Rat mid = (iv_.lo + iv_.hi) / 2;
    int sm = S_.sign_at(mid);
    if (sm == 0) {
      iv_ = {mid, mid};
      return;
    }
    if (sm == sign_lo_)
      iv_.lo = mid;
    else
      iv_.hi = mid;
  }
}

Interval QField::enclose(const IntPoly& D) const {
  Interval iv;
  {
    std::lock_guard<std::mutex> g(mu_);
    iv = iv_;
  }
  auto [a, b] = D.eval_interval(iv.lo, iv.hi);
  return {a, b};
}

int QField::sign(const IntPoly& D0) {
  IntPoly D = D0.mod_monic(P_);
  if (D.is_zero()) return 0;
  std::lock_guard<std::mutex> g(mu_);
  if (iv_.lo == iv_.hi) return sgn(D.eval(iv_.lo));
  bool gcd_checked = false;
  for (int iter = 0; iter < 100000; ++iter) {
    auto [a, b] = D.eval_interval(iv_.lo, iv_.hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    if (!gcd_checked) {
      gcd_checked = true;
      IntPoly G = poly_gcd(D, P_);
      if (G.degree() >= 1) {
        IntPoly S = squarefree(G);
        int s1 = S.sign_at(iv_.lo), s2 = S.sign_at(iv_.hi);
        if (s1 != 0 && s2 != 0 && s1 != s2) return 0;
        if (s1 == 0 || s2 == 0) gcd_checked = false;
      }
    }
    bisect_locked();
    if (iv_.lo == iv_.hi) return sgn(D.eval(iv_.lo));
  }
  throw ConsistencyError("sign determination did not terminate");
}

std::string QField::approx(int places) {
  Rat w(1);
  for (int i = 0; i < places + 4; ++i) w /= 10;
  refine(w);
  Interval iv = interval();
  return decimal((iv.lo + iv.hi) / 2, places);
}

double QField::to_double() {
  Interval iv = interval();
  return Rat((iv.lo + iv.hi) / 2).get_d();
}

// ---------------------------------------------------------------- AlgebraicReal

IntPoly Den::poly() const {
  IntPoly p = IntPoly::monomial(qexp);
  for (auto [b, e] : cyc)
    for (int i = 0; i < e; ++i) p = p.times_cyclotomic(b);
  return p;
}

namespace {

Den den_lcm(const Den& a, const Den& b) {
  Den r;
  r.qexp = std::max(a.qexp, b.qexp);
  r.cyc = a.cyc;
  for (auto [k, e] : b.cyc) r.cyc[k] = std::max(r.cyc[k], e);
  return r;
}

// num scaled from denominator `from` to the multiple `to`
IntPoly lift(const IntPoly& num, const Den& from, const Den& to, const IntPoly& P) {
  IntPoly r = num.shifted(to.qexp - from.qexp);
  for (auto [b, e] : to.cyc) {
    auto it = from.cyc.find(b);
    int have = it == from.cyc.end() ? 0 : it->second;
    for (int i = have; i < e; ++i) r = r.times_cyclotomic(b).mod_monic(P);
  }
  return r.mod_monic(P);
}

void same_field(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.field() != b.field()) throw std::logic_error("values from different base contexts");
}

}  // namespace

AlgebraicReal::AlgebraicReal(FieldPtr f, IntPoly num, Den den)
    : f_(std::move(f)), num_(num.mod_monic(f_->poly())), den_(std::move(den)) {
  // drop powers of q shared by numerator and denominator
  while (den_.qexp > 0 && !num_.is_zero() && num_.coeff(0) == 0) {
    std::vector<Int> c(num_.coeffs().begin() + 1, num_.coeffs().end());
    num_ = IntPoly(std::move(c));
    --den_.qexp;
  }
  if (num_.is_zero()) den_ = Den{};
}

AlgebraicReal AlgebraicReal::integer(FieldPtr f, long k) {
  return AlgebraicReal(std::move(f), IntPoly::constant(Int(k)), Den{});
}

AlgebraicReal AlgebraicReal::of_sequence(FieldPtr f, const EpSeq& s) {
  check_alphabet(s, f->M());
  auto digit_poly = [](const Word& w) {
    std::vector<Int> c(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) c[w.size() - 1 - i] = w[i];
    return IntPoly(std::move(c));
  };
  IntPoly W = digit_poly(s.pre());
  Den d;
  d.qexp = static_cast<int>(s.pre().size());
  if (s.has_finite_tail()) return AlgebraicReal(std::move(f), W, d);
  const std::size_t K = s.per().size();
  IntPoly num = W.times_cyclotomic(K) + digit_poly(s.per());
  d.cyc[static_cast<int>(K)] = 1;
  return AlgebraicReal(std::move(f), num, d);
}

AlgebraicReal AlgebraicReal::upper_end(FieldPtr f) {
  Den d;
  d.cyc[1] = 1;
  Int M = f->M();
  return AlgebraicReal(std::move(f), IntPoly::constant(M), d);
}

AlgebraicReal AlgebraicReal::q(FieldPtr f) {
  return AlgebraicReal(std::move(f), IntPoly::monomial(1), Den{});
}

AlgebraicReal AlgebraicReal::operator+(const AlgebraicReal& o) const {
  same_field(*this, o);
  if (den_ == o.den_) return AlgebraicReal(f_, num_ + o.num_, den_);
  Den d = den_lcm(den_, o.den_);
  const IntPoly& P = f_->poly();
  return AlgebraicReal(f_, lift(num_, den_, d, P) + lift(o.num_, o.den_, d, P), d);
}

AlgebraicReal AlgebraicReal::operator-() const { return AlgebraicReal(f_, -num_, den_); }

AlgebraicReal AlgebraicReal::operator-(const AlgebraicReal& o) const { return *this + (-o); }

AlgebraicReal AlgebraicReal::times(long k) const { return AlgebraicReal(f_, num_ * Int(k), den_); }

AlgebraicReal AlgebraicReal::times_q() const {
  if (den_.qexp > 0) {
    Den d = den_;
    --d.qexp;
    return AlgebraicReal(f_, num_, d);
  }
  return AlgebraicReal(f_, num_.shifted(1), den_);
}

AlgebraicReal AlgebraicReal::divided_by_q() const {
  Den d = den_;
  ++d.qexp;
  return AlgebraicReal(f_, num_, d);
}

AlgebraicReal AlgebraicReal::minus_int(long k) const {
  if (k == 0) return *this;
  return AlgebraicReal(f_, num_ - den_.poly() * Int(k), den_);
}

int AlgebraicReal::sign() const {
  if (num_.is_zero()) return 0;
  return f_->sign(num_);
}

Cmp compare(const AlgebraicReal& x, const AlgebraicReal& y) {
  same_field(x, y);
  return cmp_of((x - y).sign());
}

std::string AlgebraicReal::approx(int places) const {
  Rat w(1);
  for (int i = 0; i < places + 4; ++i) w /= 10;
  IntPoly dp = den_.poly();
  for (int iter = 0; iter < 400; ++iter) {
    Interval n = f_->enclose(num_), d = f_->enclose(dp);
    if (d.lo > 0) {
      Rat c[4] = {n.lo / d.lo, n.lo / d.hi, n.hi / d.lo, n.hi / d.hi};
      Rat lo = *std::min_element(c, c + 4), hi = *std::max_element(c, c + 4);
      if (hi - lo <= w) return decimal((lo + hi) / 2, places);
    }
    Interval iv = f_->interval();
    if (iv.lo == iv.hi) return decimal(num_.eval(iv.lo) / dp.eval(iv.lo), places);
    f_->refine(iv.width() / 1024);
  }
  throw ConsistencyError("approximation did not converge");
}

double AlgebraicReal::to_double() const {
  Interval iv = f_->interval();
  Rat mid = (iv.lo + iv.hi) / 2;
  return Rat(num_.eval(mid) / den_.poly().eval(mid)).get_d();
}

// ---------------------------------------------------------------- helpers

IntPoly base_polynomial(Digit M, const EpSeq& beta) {
  check_alphabet(beta, M);
  if (beta == EpSeq::finite({1})) throw ValidationError("beta = 10^inf is the base q = 1");
  if (!is_greedy_beta(M, beta)) throw ValidationError("not a greedy expansion of 1: " + to_string(beta));
  auto digit_poly = [](const Word& w) {
    std::vector<Int> c(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) c[w.size() - 1 - i] = w[i];
    return IntPoly(std::move(c));
  };
  const std::size_t L = beta.pre().size();
  IntPoly W = digit_poly(beta.pre());
  if (beta.has_finite_tail()) return IntPoly::monomial(L) - W;
  const std::size_t K = beta.per().size();
  return IntPoly::monomial(L).times_cyclotomic(K) - W.times_cyclotomic(K) - digit_poly(beta.per());
}

std::string decimal(const Rat& v, int places) {
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rat a = abs(v) * scale + Rat(1, 2);
  Int n = a.get_num() / a.get_den();
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (v < 0 && n != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace univoque
