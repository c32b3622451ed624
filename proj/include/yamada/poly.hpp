#pragma once

// Exact sparse Laurent-polynomial arithmetic: two-variable polynomials in
// (a, x), one-variable polynomials in A, and the localization of Z[A, A^-1]
// at powers of d = -A^2 - A^-2.  All coefficients are arbitrary-precision
// integers; every value is kept in canonical form (no stored zero terms),
// so equality is plain term-map equality and printing is reproducible.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace yamada {

using Int = boost::multiprecision::cpp_int;

/// Raised for operations whose mathematical domain excludes the argument
/// (e.g. the minimum degree of the zero polynomial).
class PolyDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent pair of a monomial c * a^alpha * x^x.
struct Exp2 {
  int alpha = 0;
  int x = 0;
  friend auto operator<=>(const Exp2&, const Exp2&) = default;
};

class PolyA;
class DFraction;

// ---------------------------------------------------------------------------
// Poly2: integer Laurent polynomial in a and x.
// ---------------------------------------------------------------------------

class Poly2 {
 public:
  using TermMap = std::map<Exp2, Int>;

  Poly2() = default;

  static Poly2 zero() { return Poly2{}; }
  static Poly2 one() { return monomial(1, 0, 0); }

  static Poly2 monomial(Int coeff, int alpha_pow, int x_pow) {
    Poly2 p;
    if (coeff != 0) p.terms_[{alpha_pow, x_pow}] = std::move(coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 operator-() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a += -b; }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.alpha + eb.alpha, ea.x + eb.x}, ca * cb);
    return r;
  }

  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend Poly2 operator*(const Int& s, const Poly2& p) {
    Poly2 r;
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
    return r;
  }

  /// Multiply by the monomial a^da * x^dx (exponent shift).
  Poly2 shifted(int da, int dx) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_[{e.alpha + da, e.x + dx}] = c;
    return r;
  }

  Poly2 pow(unsigned n) const {
    Poly2 r = one();
    Poly2 base = *this;
    for (; n; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

  int min_degree_alpha() const {
    if (is_zero()) throw PolyDomainError("undefined minimum degree of the zero polynomial");
    int m = terms_.begin()->first.alpha;
    for (const auto& [e, c] : terms_)
      if (e.alpha < m) m = e.alpha;
    return m;
  }

  int max_degree_alpha() const {
    if (is_zero()) throw PolyDomainError("undefined maximum degree of the zero polynomial");
    int m = terms_.begin()->first.alpha;
    for (const auto& [e, c] : terms_)
      if (e.alpha > m) m = e.alpha;
    return m;
  }

  /// a -> a^-1 on every term (an involution).
  Poly2 swap_alpha_inverse() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.alpha, e.x}] = c;
    return r;
  }

  /// True iff some term carries a nonzero power of x.
  bool x_dependent() const {
    for (const auto& [e, c] : terms_)
      if (e.x != 0) return true;
    return false;
  }

  /// True iff every x exponent is even.
  bool x_powers_even() const {
    for (const auto& [e, c] : terms_)
      if (e.x % 2 != 0) return false;
    return true;
  }

  PolyA substitute_x1() const;       // x -> 1, a renamed A
  DFraction substitute_p2() const;   // a -> A^4, x -> -d^-1

  /// Canonical rendering: terms sorted by (a-exponent asc, x-exponent asc),
  /// e.g. "-1*a^-2*x^0 + 3*a^0*x^-2"; the zero polynomial prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str() << "*a^" << e.alpha << "*x^" << e.x;
    }
    return os.str();
  }

 private:
  void add_term(const Exp2& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;  // canonical: no zero coefficients
};

// ---------------------------------------------------------------------------
// PolyA: integer Laurent polynomial in the single variable A.
// ---------------------------------------------------------------------------

class PolyA {
 public:
  using TermMap = std::map<int, Int>;

  PolyA() = default;

  static PolyA zero() { return PolyA{}; }
  static PolyA one() { return monomial(1, 0); }

  static PolyA monomial(Int coeff, int pow) {
    PolyA p;
    if (coeff != 0) p.terms_[pow] = std::move(coeff);
    return p;
  }

  /// d = -A^2 - A^-2.
  static const PolyA& d_poly() {
    static const PolyA d = monomial(-1, 2) + monomial(-1, -2);
    return d;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const PolyA& a, const PolyA& b) { return a.terms_ == b.terms_; }

  PolyA operator-() const {
    PolyA r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  PolyA& operator+=(const PolyA& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
  friend PolyA operator-(PolyA a, const PolyA& b) { return a += -b; }

  friend PolyA operator*(const PolyA& a, const PolyA& b) {
    PolyA r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea + eb, ca * cb);
    return r;
  }

  PolyA& operator*=(const PolyA& o) { return *this = *this * o; }

  friend PolyA operator*(const Int& s, const PolyA& p) {
    PolyA r;
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
    return r;
  }

  PolyA pow(unsigned n) const {
    PolyA r = one();
    PolyA base = *this;
    for (; n; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

  int min_degree() const {
    if (is_zero()) throw PolyDomainError("undefined minimum degree of the zero polynomial");
    return terms_.begin()->first;
  }

  int max_degree() const {
    if (is_zero()) throw PolyDomainError("undefined maximum degree of the zero polynomial");
    return terms_.rbegin()->first;
  }

  /// A -> A^-1 on every term.
  PolyA swap_A_inverse() const {
    PolyA r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  /// Exact quotient by d = -A^2 - A^-2, or nullopt when not divisible.
  std::optional<PolyA> exact_div_d() const {
    if (is_zero()) return PolyA::zero();
    // p / d = (-A^2 * p) / (A^4 + 1); divide by the monic A^4 + 1 from the top.
    PolyA s = monomial(-1, 2) * *this;
    const int shift = s.min_degree();
    PolyA u = s;  // treated as an ordinary polynomial via `shift`
    PolyA q;
    while (!u.is_zero()) {
      const int k = u.max_degree();
      if (k - shift < 4) return std::nullopt;
      const Int c = u.terms_.rbegin()->second;
      q.add_term(k - 4, c);
      u.add_term(k, -c);
      u.add_term(k - 4, -c);
    }
    return q;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str() << "*A^" << e;
    }
    return os.str();
  }

 private:
  void add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// ---------------------------------------------------------------------------
// DFraction: num / d^e with d = -A^2 - A^-2, canonical form.
// ---------------------------------------------------------------------------

class DFraction {
 public:
  DFraction() = default;

  DFraction(PolyA num, unsigned denom_pow) : num_(std::move(num)), denom_pow_(denom_pow) {
    canonicalize();
  }

  static DFraction zero() { return DFraction{}; }
  static DFraction one() { return DFraction{PolyA::one(), 0}; }
  static DFraction of(PolyA num) { return DFraction{std::move(num), 0}; }

  /// d itself as a fraction.
  static DFraction d_value() { return DFraction{PolyA::d_poly(), 0}; }

  const PolyA& num() const { return num_; }
  unsigned denom_pow() const { return denom_pow_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Canonical forms are unique, so structural equality decides equality in
  /// the localized ring (cross-multiplication agrees; see the property tests).
  friend bool operator==(const DFraction& a, const DFraction& b) {
    return a.denom_pow_ == b.denom_pow_ && a.num_ == b.num_;
  }

  DFraction operator-() const {
    DFraction r;
    r.num_ = -num_;
    r.denom_pow_ = denom_pow_;
    return r;
  }

  friend DFraction operator+(const DFraction& a, const DFraction& b) {
    const unsigned e = std::max(a.denom_pow_, b.denom_pow_);
    PolyA n = a.num_ * PolyA::d_poly().pow(e - a.denom_pow_) +
              b.num_ * PolyA::d_poly().pow(e - b.denom_pow_);
    return DFraction{std::move(n), e};
  }

  friend DFraction operator-(const DFraction& a, const DFraction& b) { return a + (-b); }

  friend DFraction operator*(const DFraction& a, const DFraction& b) {
    return DFraction{a.num_ * b.num_, a.denom_pow_ + b.denom_pow_};
  }

  friend DFraction operator*(const Int& s, const DFraction& f) {
    return DFraction{s * f.num_, f.denom_pow_};
  }

  DFraction& operator+=(const DFraction& o) { return *this = *this + o; }
  DFraction& operator*=(const DFraction& o) { return *this = *this * o; }

  /// Division by d (always exact in the localization).
  DFraction div_d() const { return DFraction{num_, denom_pow_ + 1}; }

  /// Multiplication by d.
  DFraction mul_d() const { return DFraction{num_ * PolyA::d_poly(), denom_pow_}; }

  std::string to_string() const {
    if (denom_pow_ == 0) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/d^" << denom_pow_;
    return os.str();
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      denom_pow_ = 0;
      return;
    }
    while (denom_pow_ > 0) {
      auto q = num_.exact_div_d();
      if (!q) break;
      num_ = std::move(*q);
      --denom_pow_;
    }
  }

  PolyA num_;
  unsigned denom_pow_ = 0;
};

// ---------------------------------------------------------------------------
// Substitutions.
// ---------------------------------------------------------------------------

inline PolyA Poly2::substitute_x1() const {
  PolyA r;
  for (const auto& [e, c] : terms_) r += PolyA::monomial(c, e.alpha);
  return r;
}

inline DFraction Poly2::substitute_p2() const {
  // c * a^i * x^j  ->  c * A^(4i) * (-1)^j * d^(-j).
  int max_x = 0;
  for (const auto& [e, c] : terms_)
    if (e.x > max_x) max_x = e.x;
  const unsigned e0 = static_cast<unsigned>(max_x);
  PolyA num;
  for (const auto& [e, c] : terms_) {
    const Int sc = (e.x % 2 == 0) ? c : -c;
    const unsigned dp = static_cast<unsigned>(static_cast<int>(e0) - e.x);
    num += PolyA::monomial(sc, 4 * e.alpha) * PolyA::d_poly().pow(dp);
  }
  return DFraction{std::move(num), e0};
}

// ---------------------------------------------------------------------------
// Pinned constants of the two-variable specialization:
//   z = -x^-1,  mu = -(a + a^-1 + 2) x,  and the circle value 1 + a + a^-1.
// ---------------------------------------------------------------------------

inline const Poly2 Z_CONST = Poly2::monomial(-1, 0, -1);

inline const Poly2 MU_CONST = Poly2::monomial(-1, 1, 1) + Poly2::monomial(-1, -1, 1) +
                              Poly2::monomial(-2, 0, 1);

inline const Poly2 CIRCLE_CONST = Poly2::monomial(1, 0, 0) + Poly2::monomial(1, 1, 0) +
                                  Poly2::monomial(1, -1, 0);

}  // namespace yamada
