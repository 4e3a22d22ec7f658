#pragma once
// Exact arithmetic kernel: rationals, sparse bivariate polynomials over Q,
// reduced bivariate fractions, univariate restrictions and root finding.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toro {

using Rat = mpq_class;

std::string rat_str(const Rat& r);

// A nonnegative integer extended with +infinity; used for valuations and the
// i_o/j_o/i_s/j_s invariants (minima over possibly empty term sets).
struct ExtInt {
  long v = 0;
  bool inf = false;

  static ExtInt infinity() { return ExtInt{0, true}; }
  static ExtInt of(long x) { return ExtInt{x, false}; }

  bool operator==(const ExtInt& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
  bool operator<(const ExtInt& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return v < o.v;
  }
  bool operator<=(const ExtInt& o) const { return *this == o || *this < o; }
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.inf || b.inf) return infinity();
    return of(a.v + b.v);
  }
  friend ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
  std::string str() const { return inf ? "inf" : std::to_string(v); }
};

struct Mon2 {
  int e1 = 0;
  int e2 = 0;
  auto operator<=>(const Mon2&) const = default;
};

// Sparse bivariate polynomial over Q. Terms keyed by monomial; no zero
// coefficients are stored. Lex order with x1 > x2 is the canonical term order
// (used for normalization and exact division).
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const Rat& c) {
    if (c != 0) t_[Mon2{0, 0}] = c;
  }
  static Poly2 term(const Rat& c, int e1, int e2);
  static Poly2 var(int axis, int e = 1);  // x_axis^e

  bool is_zero() const { return t_.empty(); }
  const std::map<Mon2, Rat>& terms() const { return t_; }
  bool operator==(const Poly2&) const = default;

  // Lex-greatest term (x1 > x2). Polynomial must be nonzero.
  std::pair<Mon2, Rat> lead() const;

  Poly2 operator-() const;
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rat& c) const;
  Poly2 pow(int n) const;

  void add_term(const Rat& c, int e1, int e2);

  std::string str() const;

 private:
  std::map<Mon2, Rat> t_;
};

struct UniPoly {
  std::vector<Rat> c;  // c[i] = coefficient of degree i

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  Rat eval(const Rat& x) const;
  bool operator==(const UniPoly&) const = default;
};

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
// Field division with remainder: a = q*b + r, deg r < deg b. b != 0.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd over Q (Euclid); gcd(0,0) is an error.
UniPoly uni_gcd(UniPoly a, UniPoly b);

struct RationalRoots {
  std::vector<Rat> roots;        // sorted ascending, no duplicates
  bool has_irrational_factor = false;
};

Poly2 partial_derivative(const Poly2& p, int axis);
enum class Chart { First, Second };  // First: x2 <- x1*x2 ; Second: x1 <- x1*x2
Poly2 substitute_blowup(const Poly2& p, Chart chart);
Poly2 shift_axis2(const Poly2& p, const Rat& c);
// Shift the coordinate of `axis` by c (shift_axis2 = shift_axis(p, 2, c)).
Poly2 shift_axis(const Poly2& p, int axis, const Rat& c);
ExtInt axis_valuation(const Poly2& p, int axis);

struct MonomialSplit {
  int e1 = 0;
  int e2 = 0;
  Poly2 residual;
};
MonomialSplit monomial_split(const Poly2& p);  // error on zero

// Normalize so the lex-greatest term has coefficient 1.
Poly2 normalize(const Poly2& p);
// Exact division test: returns p/d if d divides p, nullopt otherwise.
std::optional<Poly2> try_divide(const Poly2& p, const Poly2& d);
Poly2 gcd2(const Poly2& p, const Poly2& q);  // error on (0,0)

Rat eval_origin(const Poly2& p);
Rat eval_point(const Poly2& p, const Rat& x1, const Rat& x2);
UniPoly restrict_axis(const Poly2& p, int axis);
Poly2 poly_from_uni(const UniPoly& u, int axis);  // univariate in x_axis

RationalRoots rational_roots(const UniPoly& u);  // error on zero

// Reduced bivariate fraction. Invariants: den != 0; gcd(num, den) unit; den
// normalized so its lex-greatest term has coefficient 1.
class Frac2 {
 public:
  Frac2() : num_(Rat(0)), den_(Rat(1)) {}
  explicit Frac2(const Poly2& p) : num_(p), den_(Rat(1)) {}

  static Frac2 reduce(const Poly2& num, const Poly2& den);  // error: den = 0

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const Frac2&) const = default;

  Frac2 operator+(const Frac2& o) const;
  Frac2 operator-(const Frac2& o) const;
  Frac2 operator*(const Frac2& o) const;
  Frac2 operator/(const Frac2& o) const;  // error: o = 0
  Frac2 operator-() const;

  // Denominator value at origin must be nonzero (regularity) for these:
  Rat value_at_origin() const;
  bool regular_at_origin() const;

  std::string str() const;

 private:
  Poly2 num_, den_;
};

Frac2 reduce_fraction(const Poly2& num, const Poly2& den);
Frac2 frac_partial_derivative(const Frac2& f, int axis);
Frac2 frac_substitute_blowup(const Frac2& f, Chart chart);
Frac2 frac_shift_axis(const Frac2& f, int axis, const Rat& c);
ExtInt frac_axis_valuation(const Frac2& f, int axis);  // num val - den val

}  // namespace toro
