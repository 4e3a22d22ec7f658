#include "toro/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace toro {

std::string rat_str(const Rat& r) { return r.get_str(); }

Poly2 Poly2::term(const Rat& c, int e1, int e2) {
  Poly2 p;
  p.add_term(c, e1, e2);
  return p;
}

Poly2 Poly2::var(int axis, int e) {
  return axis == 1 ? term(1, e, 0) : term(1, 0, e);
}

void Poly2::add_term(const Rat& c, int e1, int e2) {
  if (c == 0) return;
  Mon2 m{e1, e2};
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

std::pair<Mon2, Rat> Poly2::lead() const {
  if (t_.empty()) throw std::runtime_error("lead of zero polynomial");
  auto it = std::prev(t_.end());
  return {it->first, it->second};
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (auto& [m, c] : o.t_) r.add_term(c, m.e1, m.e2);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (auto& [m, c] : o.t_) r.add_term(-c, m.e1, m.e2);
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(c1 * c2, m1.e1 + m2.e1, m1.e2 + m2.e2);
  return r;
}

Poly2 Poly2::operator*(const Rat& c) const {
  Poly2 r;
  if (c == 0) return r;
  for (auto& [m, cc] : t_) r.t_[m] = cc * c;
  return r;
}

Poly2 Poly2::pow(int n) const {
  Poly2 r{Rat(1)};
  for (int i = 0; i < n; i++) r = r * *this;
  return r;
}

std::string Poly2::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rat a = abs(c);
    const Mon2& m = it->first;
    bool have_vars = m.e1 > 0 || m.e2 > 0;
    if (a != 1 || !have_vars) os << a.get_str();
    if (a != 1 && have_vars) os << "*";
    if (m.e1 > 0) {
      os << "x1";
      if (m.e1 > 1) os << "^" << m.e1;
      if (m.e2 > 0) os << "*";
    }
    if (m.e2 > 0) {
      os << "x2";
      if (m.e2 > 1) os << "^" << m.e2;
    }
  }
  return os.str();
}

void UniPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); i++) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); i++) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); i++)
    for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::runtime_error("uni_divmod by zero");
  UniPoly q, r = a;
  int db = b.degree();
  if (r.degree() >= db) q.c.assign(r.degree() - db + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.c.back() / b.c.back();
    q.c[k] = f;
    for (int i = 0; i <= db; i++) r.c[i + k] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::runtime_error("uni_gcd(0,0)");
  while (!b.is_zero()) {
    auto [q, r] = uni_divmod(a, b);
    a = b;
    b = r;
  }
  // monic
  Rat lc = a.c.back();
  for (auto& x : a.c) x /= lc;
  return a;
}

Poly2 partial_derivative(const Poly2& p, int axis) {
  Poly2 r;
  for (auto& [m, c] : p.terms()) {
    if (axis == 1) {
      if (m.e1 > 0) r.add_term(c * m.e1, m.e1 - 1, m.e2);
    } else {
      if (m.e2 > 0) r.add_term(c * m.e2, m.e1, m.e2 - 1);
    }
  }
  return r;
}

Poly2 substitute_blowup(const Poly2& p, Chart chart) {
  Poly2 r;
  for (auto& [m, c] : p.terms()) {
    if (chart == Chart::First)
      r.add_term(c, m.e1 + m.e2, m.e2);  // x2 <- x1*x2
    else
      r.add_term(c, m.e1, m.e1 + m.e2);  // x1 <- x1*x2
  }
  return r;
}

Poly2 shift_axis(const Poly2& p, int axis, const Rat& c) {
  // x_axis <- x_axis + c, expanded via binomials
  Poly2 r;
  for (auto& [m, co] : p.terms()) {
    int e = axis == 1 ? m.e1 : m.e2;
    Rat binom = 1;
    Rat cpow = 1;
    for (int k = e; k >= 0; k--) {
      // coefficient of x^k in (x+c)^e is C(e,k) c^(e-k); iterate k = e..0
      Rat coeff = co * binom * cpow;
      if (axis == 1)
        r.add_term(coeff, k, m.e2);
      else
        r.add_term(coeff, m.e1, k);
      if (k > 0) {
        binom = binom * k / (e - k + 1);
        cpow *= c;
      }
    }
  }
  return r;
}

Poly2 shift_axis2(const Poly2& p, const Rat& c) { return shift_axis(p, 2, c); }

ExtInt axis_valuation(const Poly2& p, int axis) {
  if (p.is_zero()) return ExtInt::infinity();
  long v = -1;
  for (auto& [m, c] : p.terms()) {
    long e = axis == 1 ? m.e1 : m.e2;
    if (v < 0 || e < v) v = e;
  }
  return ExtInt::of(v);
}

MonomialSplit monomial_split(const Poly2& p) {
  if (p.is_zero()) throw std::runtime_error("monomial_split of zero polynomial");
  int e1 = axis_valuation(p, 1).v, e2 = axis_valuation(p, 2).v;
  Poly2 res;
  for (auto& [m, c] : p.terms()) res.add_term(c, m.e1 - e1, m.e2 - e2);
  return MonomialSplit{e1, e2, res};
}

Poly2 normalize(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * (Rat(1) / p.lead().second);
}

std::optional<Poly2> try_divide(const Poly2& p, const Poly2& d) {
  if (d.is_zero()) return std::nullopt;
  Poly2 q, r = p;
  auto [dm, dc] = d.lead();
  while (!r.is_zero()) {
    auto [rm, rc] = r.lead();
    if (rm.e1 < dm.e1 || rm.e2 < dm.e2) return std::nullopt;
    Poly2 f = Poly2::term(rc / dc, rm.e1 - dm.e1, rm.e2 - dm.e2);
    q = q + f;
    r = r - f * d;
  }
  return q;
}

namespace {

// Helpers for gcd2: view a Poly2 as a dense polynomial in x2 with Poly2
// (pure-x1) coefficients.
std::vector<Poly2> coeffs_in_x2(const Poly2& p) {
  int d = 0;
  for (auto& [m, c] : p.terms()) d = std::max(d, m.e2);
  std::vector<Poly2> v(p.is_zero() ? 0 : d + 1);
  for (auto& [m, c] : p.terms()) v[m.e2].add_term(c, m.e1, 0);
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

Poly2 from_coeffs_in_x2(const std::vector<Poly2>& v) {
  Poly2 p;
  for (size_t j = 0; j < v.size(); j++)
    for (auto& [m, c] : v[j].terms()) p.add_term(c, m.e1, (int)j);
  return p;
}

UniPoly to_uni_x1(const Poly2& p) {
  UniPoly u;
  for (auto& [m, c] : p.terms()) {
    if ((size_t)m.e1 >= u.c.size()) u.c.resize(m.e1 + 1, Rat(0));
    u.c[m.e1] += c;
  }
  u.trim();
  return u;
}

Poly2 from_uni_x1(const UniPoly& u) {
  Poly2 p;
  for (size_t i = 0; i < u.c.size(); i++) p.add_term(u.c[i], (int)i, 0);
  return p;
}

// gcd in Q[x1] of the x2-coefficients (content), as a Poly2 in x1 only.
Poly2 content_x2(const std::vector<Poly2>& v) {
  UniPoly g;
  bool have = false;
  for (auto& c : v) {
    if (c.is_zero()) continue;
    g = have ? uni_gcd(g, to_uni_x1(c)) : uni_gcd(to_uni_x1(c), to_uni_x1(c));
    have = true;
    if (g.degree() == 0) break;
  }
  return from_uni_x1(g);
}

std::vector<Poly2> divide_coeffs(const std::vector<Poly2>& v, const Poly2& d) {
  std::vector<Poly2> r;
  r.reserve(v.size());
  for (auto& c : v) {
    if (c.is_zero()) {
      r.push_back(c);
      continue;
    }
    auto q = try_divide(c, d);
    if (!q) throw std::runtime_error("internal: inexact content division");
    r.push_back(*q);
  }
  return r;
}

// Pseudo-remainder of A by B as x2-polynomials over Q[x1]; deg A >= deg B >= 1.
std::vector<Poly2> prem_x2(std::vector<Poly2> A, const std::vector<Poly2>& B) {
  const Poly2& lb = B.back();
  int db = (int)B.size() - 1;
  while ((int)A.size() - 1 >= db && !A.empty()) {
    int k = (int)A.size() - 1 - db;
    Poly2 la = A.back();
    // A <- lb*A - la*x2^k*B
    for (auto& c : A) c = c * lb;
    for (int i = 0; i <= db; i++) A[i + k] = A[i + k] - la * B[i];
    while (!A.empty() && A.back().is_zero()) A.pop_back();
  }
  return A;
}

}  // namespace

Poly2 gcd2(const Poly2& p, const Poly2& q) {
  if (p.is_zero() && q.is_zero()) throw std::runtime_error("gcd2(0,0)");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);

  // Common monomial factor first.
  auto sp = monomial_split(p), sq = monomial_split(q);
  Poly2 mono = Poly2::term(1, std::min(sp.e1, sq.e1), std::min(sp.e2, sq.e2));

  auto A = coeffs_in_x2(sp.residual);
  auto B = coeffs_in_x2(sq.residual);

  Poly2 contA = content_x2(A), contB = content_x2(B);
  Poly2 contGcd = from_uni_x1(uni_gcd(to_uni_x1(contA), to_uni_x1(contB)));
  A = divide_coeffs(A, contA);
  B = divide_coeffs(B, contB);

  if (A.size() < B.size()) std::swap(A, B);
  // Primitive PRS in x2 over Q[x1].
  while (B.size() > 1) {
    auto R = prem_x2(A, B);
    if (!R.empty()) {
      Poly2 c = content_x2(R);
      R = divide_coeffs(R, c);
    }
    A = std::move(B);
    B = std::move(R);
  }
  Poly2 g;
  if (!B.empty()) {
    g = Poly2{Rat(1)};  // nonzero degree-0 remainder: primitive parts coprime
  } else {
    g = from_coeffs_in_x2(A);
  }
  return normalize(mono * contGcd * g);
}

Rat eval_origin(const Poly2& p) {
  auto it = p.terms().find(Mon2{0, 0});
  return it == p.terms().end() ? Rat(0) : it->second;
}

Rat eval_point(const Poly2& p, const Rat& x1, const Rat& x2) {
  Rat r = 0;
  for (auto& [m, c] : p.terms()) {
    Rat t = c;
    for (int i = 0; i < m.e1; i++) t *= x1;
    for (int i = 0; i < m.e2; i++) t *= x2;
    r += t;
  }
  return r;
}

UniPoly restrict_axis(const Poly2& p, int axis) {
  UniPoly u;
  for (auto& [m, c] : p.terms()) {
    if (axis == 1) {
      if (m.e1 != 0) continue;
      if ((size_t)m.e2 >= u.c.size()) u.c.resize(m.e2 + 1, Rat(0));
      u.c[m.e2] += c;
    } else {
      if (m.e2 != 0) continue;
      if ((size_t)m.e1 >= u.c.size()) u.c.resize(m.e1 + 1, Rat(0));
      u.c[m.e1] += c;
    }
  }
  u.trim();
  return u;
}

Poly2 poly_from_uni(const UniPoly& u, int axis) {
  Poly2 p;
  for (size_t i = 0; i < u.c.size(); i++) {
    if (axis == 1)
      p.add_term(u.c[i], (int)i, 0);
    else
      p.add_term(u.c[i], 0, (int)i);
  }
  return p;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
  // positive divisors of |n| by trial division
  std::vector<mpz_class> ds;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; d++) {
    if (a % d == 0) {
      ds.push_back(d);
      if (d * d != a) ds.push_back(a / d);
    }
  }
  return ds;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& u) {
  if (u.is_zero()) throw std::runtime_error("rational_roots of zero polynomial");
  RationalRoots out;
  UniPoly w = u;
  // factor out x^k
  size_t k = 0;
  while (k < w.c.size() && w.c[k] == 0) k++;
  if (k > 0) {
    out.roots.push_back(0);
    w.c.erase(w.c.begin(), w.c.begin() + k);
  }
  while (w.degree() >= 1) {
    // clear denominators to integer coefficients
    mpz_class den = 1;
    for (auto& x : w.c) den = lcm(den, x.get_den());
    std::vector<mpz_class> ic;
    for (auto& x : w.c) ic.push_back(x.get_num() * (den / x.get_den()));
    mpz_class g = 0;
    for (auto& z : ic) g = gcd(g, z);
    for (auto& z : ic) z /= g;

    bool found = false;
    auto ps = divisors(ic.front());
    auto qs = divisors(ic.back());
    for (auto& pn : ps) {
      for (auto& qd : qs) {
        for (int s = 0; s < 2 && !found; s++) {
          Rat r(s ? -pn : pn, qd);
          r.canonicalize();
          if (w.eval(r) == 0) {
            out.roots.push_back(r);
            // deflate all occurrences of (x - r)
            UniPoly lin;
            lin.c = {-r, Rat(1)};
            for (;;) {
              auto [q, rem] = uni_divmod(w, lin);
              if (!rem.is_zero()) break;
              w = q;
              if (w.degree() < 1) break;
            }
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      out.has_irrational_factor = true;
      break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()),
                  out.roots.end());
  return out;
}

Frac2 Frac2::reduce(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw std::runtime_error("fraction with zero denominator");
  Frac2 f;
  if (num.is_zero()) {
    f.num_ = Poly2{};
    f.den_ = Poly2{Rat(1)};
    return f;
  }
  Poly2 g = gcd2(num, den);
  Poly2 n = *try_divide(num, g);
  Poly2 d = *try_divide(den, g);
  Rat lc = d.lead().second;
  f.num_ = n * (Rat(1) / lc);
  f.den_ = d * (Rat(1) / lc);
  return f;
}

Frac2 reduce_fraction(const Poly2& num, const Poly2& den) {
  return Frac2::reduce(num, den);
}

Frac2 Frac2::operator+(const Frac2& o) const {
  return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Frac2 Frac2::operator-(const Frac2& o) const {
  return reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Frac2 Frac2::operator*(const Frac2& o) const {
  return reduce(num_ * o.num_, den_ * o.den_);
}
Frac2 Frac2::operator/(const Frac2& o) const {
  if (o.is_zero()) throw std::runtime_error("division by zero fraction");
  return reduce(num_ * o.den_, den_ * o.num_);
}
Frac2 Frac2::operator-() const {
  Frac2 f = *this;
  f.num_ = -f.num_;
  return f;
}

bool Frac2::regular_at_origin() const { return eval_origin(den_) != 0; }

Rat Frac2::value_at_origin() const {
  Rat d = eval_origin(den_);
  if (d == 0) throw std::runtime_error("fraction not regular at origin");
  return eval_origin(num_) / d;
}

std::string Frac2::str() const {
  if (den_ == Poly2{Rat(1)}) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Frac2 frac_partial_derivative(const Frac2& f, int axis) {
  Poly2 n = partial_derivative(f.num(), axis) * f.den() -
            f.num() * partial_derivative(f.den(), axis);
  return Frac2::reduce(n, f.den() * f.den());
}

Frac2 frac_substitute_blowup(const Frac2& f, Chart chart) {
  return Frac2::reduce(substitute_blowup(f.num(), chart),
                       substitute_blowup(f.den(), chart));
}

Frac2 frac_shift_axis(const Frac2& f, int axis, const Rat& c) {
  return Frac2::reduce(shift_axis(f.num(), axis, c),
                       shift_axis(f.den(), axis, c));
}

ExtInt frac_axis_valuation(const Frac2& f, int axis) {
  ExtInt n = axis_valuation(f.num(), axis);
  if (n.inf) return n;
  return ExtInt::of(n.v - axis_valuation(f.den(), axis).v);
}

}  // namespace toro
