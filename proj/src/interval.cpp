#include "cstar/interval.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "cstar/linalg.hpp"

namespace cstar {

namespace {

Integer pow2(unsigned bits) {
  Integer r = 1;
  r <<= bits;
  return r;
}

Rational floor_to_grid(const Rational& x, unsigned bits) {
  const Integer scale = pow2(bits);
  return Rational(floor_div(bmp::numerator(x) * scale, bmp::denominator(x)), scale);
}

Rational ceil_to_grid(const Rational& x, unsigned bits) { return -floor_to_grid(-x, bits); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Integer floor_rational(const Rational& x) { return floor_div(bmp::numerator(x), bmp::denominator(x)); }

// Bit length of ceil(|x|), at least 1.
unsigned magnitude_bits(const Rational& x) {
  const Integer c = floor_rational(abs(x)) + 1;
  return static_cast<unsigned>(bmp::msb(c)) + 1;
}

// Pads by one grid cell on each side. With the unrounded enclosure at most
// 2^-(bits+4) from the exact value, enclosures at precision 2p then sit
// inside those at precision p.
RatInterval padded(const RatInterval& x, unsigned bits) {
  if (x.is_point() && floor_to_grid(x.lo(), bits) == x.lo()) return x;
  const Rational cell(Integer(1), pow2(bits));
  return {floor_to_grid(x.lo(), bits) - cell, ceil_to_grid(x.hi(), bits) + cell};
}

// Enclosure of e with width below 2^-bits.
RatInterval e_enclosure(unsigned bits) {
  const Rational eps(Integer(1), pow2(bits + 2));
  Rational sum = 1;
  Rational term = 1;
  for (unsigned k = 1;; ++k) {
    term /= k;
    sum += term;
    // Tail after term k is below term/k.
    const Rational tail = term / k;
    if (tail < eps) return RatInterval(sum, sum + tail).rounded(bits + 2);
  }
}

// e^f for 0 <= f < 1, width below 2^-bits.
RatInterval exp_fraction(const Rational& f, unsigned bits) {
  if (f == 0) return RatInterval(1);
  const Rational eps(Integer(1), pow2(bits + 2));
  Rational sum = 1;
  Rational term = 1;
  for (unsigned k = 1;; ++k) {
    term = term * f / k;
    sum += term;
    // Lagrange: e^c f^(k+1)/(k+1)! <= 3 * term * f/(k+1).
    const Rational rem = 3 * term * f / (k + 1);
    if (rem < eps) return RatInterval(sum, sum + rem).rounded(bits + 2);
  }
}

RatInterval power_of(const RatInterval& base, const Integer& n, unsigned bits) {
  RatInterval result(1);
  RatInterval b = base;
  Integer k = n;
  while (k > 0) {
    if ((k & 1) != 0) result = (result * b).rounded(bits);
    k >>= 1;
    if (k > 0) b = (b * b).rounded(bits);
  }
  return result;
}

// Enclosure of e^t at a point, width below 2^-(bits).
RatInterval exp_point(const Rational& t, unsigned bits) {
  if (t == 0) return RatInterval(1);
  const Integer n = floor_rational(t);
  const Rational f = t - Rational(n);
  const unsigned n_abs = static_cast<unsigned>(n < 0 ? Integer(-n) : n);
  // e^n amplifies absolute errors by roughly n e^n < 2^(2n + log n).
  const unsigned work = bits + 8 + 2 * n_abs + magnitude_bits(Rational(n_abs)) + 4;
  const RatInterval ef = exp_fraction(f, work);
  if (n == 0) return ef;
  const RatInterval en = power_of(e_enclosure(work + 8), n < 0 ? Integer(-n) : n, work + 8);
  return n > 0 ? (en * ef).rounded(work) : (ef / en).rounded(work);
}

}  // namespace

RatInterval::RatInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error(ErrorCode::Internal, "interval with lo > hi: [" + cstar::to_string(lo_) + ", " + cstar::to_string(hi_) + "]");
}

Rational RatInterval::magnitude() const { return std::max(abs(lo_), abs(hi_)); }

Rational RatInterval::mignitude() const {
  if (contains_zero()) return 0;
  return std::min(abs(lo_), abs(hi_));
}

RatInterval RatInterval::rounded(unsigned bits) const { return {floor_to_grid(lo_, bits), ceil_to_grid(hi_, bits)}; }

RatInterval& RatInterval::operator+=(const RatInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
  const Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = lo;
  return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
  const Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

RatInterval& RatInterval::operator/=(const RatInterval& o) {
  if (o.contains_zero()) throw Error(ErrorCode::Internal, "interval division by an interval containing 0");
  return *this *= RatInterval(1 / o.hi_, 1 / o.lo_);
}

RatInterval pow(const RatInterval& x, unsigned k) {
  if (k == 0) return RatInterval(1);
  Rational a = x.lo(), b = x.hi();
  Rational pa = 1, pb = 1;
  for (unsigned i = 0; i < k; ++i) {
    pa *= a;
    pb *= b;
  }
  if (k % 2 == 1) return {pa, pb};
  if (x.contains_zero()) return {Rational(0), std::max(pa, pb)};
  return {std::min(pa, pb), std::max(pa, pb)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RatInterval intersection(const RatInterval& a, const RatInterval& b) {
  if (!a.intersects(b)) throw Error(ErrorCode::Internal, "disjoint enclosures of the same quantity");
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  const Integer scaled = floor_div(bmp::numerator(a) * scale, bmp::denominator(a));
  std::string frac = (scaled % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += Integer(scaled / scale).str();
  if (digits > 0) out += "." + frac;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatInterval& x) {
  return os << "[" << to_decimal(x.lo(), 10) << ", " << to_decimal(x.hi(), 10) << "]";
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Indeterminate: return "indeterminate";
  }
  return "?";
}

RatInterval exp_interval(const RatInterval& x, unsigned precision) {
  if (precision == 0) precision = 1;
  if (x.is_point() && x.lo() == 0) return RatInterval(1);
  const RatInterval lo = exp_point(x.lo(), precision + 4);
  const RatInterval hi = x.is_point() ? lo : exp_point(x.hi(), precision + 4);
  return padded(RatInterval(lo.lo(), hi.hi()), precision);
}

namespace {

// Integral of p(u) u^k over [a, b].
Rational moment(const Quadratic& p, const Rational& a, const Rational& b, unsigned k) {
  Rational total = 0;
  const Rational c[3] = {p.c0, p.c1, p.c2};
  for (unsigned i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    const unsigned e = i + k + 1;
    Rational pa = 1, pb = 1;
    for (unsigned j = 0; j < e; ++j) {
      pa *= a;
      pb *= b;
    }
    total += c[i] * (pb - pa) / e;
  }
  return total;
}

RatInterval moment_series(const Quadratic& p, const Rational& a, const Rational& b, const RatInterval& xi,
                          unsigned bits) {
  const Rational c = std::max(abs(a), abs(b));
  const Rational y = xi.magnitude() * c;
  const Rational pmax = abs(p.c0) + abs(p.c1) * c + abs(p.c2) * c * c;
  const Rational scale = pmax * (b - a);
  const Rational eps(Integer(1), pow2(bits + 2));
  RatInterval sum(0);
  RatInterval xi_pow(1);
  Rational factorial = 1;
  Rational y_pow = 1;  // y^(k+1)/(k+1)! after step k
  for (unsigned k = 0;; ++k) {
    if (k > 0) {
      xi_pow = (xi_pow * xi).rounded(bits + 16);
      factorial *= k;
    }
    const Rational mk = moment(p, a, b, k);
    if (mk != 0) sum += xi_pow * RatInterval(mk / factorial);
    y_pow = y_pow * y / (k + 1);
    const Rational n2(k + 2);
    if (y == 0 || scale == 0) return sum;
    if (2 * y < n2) {
      const Rational tail = scale * y_pow / (1 - y / n2);
      if (tail < eps) return sum + RatInterval(-tail, tail);
    }
  }
}

RatInterval moment_closed(const Quadratic& p, const Rational& a, const Rational& b, const RatInterval& xi,
                          unsigned bits) {
  const RatInterval inv = RatInterval(1) / xi;
  const RatInterval inv2 = inv * inv;
  const RatInterval inv3 = inv2 * inv;
  auto antiderivative = [&](const Rational& u) {
    const Rational pu = p(u);
    const Rational dpu = p.c1 + 2 * p.c2 * u;
    const Rational ddpu = 2 * p.c2;
    const RatInterval bracket = RatInterval(pu) * inv - RatInterval(dpu) * inv2 + RatInterval(ddpu) * inv3;
    return exp_interval(xi * RatInterval(u), bits) * bracket;
  };
  return antiderivative(b) - antiderivative(a);
}

}  // namespace

RatInterval exp_moment_integral(const Quadratic& p, const Rational& a, const Rational& b, const RatInterval& xi,
                                unsigned precision) {
  if (a > b) throw Error(ErrorCode::Internal, "exp_moment_integral needs a <= b");
  if (precision == 0) precision = 1;
  if (a == b) return RatInterval(0);
  if (xi.is_point() && xi.lo() == 0) return RatInterval(moment(p, a, b, 0));
  const bool closed = !xi.contains_zero() && xi.mignitude() >= Rational(1, 4);
  const Rational target(Integer(1), pow2(precision + 4));
  unsigned work = precision + 16;
  for (int attempt = 0;; ++attempt) {
    RatInterval r = closed ? moment_closed(p, a, b, xi, work) : moment_series(p, a, b, xi, work);
    // A non-point xi has an image of positive width; extra bits cannot
    // bring it below the target.
    if (!xi.is_point() || r.width() <= target || attempt == 4) return padded(r, precision);
    work += 64;
  }
}

Sign certified_sign(const std::function<RatInterval(unsigned)>& f, unsigned max_precision) {
  std::optional<RatInterval> running;
  for (unsigned prec = 64; prec <= std::max(64u, max_precision); prec *= 2) {
    const RatInterval enc = f(prec);
    running = running ? intersection(*running, enc) : enc;
    if (running->lo() > 0) return Sign::Positive;
    if (running->hi() < 0) return Sign::Negative;
    if (running->is_point()) return Sign::Zero;
  }
  return Sign::Indeterminate;
}

IsolatingInterval isolate_unique_root(const std::function<RatInterval(const Rational&, unsigned)>& g,
                                      const RootOptions& opts) {
  auto sign_at = [&](const Rational& x) {
    return certified_sign([&](unsigned prec) { return g(x, prec); }, opts.max_precision);
  };
  auto exact_at = [](const Rational& x) {
    return IsolatingInterval{RatInterval(x), Sign::Zero, Sign::Zero, true};
  };

  Rational lo = -1, hi = 1;
  Sign s_lo = sign_at(lo);
  if (s_lo == Sign::Zero) return exact_at(lo);
  if (s_lo == Sign::Indeterminate) throw Error(ErrorCode::Indeterminate, "sign of g(-1) unresolved");
  Sign s_hi = sign_at(hi);
  if (s_hi == Sign::Zero) return exact_at(hi);
  if (s_hi == Sign::Indeterminate) throw Error(ErrorCode::Indeterminate, "sign of g(1) unresolved");

  unsigned steps = 0;
  while (s_lo == Sign::Positive || s_hi == Sign::Negative) {
    if (s_lo == Sign::Positive && s_hi == Sign::Negative)
      throw Error(ErrorCode::Internal, "g is not increasing");
    if (++steps > opts.max_steps) throw Error(ErrorCode::NoSignChange, "no sign change within the doubling budget");
    if (s_lo == Sign::Positive) {
      hi = lo;
      s_hi = s_lo;
      lo *= 2;
      s_lo = sign_at(lo);
      if (s_lo == Sign::Zero) return exact_at(lo);
    } else {
      lo = hi;
      s_lo = s_hi;
      hi *= 2;
      s_hi = sign_at(hi);
      if (s_hi == Sign::Zero) return exact_at(hi);
    }
    if (s_lo == Sign::Indeterminate || s_hi == Sign::Indeterminate)
      throw Error(ErrorCode::Indeterminate, "sign unresolved while bracketing");
  }

  while (hi - lo > opts.tol) {
    const Rational width = hi - lo;
    Rational m = lo + width / 2;
    Sign s = sign_at(m);
    // An unresolved midpoint sits too close to the root; try nearby splits.
    for (const Rational& frac : {Rational(1, 3), Rational(2, 3)}) {
      if (s != Sign::Indeterminate) break;
      m = lo + width * frac;
      s = sign_at(m);
    }
    if (s == Sign::Indeterminate)
      throw Error(ErrorCode::Indeterminate, "sign unresolved during bisection at " + to_decimal(m, 12));
    if (s == Sign::Zero) return exact_at(m);
    if (s == Sign::Negative) lo = m; else hi = m;
  }
  return IsolatingInterval{RatInterval(lo, hi), Sign::Negative, Sign::Positive, false};
}

}  // namespace cstar
