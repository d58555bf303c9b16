#ifndef CSTAR_INTERVAL_HPP
#define CSTAR_INTERVAL_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include "cstar/types.hpp"

namespace cstar {

/// Closed interval with exact rational endpoints. Arithmetic returns an
/// enclosure of the exact image; only explicit rounding moves endpoints.
class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit point intervals
  RatInterval(int point) : lo_(point), hi_(point) {}                // NOLINT
  RatInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval& x) const { return lo_ <= x.lo_ && x.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool intersects(const RatInterval& x) const { return lo_ <= x.hi_ && x.lo_ <= hi_; }

  /// max |x| over the interval.
  Rational magnitude() const;
  /// min |x| over the interval.
  Rational mignitude() const;

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  RatInterval rounded(unsigned bits) const;

  RatInterval operator-() const { return {-hi_, -lo_}; }
  RatInterval& operator+=(const RatInterval& o);
  RatInterval& operator-=(const RatInterval& o);
  RatInterval& operator*=(const RatInterval& o);
  RatInterval& operator/=(const RatInterval& o);

  friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
  friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
  friend RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }
  friend RatInterval operator/(RatInterval a, const RatInterval& b) { return a /= b; }
  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  Rational lo_ = 0;
  Rational hi_ = 0;
};

RatInterval pow(const RatInterval& x, unsigned k);
RatInterval hull(const RatInterval& a, const RatInterval& b);
RatInterval intersection(const RatInterval& a, const RatInterval& b);

std::ostream& operator<<(std::ostream& os, const RatInterval& x);

/// Decimal rendering for diagnostics; never used on the exact path.
std::string to_decimal(const Rational& q, int digits = 8);

enum class Sign { Negative, Zero, Positive, Indeterminate };

const char* to_string(Sign s);

/// Enclosure of { e^t : t in x } with error about 2^-precision.
///
/// e^t = e^n * e^f with n = floor(t): e comes from its factorial series,
/// e^n from repeated squaring, e^f from a Taylor polynomial with Lagrange
/// remainder.
RatInterval exp_interval(const RatInterval& x, unsigned precision);

/// p(u) = c0 + c1 u + c2 u^2.
struct Quadratic {
  Rational c0 = 0;
  Rational c1 = 0;
  Rational c2 = 0;

  Rational operator()(const Rational& u) const { return c0 + u * (c1 + u * c2); }
};

/// Enclosure of the integral of p(u) e^{xi u} over [a, b], valid for every
/// xi in the interval. Away from 0 the antiderivative
/// e^{xi u}(p/xi - p'/xi^2 + p''/xi^3) is used; near 0 the power series in
/// xi with exact moment coefficients and a bounded tail.
RatInterval exp_moment_integral(const Quadratic& p, const Rational& a, const Rational& b,
                                const RatInterval& xi, unsigned precision);

/// Refines f(precision) from 64 bits, doubling, until the enclosure
/// excludes zero or max_precision is exceeded. A point enclosure [0, 0]
/// is a certified zero.
Sign certified_sign(const std::function<RatInterval(unsigned)>& f, unsigned max_precision);

struct IsolatingInterval {
  RatInterval bracket;
  Sign sign_at_lo = Sign::Negative;
  Sign sign_at_hi = Sign::Positive;
  /// The bracket is a single point where the function vanishes exactly.
  bool exact = false;
};

struct RootOptions {
  Rational tol = Rational(1, 1 << 24);
  unsigned max_steps = 200;
  unsigned max_precision = 1u << 14;
};

/// Unique root of a certified strictly increasing function, evaluated at
/// rational points as g(x, precision). Brackets by doubling outward from
/// [-1, 1], then bisects. Throws NoSignChange or Indeterminate.
IsolatingInterval isolate_unique_root(const std::function<RatInterval(const Rational&, unsigned)>& g,
                                      const RootOptions& opts = {});

}  // namespace cstar

#endif  // CSTAR_INTERVAL_HPP
