#ifndef CSTAR_POLYNOMIAL_HPP
#define CSTAR_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cstar/interval.hpp"

namespace cstar {

/// Univariate polynomial over Q, coefficients from the constant term up.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c0 + c1 x
  static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// Horner evaluation in interval arithmetic.
  RatInterval operator()(const RatInterval& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial square_free_part(const Polynomial& p);

std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sign changes of the chain at x; nullopt means -infinity / +infinity.
int sign_variations(const std::vector<Polynomial>& chain, const std::optional<Rational>& x, bool plus_infinity = false);

/// Open interval, an absent endpoint is infinite.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// All distinct real roots of p inside the domain, in increasing order.
/// Brackets have rational endpoints, pairwise disjoint closures, width at
/// most tol (or are exact points), and certified signs of the square-free
/// part at both ends.
std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const OpenInterval& domain = {},
                                             const Rational& tol = Rational(1, 1 << 24));

/// Shrinks an isolating interval of a simple root of q until its width is
/// at most tol.
IsolatingInterval refine_root(const Polynomial& q, IsolatingInterval root, const Rational& tol);

}  // namespace cstar

#endif  // CSTAR_POLYNOMIAL_HPP
