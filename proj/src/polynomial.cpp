#include "cstar/polynomial.hpp"

#include <algorithm>

namespace cstar {

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Sign to_sign(int s) { return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RatInterval Polynomial::operator()(const RatInterval& x) const {
  RatInterval r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + RatInterval(*it);
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(dq + 1), Rational(0));
  const Rational lc = b.leading();
  for (int k = dq; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lc;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Only signs matter, so each remainder may be rescaled by a positive constant.
    const Rational s = abs(r.leading());
    chain.push_back(r * Rational(-1 / s));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const std::optional<Rational>& x, bool plus_infinity) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s;
    if (x) {
      s = sign_of(q(*x));
    } else {
      s = sign_of(q.leading());
      if (!plus_infinity && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

IsolatingInterval refine_root(const Polynomial& q, IsolatingInterval root, const Rational& tol) {
  if (root.exact) return root;
  Rational lo = root.bracket.lo(), hi = root.bracket.hi();
  const int s_lo = sign_of(q(lo));
  while (hi - lo > tol) {
    const Rational m = (lo + hi) / 2;
    const int s = sign_of(q(m));
    if (s == 0) return {RatInterval(m), Sign::Zero, Sign::Zero, true};
    if (s == s_lo) lo = m; else hi = m;
  }
  return {RatInterval(lo, hi), to_sign(sign_of(q(lo))), to_sign(sign_of(q(hi))), false};
}

std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const OpenInterval& domain, const Rational& tol) {
  if (p.is_zero()) throw Error(ErrorCode::Internal, "sturm_isolate of the zero polynomial");
  Polynomial q = square_free_part(p);
  if (q.degree() <= 0) return {};
  if (domain.lo && domain.hi && *domain.lo >= *domain.hi) return {};

  // Roots at finite endpoints lie outside the open domain.
  for (const auto& end : {domain.lo, domain.hi}) {
    if (end && q(*end) == 0) q = divmod(q, Polynomial::linear(-*end, 1)).first;
  }
  if (q.degree() <= 0) return {};

  Rational bound = 0;
  for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, abs(q.coefficient(i) / q.leading()));
  bound += 1;
  const Rational lo = domain.lo ? std::max(*domain.lo, Rational(-bound)) : Rational(-bound);
  const Rational hi = domain.hi ? std::min(*domain.hi, bound) : bound;
  if (lo >= hi) return {};

  const auto chain = sturm_chain(q);
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };

  // Neither end of a work item is a root: lo and hi were cleared above (or
  // lie beyond the Cauchy bound) and every split point is chosen off the roots.
  std::vector<IsolatingInterval> roots;
  std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      IsolatingInterval r{RatInterval(a, b), to_sign(sign_of(q(a))), to_sign(sign_of(q(b))), false};
      roots.push_back(refine_root(q, r, tol));
      continue;
    }
    Rational m = (a + b) / 2;
    for (int k = 3; q(m) == 0; ++k) m = a + (b - a) / k;
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.bracket.lo() < y.bracket.lo(); });

  // Brackets from neighbouring cells may share an endpoint; shrink until
  // the closures separate.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].bracket.hi() >= roots[i + 1].bracket.lo()) {
      roots[i] = refine_root(q, roots[i], roots[i].bracket.width() / 2);
      roots[i + 1] = refine_root(q, roots[i + 1], roots[i + 1].bracket.width() / 2);
    }
  }
  return roots;
}

}  // namespace cstar
