#include "cstar/stability.hpp"

#include <algorithm>

namespace cstar {

namespace {

Rational pairing(const IntVector& w, const RatVector& xi) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += Rational(w(i)) * xi(i);
  return s;
}

Integer det3(const IntVector& a, const IntVector& b, const IntVector& c) {
  return a(0) * (b(1) * c(2) - b(2) * c(1)) - a(1) * (b(0) * c(2) - b(2) * c(0)) + a(2) * (b(0) * c(1) - b(1) * c(0));
}

Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

RatInterval abs_interval(const RatInterval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {Rational(0), x.magnitude()};
}

Sign sign_of(const RatInterval& x) {
  if (x.lo() > 0) return Sign::Positive;
  if (x.hi() < 0) return Sign::Negative;
  if (x.is_point()) return Sign::Zero;
  return Sign::Indeterminate;
}

}  // namespace

Rational VolumeFunction::operator()(const RatVector& xi) const {
  Rational total = 0;
  for (const auto& t : terms) {
    Rational denom = 1;
    for (const auto& f : t.forms) denom *= pairing(f, xi);
    total += Rational(t.coefficient) / denom;
  }
  return total;
}

std::vector<IntVector> cyclic_rays(const Cone& omega) {
  const auto& rays = omega.generators();
  const std::size_t k = rays.size();
  if (omega.ambient_dim() != 3 || !omega.full_dimensional() || k < 3)
    throw Error(ErrorCode::Internal, "cyclic_rays needs a full-dimensional cone in R^3");
  auto adjacent = [&](std::size_t a, std::size_t b) {
    for (const auto& f : omega.facets())
      if (dot(f, rays[a]) == 0 && dot(f, rays[b]) == 0) return true;
    return false;
  };
  std::vector<std::size_t> order{0};
  std::vector<bool> used(k, false);
  used[0] = true;
  while (order.size() < k) {
    const std::size_t last = order.back();
    std::size_t next = k;
    for (std::size_t c = 0; c < k; ++c)
      if (!used[c] && adjacent(last, c)) {
        next = c;
        break;
      }
    if (next == k) throw Error(ErrorCode::Internal, "ray adjacency does not form a cycle");
    used[next] = true;
    order.push_back(next);
  }
  std::vector<IntVector> out;
  for (std::size_t i : order) out.push_back(rays[i]);
  return out;
}

VolumeFunction se_volume_function(const Cone& omega, std::size_t apex) {
  const auto rays = cyclic_rays(omega);
  const std::size_t k = rays.size();
  VolumeFunction vf;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const IntVector& a = rays[apex % k];
    const IntVector& b = rays[(apex + i) % k];
    const IntVector& c = rays[(apex + i + 1) % k];
    vf.terms.push_back({abs(det3(a, b, c)), {a, b, c}});
  }
  return vf;
}

VolumeSlice volume_slice(const Cone& omega) {
  const auto rays = cyclic_rays(omega);
  const VolumeFunction vf = se_volume_function(omega);
  const std::size_t k = rays.size();
  std::vector<Polynomial> L;
  for (const auto& w : rays) L.push_back(Polynomial::linear(Rational(w(1)), Rational(w(0))));

  auto index_of = [&](const IntVector& w) {
    return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), w) - rays.begin());
  };
  // Product of L over `members`, and its x2-derivative.
  auto product = [&](const std::vector<bool>& members) {
    Polynomial value = Polynomial::constant(1);
    Polynomial deriv;
    for (std::size_t i = 0; i < k; ++i) {
      if (!members[i]) continue;
      deriv = deriv * L[i] + value * Polynomial::constant(Rational(rays[i](2)));
      value *= L[i];
    }
    return std::pair{value, deriv};
  };

  VolumeSlice s;
  std::tie(s.D, s.D_x2) = product(std::vector<bool>(k, true));
  for (const auto& t : vf.terms) {
    std::vector<bool> rest(k, true);
    for (const auto& f : t.forms) rest[index_of(f)] = false;
    const auto [value, deriv] = product(rest);
    s.N += value * Rational(t.coefficient);
    s.N_x2 += deriv * Rational(t.coefficient);
  }
  return s;
}

OpenInterval reeb_domain(const Cone& omega) {
  OpenInterval dom;
  for (const auto& w : omega.generators()) {
    if (w(0) == 0) {
      if (w(1) <= 0) throw Error(ErrorCode::Internal, "empty Reeb domain");
      continue;
    }
    const Rational bound(Integer(-w(1)), w(0));
    if (w(0) > 0) {
      if (!dom.lo || bound > *dom.lo) dom.lo = bound;
    } else if (!dom.hi || bound < *dom.hi) {
      dom.hi = bound;
    }
  }
  if (dom.lo && dom.hi && *dom.lo >= *dom.hi) throw Error(ErrorCode::Internal, "empty Reeb domain");
  return dom;
}

const char* to_string(KrsVerdict v) {
  switch (v) {
    case KrsVerdict::Yes: return "yes";
    case KrsVerdict::No: return "no";
    case KrsVerdict::Vacuous: return "vacuous";
    case KrsVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(SeVerdict v) {
  switch (v) {
    case SeVerdict::Candidate: return "candidate";
    case SeVerdict::Excluded: return "excluded";
    case SeVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

KeRecord ke_test(const DegenerationSet& degenerations) {
  KeRecord ke;
  bool first_zero = true, second_positive = true;
  for (const auto& deg : degenerations.kappas) {
    const PolygonMetrics m = polygon_metrics(deg.B);
    ke.barycenters.push_back(m.barycenter);
    ke.areas.push_back(m.area);
    ke.recentered.push_back(deg.recentered);
    if (m.barycenter(0) != 0) first_zero = false;
    if (deg.special && m.barycenter(1) <= 0) second_positive = false;
  }
  ke.admits = first_zero && second_positive;
  ke.first_coordinates_agree = std::all_of(ke.barycenters.begin(), ke.barycenters.end(),
                                           [&](const RatPoint& b) { return b(0) == ke.barycenters.front()(0); });
  return ke;
}

RatInterval first_moment(const FiberProfile& profile, const RatInterval& xi, unsigned precision) {
  RatInterval total(0);
  for (std::size_t i = 0; i < profile.pieces.size(); ++i) {
    const auto& [upper, lower] = profile.pieces[i];
    const Quadratic p{0, upper.constant - lower.constant, upper.slope - lower.slope};
    total += exp_moment_integral(p, profile.breakpoints[i], profile.breakpoints[i + 1], xi, precision);
  }
  return total;
}

RatInterval second_moment(const FiberProfile& profile, const RatInterval& xi, unsigned precision) {
  RatInterval total(0);
  for (std::size_t i = 0; i < profile.pieces.size(); ++i) {
    const auto& [U, L] = profile.pieces[i];
    const Quadratic p{(U.constant * U.constant - L.constant * L.constant) / 2, U.constant * U.slope - L.constant * L.slope,
                      (U.slope * U.slope - L.slope * L.slope) / 2};
    total += exp_moment_integral(p, profile.breakpoints[i], profile.breakpoints[i + 1], xi, precision);
  }
  return total;
}

KrsRecord krs_test(const DegenerationSet& degenerations, const AnalysisOptions& opts) {
  KrsRecord krs;
  std::vector<const DegenerationData*> special;
  for (const auto& deg : degenerations.kappas)
    if (deg.special) special.push_back(&deg);
  if (special.empty()) {
    krs.verdict = KrsVerdict::Vacuous;
    krs.diagnostic = "no special kappa";
    return krs;
  }

  bool failed = false;
  for (const DegenerationData* deg : special) {
    KrsRecord::PerKappa pk;
    pk.kappa = deg->kappa;
    const FiberProfile& profile = deg->profile;
    auto isolate = [&](const Rational& tol) {
      RootOptions ro;
      ro.tol = tol;
      ro.max_precision = opts.max_precision;
      return isolate_unique_root(
          [&](const Rational& x, unsigned prec) { return first_moment(profile, RatInterval(x), prec); }, ro);
    };
    try {
      IsolatingInterval root = isolate(opts.tol);
      auto i2 = [&](const IsolatingInterval& r) {
        return [&profile, bracket = r.bracket](unsigned prec) { return second_moment(profile, bracket, prec); };
      };
      Sign s = certified_sign(i2(root), opts.max_precision);
      if (s == Sign::Indeterminate && !root.exact) {
        root = isolate(opts.tol / (1 << 16));
        s = certified_sign(i2(root), opts.max_precision);
      }
      pk.xi_root = root;
      pk.sign = s;
      pk.second_moment = second_moment(profile, root.bracket, 64);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSignChange && e.code() != ErrorCode::Indeterminate) throw;
      krs.diagnostic += "kappa " + std::to_string(deg->kappa) + ": " + e.what() + "; ";
      failed = true;
    }
    krs.per_kappa.push_back(std::move(pk));
  }

  for (std::size_t i = 0; i < krs.per_kappa.size(); ++i)
    for (std::size_t j = i + 1; j < krs.per_kappa.size(); ++j) {
      const auto& a = krs.per_kappa[i].xi_root;
      const auto& b = krs.per_kappa[j].xi_root;
      if (a && b && !a->bracket.intersects(b->bracket)) krs.roots_intersect = false;
    }
  if (krs.per_kappa.front().xi_root) {
    krs.xi_root = krs.per_kappa.front().xi_root;
    krs.xi_abs = abs_interval(krs.xi_root->bracket);
  }

  const bool any_negative = std::any_of(krs.per_kappa.begin(), krs.per_kappa.end(),
                                        [](const auto& pk) { return pk.sign == Sign::Negative; });
  const bool all_positive = std::all_of(krs.per_kappa.begin(), krs.per_kappa.end(),
                                        [](const auto& pk) { return pk.sign == Sign::Positive; });
  if (!krs.roots_intersect) {
    krs.verdict = KrsVerdict::Indeterminate;
    krs.diagnostic += "root enclosures from different kappa are disjoint; ";
  } else if (any_negative) {
    krs.verdict = KrsVerdict::No;
  } else if (all_positive && !failed) {
    krs.verdict = KrsVerdict::Yes;
  } else {
    krs.verdict = KrsVerdict::Indeterminate;
  }
  return krs;
}

SeRecord::PerKappa se_for(const Cone& omega, int kappa, const AnalysisOptions& opts) {
  SeRecord::PerKappa pk;
  pk.kappa = kappa;
  pk.domain = reeb_domain(omega);
  const VolumeSlice s = volume_slice(omega);
  const Polynomial F = s.N.derivative() * s.D - s.N * s.D.derivative();
  if (F.is_zero()) throw Error(ErrorCode::NotUniqueCriticalPoint, "vol is constant in x1 on the domain");
  const auto roots = sturm_isolate(F, pk.domain, opts.tol);
  if (roots.size() != 1)
    throw Error(ErrorCode::NotUniqueCriticalPoint,
                std::to_string(roots.size()) + " critical points of x1 -> vol(x1, 1, 0) in the domain");

  const Polynomial q = square_free_part(F);
  const Polynomial H = s.N_x2 * s.D - s.N * s.D_x2;
  IsolatingInterval z = roots.front();
  RatInterval h = H(z.bracket), d = s.D(z.bracket);
  for (int step = 0; step < 400 && !z.exact && (h.contains_zero() || d.contains_zero()); ++step) {
    z = refine_root(q, z, z.bracket.width() / 2);
    h = H(z.bracket);
    d = s.D(z.bracket);
  }
  pk.z = z;
  pk.sign = sign_of(h);
  if (!d.contains_zero()) pk.d2 = h / pow(d, 2);
  if (pk.sign == Sign::Indeterminate) pk.diagnostic = "sign of d vol / d x2 at z unresolved";
  if (pk.sign == Sign::Zero) pk.diagnostic = "d vol / d x2 vanishes exactly at z";
  return pk;
}

SeRecord se_test(const DegenerationSet& degenerations, const AnalysisOptions& opts) {
  SeRecord se;
  bool any_positive = false, all_negative = true;
  for (const auto& deg : degenerations.kappas) {
    if (!deg.special) continue;
    SeRecord::PerKappa pk;
    try {
      pk = se_for(*deg.omega, deg.kappa, opts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotUniqueCriticalPoint) throw;
      pk.kappa = deg.kappa;
      pk.domain = reeb_domain(*deg.omega);
      pk.diagnostic = e.what();
    }
    if (pk.sign == Sign::Positive) any_positive = true;
    if (pk.sign != Sign::Negative) all_negative = false;
    se.per_kappa.push_back(std::move(pk));
  }
  se.verdict = any_positive ? SeVerdict::Excluded : (all_negative ? SeVerdict::Candidate : SeVerdict::Indeterminate);
  return se;
}

namespace {

bool is_running_example(const IntMatrix& P) {
  IntMatrix example(3, 5);
  example << -2, -1, 1, 1, 0, -2, -1, 0, 0, 2, 3, -1, 0, -1, 1;
  return P == example;
}

}  // namespace

StabilityReport analyze(const SurfaceContext& ctx, const DegenerationSet& degenerations, const AnalysisOptions& opts) {
  if (!ctx.is_fano) throw Error(ErrorCode::NotFano, "-K is not in the interior of the moving cone");
  StabilityReport report;
  report.fano = true;
  report.minus_k = ctx.minus_k;
  report.special = ctx.special_set;
  report.family_dimension = family_dimension(ctx.data);
  report.alpha = degenerations.alpha;
  report.ke = ke_test(degenerations);
  report.krs = krs_test(degenerations, opts);
  report.se = se_test(degenerations, opts);

  auto& w = report.warnings;
  if (ctx.special_set.empty()) {
    w.push_back("no special kappa: KRS holds vacuously");
    w.push_back("no special kappa: SE candidate vacuously");
    w.push_back("unverified normalization: non-special moment polytopes are not recentred");
  }
  for (const auto& deg : degenerations.kappas)
    if (deg.G && *deg.G != IntMatrix::Identity(3, 3))
      w.push_back("kappa " + std::to_string(deg.kappa) + ": G is not the identity, tau differs from tau'; SE uses tau");
  if (!report.ke.first_coordinates_agree) w.push_back("barycenter first coordinates differ across kappa");
  if (!report.krs.diagnostic.empty()) w.push_back("KRS: " + report.krs.diagnostic);
  for (const auto& pk : report.se.per_kappa)
    if (!pk.diagnostic.empty()) w.push_back("SE kappa " + std::to_string(pk.kappa) + ": " + pk.diagnostic);
  if (report.ke.admits && report.krs.verdict != KrsVerdict::Yes && report.krs.verdict != KrsVerdict::Vacuous)
    w.push_back("KE holds but KRS is not yes");
  if (is_running_example(ctx.P))
    w.push_back("-K = (3,5) in the basis of the degree matrix [[0,2,3,-1,1],[1,2,1,3,2]]; (5,3) "
                "lies outside the ample cone");
  return report;
}

}  // namespace cstar
