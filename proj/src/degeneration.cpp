#include "cstar/degeneration.hpp"

#include <algorithm>

namespace cstar {

IntVector canonical_alpha(const SurfaceContext& ctx) {
  const DefiningData& data = ctx.data;
  IntVector alpha = IntVector::Constant(ctx.P.cols(), Integer(1));
  for (int j = 0; j < data.leaf_size(0); ++j) {
    const Integer& l = data.ls[0][static_cast<std::size_t>(j)];
    alpha(data.column(0, j)) = 1 + l - data.r * l;
  }
  return alpha;
}

IntVector checked_alpha(const SurfaceContext& ctx, const IntVector& alpha) {
  if (alpha.size() != ctx.P.cols())
    throw Error(ErrorCode::AlphaClassMismatch, "alpha needs " + std::to_string(ctx.P.cols()) + " entries");
  const IntMatrix Pt = ctx.P.transpose();
  if (!integral_solve(Pt, IntVector(alpha - canonical_alpha(ctx))))
    throw Error(ErrorCode::AlphaClassMismatch, "class of alpha differs from -K");
  return alpha;
}

IntMatrix stacked_matrix(const SurfaceContext& ctx, const IntVector& alpha) {
  IntMatrix Pp(ctx.P.rows() + 1, ctx.P.cols());
  Pp.topRows(ctx.P.rows()) = ctx.P;
  Pp.row(ctx.P.rows()) = alpha.transpose();
  return Pp;
}

IntMatrix antitropical_basis(int r, int kappa) {
  IntMatrix B = IntMatrix::Zero(r + 2, 3);
  B(r, 0) = 1;
  B(r + 1, 1) = 1;
  if (kappa == 0) {
    for (int i = 0; i < r; ++i) B(i, 2) = 1;
  } else {
    B(kappa - 1, 2) = -1;
  }
  return B;
}

std::pair<Cone, Cone> antitropical_cone(const Cone& sigma_prime, int r, int kappa) {
  Cone tau = subspace_section(sigma_prime, antitropical_basis(r, kappa));
  Cone omega = dual_cone(tau);
  return {std::move(tau), std::move(omega)};
}

Normalization normalize_special(const Cone& tau_prime) {
  const auto& gens = tau_prime.generators();
  IntMatrix A(static_cast<Eigen::Index>(gens.size()), 3);
  for (std::size_t i = 0; i < gens.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  const auto g = integral_solve(A, IntVector::Constant(A.rows(), Integer(1)));
  if (!g) throw Error(ErrorCode::NoUnitRow, "no integral g with <g, v> = 1 on all generators");
  IntMatrix G = IntMatrix::Identity(3, 3);
  G.row(1) = g->transpose();
  const Integer det = determinant(G);
  if (det != 1 && det != -1) throw Error(ErrorCode::NoUnitRow, "G is not unimodular (det " + det.str() + ")");
  Cone tau = transform_cone(tau_prime, G);
  Cone omega = dual_cone(tau);
  return {std::move(G), std::move(tau), std::move(omega)};
}

std::vector<IntPoint> degeneration_fan_rays(const Cone& tau_prime) {
  std::vector<IntPoint> rays;
  for (const auto& v : tau_prime.generators()) {
    IntVector p(2);
    p << v(0), v(2);
    p = primitivize(p);
    IntPoint q(p(0), p(1));
    if (std::find(rays.begin(), rays.end(), q) == rays.end()) rays.push_back(q);
  }
  return cyclic_order(rays);
}

DegenerationData degeneration_for(const SurfaceContext& ctx, const Cone& sigma_prime, int kappa) {
  DegenerationData deg;
  deg.kappa = kappa;
  deg.special = std::find(ctx.special_set.begin(), ctx.special_set.end(), kappa) != ctx.special_set.end();
  std::tie(deg.tau_prime, deg.omega_prime) = antitropical_cone(sigma_prime, ctx.data.r, kappa);
  deg.C = plane_slice_polygon(deg.omega_prime, 1, Rational(1));
  deg.fano_rays = degeneration_fan_rays(deg.tau_prime);
  if (deg.special) {
    Normalization n = normalize_special(deg.tau_prime);
    deg.G = std::move(n.G);
    deg.tau = std::move(n.tau);
    deg.omega = std::move(n.omega);
  }
  if (deg.special) {
    const auto interior = interior_lattice_points(deg.C);
    if (interior.size() != 1)
      throw Error(ErrorCode::NotUniqueInteriorPoint, "C_" + std::to_string(kappa) + " has " +
                                                         std::to_string(interior.size()) + " interior lattice points");
    deg.u = interior.front();
    deg.B = deg.C.translated(RatPoint(Rational(-(*deg.u)(0)), Rational(-(*deg.u)(1))));
    deg.recentered = true;
  } else {
    deg.B = deg.C;
  }
  deg.profile = fiber_profile(deg.B);
  return deg;
}

namespace {

Cone stacked_cone(const SurfaceContext& ctx, const IntVector& alpha) {
  const IntMatrix Pp = stacked_matrix(ctx, alpha);
  std::vector<IntVector> cols;
  for (Eigen::Index c = 0; c < Pp.cols(); ++c) cols.push_back(Pp.col(c));
  return Cone::from_generators(cols, Pp.rows());
}

Polygon moment_slice(const Cone& sigma_prime, int r, int kappa) {
  return plane_slice_polygon(antitropical_cone(sigma_prime, r, kappa).second, 1, Rational(1));
}

}  // namespace

DegenerationSet build_degenerations(const SurfaceContext& ctx, const std::optional<IntVector>& alpha_override) {
  DegenerationSet set;
  const IntVector canonical = canonical_alpha(ctx);
  set.alpha = alpha_override ? checked_alpha(ctx, *alpha_override) : canonical;
  set.sigma_prime = stacked_cone(ctx, set.alpha);
  for (int kappa = 0; kappa <= ctx.data.r; ++kappa) set.kappas.push_back(degeneration_for(ctx, set.sigma_prime, kappa));

  const bool overridden = set.alpha != canonical;
  const Cone sigma_canonical = overridden ? stacked_cone(ctx, canonical) : set.sigma_prime;
  const auto first_special = std::find_if(set.kappas.begin(), set.kappas.end(),
                                          [](const DegenerationData& d) { return d.special; });
  if (first_special != set.kappas.end()) {
    const IntPoint u = overridden ? *degeneration_for(ctx, sigma_canonical, first_special->kappa).u : *first_special->u;
    set.nonspecial_shift = Rational(u(0));
  }
  for (auto& deg : set.kappas) {
    if (deg.special) continue;
    const Polygon C = overridden ? moment_slice(sigma_canonical, ctx.data.r, deg.kappa) : deg.C;
    deg.B = C.translated(RatPoint(Rational(-set.nonspecial_shift), Rational(0)));
    deg.profile = fiber_profile(deg.B);
    deg.recentered = first_special != set.kappas.end();
  }
  return set;
}

PKappaExport pkappa_export(const SurfaceContext& ctx, int kappa, const Integer& ell) {
  if (ell < 1) throw Error(ErrorCode::MalformedInput, "ell must be at least 1");
  if (kappa < 0 || kappa > ctx.data.r) throw Error(ErrorCode::MalformedInput, "kappa out of range");
  const IntMatrix& P = ctx.P;
  const int r = ctx.data.r;
  const int at = ctx.data.column(kappa, 0) + ctx.data.leaf_size(kappa);
  IntMatrix M = IntMatrix::Zero(P.rows() + 1, P.cols() + 1);
  M.topLeftCorner(P.rows(), at) = P.leftCols(at);
  M.topRightCorner(P.rows(), P.cols() - at) = P.rightCols(P.cols() - at);
  if (kappa == 0) {
    for (int i = 0; i < r; ++i) M(i, at) = -ell;
  } else {
    M(kappa - 1, at) = ell;
  }
  M(P.rows(), at) = 1;
  return {kappa, ell, std::move(M), at};
}

}  // namespace cstar
