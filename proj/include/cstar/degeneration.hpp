#ifndef CSTAR_DEGENERATION_HPP
#define CSTAR_DEGENERATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cstar/surface.hpp"

namespace cstar {

/// alpha_0j = 1 + l_0j - r l_0j, every other entry 1.
IntVector canonical_alpha(const SurfaceContext& ctx);

/// Returns the override if its class is -K, else throws AlphaClassMismatch.
IntVector checked_alpha(const SurfaceContext& ctx, const IntVector& alpha);

/// P' = [P; alpha].
IntMatrix stacked_matrix(const SurfaceContext& ctx, const IntVector& alpha);

/// Columns e_{r+1}, e_{r+2}, -e_kappa of Z^{r+2}, with e_0 = -e_1 - ... - e_r.
IntMatrix antitropical_basis(int r, int kappa);

/// tau'_kappa (section of sigma' by the antitropical basis) and its dual.
std::pair<Cone, Cone> antitropical_cone(const Cone& sigma_prime, int r, int kappa);

struct Normalization {
  IntMatrix G;
  Cone tau;
  Cone omega;
};

/// G = identity with its second row replaced by the integral g with
/// <g, v> = 1 on every generator of tau'. Throws NoUnitRow.
Normalization normalize_special(const Cone& tau_prime);

/// Primitive generators of tau' with the alpha coordinate dropped,
/// deduplicated and in cyclic order.
std::vector<IntPoint> degeneration_fan_rays(const Cone& tau_prime);

struct DegenerationData {
  int kappa = 0;
  bool special = false;
  Cone tau_prime;
  Cone omega_prime;
  std::optional<IntMatrix> G;
  std::optional<Cone> tau;
  std::optional<Cone> omega;
  Polygon C;
  /// Unique interior lattice point of C (special kappa only).
  std::optional<IntPoint> u;
  /// Special kappa: B = C - u. Non-special kappa: see build_degenerations.
  Polygon B;
  /// False only for non-special kappa when no kappa is special.
  bool recentered = false;
  std::vector<IntPoint> fano_rays;
  FiberProfile profile;
};

/// C = slice of omega' at second coordinate 1; for special kappa u and
/// B = C - u (throws NotUniqueInteriorPoint), otherwise B = C.
DegenerationData degeneration_for(const SurfaceContext& ctx, const Cone& sigma_prime, int kappa);

struct DegenerationSet {
  IntVector alpha;
  Cone sigma_prime;
  std::vector<DegenerationData> kappas;
  /// First coordinate of u at the smallest special kappa under the
  /// canonical alpha; subtracted from every non-special B.
  Rational nonspecial_shift = 0;
};

/// All kappa = 0..r with a common alpha (canonical unless overridden).
///
/// Changing alpha by rows of P translates each C_kappa by an integral
/// vector. Special B are immune through u; a non-special B is taken as C
/// under the canonical alpha, moved by nonspecial_shift, so it does not
/// depend on the override either.
DegenerationSet build_degenerations(const SurfaceContext& ctx, const std::optional<IntVector>& alpha_override = {});

struct PKappaExport {
  int kappa = 0;
  Integer ell = 1;
  IntMatrix matrix;
  /// Index of the inserted column.
  int inserted_column = 0;
};

/// Appends a zero row and inserts (nu_kappa, 1) after the last column of
/// leaf kappa; nu_0 = -ell (e_1 + ... + e_r), nu_kappa = ell e_kappa.
PKappaExport pkappa_export(const SurfaceContext& ctx, int kappa, const Integer& ell = 1);

}  // namespace cstar

#endif  // CSTAR_DEGENERATION_HPP
