#ifndef CSTAR_STABILITY_HPP
#define CSTAR_STABILITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cstar/degeneration.hpp"
#include "cstar/interval.hpp"
#include "cstar/polynomial.hpp"

namespace cstar {

/// Normalized volume (3! times Euclidean) of omega ∩ [<xi, .> <= 1] as a
/// sum over a triangulation of omega: coeff / (<a,xi> <b,xi> <c,xi>).
struct VolumeFunction {
  struct Term {
    Integer coefficient;
    std::array<IntVector, 3> forms;
  };
  std::vector<Term> terms;

  Rational operator()(const RatVector& xi) const;
};

/// Rays of a pointed 3-dimensional cone in the cyclic order of its
/// cross-section polygon.
std::vector<IntVector> cyclic_rays(const Cone& omega);

/// Fan triangulation from the ray at position `apex` of the cyclic order.
VolumeFunction se_volume_function(const Cone& omega, std::size_t apex = 0);

/// vol(x1, 1, x2) = N / D near x2 = 0, as polynomials in x1: the values at
/// x2 = 0 and the x2-derivatives at x2 = 0.
struct VolumeSlice {
  Polynomial N, D, N_x2, D_x2;
};

VolumeSlice volume_slice(const Cone& omega);

/// { x1 : (x1, 1, 0) interior to the dual of omega }.
OpenInterval reeb_domain(const Cone& omega);

struct AnalysisOptions {
  Rational tol = Rational(1, 1 << 24);
  unsigned max_precision = 1u << 14;
};

struct KeRecord {
  bool admits = false;
  std::vector<RatPoint> barycenters;
  std::vector<Rational> areas;
  std::vector<bool> recentered;
  bool first_coordinates_agree = false;
};

enum class KrsVerdict { Yes, No, Vacuous, Indeterminate };
const char* to_string(KrsVerdict v);

struct KrsRecord {
  KrsVerdict verdict = KrsVerdict::Indeterminate;
  /// Root of the first moment equation int u1 exp(xi u1) = 0, from the first special
  /// kappa, and its absolute value.
  std::optional<IsolatingInterval> xi_root;
  std::optional<RatInterval> xi_abs;
  struct PerKappa {
    int kappa = 0;
    std::optional<IsolatingInterval> xi_root;
    std::optional<RatInterval> second_moment;
    Sign sign = Sign::Indeterminate;
  };
  std::vector<PerKappa> per_kappa;
  bool roots_intersect = true;
  std::string diagnostic;
};

enum class SeVerdict { Candidate, Excluded, Indeterminate };
const char* to_string(SeVerdict v);

struct SeRecord {
  SeVerdict verdict = SeVerdict::Indeterminate;
  struct PerKappa {
    int kappa = 0;
    OpenInterval domain;
    std::optional<IsolatingInterval> z;
    std::optional<RatInterval> d2;
    Sign sign = Sign::Indeterminate;
    std::string diagnostic;
  };
  std::vector<PerKappa> per_kappa;
};

struct StabilityReport {
  bool fano = false;
  ClassVector minus_k;
  std::vector<int> special;
  int family_dimension = 0;
  IntVector alpha;
  KeRecord ke;
  KrsRecord krs;
  SeRecord se;
  std::vector<std::string> warnings;
};

KeRecord ke_test(const DegenerationSet& degenerations);

/// First and second exponential moments of a polygon in its first
/// coordinate: I1 = ∫ u1 e^{xi u1}, I2 = ∫ u2 e^{xi u1}.
RatInterval first_moment(const FiberProfile& profile, const RatInterval& xi, unsigned precision);
RatInterval second_moment(const FiberProfile& profile, const RatInterval& xi, unsigned precision);

KrsRecord krs_test(const DegenerationSet& degenerations, const AnalysisOptions& opts = {});

/// Per-kappa SE data; throws NotUniqueCriticalPoint.
SeRecord::PerKappa se_for(const Cone& omega, int kappa, const AnalysisOptions& opts = {});

SeRecord se_test(const DegenerationSet& degenerations, const AnalysisOptions& opts = {});

/// Runs all three tests on a Fano context.
StabilityReport analyze(const SurfaceContext& ctx, const DegenerationSet& degenerations,
                        const AnalysisOptions& opts = {});

}  // namespace cstar

#endif  // CSTAR_STABILITY_HPP
