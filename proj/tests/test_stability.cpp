#include <doctest.h>

#include <random>

#include "cstar/stability.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace cstar;
using fixtures::iv;
using fixtures::q;

namespace {

const IntVector reference_alpha = iv({1, 1, 0, 0, 1});

SurfaceContext running_ctx() { return make_context(defining_data_from_matrix(fixtures::running_P())); }

IntVector random_alpha(const SurfaceContext& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  IntVector alpha = canonical_alpha(ctx);
  for (Eigen::Index i = 0; i < ctx.P.rows(); ++i) alpha += IntVector(ctx.P.row(i).transpose()) * c(rng);
  return alpha;
}

// Random rational point of the interior of the dual of omega.
RatVector interior_point(const Cone& omega, std::mt19937& rng) {
  std::uniform_int_distribution<int> w(1, 9);
  const Cone tau = dual_cone(omega);
  RatVector x = RatVector::Zero(3);
  for (const auto& g : tau.generators()) x += g.cast<Rational>() * Rational(w(rng), w(rng));
  return x;
}

struct Verdicts {
  bool ke;
  KrsVerdict krs;
  SeVerdict se;
  bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts_of(const StabilityReport& r) { return {r.ke.admits, r.krs.verdict, r.se.verdict}; }

}  // namespace

TEST_CASE("running example verdicts") {
  const auto ctx = running_ctx();
  for (const auto& alpha : {std::optional<IntVector>(reference_alpha), std::optional<IntVector>()}) {
    const auto report = analyze(ctx, build_degenerations(ctx, alpha));
    CHECK(report.fano);
    CHECK(report.special == std::vector<int>{0, 2});
    CHECK_FALSE(report.ke.admits);
    CHECK(report.krs.verdict == KrsVerdict::Yes);
    CHECK(report.se.verdict == SeVerdict::Excluded);
    REQUIRE(report.krs.xi_abs);
    CHECK(report.krs.xi_abs->intersects(RatInterval(q("24984/10000"), q("24988/10000"))));
  }
}

TEST_CASE("volume function at (0,1,0) equals the reference closed form") {
  const auto set = build_degenerations(running_ctx(), reference_alpha);
  const auto& k0 = set.kappas[0];
  REQUIRE(k0.omega);
  CHECK(se_volume_function(*k0.omega)((RatVector(3) << 0, 1, 0).finished()) == q("19/10"));
}

TEST_CASE("volume function does not depend on the triangulation") {
  std::mt19937 rng(11);
  std::vector<Cone> cones;
  for (const auto& deg : build_degenerations(running_ctx(), reference_alpha).kappas)
    if (deg.omega) cones.push_back(*deg.omega);
  for (const auto& e : corpus::fano_corpus())
    for (const auto& deg : build_degenerations(e.ctx).kappas)
      if (deg.omega) cones.push_back(*deg.omega);
  REQUIRE(cones.size() >= 20);
  for (const auto& omega : cones) {
    const std::size_t k = cyclic_rays(omega).size();
    const VolumeFunction base = se_volume_function(omega, 0);
    for (int t = 0; t < 5; ++t) {
      const RatVector x = interior_point(omega, rng);
      const Rational v = base(x);
      CHECK(v > 0);
      for (std::size_t apex = 1; apex < k; ++apex) CHECK(se_volume_function(omega, apex)(x) == v);
    }
  }
}

TEST_CASE("normalized volume of a unimodular simplex cone") {
  // omega = positive orthant: vol{x >= 0, <xi, x> <= 1} = 1 / (6 xi0 xi1 xi2); normalized: 1 / (xi0 xi1 xi2).
  const Cone orthant = Cone::from_generators(fixtures::ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  CHECK(se_volume_function(orthant)((RatVector(3) << 1, 2, 3).finished()) == q("1/6"));
}

TEST_CASE("moments at xi = 0 are area times barycenter") {
  auto check = [](const DegenerationSet& set) {
    for (const auto& deg : set.kappas) {
      const auto m = polygon_metrics(deg.B);
      const RatInterval zero(0);
      CHECK(first_moment(deg.profile, zero, 64) == RatInterval(m.area * m.barycenter(0)));
      CHECK(second_moment(deg.profile, zero, 64) == RatInterval(m.area * m.barycenter(1)));
    }
  };
  check(build_degenerations(running_ctx(), reference_alpha));
  for (const auto& e : corpus::fano_corpus()) {
    CAPTURE(e.name);
    check(build_degenerations(e.ctx));
  }
}

TEST_CASE("Reeb domain of the running example and blow-up at its ends") {
  const auto set = build_degenerations(running_ctx(), reference_alpha);
  const auto& omega = *set.kappas[0].omega;
  const OpenInterval dom = reeb_domain(omega);
  REQUIRE(dom.lo);
  REQUIRE(dom.hi);
  CHECK(*dom.lo == -1);
  CHECK(*dom.hi == 2);
  const VolumeSlice s = volume_slice(omega);
  CHECK(s.D(*dom.lo) == 0);
  CHECK(s.D(*dom.hi) == 0);
  CHECK(s.N(*dom.lo) != 0);
  CHECK(s.N(*dom.hi) != 0);
  // vol(x1, 1, 0) grows without bound towards both ends.
  const VolumeFunction vf = se_volume_function(omega);
  Rational prev_lo = vf((RatVector(3) << 0, 1, 0).finished()), prev_hi = prev_lo;
  for (int k = 1; k <= 6; ++k) {
    const Rational eps = Rational(1, Integer(10) * k * k * k);
    const Rational at_lo = vf((RatVector(3) << *dom.lo + eps, 1, 0).finished());
    const Rational at_hi = vf((RatVector(3) << *dom.hi - eps, 1, 0).finished());
    CHECK(at_lo > prev_lo);
    CHECK(at_hi > prev_hi);
    prev_lo = at_lo;
    prev_hi = at_hi;
  }
  CHECK(prev_lo > 100);
  // The slice agrees with the volume function.
  for (const char* x : {"-1/2", "0", "1/3", "3/2"}) {
    const Rational x1 = q(x);
    CHECK(s.N(x1) / s.D(x1) == vf((RatVector(3) << x1, 1, 0).finished()));
  }
}

TEST_CASE("x2-derivative of the slice matches a difference quotient") {
  const auto set = build_degenerations(running_ctx(), reference_alpha);
  const auto& omega = *set.kappas[2].omega;
  const VolumeSlice s = volume_slice(omega);
  const VolumeFunction vf = se_volume_function(omega);
  const Rational x1 = q("1/2");
  const Rational exact = (s.N_x2(x1) * s.D(x1) - s.N(x1) * s.D_x2(x1)) / (s.D(x1) * s.D(x1));
  const Rational h = Rational(1, 1000000);
  const Rational quotient =
      (vf((RatVector(3) << x1, 1, h).finished()) - vf((RatVector(3) << x1, 1, -h).finished())) / (2 * h);
  CHECK(bmp::abs(quotient - exact) < Rational(1, 100000));
}

TEST_CASE("verdicts are invariant under alpha re-choices") {
  std::mt19937 rng(3);
  std::vector<SurfaceContext> inputs = {running_ctx()};
  for (const auto& e : corpus::fano_corpus()) {
    if (inputs.size() == 6) break;
    inputs.push_back(e.ctx);
  }
  REQUIRE(inputs.size() == 6);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& ctx = inputs[i];
    const Verdicts base = verdicts_of(analyze(ctx, build_degenerations(ctx)));
    for (int t = 0; t < (i == 0 ? 10 : 3); ++t) {
      const IntVector alpha = random_alpha(ctx, rng);
      CAPTURE(i);
      CAPTURE(alpha.transpose());
      CHECK(verdicts_of(analyze(ctx, build_degenerations(ctx, alpha))) == base);
    }
  }
}

TEST_CASE("synthetic corpus: KE implies KRS, xi roots agree, mirror inputs are balanced") {
  const auto entries = corpus::fano_corpus();
  REQUIRE(entries.size() >= 20);
  int mirrors = 0, ke_count = 0, r3 = 0;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    const auto set = build_degenerations(e.ctx);
    const auto report = analyze(e.ctx, set);
    CHECK(report.ke.first_coordinates_agree);
    if (e.ctx.data.r == 3) ++r3;
    if (report.ke.admits) {
      if (report.special.empty()) {
        CHECK(report.krs.verdict == KrsVerdict::Vacuous);
      } else {
        ++ke_count;
        CHECK(report.krs.verdict == KrsVerdict::Yes);
        REQUIRE(report.krs.xi_root);
        CHECK(report.krs.xi_root->bracket.contains(Rational(0)));
      }
    }
    if (report.krs.per_kappa.size() > 1) CHECK(report.krs.roots_intersect);
    for (std::size_t a = 0; a < report.krs.per_kappa.size(); ++a)
      for (std::size_t b = a + 1; b < report.krs.per_kappa.size(); ++b) {
        const auto& ra = report.krs.per_kappa[a].xi_root;
        const auto& rb = report.krs.per_kappa[b].xi_root;
        if (ra && rb) CHECK(ra->bracket.intersects(rb->bracket));
      }
    if (e.mirror) {
      ++mirrors;
      for (const auto& b : report.ke.barycenters) CHECK(b(0) == 0);
    }
  }
  CHECK(mirrors >= 5);
  CHECK(ke_count >= 1);
  CHECK(r3 >= 1);
}

TEST_CASE("analysis refuses non-Fano input") {
  const auto ctx = make_context(
      defining_data_from_matrix(fixtures::im({{-2, -1, 1, 1, 0}, {-2, -1, 0, 0, 2}, {-1, -1, 3, -1, -1}})));
  REQUIRE_FALSE(ctx.is_fano);
  try {
    analyze(ctx, build_degenerations(ctx));
    FAIL("expected NotFano");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFano);
  }
}
