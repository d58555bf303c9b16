#include "cstar/polyhedra.hpp"

#include <algorithm>
#include <numeric>

#include "cstar/linalg.hpp"

namespace cstar {

namespace {

using Index = Eigen::Index;
using TightSet = std::vector<char>;

RatMatrix rows_to_matrix(const std::vector<IntVector>& rows, Index d) {
  RatMatrix M(static_cast<Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) M.row(static_cast<Index>(i)) = rows[i].transpose().cast<Rational>();
  return M;
}

Index rank_of(const std::vector<IntVector>& rows, Index d) {
  if (rows.empty()) return 0;
  return static_cast<Index>(reduced_row_echelon(rows_to_matrix(rows, d)).pivots.size());
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return a == b; }), v.end());
}

bool subset_of(const TightSet& a, const TightSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

// Facets of a full-dimensional cone plus the indices of the generators that
// are extreme rays (all of them when the cone has lineality).
struct FullDimResult {
  std::vector<IntVector> facets;
  std::vector<std::size_t> extreme;
  bool pointed = true;
};

FullDimResult full_dim_cone(const std::vector<IntVector>& gens, Index d) {
  FullDimResult out;
  out.facets = extreme_rays(gens, d);
  sort_unique(out.facets);
  out.pointed = rank_of(out.facets, d) == d;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!out.pointed) {
      out.extreme.push_back(i);
      continue;
    }
    std::vector<IntVector> tight;
    for (const auto& f : out.facets) {
      if (dot(f, gens[i]) == 0) tight.push_back(f);
    }
    if (rank_of(tight, d) == d - 1) out.extreme.push_back(i);
  }
  return out;
}

}  // namespace

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& normals, Index d) {
  const std::size_t m = normals.size();
  if (rank_of(normals, d) < d) {
    throw Error(ErrorCode::NotPointed, "inequalities do not have full rank, the cone has lineality");
  }

  // Start from a simplicial cone cut out by d independent inequalities.
  std::vector<std::size_t> basis;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < m && static_cast<Index>(basis.size()) < d; ++i) {
    chosen.push_back(normals[i]);
    if (rank_of(chosen, d) == static_cast<Index>(chosen.size())) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  RatMatrix aug(d, 2 * d);
  aug.leftCols(d) = rows_to_matrix(chosen, d);
  aug.rightCols(d) = RatMatrix::Identity(d, d);
  RatMatrix inverse = reduced_row_echelon(aug).R.rightCols(d);

  std::vector<IntVector> rays;
  std::vector<TightSet> tight;
  for (Index j = 0; j < d; ++j) {
    rays.push_back(primitive_integer_vector(inverse.col(j)));
    TightSet t(m, 0);
    for (Index k = 0; k < d; ++k) {
      if (k != j) t[basis[static_cast<std::size_t>(k)]] = 1;
    }
    tight.push_back(std::move(t));
  }

  std::vector<char> done(m, 0);
  for (auto b : basis) done[b] = 1;

  for (std::size_t h = 0; h < m; ++h) {
    if (done[h]) continue;
    done[h] = 1;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(normals[h], rays[r]);
      if (s[r] > 0) {
        pos.push_back(r);
      } else if (s[r] < 0) {
        neg.push_back(r);
      } else {
        zero.push_back(r);
      }
    }
    if (neg.empty()) {
      for (auto r : zero) tight[r][h] = 1;
      continue;
    }

    std::vector<IntVector> next_rays;
    std::vector<TightSet> next_tight;
    for (auto r : pos) {
      next_rays.push_back(rays[r]);
      next_tight.push_back(tight[r]);
    }
    for (auto r : zero) {
      next_rays.push_back(rays[r]);
      tight[r][h] = 1;
      next_tight.push_back(tight[r]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        TightSet common(m, 0);
        Index count = 0;
        for (std::size_t k = 0; k < m; ++k) {
          common[k] = static_cast<char>(tight[p][k] && tight[n][k]);
          count += common[k];
        }
        if (count < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && subset_of(common, tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = s[p] * rays[n] - s[n] * rays[p];
        next_rays.push_back(primitivize(v));
        common[h] = 1;
        next_tight.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }
  sort_unique(rays);
  return rays;
}

Cone Cone::from_generators(const std::vector<IntVector>& rays, Index ambient_dim) {
  std::vector<IntVector> gens;
  for (const auto& r : rays) {
    if (r.size() != ambient_dim) throw Error(ErrorCode::Internal, "generator of wrong dimension");
    if (content(r) != 0) gens.push_back(primitivize(r));
  }
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no nonzero generators");
  sort_unique(gens);

  Cone c;
  c.ambient_dim_ = ambient_dim;
  RatMatrix G = rows_to_matrix(gens, ambient_dim);
  EchelonForm ech = reduced_row_echelon(G);
  c.dim_ = static_cast<Index>(ech.pivots.size());

  if (c.dim_ == ambient_dim) {
    FullDimResult res = full_dim_cone(gens, ambient_dim);
    c.pointed_ = res.pointed;
    c.facets_ = std::move(res.facets);
    for (auto i : res.extreme) c.generators_.push_back(gens[i]);
    return c;
  }

  // Lower-dimensional: the pivot coordinates embed the span isomorphically.
  std::vector<IntVector> projected;
  for (const auto& g : gens) {
    IntVector p(c.dim_);
    for (Index k = 0; k < c.dim_; ++k) p(k) = g(ech.pivots[static_cast<std::size_t>(k)]);
    projected.push_back(p);
  }
  FullDimResult res = full_dim_cone(projected, c.dim_);
  c.pointed_ = res.pointed;
  for (const auto& f : res.facets) {
    IntVector lifted = IntVector::Zero(ambient_dim);
    for (Index k = 0; k < c.dim_; ++k) lifted(ech.pivots[static_cast<std::size_t>(k)]) = f(k);
    c.facets_.push_back(primitivize(lifted));
  }
  sort_unique(c.facets_);
  for (auto i : res.extreme) c.generators_.push_back(gens[i]);
  IntMatrix K = integer_kernel(G);
  for (Index j = 0; j < K.cols(); ++j) c.equations_.push_back(K.col(j));
  return c;
}

Cone Cone::from_inequalities(const std::vector<IntVector>& normals, Index ambient_dim) {
  std::vector<IntVector> rays = extreme_rays(normals, ambient_dim);
  if (rays.empty()) throw Error(ErrorCode::EmptyInput, "the inequalities only admit the origin");
  return from_generators(rays, ambient_dim);
}

bool Cone::contains(const RatVector& x) const {
  for (const auto& e : equations_) {
    if (e.cast<Rational>().dot(x) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (f.cast<Rational>().dot(x) < 0) return false;
  }
  return true;
}

bool Cone::contains_in_relative_interior(const RatVector& x) const {
  for (const auto& e : equations_) {
    if (e.cast<Rational>().dot(x) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (f.cast<Rational>().dot(x) <= 0) return false;
  }
  return true;
}

Cone dual_cone(const Cone& c) {
  if (!c.pointed() || !c.full_dimensional()) {
    throw Error(ErrorCode::NotPointed, "dual_cone needs a pointed full-dimensional cone");
  }
  Cone d;
  d.ambient_dim_ = c.ambient_dim_;
  d.dim_ = c.ambient_dim_;
  d.pointed_ = true;
  d.generators_ = c.facets_;
  d.facets_ = c.generators_;
  return d;
}

Cone transform_cone(const Cone& c, const IntMatrix& G) {
  std::vector<IntVector> gens;
  for (const auto& g : c.generators()) gens.push_back(G * g);
  return Cone::from_generators(gens, c.ambient_dim());
}

Cone subspace_section(const Cone& c, const IntMatrix& basis) {
  const Index k = basis.cols();
  if (rank(basis) != k) throw Error(ErrorCode::DegenerateSection, "section basis is linearly dependent");
  std::vector<IntVector> normals;
  for (const auto& f : c.facets()) normals.push_back(basis.transpose() * f);
  for (const auto& e : c.equations()) {
    IntVector h = basis.transpose() * e;
    normals.push_back(h);
    normals.push_back(-h);
  }
  Cone section;
  try {
    section = Cone::from_inequalities(normals, k);
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateSection, e.what());
  }
  if (!section.full_dimensional()) {
    throw Error(ErrorCode::DegenerateSection, "section is not full-dimensional in the subspace");
  }
  return section;
}

// ---------------------------------------------------------------------------

Rational cross(const RatPoint& a, const RatPoint& b) {
  return a(0) * b(1) - a(1) * b(0);
}

namespace {

bool point_less(const RatPoint& a, const RatPoint& b) {
  return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1);
}

Rational turn(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return cross(RatPoint(a - o), RatPoint(b - o));
}

}  // namespace

Polygon::Polygon(std::vector<RatPoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::InvalidPolygon, "a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (turn(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0) {
      throw Error(ErrorCode::InvalidPolygon, "vertices are not in strictly convex counterclockwise order");
    }
  }
  auto first = std::min_element(vertices_.begin(), vertices_.end(), point_less);
  std::rotate(vertices_.begin(), first, vertices_.end());
  // Rule out multiply wound vertex sequences.
  std::size_t ascents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = vertices_[i];
    const RatPoint& b = vertices_[(i + 1) % n];
    if (point_less(a, b) != point_less(vertices_[(i + n - 1) % n], a)) ++ascents;
  }
  if (ascents != 2) throw Error(ErrorCode::InvalidPolygon, "vertex sequence winds more than once");
}

Polygon Polygon::translated(const RatPoint& shift) const {
  std::vector<RatPoint> v;
  for (const auto& p : vertices_) v.emplace_back(p + shift);
  return Polygon(std::move(v));
}

bool Polygon::contains_strictly(const RatPoint& p) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (turn(vertices_[i], vertices_[(i + 1) % n], p) <= 0) return false;
  }
  return true;
}

Polygon convex_hull(const std::vector<RatPoint>& points) {
  std::vector<RatPoint> pts = points;
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorCode::InvalidPolygon, "fewer than 3 distinct points");
  std::vector<RatPoint> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return Polygon(std::move(hull));
}

Rational polygon_area(const Polygon& p) {
  const auto& v = p.vertices();
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice / 2;
}

FiberProfile fiber_profile(const Polygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  FiberProfile prof;
  for (const auto& q : v) prof.breakpoints.push_back(q(0));
  std::sort(prof.breakpoints.begin(), prof.breakpoints.end());
  prof.breakpoints.erase(std::unique(prof.breakpoints.begin(), prof.breakpoints.end()), prof.breakpoints.end());

  for (std::size_t k = 0; k + 1 < prof.breakpoints.size(); ++k) {
    const Rational& lo = prof.breakpoints[k];
    const Rational& hi = prof.breakpoints[k + 1];
    const Rational mid = (lo + hi) / 2;
    std::vector<Affine> lines;
    for (std::size_t i = 0; i < n; ++i) {
      const RatPoint& a = v[i];
      const RatPoint& b = v[(i + 1) % n];
      if (a(0) == b(0)) continue;
      if (std::min(a(0), b(0)) <= lo && std::max(a(0), b(0)) >= hi) {
        Rational slope = (b(1) - a(1)) / (b(0) - a(0));
        lines.push_back(Affine{a(1) - slope * a(0), slope});
      }
    }
    if (lines.size() != 2) throw Error(ErrorCode::Internal, "fiber decomposition found no unique edge pair");
    if (lines[0](mid) < lines[1](mid)) std::swap(lines[0], lines[1]);
    prof.pieces.push_back({lines[0], lines[1]});
  }
  return prof;
}

PolygonMetrics polygon_metrics(const Polygon& p) {
  const auto& v = p.vertices();
  PolygonMetrics m;
  m.area = polygon_area(p);
  Rational cx = 0, cy = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatPoint& a = v[i];
    const RatPoint& b = v[(i + 1) % v.size()];
    Rational c = cross(a, b);
    cx += (a(0) + b(0)) * c;
    cy += (a(1) + b(1)) * c;
  }
  m.barycenter = RatPoint(cx / (6 * m.area), cy / (6 * m.area));
  m.profile = fiber_profile(p);
  return m;
}

Polygon plane_slice_polygon(const Cone& c, Index coord, const Rational& level) {
  if (c.ambient_dim() != 3 || coord < 0 || coord > 2) {
    throw Error(ErrorCode::Internal, "plane slices are defined for cones in R^3");
  }
  if (!c.pointed()) throw Error(ErrorCode::UnboundedSlice, "cone has lineality");
  if (level == 0) throw Error(ErrorCode::EmptySlice, "the slice through the apex is not 2-dimensional");
  bool toward = false, away = false;
  for (const auto& g : c.generators()) {
    const Integer& h = g(coord);
    if (h == 0) throw Error(ErrorCode::UnboundedSlice, "an extreme ray is parallel to the slicing plane");
    ((h > 0) == (level > 0) ? toward : away) = true;
  }
  if (!toward) throw Error(ErrorCode::EmptySlice, "the cone does not meet the slicing plane");
  if (away) throw Error(ErrorCode::UnboundedSlice, "extreme rays on both sides of the slicing plane");
  std::vector<RatPoint> pts;
  for (const auto& g : c.generators()) {
    const Integer& h = g(coord);
    Rational t = level / Rational(h);
    RatPoint q;
    Index k = 0;
    for (Index i = 0; i < 3; ++i) {
      if (i != coord) q(k++) = t * Rational(g(i));
    }
    pts.push_back(q);
  }
  return convex_hull(pts);
}

std::vector<IntPoint> interior_lattice_points(const Polygon& p) {
  Rational xmin = p.vertices()[0](0), xmax = xmin, ymin = p.vertices()[0](1), ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v(0));
    xmax = std::max(xmax, v(0));
    ymin = std::min(ymin, v(1));
    ymax = std::max(ymax, v(1));
  }
  auto floor_of = [](const Rational& q) { return floor_div(numerator(q), denominator(q)); };
  auto ceil_of = [](const Rational& q) { return -floor_div(-numerator(q), denominator(q)); };
  std::vector<IntPoint> out;
  for (Integer x = ceil_of(xmin); x <= floor_of(xmax); ++x) {
    for (Integer y = ceil_of(ymin); y <= floor_of(ymax); ++y) {
      if (p.contains_strictly(RatPoint(Rational(x), Rational(y)))) out.emplace_back(x, y);
    }
  }
  return out;
}

Polygon polar_dual_polytope(const Polygon& p) {
  if (!p.contains_strictly(RatPoint(0, 0))) {
    throw Error(ErrorCode::InvalidPolygon, "polar dual needs the origin strictly inside");
  }
  const auto& v = p.vertices();
  std::vector<RatPoint> dual;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatPoint& a = v[i];
    const RatPoint& b = v[(i + 1) % v.size()];
    // Solve <u, a> = <u, b> = -1.
    Rational det = cross(a, b);
    dual.emplace_back((-b(1) + a(1)) / det, (b(0) - a(0)) / det);
  }
  return convex_hull(dual);
}

std::vector<IntPoint> cyclic_order(std::vector<IntPoint> points) {
  auto upper = [](const IntPoint& p) { return p(1) > 0 || (p(1) == 0 && p(0) > 0); };
  std::sort(points.begin(), points.end(), [&](const IntPoint& a, const IntPoint& b) {
    bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    Integer c = a(0) * b(1) - a(1) * b(0);
    return c > 0;
  });
  return points;
}

}  // namespace cstar
