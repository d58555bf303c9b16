#ifndef CSTAR_POLYHEDRA_HPP
#define CSTAR_POLYHEDRA_HPP

#include <vector>

#include "cstar/types.hpp"

namespace cstar {

/// Rational polyhedral cone carrying both descriptions.
///
/// Generators and facet normals are primitive integer vectors, deduplicated
/// and sorted lexicographically. For a cone that is not full-dimensional the
/// facet normals are relative: they are only meaningful on the linear span,
/// which is cut out by `equations()`.
class Cone {
 public:
  Cone() = default;

  /// Extreme rays are selected from `rays` and the facets computed by double
  /// description. Throws EmptyInput for an empty or all-zero ray list.
  static Cone from_generators(const std::vector<IntVector>& rays, Eigen::Index ambient_dim);

  /// The cone { x : <h, x> >= 0 for all h }. Throws NotPointed when the
  /// inequalities do not have full rank and EmptyInput when the cone is {0}.
  static Cone from_inequalities(const std::vector<IntVector>& normals, Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }
  bool pointed() const { return pointed_; }

  const std::vector<IntVector>& generators() const { return generators_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  bool contains(const RatVector& x) const;
  bool contains_in_relative_interior(const RatVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.generators_ == b.generators_ && a.facets_ == b.facets_;
  }

 private:
  friend Cone dual_cone(const Cone& c);

  Eigen::Index ambient_dim_ = 0;
  Eigen::Index dim_ = 0;
  bool pointed_ = true;
  std::vector<IntVector> generators_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// Extreme rays of { x in R^d : <h, x> >= 0 } by the double description
/// method. The rows must have rank d.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& normals, Eigen::Index d);

/// The dual cone; requires a pointed full-dimensional input.
Cone dual_cone(const Cone& c);

/// Applies an invertible integer matrix: G * c, with facets transformed by
/// the inverse transpose.
Cone transform_cone(const Cone& c, const IntMatrix& G);

/// { x : sum_i x_i * basis.col(i) in c } in the coordinates of `basis`.
Cone subspace_section(const Cone& c, const IntMatrix& basis);

/// Lexicographic order on integer vectors, used for canonical forms.
bool lex_less(const IntVector& a, const IntVector& b);

Integer dot(const IntVector& a, const IntVector& b);

// ---------------------------------------------------------------------------
// Polygons

/// Strictly convex polygon with rational vertices in counterclockwise order,
/// rotated so that the lexicographically smallest vertex comes first.
class Polygon {
 public:
  Polygon() = default;

  /// Validates the vertex list as given (no reordering beyond the canonical
  /// rotation). Throws InvalidPolygon.
  explicit Polygon(std::vector<RatPoint> vertices);

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  Polygon translated(const RatPoint& shift) const;

  bool contains_strictly(const RatPoint& p) const;

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<RatPoint> vertices_;
};

/// Convex hull of a point set; collinear and repeated points are dropped.
Polygon convex_hull(const std::vector<RatPoint>& points);

Rational cross(const RatPoint& a, const RatPoint& b);

struct Affine {
  Rational constant;
  Rational slope;

  Rational operator()(const Rational& u) const { return constant + slope * u; }
};

/// The polygon as a union of vertical fibres: between consecutive vertex
/// abscissae the upper and lower boundary are affine in u.
struct FiberProfile {
  std::vector<Rational> breakpoints;
  struct Piece {
    Affine upper;
    Affine lower;
  };
  std::vector<Piece> pieces;
};

struct PolygonMetrics {
  Rational area;
  RatPoint barycenter;
  FiberProfile profile;
};

PolygonMetrics polygon_metrics(const Polygon& p);

Rational polygon_area(const Polygon& p);

FiberProfile fiber_profile(const Polygon& p);

/// Slice { x in c : x_coord = level } of a 3-dimensional pointed cone,
/// written in the two remaining coordinates (in their original order).
Polygon plane_slice_polygon(const Cone& c, Eigen::Index coord, const Rational& level);

/// Integer points strictly inside p, in lexicographic order.
std::vector<IntPoint> interior_lattice_points(const Polygon& p);

/// { u : <u, v> >= -1 for every vertex v }; requires 0 strictly inside.
Polygon polar_dual_polytope(const Polygon& p);

/// Sorts nonzero integer points by angle around the origin, starting from
/// the positive first axis.
std::vector<IntPoint> cyclic_order(std::vector<IntPoint> points);

}  // namespace cstar

#endif  // CSTAR_POLYHEDRA_HPP
