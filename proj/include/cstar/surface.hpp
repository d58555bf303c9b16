#ifndef CSTAR_SURFACE_HPP
#define CSTAR_SURFACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cstar/linalg.hpp"
#include "cstar/polyhedra.hpp"

namespace cstar {

enum class EndType { Elliptic, Parabolic };

const char* to_string(EndType t);

/// Combinatorial data of a C*-surface in slope-ordered standard form.
///
/// Leaf i has columns (l_ij, d_ij); in P the leaves come first in order
/// i = 0..r, followed by the source column (0,...,0,1) and the sink column
/// (0,...,0,-1) when those ends are parabolic.
struct DefiningData {
  int r = 0;
  std::vector<std::vector<Integer>> ls;
  std::vector<std::vector<Integer>> ds;
  EndType source = EndType::Elliptic;
  EndType sink = EndType::Elliptic;
  std::optional<std::vector<std::array<Rational, 2>>> A;
  /// Free-form metadata, kept as serialized JSON and passed through.
  std::string metadata = "{}";

  int leaf_size(int i) const { return static_cast<int>(ls[static_cast<std::size_t>(i)].size()); }
  /// Number of leaf columns n.
  int n() const;
  /// Number of parabolic columns m.
  int m() const;
  /// Column index of v_ij in P.
  int column(int i, int j) const;
};

/// Checks every invariant and returns the data with A filled in.
/// Throws MalformedInput, NonPrimitiveColumn, SlopeOrder, DuplicateColumn,
/// Redundant, IncompleteFan, ToricInput or BadA.
DefiningData validate_defining_data(DefiningData raw);

/// Recovers leaves and ends from a raw P matrix, sorts leaves by slope and
/// validates.
DefiningData defining_data_from_matrix(const IntMatrix& P);

/// (r+1) x (n+m): rows 0..r-1 are the L-block (-l_0 | ... | l_i | ...),
/// the last row holds the d-entries and the parabolic +-1.
IntMatrix assemble_P(const DefiningData& data);

/// A_columns default (1,0), (0,1), (-1,-1), (-2,-1), (-3,-1), ...
std::vector<std::array<Rational, 2>> default_A(int r);

struct SurfaceContext {
  DefiningData data;
  IntMatrix P;
  AbelianPresentation class_group;
  /// Class of every column of P (w_ij, then w_k).
  std::vector<ClassVector> degrees;
  ClassVector mu;
  ClassVector minus_k;
  /// Moving cone in K_Q; absent when the intersection is not a pointed cone.
  std::optional<Cone> mov_cone;
  bool is_fano = false;
  std::vector<int> special_set;
};

/// Builds P, the class group, degrees, mu, -K, Mov, the Fano flag and the
/// special set.
SurfaceContext make_context(const DefiningData& data);

/// (1 - r) mu + sum of all column degrees; checks that all leaf
/// expressions for mu agree.
ClassVector anticanonical_class(const SurfaceContext& ctx);

/// Intersection over all columns c of cone(degree columns except c).
std::optional<Cone> moving_cone(const SurfaceContext& ctx);

bool fano_check(const SurfaceContext& ctx);

std::vector<int> special_kappas(const DefiningData& data);

int family_dimension(const DefiningData& data);

}  // namespace cstar

#endif  // CSTAR_SURFACE_HPP
