#include "cstar/surface.hpp"

#include <algorithm>

namespace cstar {

namespace {

Error malformed(const std::string& what) { return Error(ErrorCode::MalformedInput, what); }

std::string leaf_name(int i, int j) { return "v_" + std::to_string(i) + std::to_string(j + 1); }

}  // namespace

const char* to_string(EndType t) { return t == EndType::Elliptic ? "elliptic" : "parabolic"; }

int DefiningData::n() const {
  int total = 0;
  for (const auto& leaf : ls) total += static_cast<int>(leaf.size());
  return total;
}

int DefiningData::m() const { return (source == EndType::Parabolic) + (sink == EndType::Parabolic); }

int DefiningData::column(int i, int j) const {
  int offset = 0;
  for (int k = 0; k < i; ++k) offset += leaf_size(k);
  return offset + j;
}

std::vector<std::array<Rational, 2>> default_A(int r) {
  std::vector<std::array<Rational, 2>> A{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  for (int i = 2; i <= r; ++i) A.push_back({Rational(1 - i), Rational(-1)});
  return A;
}

DefiningData validate_defining_data(DefiningData raw) {
  if (raw.ls.empty()) throw malformed("no leaves");
  if (raw.ls.size() != raw.ds.size()) throw malformed("ls and ds have different numbers of leaves");
  raw.r = static_cast<int>(raw.ls.size()) - 1;
  if (raw.r < 2) throw Error(ErrorCode::ToricInput, "r = " + std::to_string(raw.r) + " < 2 describes a toric surface");

  for (int i = 0; i <= raw.r; ++i) {
    const auto& l = raw.ls[static_cast<std::size_t>(i)];
    const auto& d = raw.ds[static_cast<std::size_t>(i)];
    if (l.empty()) throw malformed("leaf " + std::to_string(i) + " is empty");
    if (l.size() != d.size()) throw malformed("leaf " + std::to_string(i) + ": ls and ds lengths differ");
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j] < 1) throw malformed(leaf_name(i, static_cast<int>(j)) + ": l must be at least 1");
      if (bmp::gcd(l[j], d[j]) != 1)
        throw Error(ErrorCode::NonPrimitiveColumn, leaf_name(i, static_cast<int>(j)) + ": gcd(l, d) = " +
                                                       Integer(bmp::gcd(l[j], d[j])).str());
    }
    for (std::size_t j = 0; j < l.size(); ++j)
      for (std::size_t k = j + 1; k < l.size(); ++k)
        if (l[j] == l[k] && d[j] == d[k])
          throw Error(ErrorCode::DuplicateColumn, leaf_name(i, static_cast<int>(j)) + " equals " + leaf_name(i, static_cast<int>(k)));
    for (std::size_t j = 0; j + 1 < l.size(); ++j) {
      if (Rational(d[j], l[j]) <= Rational(d[j + 1], l[j + 1]))
        throw Error(ErrorCode::SlopeOrder, "leaf " + std::to_string(i) + ": slopes must decrease strictly (" +
                                               to_string(Rational(d[j], l[j])) + " then " +
                                               to_string(Rational(d[j + 1], l[j + 1])) + ")");
    }
    if (l.front() * static_cast<long>(l.size()) < 2)
      throw Error(ErrorCode::Redundant, "leaf " + std::to_string(i) + " is a single column with l = 1");
  }

  if (raw.source == EndType::Elliptic) {
    Rational top = 0;
    for (int i = 0; i <= raw.r; ++i) top += Rational(raw.ds[static_cast<std::size_t>(i)].front(), raw.ls[static_cast<std::size_t>(i)].front());
    if (top <= 0) throw Error(ErrorCode::IncompleteFan, "elliptic source needs the top slopes to sum to > 0, got " + to_string(top));
  }
  if (raw.sink == EndType::Elliptic) {
    Rational bottom = 0;
    for (int i = 0; i <= raw.r; ++i) bottom += Rational(raw.ds[static_cast<std::size_t>(i)].back(), raw.ls[static_cast<std::size_t>(i)].back());
    if (bottom >= 0) throw Error(ErrorCode::IncompleteFan, "elliptic sink needs the bottom slopes to sum to < 0, got " + to_string(bottom));
  }

  if (raw.A) {
    const auto& A = *raw.A;
    if (static_cast<int>(A.size()) != raw.r + 1)
      throw Error(ErrorCode::BadA, "A needs r + 1 = " + std::to_string(raw.r + 1) + " columns");
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        if (A[i][0] * A[j][1] - A[i][1] * A[j][0] == 0)
          throw Error(ErrorCode::BadA, "columns " + std::to_string(i) + " and " + std::to_string(j) + " of A are linearly dependent");
  } else {
    raw.A = default_A(raw.r);
  }
  return raw;
}

IntMatrix assemble_P(const DefiningData& data) {
  const int r = data.r;
  IntMatrix P = IntMatrix::Zero(r + 1, data.n() + data.m());
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < data.leaf_size(i); ++j) {
      const int c = data.column(i, j);
      const Integer& l = data.ls[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 0) {
        for (int row = 0; row < r; ++row) P(row, c) = -l;
      } else {
        P(i - 1, c) = l;
      }
      P(r, c) = data.ds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  int c = data.n();
  if (data.source == EndType::Parabolic) P(r, c++) = 1;
  if (data.sink == EndType::Parabolic) P(r, c) = -1;
  return P;
}

DefiningData defining_data_from_matrix(const IntMatrix& P) {
  if (P.rows() < 2 || P.cols() < 1) throw malformed("P needs at least two rows and one column");
  const int r = static_cast<int>(P.rows()) - 1;
  DefiningData data;
  data.r = r;
  std::vector<std::vector<std::pair<Integer, Integer>>> leaves(static_cast<std::size_t>(r + 1));
  bool has_source = false, has_sink = false;
  for (Eigen::Index c = 0; c < P.cols(); ++c) {
    const Integer d = P(r, c);
    std::vector<int> support;
    for (int row = 0; row < r; ++row)
      if (P(row, c) != 0) support.push_back(row);
    const std::string name = "column " + std::to_string(c);
    if (support.empty()) {
      if (d == 1 && !has_source) {
        has_source = true;
      } else if (d == -1 && !has_sink) {
        has_sink = true;
      } else if (d == 1 || d == -1) {
        throw Error(ErrorCode::DuplicateColumn, name + " repeats a parabolic column");
      } else {
        throw malformed(name + " has a zero L-block but is not (0,...,0,+-1)");
      }
    } else if (static_cast<int>(support.size()) == r && P(0, c) < 0 &&
               std::all_of(support.begin(), support.end(), [&](int row) { return P(row, c) == P(0, c); })) {
      leaves[0].emplace_back(-P(0, c), d);
    } else if (support.size() == 1 && P(support[0], c) > 0) {
      leaves[static_cast<std::size_t>(support[0] + 1)].emplace_back(P(support[0], c), d);
    } else {
      throw malformed(name + " does not fit the L-block pattern of any leaf");
    }
  }
  for (auto& leaf : leaves) {
    std::stable_sort(leaf.begin(), leaf.end(), [](const auto& a, const auto& b) {
      return Rational(a.second, a.first) > Rational(b.second, b.first);
    });
    std::vector<Integer> l, d;
    for (const auto& [li, di] : leaf) {
      l.push_back(li);
      d.push_back(di);
    }
    data.ls.push_back(std::move(l));
    data.ds.push_back(std::move(d));
  }
  data.source = has_source ? EndType::Parabolic : EndType::Elliptic;
  data.sink = has_sink ? EndType::Parabolic : EndType::Elliptic;
  return validate_defining_data(std::move(data));
}

ClassVector anticanonical_class(const SurfaceContext& ctx) {
  const DefiningData& data = ctx.data;
  const Eigen::Index cols = ctx.P.cols();
  auto leaf_vector = [&](int i) {
    IntVector x = IntVector::Zero(cols);
    for (int j = 0; j < data.leaf_size(i); ++j) x(data.column(i, j)) = data.ls[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return x;
  };
  const ClassVector mu = class_of(ctx.class_group, leaf_vector(0));
  for (int i = 1; i <= data.r; ++i)
    if (!(class_of(ctx.class_group, leaf_vector(i)) == mu))
      throw Error(ErrorCode::Internal, "leaf expressions for mu disagree at leaf " + std::to_string(i));
  IntVector y = IntVector::Constant(cols, Integer(1)) + Integer(1 - data.r) * leaf_vector(0);
  return class_of(ctx.class_group, y);
}

std::optional<Cone> moving_cone(const SurfaceContext& ctx) {
  const Eigen::Index k = ctx.class_group.rank;
  if (k == 0) return std::nullopt;
  std::vector<IntVector> inequalities;
  for (std::size_t drop = 0; drop < ctx.degrees.size(); ++drop) {
    std::vector<IntVector> rays;
    for (std::size_t c = 0; c < ctx.degrees.size(); ++c)
      if (c != drop && !ctx.degrees[c].free.isZero()) rays.push_back(ctx.degrees[c].free);
    if (rays.empty()) return std::nullopt;
    const Cone part = Cone::from_generators(rays, k);
    for (const auto& f : part.facets()) inequalities.push_back(f);
    for (const auto& e : part.equations()) {
      inequalities.push_back(e);
      inequalities.push_back(-e);
    }
  }
  try {
    return Cone::from_inequalities(inequalities, k);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPointed || e.code() == ErrorCode::EmptyInput) return std::nullopt;
    throw;
  }
}

bool fano_check(const SurfaceContext& ctx) {
  if (!ctx.mov_cone || !ctx.mov_cone->full_dimensional()) return false;
  return ctx.mov_cone->contains_in_relative_interior(ctx.minus_k.free.cast<Rational>());
}

std::vector<int> special_kappas(const DefiningData& data) {
  std::vector<int> special;
  for (int kappa = 0; kappa <= data.r; ++kappa) {
    int top = 0, bottom = 0;
    for (int i = 0; i <= data.r; ++i) {
      if (i == kappa) continue;
      if (data.ls[static_cast<std::size_t>(i)].front() > 1) ++top;
      if (data.ls[static_cast<std::size_t>(i)].back() > 1) ++bottom;
    }
    const bool source_ok = data.source == EndType::Parabolic || top <= 1;
    const bool sink_ok = data.sink == EndType::Parabolic || bottom <= 1;
    if (source_ok && sink_ok) special.push_back(kappa);
  }
  return special;
}

int family_dimension(const DefiningData& data) { return std::max(0, data.r - 2); }

SurfaceContext make_context(const DefiningData& data) {
  SurfaceContext ctx;
  ctx.data = data;
  ctx.P = assemble_P(data);
  ctx.class_group = cokernel_presentation(ctx.P);
  for (Eigen::Index c = 0; c < ctx.P.cols(); ++c) {
    IntVector e = IntVector::Zero(ctx.P.cols());
    e(c) = 1;
    ctx.degrees.push_back(class_of(ctx.class_group, e));
  }
  IntVector x0 = IntVector::Zero(ctx.P.cols());
  for (int j = 0; j < data.leaf_size(0); ++j) x0(data.column(0, j)) = data.ls[0][static_cast<std::size_t>(j)];
  ctx.mu = class_of(ctx.class_group, x0);
  ctx.minus_k = anticanonical_class(ctx);
  ctx.mov_cone = moving_cone(ctx);
  ctx.is_fano = fano_check(ctx);
  ctx.special_set = special_kappas(data);
  return ctx;
}

}  // namespace cstar
