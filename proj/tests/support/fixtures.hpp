#ifndef CSTAR_TESTS_FIXTURES_HPP
#define CSTAR_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cstar/types.hpp"

namespace fixtures {

using cstar::IntMatrix;
using cstar::IntVector;
using cstar::Rational;
using cstar::RatPoint;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline std::vector<IntVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(iv(r));
  return out;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix M(m, n);
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (long x : r) M(i, j++) = x;
    ++i;
  }
  return M;
}

inline Rational q(const char* s) { return Rational(s); }

inline RatPoint pt(const char* x, const char* y) { return RatPoint(Rational(x), Rational(y)); }

// The running example: l = ((2,1),(1,1),(2)), d = ((3,-1),(0,-1),(1)).
inline IntMatrix running_P() {
  return im({{-2, -1, 1, 1, 0}, {-2, -1, 0, 0, 2}, {3, -1, 0, -1, 1}});
}

inline IntMatrix running_Pprime() {
  return im({{-2, -1, 1, 1, 0}, {-2, -1, 0, 0, 2}, {3, -1, 0, -1, 1}, {1, 1, 0, 0, 1}});
}

inline IntMatrix reference_degree_matrix() {
  return im({{0, 2, 3, -1, 1}, {1, 2, 1, 3, 2}});
}

inline const char* running_json() {
  return R"({"ls": [[2,1],[1,1],[2]], "ds": [[3,-1],[0,-1],[1]], "source": "elliptic", "sink": "elliptic"})";
}

inline std::vector<RatPoint> B0_reference() {
  return {pt("0", "-1/2"), pt("1", "0"), pt("-1/2", "-1/4"), pt("1/5", "4/5")};
}
inline std::vector<RatPoint> B1_reference() {
  return {pt("0", "1"), pt("1", "0"), pt("-1/2", "1"), pt("1/5", "-2/5")};
}
inline std::vector<RatPoint> B2_reference() {
  return {pt("1/5", "-3/5"), pt("1", "1"), pt("0", "-1/2"), pt("-1/2", "1/4")};
}

inline std::vector<RatPoint> sorted_points(std::vector<RatPoint> v) {
  std::sort(v.begin(), v.end(), [](const RatPoint& a, const RatPoint& b) {
    return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1);
  });
  return v;
}

}  // namespace fixtures

#endif
