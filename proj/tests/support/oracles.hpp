// Brute-force reference computations used only by the tests. None of these
// call into the library code paths they are checked against.
#ifndef CSTAR_TESTS_ORACLES_HPP
#define CSTAR_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "cstar/types.hpp"

namespace oracle {

using cstar::Integer;
using cstar::IntMatrix;
using cstar::IntVector;
using cstar::Rational;
using cstar::RatMatrix;
using cstar::RatPoint;

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Cofactor expansion; fine for the tiny matrices in tests.
inline Integer det_cofactor(const IntMatrix& M) {
  const auto n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Integer s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = M(r, c);
      }
    }
    Integer term = M(0, j) * det_cofactor(minor);
    s += (j % 2 == 0) ? term : Integer(-term);
  }
  return s;
}

// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
// d_k = D_k / D_{k-1}.
inline std::vector<Integer> invariant_factors(const IntMatrix& M) {
  std::vector<Integer> out;
  Integer prev = 1;
  const int m = static_cast<int>(M.rows()), n = static_cast<int>(M.cols());
  for (int k = 1; k <= std::min(m, n); ++k) {
    Integer g = 0;
    for_each_subset(m, k, [&](const std::vector<int>& rows) {
      for_each_subset(n, k, [&](const std::vector<int>& cols) {
        IntMatrix sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = M(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
        g = gcd(g, iabs(det_cofactor(sub)));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Null vector of a (d-1) x d integer matrix of rank d-1 via signed minors.
inline IntVector cross_product_general(const std::vector<IntVector>& rows, Eigen::Index d) {
  IntVector n(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    IntMatrix sub(d - 1, d - 1);
    for (Eigen::Index r = 0; r < d - 1; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < d; ++c) {
        if (c != j) sub(r, cc++) = rows[static_cast<std::size_t>(r)](c);
      }
    }
    Integer m = det_cofactor(sub);
    n(j) = (j % 2 == 0) ? m : Integer(-m);
  }
  Integer g = 0;
  for (Eigen::Index j = 0; j < d; ++j) g = gcd(g, iabs(n(j)));
  if (g != 0) n /= g;
  return n;
}

inline Integer idot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline bool lex(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

// Facets of a full-dimensional pointed cone: every hyperplane through d-1
// generators that supports all generators.
inline std::vector<IntVector> facets_brute_force(const std::vector<IntVector>& gens, Eigen::Index d) {
  std::vector<IntVector> out;
  for_each_subset(static_cast<int>(gens.size()), static_cast<int>(d - 1), [&](const std::vector<int>& idx) {
    std::vector<IntVector> rows;
    for (int i : idx) rows.push_back(gens[static_cast<std::size_t>(i)]);
    IntVector n = cross_product_general(rows, d);
    bool zero = true;
    for (Eigen::Index j = 0; j < d; ++j) zero = zero && n(j) == 0;
    if (zero) return;
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      Integer s = idot(n, g);
      pos = pos && s >= 0;
      neg = neg && s <= 0;
    }
    if (!pos && !neg) return;
    if (!pos) n = -n;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  });
  std::sort(out.begin(), out.end(), lex);
  return out;
}

// Extreme rays of a pointed full-dimensional cone: generators tight on d-1
// independent brute-force facets, primitive and sorted.
inline std::vector<IntVector> extreme_brute_force(const std::vector<IntVector>& gens, Eigen::Index d) {
  auto facets = facets_brute_force(gens, d);
  std::vector<IntVector> out;
  for (auto g : gens) {
    Integer c = 0;
    for (Eigen::Index j = 0; j < d; ++j) c = gcd(c, iabs(g(j)));
    g /= c;
    std::vector<IntVector> tight;
    for (const auto& f : facets)
      if (idot(f, g) == 0) tight.push_back(f);
    RatMatrix T(static_cast<Eigen::Index>(tight.size()), d);
    for (std::size_t i = 0; i < tight.size(); ++i) T.row(static_cast<Eigen::Index>(i)) = tight[i].transpose().cast<Rational>();
    Eigen::Index rk = 0;
    if (!tight.empty()) {
      // Gaussian elimination rank.
      RatMatrix A = T;
      for (Eigen::Index c = 0; c < d && rk < A.rows(); ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index r = rk; r < A.rows(); ++r)
          if (A(r, c) != 0) { p = r; break; }
        if (p < 0) continue;
        A.row(rk).swap(A.row(p));
        for (Eigen::Index r = rk + 1; r < A.rows(); ++r) {
          Rational f = A(r, c) / A(rk, c);
          A.row(r) -= f * A.row(rk);
        }
        ++rk;
      }
    }
    if (rk == d - 1 && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), lex);
  return out;
}

inline Rational shoelace_triangle(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return ((b(0) - a(0)) * (c(1) - a(1)) - (c(0) - a(0)) * (b(1) - a(1))) / 2;
}

}  // namespace oracle

#endif
