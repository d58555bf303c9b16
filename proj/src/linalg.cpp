#include "cstar/linalg.hpp"

#include <algorithm>

namespace cstar {

namespace {

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

IntMatrix identity(Eigen::Index n) {
  IntMatrix I = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

// Position of the entry of smallest absolute value in the block starting
// at (t, t), or (-1, -1) when the block is zero.
std::pair<Eigen::Index, Eigen::Index> smallest_entry(const IntMatrix& S, Eigen::Index t) {
  std::pair<Eigen::Index, Eigen::Index> best{-1, -1};
  Integer best_abs = 0;
  for (Eigen::Index i = t; i < S.rows(); ++i) {
    for (Eigen::Index j = t; j < S.cols(); ++j) {
      if (S(i, j) == 0) continue;
      Integer a = abs_value(S(i, j));
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

}  // namespace

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < std::min(S.rows(), S.cols()); ++i) {
    if (S(i, i) != 0) out.push_back(S(i, i));
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& M) {
  const Eigen::Index m = M.rows();
  const Eigen::Index n = M.cols();
  SmithForm f{M, identity(m), identity(n)};
  IntMatrix& S = f.S;
  IntMatrix& U = f.U;
  IntMatrix& V = f.V;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    auto [pi, pj] = smallest_entry(S, t);
    if (pi < 0) break;
    for (;;) {
      if (pi != t) {
        S.row(t).swap(S.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        S.col(t).swap(S.col(pj));
        V.col(t).swap(V.col(pj));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = floor_div(S(i, t), S(t, t));
        S.row(i) -= q * S.row(t);
        U.row(i) -= q * U.row(t);
        if (S(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = floor_div(S(t, j), S(t, t));
        S.col(j) -= q * S.col(t);
        V.col(j) -= q * V.col(t);
        if (S(t, j) != 0) clean = false;
      }
      if (clean) {
        // Enforce the divisor chain: fold a non-divisible row into row t.
        Eigen::Index bad = -1;
        for (Eigen::Index i = t + 1; i < m && bad < 0; ++i) {
          for (Eigen::Index j = t + 1; j < n; ++j) {
            if (S(i, j) % S(t, t) != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad < 0) break;
        S.row(t) += S.row(bad);
        U.row(t) += U.row(bad);
      }
      // Continue with the smallest entry in row t / column t.
      pi = t;
      pj = t;
      Integer best = abs_value(S(t, t));
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (S(i, t) != 0 && abs_value(S(i, t)) < best) {
          best = abs_value(S(i, t));
          pi = i;
          pj = t;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (S(t, j) != 0 && abs_value(S(t, j)) < best) {
          best = abs_value(S(t, j));
          pi = t;
          pj = j;
        }
      }
    }
    if (S(t, t) < 0) {
      S.row(t) *= -1;
      U.row(t) *= -1;
    }
  }
  return f;
}

HermiteForm hermite_normal_form(const IntMatrix& M) {
  const Eigen::Index m = M.rows();
  const Eigen::Index n = M.cols();
  HermiteForm f{M, identity(m), 0};
  IntMatrix& H = f.H;
  IntMatrix& T = f.T;
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < m; ++i) {
        if (H(i, j) != 0 && (piv < 0 || abs_value(H(i, j)) < abs_value(H(piv, j)))) piv = i;
      }
      if (piv < 0) break;
      if (piv != r) {
        H.row(r).swap(H.row(piv));
        T.row(r).swap(T.row(piv));
      }
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        Integer q = floor_div(H(i, j), H(r, j));
        H.row(i) -= q * H.row(r);
        T.row(i) -= q * T.row(r);
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.row(r) *= -1;
      T.row(r) *= -1;
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, j), H(r, j));
      if (q != 0) {
        H.row(i) -= q * H.row(r);
        T.row(i) -= q * T.row(r);
      }
    }
    ++r;
  }
  f.rank = r;
  return f;
}

IntMatrix row_lattice_basis(const IntMatrix& M) {
  HermiteForm f = hermite_normal_form(M);
  return f.H.topRows(f.rank);
}

AbelianPresentation cokernel_presentation(const IntMatrix& P) {
  if (rank(P) != P.rows()) {
    throw Error(ErrorCode::RankDeficient, "rows of P are rationally dependent");
  }
  const Eigen::Index a = P.rows();
  const Eigen::Index c = P.cols();
  SmithForm snf = smith_normal_form(IntMatrix(P.transpose()));

  AbelianPresentation K;
  K.rank = c - a;
  for (Eigen::Index i = 0; i < a; ++i) {
    const Integer& d = snf.S(i, i);
    if (d > 1) {
      K.torsion_invariants.push_back(d);
      IntRowVector row = snf.U.row(i);
      for (Eigen::Index j = 0; j < c; ++j) {
        row(j) %= d;
        if (row(j) < 0) row(j) += d;
      }
      K.torsion_projection.emplace_back(row, d);
    }
  }
  K.free_projection = row_lattice_basis(snf.U.bottomRows(K.rank));
  return K;
}

ClassVector class_of(const AbelianPresentation& K, const IntVector& x) {
  ClassVector w;
  w.free = K.free_projection * x;
  w.torsion.resize(static_cast<Eigen::Index>(K.torsion_projection.size()));
  for (std::size_t t = 0; t < K.torsion_projection.size(); ++t) {
    const auto& [row, modulus] = K.torsion_projection[t];
    Integer v = (row * x)(0) % modulus;
    if (v < 0) v += modulus;
    w.torsion(static_cast<Eigen::Index>(t)) = v;
  }
  return w;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs_value(v(i)));
  return g;
}

IntVector primitivize(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  IntVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

std::optional<IntVector> integral_solve(const IntMatrix& A, const IntVector& b) {
  SmithForm snf = smith_normal_form(A);
  IntVector c = snf.U * b;
  IntVector y = IntVector::Zero(A.cols());
  const Eigen::Index diag = std::min(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const Integer d = i < diag ? snf.S(i, i) : Integer(0);
    if (d == 0) {
      if (c(i) != 0) return std::nullopt;
      continue;
    }
    if (c(i) % d != 0) return std::nullopt;
    y(i) = c(i) / d;
  }
  return IntVector(snf.V * y);
}

EchelonForm reduced_row_echelon(const RatMatrix& M) {
  EchelonForm e{M, {}};
  RatMatrix& R = e.R;
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < R.cols() && r < R.rows(); ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < R.rows(); ++i) {
      if (R(i, j) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    R.row(r).swap(R.row(piv));
    R.row(r) /= Rational(R(r, j));
    for (Eigen::Index i = 0; i < R.rows(); ++i) {
      if (i != r && R(i, j) != 0) R.row(i) -= Rational(R(i, j)) * R.row(r);
    }
    e.pivots.push_back(j);
    ++r;
  }
  return e;
}

IntMatrix integer_kernel(const RatMatrix& M) {
  EchelonForm e = reduced_row_echelon(M);
  std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols()), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<IntVector> basis;
  for (Eigen::Index f = 0; f < M.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector v = RatVector::Zero(M.cols());
    v(f) = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      v(e.pivots[k]) = -e.R(static_cast<Eigen::Index>(k), f);
    }
    basis.push_back(primitive_integer_vector(v));
  }
  IntMatrix K(M.cols(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) K.col(static_cast<Eigen::Index>(k)) = basis[k];
  return K;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::Internal, "determinant of a non-square matrix");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Integer sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (A(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      A.row(k).swap(A.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      }
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntVector primitive_integer_vector(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(denominator(v(i))));
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i)) * (l / denominator(v(i)));
  return primitivize(out);
}

}  // namespace cstar
