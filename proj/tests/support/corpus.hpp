// Deterministic synthetic surfaces for property tests.
#ifndef CSTAR_TESTS_CORPUS_HPP
#define CSTAR_TESTS_CORPUS_HPP

#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cstar/surface.hpp"

namespace corpus {

using cstar::DefiningData;
using cstar::EndType;
using cstar::Integer;

// Some 0 <= mu <= r with l_ij = 1 for every i other than kappa and mu.
inline bool has_anticanonical_fiber(const DefiningData& data, int kappa) {
  for (int mu = 0; mu <= data.r; ++mu) {
    bool ok = true;
    for (int i = 0; i <= data.r; ++i)
      if (i != kappa && i != mu)
        for (const auto& l : data.ls[static_cast<std::size_t>(i)]) ok = ok && l == 1;
    if (ok) return true;
  }
  return false;
}

// Valid Fano inputs whose special kappa all have anticanonical toric fibers.
inline std::optional<cstar::SurfaceContext> try_context(DefiningData raw) {
  try {
    auto ctx = cstar::make_context(cstar::validate_defining_data(std::move(raw)));
    if (!ctx.is_fano) return std::nullopt;
    for (int kappa : ctx.special_set)
      if (!has_anticanonical_fiber(ctx.data, kappa)) return std::nullopt;
    return ctx;
  } catch (const cstar::Error&) {
    return std::nullopt;
  }
}

// Leaves of size one or two, small exponents and slopes, both ends elliptic.
inline DefiningData random_data(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> size(1, 2), ell(1, 3), dee(-4, 4);
  DefiningData raw;
  for (int i = 0; i <= r; ++i) {
    const int n = size(rng);
    std::vector<Integer> ls, ds;
    for (int j = 0; j < n; ++j) {
      ls.emplace_back(ell(rng));
      ds.emplace_back(dee(rng));
    }
    // Decreasing slope within the leaf.
    if (n == 2 && ds[0] * ls[1] < ds[1] * ls[0]) {
      std::swap(ls[0], ls[1]);
      std::swap(ds[0], ds[1]);
    }
    raw.ls.push_back(ls);
    raw.ds.push_back(ds);
  }
  raw.r = r;
  return raw;
}

// Every leaf reads (l, l) with slopes (d, -d); the surface is isomorphic to
// its mirror image under swapping source and sink.
inline DefiningData mirror_data(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> ell(1, 3), dee(1, 3);
  DefiningData raw;
  for (int i = 0; i <= r; ++i) {
    int l = ell(rng), d = dee(rng);
    while (std::gcd(l, d) != 1) d = dee(rng);
    raw.ls.push_back({Integer(l), Integer(l)});
    raw.ds.push_back({Integer(d), Integer(-d)});
  }
  raw.r = r;
  return raw;
}

struct Entry {
  std::string name;
  cstar::SurfaceContext ctx;
  bool mirror = false;
};

// At least `random_count` random and `mirror_count` mirror-symmetric Fano
// surfaces with r in {2, 3}.
inline std::vector<Entry> fano_corpus(int random_count = 16, int mirror_count = 6, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<Entry> out;
  int found = 0;
  for (int attempt = 0; found < random_count && attempt < 100000; ++attempt) {
    if (auto ctx = try_context(random_data(rng, 2 + attempt % 2)))
      out.push_back({"random-" + std::to_string(found++), *ctx, false});
  }
  found = 0;
  for (int attempt = 0; found < mirror_count && attempt < 100000; ++attempt) {
    if (auto ctx = try_context(mirror_data(rng, 2 + attempt % 2)))
      out.push_back({"mirror-" + std::to_string(found++), *ctx, true});
  }
  return out;
}

}  // namespace corpus

#endif
