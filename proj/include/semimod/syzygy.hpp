#pragma once

#include <algorithm>
#include <vector>

#include "semimod/error.hpp"
#include "semimod/semigroup.hpp"
#include "semimod/semimodule.hpp"

namespace semimod {

/// Minimal generators h_0, ..., h_n of the syzygy module in staircase order,
/// together with their lattice points and the largest one, M.
struct SyzygySet {
  std::vector<Value> generators;
  std::vector<LatticePoint> points;
  Value max_value = 0;
  LatticePoint max_point;
};

namespace detail {

inline SyzygySet make_syzygy_set(std::vector<Value> gens, std::vector<LatticePoint> pts) {
  SyzygySet out{std::move(gens), std::move(pts), 0, {}};
  const auto it = std::max_element(out.generators.begin(), out.generators.end());
  out.max_value = *it;
  out.max_point = out.points[static_cast<std::size_t>(it - out.generators.begin())];
  return out;
}

}  // namespace detail

/// Syzygy generators read off the staircase: between consecutive generator
/// points (a_k, b_k) and (a_{k+1}, b_{k+1}) the path turns at (a_k, b_{k+1}),
/// and it leaves the last generator through (a_n, 0). A principal semimodule
/// has the single turn (0, 0), i.e. h_0 = alpha*beta.
inline SyzygySet syzygy_generators(const Semimodule& d) {
  const auto& s = d.semigroup();
  const auto& gp = d.points();
  std::vector<LatticePoint> pts;
  pts.reserve(gp.size());
  for (std::size_t k = 0; k + 1 < gp.size(); ++k) pts.push_back({gp[k].a, gp[k + 1].b});
  pts.push_back({gp.back().a, 0});

  std::vector<Value> gens;
  gens.reserve(pts.size());
  for (const auto& p : pts) gens.push_back(point_to_value(s, p));
  return detail::make_syzygy_set(std::move(gens), std::move(pts));
}

/// Materializes the union of pairwise intersections (G + g_i) ∩ (G + g_j)
/// and extracts its minimal generators. Principal semimodules have no pairs
/// and raise DegenerateSyzygy.
inline SyzygySet syzygy_bruteforce(const Semimodule& d) {
  if (d.is_principal()) {
    throw DegenerateSyzygy("principal semimodule: the pairwise-intersection syzygy is empty");
  }
  const auto& s = d.semigroup();
  const auto& gens = d.generators();
  const Value limit = d.bound() + s.product();

  std::vector<bool> member(static_cast<std::size_t>(limit), false);
  for (Value x = 0; x < limit; ++x) {
    int hits = 0;
    for (Value g : gens) {
      if (s.contains(x - g) && ++hits == 2) break;
    }
    member[static_cast<std::size_t>(x)] = hits >= 2;
  }
  auto in = [&](Value x) { return x >= 0 && member[static_cast<std::size_t>(x)]; };

  std::vector<Value> minimal;
  for (Value x = 0; x < limit; ++x) {
    if (in(x) && !in(x - s.alpha()) && !in(x - s.beta())) minimal.push_back(x);
  }

  std::vector<LatticePoint> pts;
  pts.reserve(minimal.size());
  for (Value h : minimal) {
    const auto p = point_of(s, h);
    if (!p) {
      throw InternalInconsistency("syzygy generator " + std::to_string(h) +
                                  " has no lattice coordinates");
    }
    pts.push_back(*p);
  }
  // Sort both arrays by staircase order of the points.
  std::vector<std::size_t> idx(minimal.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) {
    return pts[l].a != pts[r].a ? pts[l].a < pts[r].a : pts[l].b > pts[r].b;
  });
  std::vector<Value> sorted_gens;
  std::vector<LatticePoint> sorted_pts;
  for (std::size_t i : idx) {
    sorted_gens.push_back(minimal[i]);
    sorted_pts.push_back(pts[i]);
  }
  return detail::make_syzygy_set(std::move(sorted_gens), std::move(sorted_pts));
}

/// Checks the congruence characterization of the syzygy generators:
///   h_k = g_k (mod beta),     h_k > g_k       for k = 0..n
///   h_k = g_{k+1} (mod alpha), h_k > g_{k+1}  for k = 0..n-1
///   h_n = 0 (mod alpha), h_n >= 0
///   h_0, h_n <= alpha*beta, and h_1..h_{n-1} are gaps.
inline bool check_syzygy_congruences(const Semimodule& d, const SyzygySet& j) {
  const auto& s = d.semigroup();
  const auto& g = d.generators();
  const auto& h = j.generators;
  if (h.size() != g.size()) return false;
  const std::size_t n = g.size() - 1;
  const Value a = s.alpha(), b = s.beta();

  for (std::size_t k = 0; k <= n; ++k) {
    if (detail::floor_mod(h[k] - g[k], b) != 0 || h[k] <= g[k]) return false;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (detail::floor_mod(h[k] - g[k + 1], a) != 0 || h[k] <= g[k + 1]) return false;
  }
  if (detail::floor_mod(h[n], a) != 0 || h[n] < 0) return false;
  if (h[0] > s.product() || h[n] > s.product()) return false;
  for (std::size_t k = 1; k < n; ++k) {
    if (!is_gap(s, h[k])) return false;
  }
  return true;
}

/// h - alpha - beta lies outside the semimodule for every syzygy generator h.
inline bool check_lemma_aux(const Semimodule& d, const SyzygySet& j) {
  const auto& s = d.semigroup();
  return std::none_of(j.generators.begin(), j.generators.end(),
                      [&](Value h) { return d.contains(h - s.alpha() - s.beta()); });
}

struct SyzygyConductor {
  Value conductor = 0;
  Value max_syzygy = 0;
  LatticePoint point;
};

/// c(D) = M - alpha - beta + 1 = c(G) - m1*alpha - m2*beta, where M is the
/// largest syzygy generator at lattice point (m1, m2).
inline SyzygyConductor conductor_syzygy(const Semimodule& d) {
  const auto& s = d.semigroup();
  const SyzygySet j = syzygy_generators(d);
  const Value from_max = j.max_value - s.alpha() - s.beta() + 1;
  const Value from_point =
      conductor(s) - j.max_point.a * s.alpha() - j.max_point.b * s.beta();
  if (from_max != from_point) {
    throw InternalInconsistency("conductor forms disagree: " + std::to_string(from_max) +
                                " vs " + std::to_string(from_point));
  }
  return {from_max, j.max_value, j.max_point};
}

}  // namespace semimod
