#pragma once

#include <algorithm>
#include <vector>

#include "semimod/semigroup.hpp"
#include "semimod/semimodule.hpp"
#include "semimod/syzygy.hpp"

namespace semimod {

/// Minimal generators of the dual {z : z + D ⊆ G}. Not normalized.
///
/// Generators are listed in reverse staircase order of the syzygy they
/// correspond to under x -> alpha*beta - x.
struct DualSet {
  std::vector<Value> generators;
  Value min_value = 0;
};

namespace detail {

// Reverse staircase position of x = a*alpha + b*beta (0 <= b < alpha), which
// is the point of the syzygy alpha*beta - x: larger a first.
inline void sort_dual(const SemigroupPair& s, std::vector<Value>& xs) {
  auto a_of = [&](Value x) {
    const Value b = floor_mod(floor_mod(x, s.alpha()) * s.beta_inverse(), s.alpha());
    return (x - b * s.beta()) / s.alpha();
  };
  std::sort(xs.begin(), xs.end(), [&](Value l, Value r) {
    const Value al = a_of(l), ar = a_of(r);
    return al != ar ? al > ar : l < r;
  });
}

inline DualSet make_dual_set(std::vector<Value> gens) {
  const Value lo = *std::min_element(gens.begin(), gens.end());
  return {std::move(gens), lo};
}

}  // namespace detail

/// Scans z in [0, alpha*beta]. Since 0 is in D every dual element lies in G,
/// and z + d is automatically in G once d >= c(G), so only d < c(G) matter.
inline DualSet dual_bruteforce(const Semimodule& d) {
  const auto& s = d.semigroup();
  const Value top = s.product();
  std::vector<Value> low_members;
  for (Value n = 0; n < conductor(s); ++n) {
    if (d.contains(n)) low_members.push_back(n);
  }

  std::vector<bool> in_dual(static_cast<std::size_t>(top + 1), false);
  for (Value z = 0; z <= top; ++z) {
    in_dual[static_cast<std::size_t>(z)] = std::all_of(
        low_members.begin(), low_members.end(), [&](Value m) { return s.contains(z + m); });
  }
  auto in = [&](Value z) { return z >= 0 && in_dual[static_cast<std::size_t>(z)]; };

  std::vector<Value> minimal;
  for (Value z = 0; z <= top; ++z) {
    if (in(z) && !in(z - s.alpha()) && !in(z - s.beta())) minimal.push_back(z);
  }
  detail::sort_dual(s, minimal);
  return detail::make_dual_set(std::move(minimal));
}

/// Dual generators as alpha*beta - h over the syzygy generators h.
inline DualSet dual_from_syzygy(const Semimodule& d) {
  const SyzygySet j = syzygy_generators(d);
  std::vector<Value> gens;
  gens.reserve(j.generators.size());
  for (auto it = j.generators.rbegin(); it != j.generators.rend(); ++it) {
    gens.push_back(d.semigroup().product() - *it);
  }
  return detail::make_dual_set(std::move(gens));
}

/// c(D) = alpha*beta - min(dual generators) - alpha - beta + 1.
inline Value conductor_from_dual(const SemigroupPair& s, const DualSet& dual) {
  return s.product() - dual.min_value - s.alpha() - s.beta() + 1;
}

/// Conductor through the brute-force dual, independent of the syzygy route.
inline Value conductor_dual(const Semimodule& d) {
  return conductor_from_dual(d.semigroup(), dual_bruteforce(d));
}

}  // namespace semimod
