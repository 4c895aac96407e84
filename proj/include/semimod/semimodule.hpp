#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "semimod/error.hpp"
#include "semimod/semigroup.hpp"

namespace semimod {

/// Shifts every element by the minimum so that the result contains 0.
inline std::vector<Value> normalize(std::span<const Value> gens) {
  if (gens.empty()) throw InvalidArgument("generator list is empty");
  const Value lo = *std::min_element(gens.begin(), gens.end());
  std::vector<Value> out(gens.begin(), gens.end());
  for (Value& g : out) g -= lo;
  return out;
}

/// Lattice point of a generator of a normalized semimodule: 0 sits at the
/// path start (0, alpha), every other minimal generator is a gap.
inline LatticePoint generator_point(const SemigroupPair& s, Value g) {
  return g == 0 ? LatticePoint{0, s.alpha()} : gap_to_point(s, g);
}

/// Sorts a lean set containing 0 by the staircase order: 0 first, then
/// increasing a (equivalently decreasing b).
inline void sort_by_staircase(const SemigroupPair& s, std::vector<Value>& lean) {
  std::sort(lean.begin(), lean.end(), [&](Value x, Value y) {
    const LatticePoint p = generator_point(s, x);
    const LatticePoint q = generator_point(s, y);
    return p.a != q.a ? p.a < q.a : p.b > q.b;
  });
}

/// True iff no pairwise difference lies in the semigroup.
inline bool is_lean(const SemigroupPair& s, std::span<const Value> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Value d = set[i] > set[j] ? set[i] - set[j] : set[j] - set[i];
      if (s.contains(d)) return false;
    }
  }
  return true;
}

/// Minimal generating set of the semimodule spanned by a normalized list.
inline std::vector<Value> minimalize(const SemigroupPair& s, std::span<const Value> gens) {
  std::vector<Value> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != 0) {
    throw InvalidArgument("minimalize expects a normalized generator list containing 0");
  }

  // Ascending scan: g is redundant iff some smaller kept generator reaches it.
  std::vector<Value> kept;
  for (Value g : sorted) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](Value k) { return s.contains(g - k); });
    if (!covered) kept.push_back(g);
  }
  sort_by_staircase(s, kept);
  return kept;
}

/// Ap(D, s): the least element of D in each residue class mod s.
/// representatives[r] is congruent to r.
struct AperySet {
  Value modulus = 0;
  std::vector<Value> representatives;

  Value max() const { return *std::max_element(representatives.begin(), representatives.end()); }
};

/// A normalized semimodule over <alpha, beta>, stored as its minimal
/// generators in staircase order plus a membership table over [0, bound).
/// Every n >= bound is a member.
class Semimodule {
 public:
  Semimodule(SemigroupPair s, std::span<const Value> gens) : semigroup_(s) {
    if (gens.empty()) throw InvalidArgument("generator list is empty");
    for (Value g : gens) {
      if (g < 0) throw InvalidArgument("generators must be nonnegative, got " + std::to_string(g));
    }
    generators_ = minimalize(semigroup_, normalize(gens));
    points_.reserve(generators_.size());
    for (Value g : generators_) points_.push_back(generator_point(semigroup_, g));

    const Value top = *std::max_element(generators_.begin(), generators_.end());
    bound_ = conductor(semigroup_) + top + 1;
    table_.assign(static_cast<std::size_t>(bound_), false);
    for (Value g : generators_) table_[static_cast<std::size_t>(g)] = true;
    const Value a = semigroup_.alpha(), b = semigroup_.beta();
    for (Value n = 0; n < bound_; ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (!table_[i] && ((n >= a && table_[i - static_cast<std::size_t>(a)]) ||
                         (n >= b && table_[i - static_cast<std::size_t>(b)]))) {
        table_[i] = true;
      }
    }
  }

  Semimodule(SemigroupPair s, std::initializer_list<Value> gens)
      : Semimodule(s, std::span<const Value>(gens.begin(), gens.size())) {}

  const SemigroupPair& semigroup() const noexcept { return semigroup_; }
  /// Minimal generators g_0 = 0, g_1, ..., g_n in staircase order.
  const std::vector<Value>& generators() const noexcept { return generators_; }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  /// Number of nonzero minimal generators.
  std::size_t rank() const noexcept { return generators_.size() - 1; }
  bool is_principal() const noexcept { return generators_.size() == 1; }
  Value bound() const noexcept { return bound_; }

  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    if (n >= bound_) return true;
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  SemigroupPair semigroup_;
  std::vector<Value> generators_;
  std::vector<LatticePoint> points_;
  Value bound_ = 0;
  std::vector<bool> table_;
};

/// All n >= 0 outside the semimodule, ascending.
inline std::vector<Value> gaps(const Semimodule& d) {
  std::vector<Value> out;
  for (Value n = 0; n < d.bound(); ++n) {
    if (!d.contains(n)) out.push_back(n);
  }
  return out;
}

/// max(N \ D) + 1 by direct scan, 0 when D = N.
inline Value conductor_bruteforce(const Semimodule& d) {
  for (Value n = d.bound() - 1; n >= 0; --n) {
    if (!d.contains(n)) return n + 1;
  }
  return 0;
}

inline AperySet apery(const Semimodule& d, Value s) {
  if (s <= 0 || !d.semigroup().contains(s)) {
    throw InvalidArgument("Apery modulus must be a nonzero semigroup element, got " +
                          std::to_string(s));
  }
  AperySet out{s, std::vector<Value>(static_cast<std::size_t>(s), -1)};
  Value missing = s;
  // Every n >= bound is a member, so all classes fill by bound + s.
  for (Value n = 0; missing > 0; ++n) {
    auto& slot = out.representatives[static_cast<std::size_t>(n % s)];
    if (slot < 0 && d.contains(n)) {
      slot = n;
      --missing;
    }
  }
  return out;
}

/// max Ap(D, s) - s + 1.
inline Value conductor_via_apery(const Semimodule& d, Value s) {
  return apery(d, s).max() - s + 1;
}

}  // namespace semimod
