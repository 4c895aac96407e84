#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "semimod/error.hpp"

namespace semimod {

using Value = std::int64_t;

namespace detail {

constexpr Value floor_mod(Value x, Value m) {
  const Value r = x % m;
  return r < 0 ? r + m : r;
}

// Inverse of x modulo m for gcd(x, m) = 1, in [0, m-1].
constexpr Value mod_inverse(Value x, Value m) {
  Value old_r = floor_mod(x, m), r = m;
  Value old_s = 1, s = 0;
  while (r != 0) {
    const Value q = old_r / r;
    Value t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return floor_mod(old_s, m);
}

}  // namespace detail

/// Coordinates (a, b) of the value alpha*beta - a*alpha - b*beta.
///
/// Strict gaps of <alpha, beta> have a in [1, beta-1] and b in [1, alpha-1].
/// The axes a = 0 and b = 0 are also admitted; syzygy generators and the
/// path endpoints live there.
struct LatticePoint {
  Value a = 0;
  Value b = 0;

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << '(' << p.a << ',' << p.b << ')';
  }
};

/// Result of comparing two lattice points under the staircase order
/// (a1 <= a2 and b1 >= b2).
enum class Order {
  StrictlyLess,
  WeaklyLess,
  Equal,
  StrictlyGreater,
  WeaklyGreater,
  Incomparable,
};

inline std::string to_string(Order o) {
  switch (o) {
    case Order::StrictlyLess: return "strictly-less";
    case Order::WeaklyLess: return "weakly-less";
    case Order::Equal: return "equal";
    case Order::StrictlyGreater: return "strictly-greater";
    case Order::WeaklyGreater: return "weakly-greater";
    case Order::Incomparable: return "incomparable";
  }
  return "incomparable";
}

/// The numerical semigroup alpha*N + beta*N with 2 <= alpha < beta coprime.
class SemigroupPair {
 public:
  SemigroupPair(Value alpha, Value beta) : alpha_(alpha), beta_(beta) {
    if (alpha < 2) {
      throw InvalidArgument("alpha must be at least 2, got " + std::to_string(alpha));
    }
    if (alpha >= beta) {
      throw InvalidArgument("alpha must be smaller than beta, got " + std::to_string(alpha) +
                            " >= " + std::to_string(beta));
    }
    if (std::gcd(alpha, beta) != 1) {
      throw InvalidArgument("alpha and beta must be coprime, gcd(" + std::to_string(alpha) +
                            "," + std::to_string(beta) +
                            ") = " + std::to_string(std::gcd(alpha, beta)));
    }
    // Semimodule tables and syzygy scans reach a few multiples of alpha*beta.
    if (beta > std::numeric_limits<Value>::max() / 8 / alpha) {
      throw InvalidArgument("alpha*beta overflows the 64-bit value range");
    }
    beta_inverse_ = detail::mod_inverse(beta_, alpha_);
  }

  Value alpha() const noexcept { return alpha_; }
  Value beta() const noexcept { return beta_; }
  Value product() const noexcept { return alpha_ * beta_; }

  // n = x*alpha + y*beta with y the least nonnegative solution of
  // y*beta = n (mod alpha); n is representable iff that y*beta fits under n.
  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    const Value y = detail::floor_mod(detail::floor_mod(n, alpha_) * beta_inverse_, alpha_);
    return n >= y * beta_;
  }

  /// beta^{-1} mod alpha.
  Value beta_inverse() const noexcept { return beta_inverse_; }

  friend bool operator==(const SemigroupPair& l, const SemigroupPair& r) {
    return l.alpha_ == r.alpha_ && l.beta_ == r.beta_;
  }

 private:
  Value alpha_;
  Value beta_;
  Value beta_inverse_ = 0;
};

/// (alpha-1)(beta-1), one past the Frobenius number.
inline Value conductor(const SemigroupPair& s) { return (s.alpha() - 1) * (s.beta() - 1); }

inline std::vector<Value> gaps(const SemigroupPair& s) {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(conductor(s) / 2));
  for (Value n = 1; n < conductor(s); ++n) {
    if (!s.contains(n)) out.push_back(n);
  }
  return out;
}

inline bool is_gap(const SemigroupPair& s, Value n) { return n > 0 && !s.contains(n); }

inline Value point_to_value(const SemigroupPair& s, LatticePoint p) {
  if (p.a < 0 || p.a > s.beta() || p.b < 0 || p.b > s.alpha()) {
    throw InvalidArgument("lattice point (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                          ") outside [0," + std::to_string(s.beta()) + "]x[0," +
                          std::to_string(s.alpha()) + "]");
  }
  return s.product() - p.a * s.alpha() - p.b * s.beta();
}

/// Unique strict-gap coordinates of e.
inline LatticePoint gap_to_point(const SemigroupPair& s, Value e) {
  if (!is_gap(s, e)) {
    throw InvalidArgument(std::to_string(e) + " is not a gap of <" + std::to_string(s.alpha()) +
                          "," + std::to_string(s.beta()) + ">");
  }
  // alpha*beta - e = a*alpha + b*beta  =>  b = -e * beta^{-1} (mod alpha)
  const Value b = detail::floor_mod(-detail::floor_mod(e, s.alpha()) * s.beta_inverse(), s.alpha());
  const Value a = (s.product() - e - b * s.beta()) / s.alpha();
  return {a, b};
}

inline bool is_strict_gap_point(const SemigroupPair& s, LatticePoint p) {
  return p.a >= 1 && p.a <= s.beta() - 1 && p.b >= 1 && p.b <= s.alpha() - 1 &&
         point_to_value(s, p) > 0;
}

/// Coordinates of v in the axis-extended coding, if it has one.
///
/// 0 maps to the path start (0, alpha), which is where the normalized
/// generator 0 sits. Gaps map to their strict coordinates. Other values in
/// (0, alpha*beta] have a coding only when alpha*beta - v is in the
/// semigroup; it is then unique and lies on an axis.
inline std::optional<LatticePoint> point_of(const SemigroupPair& s, Value v) {
  if (v == 0) return LatticePoint{0, s.alpha()};
  if (v < 0 || v > s.product()) return std::nullopt;
  if (is_gap(s, v)) return gap_to_point(s, v);
  const Value rest = s.product() - v;
  if (!s.contains(rest)) return std::nullopt;
  const Value b = detail::floor_mod(detail::floor_mod(rest, s.alpha()) * s.beta_inverse(), s.alpha());
  return LatticePoint{(rest - b * s.beta()) / s.alpha(), b};
}

constexpr Order precede(LatticePoint p, LatticePoint q) noexcept {
  if (p == q) return Order::Equal;
  if (p.a < q.a && p.b > q.b) return Order::StrictlyLess;
  if (p.a <= q.a && p.b >= q.b) return Order::WeaklyLess;
  if (p.a > q.a && p.b < q.b) return Order::StrictlyGreater;
  if (p.a >= q.a && p.b <= q.b) return Order::WeaklyGreater;
  return Order::Incomparable;
}

inline Order precede(const SemigroupPair& s, Value e1, Value e2) {
  const auto p = point_of(s, e1);
  const auto q = point_of(s, e2);
  if (!p || !q) {
    throw InvalidArgument("cannot order " + std::to_string(!p ? e1 : e2) +
                          ": no lattice coordinates");
  }
  return precede(*p, *q);
}

}  // namespace semimod
