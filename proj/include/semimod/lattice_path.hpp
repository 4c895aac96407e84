#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semimod/error.hpp"
#include "semimod/semigroup.hpp"
#include "semimod/semimodule.hpp"

namespace semimod {

/// A staircase from (0, alpha) to (beta, 0) taking unit steps east (+1 in a)
/// or south (-1 in b), never rising above the segment joining its endpoints.
///
/// `vertices` holds the corners only: start, every turn, end. ES-turns (east
/// then south) mark the nonzero generators of the semimodule; SE-turns
/// (south then east) mark its syzygy generators.
struct LatticePath {
  std::vector<LatticePoint> vertices;
  std::vector<LatticePoint> es_turns;
  std::vector<LatticePoint> se_turns;

  /// Unit step string over {S, E}.
  std::string steps() const {
    std::string out;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      const auto& p = vertices[i - 1];
      const auto& q = vertices[i];
      if (q.a > p.a) out.append(static_cast<std::size_t>(q.a - p.a), 'E');
      else out.append(static_cast<std::size_t>(p.b - q.b), 'S');
    }
    return out;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Builds a path from any vertex sequence with axis-aligned east/south
/// moves; collinear intermediate vertices are merged.
inline LatticePath path_from_vertices(const SemigroupPair& s, std::span<const LatticePoint> pts) {
  if (pts.size() < 2) throw InvalidArgument("a lattice path needs at least two vertices");
  if (pts.front() != LatticePoint{0, s.alpha()} || pts.back() != LatticePoint{s.beta(), 0}) {
    throw InvalidArgument("a lattice path runs from (0,alpha) to (beta,0)");
  }

  enum class Dir { None, East, South };
  LatticePath path;
  path.vertices.push_back(pts.front());
  Dir last = Dir::None;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto& p = pts[i - 1];
    const auto& q = pts[i];
    Dir dir = Dir::None;
    if (q.b == p.b && q.a > p.a) dir = Dir::East;
    else if (q.a == p.a && q.b < p.b) dir = Dir::South;
    if (dir == Dir::None) {
      throw InvalidArgument("path segments must move strictly east or south");
    }
    if (dir == last) {
      path.vertices.back() = q;
    } else {
      if (last == Dir::East) path.es_turns.push_back(p);
      if (last == Dir::South) path.se_turns.push_back(p);
      path.vertices.push_back(q);
    }
    last = dir;
  }
  // Values are monotone along each segment, so corners are the extremes.
  for (const auto& v : path.vertices) {
    if (point_to_value(s, v) < 0) {
      throw InvalidArgument("lattice path crosses the diagonal");
    }
  }
  return path;
}

inline LatticePath path_from_steps(const SemigroupPair& s, std::string_view steps) {
  std::vector<LatticePoint> pts{{0, s.alpha()}};
  for (char c : steps) {
    LatticePoint p = pts.back();
    if (c == 'E') ++p.a;
    else if (c == 'S') --p.b;
    else throw InvalidArgument(std::string("unknown step '") + c + "'");
    if (p.a > s.beta() || p.b < 0) throw InvalidArgument("step leaves the lattice rectangle");
    pts.push_back(p);
  }
  return path_from_vertices(s, pts);
}

/// The staircase whose ES-turns are the nonzero elements of a lean set.
inline LatticePath lean_to_path(const SemigroupPair& s, std::span<const Value> lean) {
  std::vector<Value> gens(lean.begin(), lean.end());
  if (std::find(gens.begin(), gens.end(), Value{0}) == gens.end()) {
    throw InvalidArgument("lean set must contain 0");
  }
  if (!is_lean(s, gens)) throw InvalidArgument("generator set is not lean");
  sort_by_staircase(s, gens);

  std::vector<LatticePoint> pts{{0, s.alpha()}};
  for (std::size_t k = 1; k < gens.size(); ++k) {
    const LatticePoint g = gap_to_point(s, gens[k]);
    pts.push_back({pts.back().a, g.b});
    pts.push_back(g);
  }
  pts.push_back({pts.back().a, 0});
  pts.push_back({s.beta(), 0});
  return path_from_vertices(s, pts);
}

struct PathReading {
  std::vector<Value> generators;
  std::vector<Value> syzygies;
};

/// Reads the minimal generators (0 plus the ES-turn values) and the syzygy
/// generators (SE-turn values) off a path.
inline PathReading path_to_semimodule(const SemigroupPair& s, const LatticePath& path) {
  const LatticePath checked = path_from_vertices(s, path.vertices);
  PathReading out;
  out.generators.push_back(0);
  for (const auto& p : checked.es_turns) out.generators.push_back(point_to_value(s, p));
  for (const auto& p : checked.se_turns) out.syzygies.push_back(point_to_value(s, p));
  return out;
}

/// binomial(alpha+beta, alpha) / (alpha+beta): the number of staircases
/// below the diagonal for coprime alpha, beta.
inline Value rational_catalan(const SemigroupPair& s) {
  const Value n = s.alpha() + s.beta();
  const Value k = s.alpha();
  unsigned __int128 c = 1;
  for (Value i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<Value>(c / static_cast<unsigned>(n));
}

/// Visits every lean set of <alpha, beta> exactly once, in staircase order,
/// ordered lexicographically by step string with S before E.
///
/// Depth-first over step strings; a step is taken only if the new corner
/// stays on or below the diagonal, and every such prefix can be completed
/// (go south to b = 0, then east), so there are no dead branches.
template <typename Visitor>
void for_each_lean_set(const SemigroupPair& s, Visitor&& visit) {
  const Value alpha = s.alpha(), beta = s.beta();
  std::vector<Value> lean{0};

  // prev_east: whether the step into (a, b) was east, so that a south step
  // out of it makes (a, b) an ES-turn.
  auto walk = [&](auto&& self, Value a, Value b, bool prev_east) -> void {
    if (a == beta && b == 0) {
      visit(std::as_const(lean));
      return;
    }
    if (b > 0) {
      const bool turn = prev_east;
      if (turn) lean.push_back(alpha * beta - a * alpha - b * beta);
      self(self, a, b - 1, false);
      if (turn) lean.pop_back();
    }
    if (a < beta && alpha * beta - (a + 1) * alpha - b * beta >= 0) {
      self(self, a + 1, b, true);
    }
  };
  walk(walk, 0, alpha, false);
}

inline std::vector<std::vector<Value>> enumerate_semimodules(const SemigroupPair& s) {
  std::vector<std::vector<Value>> out;
  for_each_lean_set(s, [&](const std::vector<Value>& lean) { out.push_back(lean); });
  return out;
}

}  // namespace semimod
