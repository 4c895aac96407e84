#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "semimod/error.hpp"
#include "semimod/lattice_path.hpp"
#include "semimod/semigroup.hpp"

namespace semimod {

enum class Format { Ascii, Svg, Tikz };

inline Format parse_format(std::string_view name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "svg") return Format::Svg;
  if (name == "tikz") return Format::Tikz;
  throw InvalidArgument("unknown render format '" + std::string(name) +
                        "' (expected ascii, svg or tikz)");
}

namespace detail {

inline bool contains_point(const std::vector<LatticePoint>& pts, LatticePoint p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

inline std::string join_values(const SemigroupPair& s, const std::vector<LatticePoint>& pts,
                               std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(point_to_value(s, pts[i]));
  }
  return out;
}

// Bracketed generator list [0,g1,...] from the ES-turns.
inline std::string generator_list(const SemigroupPair& s, const LatticePath& path) {
  std::string out = "[0";
  for (const auto& p : path.es_turns) out += "," + std::to_string(point_to_value(s, p));
  return out + "]";
}

inline std::string syzygy_list(const SemigroupPair& s, const LatticePath& path) {
  return "[" + join_values(s, path.se_turns, ",") + "]";
}

// The SE-turn of largest value; drawn larger, as it carries the conductor.
inline LatticePoint max_se_turn(const SemigroupPair& s, const LatticePath& path) {
  return *std::max_element(path.se_turns.begin(), path.se_turns.end(),
                           [&](LatticePoint l, LatticePoint r) {
                             return point_to_value(s, l) < point_to_value(s, r);
                           });
}

// True iff the path has a unit step from p to q.
inline bool has_step(const LatticePath& path, LatticePoint p, LatticePoint q) {
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const auto& u = path.vertices[i - 1];
    const auto& v = path.vertices[i];
    if (u.b == v.b && p.b == u.b && q.b == u.b && q.a == p.a + 1 && p.a >= u.a && q.a <= v.a) {
      return true;
    }
    if (u.a == v.a && p.a == u.a && q.a == u.a && q.b == p.b - 1 && p.b <= u.b && q.b >= v.b) {
      return true;
    }
  }
  return false;
}

inline std::string render_ascii(const SemigroupPair& s, const LatticePath& path) {
  const auto width = std::to_string(s.product()).size() + 1;
  auto pad = [&](const std::string& t) { return std::string(width - t.size(), ' ') + t; };

  std::ostringstream os;
  for (Value y = s.alpha(); y >= 0; --y) {
    std::string row, below;
    for (Value x = 0; x <= s.beta(); ++x) {
      const LatticePoint p{x, y};
      const Value v = point_to_value(s, p);
      const bool corner = contains_point(path.vertices, p);
      const bool on_path = corner || has_step(path, p, {x + 1, y}) ||
                           has_step(path, {x - 1, y}, p) || has_step(path, p, {x, y - 1}) ||
                           has_step(path, {x, y + 1}, p);
      std::string token = " ";
      if (corner) token = std::to_string(v);
      else if (on_path) token = "+";
      else if (v > 0) token = ".";
      row += pad(token);
      below += pad(y > 0 && has_step(path, p, {x, y - 1}) ? "|" : " ");
      if (x < s.beta()) {
        row += has_step(path, p, {x + 1, y}) ? std::string(width, '-') : std::string(width, ' ');
        below += std::string(width, ' ');
      }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    while (!below.empty() && below.back() == ' ') below.pop_back();
    os << row << '\n';
    if (y > 0) os << below << '\n';
  }
  os << '\n'
     << "semigroup   <" << s.alpha() << ',' << s.beta() << ">\n"
     << "generators  " << generator_list(s, path) << '\n'
     << "syzygies    " << syzygy_list(s, path) << '\n'
     << "ES-turns    " << join_values(s, path.es_turns, " ") << '\n'
     << "SE-turns    " << join_values(s, path.se_turns, " ") << '\n';
  return os.str();
}

inline std::string render_svg(const SemigroupPair& s, const LatticePath& path) {
  constexpr Value unit = 40;
  constexpr Value margin = 40;
  const Value width = 2 * margin + s.beta() * unit;
  const Value height = 2 * margin + s.alpha() * unit;
  auto px = [&](Value a) { return margin + a * unit; };
  auto py = [&](Value b) { return margin + (s.alpha() - b) * unit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <title>Lattice path of " << generator_list(s, path) << " over &lt;" << s.alpha()
     << ',' << s.beta() << "&gt;</title>\n";

  os << "  <g class=\"grid\" stroke=\"#b0b0b0\" stroke-width=\"1\">\n";
  for (Value a = 0; a <= s.beta(); ++a) {
    os << "    <line x1=\"" << px(a) << "\" y1=\"" << py(s.alpha()) << "\" x2=\"" << px(a)
       << "\" y2=\"" << py(0) << "\"/>\n";
  }
  for (Value b = 0; b <= s.alpha(); ++b) {
    os << "    <line x1=\"" << px(0) << "\" y1=\"" << py(b) << "\" x2=\"" << px(s.beta())
       << "\" y2=\"" << py(b) << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <line class=\"diagonal\" x1=\"" << px(0) << "\" y1=\"" << py(s.alpha()) << "\" x2=\""
     << px(s.beta()) << "\" y2=\"" << py(0) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  os << "  <polyline class=\"path\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\" "
        "stroke-linejoin=\"miter\" points=\"";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) os << ' ';
    os << px(path.vertices[i].a) << ',' << py(path.vertices[i].b);
  }
  os << "\"/>\n";

  // Each gap (a, b) is labelled inside the cell whose upper-right corner it is.
  os << "  <g class=\"labels\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\">\n";
  for (Value b = s.alpha() - 1; b >= 1; --b) {
    for (Value a = 1; a < s.beta(); ++a) {
      const LatticePoint p{a, b};
      if (!is_strict_gap_point(s, p)) continue;
      const bool generator = contains_point(path.es_turns, p);
      os << "    <text x=\"" << px(a) - unit / 2 << "\" y=\"" << py(b) + unit / 2 << "\" fill=\""
         << (generator ? "#000000" : "#808080") << "\">" << point_to_value(s, p) << "</text>\n";
    }
  }
  os << "  </g>\n";

  os << "  <g class=\"axis-labels\" font-family=\"serif\" font-size=\"10\" "
        "text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (Value a = 0; a <= s.beta(); ++a) {
    os << "    <text x=\"" << px(a) - unit / 2 << "\" y=\"" << py(0) + unit / 2 << "\">("
       << point_to_value(s, {a, 0}) << ")</text>\n";
  }
  for (Value b = 1; b <= s.alpha(); ++b) {
    os << "    <text x=\"" << px(0) - unit / 2 << "\" y=\"" << py(b) + unit / 2 << "\">("
       << point_to_value(s, {0, b}) << ")</text>\n";
  }
  os << "  </g>\n";

  os << "  <g class=\"es-turns\" fill=\"#000000\">\n";
  for (const auto& p : path.es_turns) {
    os << "    <circle cx=\"" << px(p.a) << "\" cy=\"" << py(p.b) << "\" r=\"4\"/>\n";
  }
  os << "  </g>\n";

  const LatticePoint top = max_se_turn(s, path);
  os << "  <g class=\"se-turns\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  for (const auto& p : path.se_turns) {
    os << "    <circle cx=\"" << px(p.a) << "\" cy=\"" << py(p.b) << "\" r=\""
       << (p == top ? 6 : 4) << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g class=\"endpoints\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\">\n"
     << "    <circle cx=\"" << px(0) << "\" cy=\"" << py(s.alpha()) << "\" r=\"4\"/>\n"
     << "    <circle cx=\"" << px(s.beta()) << "\" cy=\"" << py(0) << "\" r=\"4\"/>\n"
     << "  </g>\n"
     << "</svg>\n";
  return os.str();
}

inline std::string render_tikz(const SemigroupPair& s, const LatticePath& path) {
  const Value alpha = s.alpha(), beta = s.beta();
  auto pt = [](LatticePoint p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  };

  std::ostringstream os;
  os << "% Lattice path of " << generator_list(s, path) << " over <" << alpha << ',' << beta
     << ">, syzygies " << syzygy_list(s, path) << "\n"
     << "\\documentclass[tikz]{standalone}\n"
     << "\\begin{document}\n"
     << "\\begin{tikzpicture}[scale=0.65]\n"
     << "\\draw[dashed] (-1,-1) grid [step=1cm](" << beta << ",0);\n"
     << "\\draw[dashed] (-1,-1) grid [step=1cm](0," << alpha << ");\n"
     << "\\draw[] (0,0) grid [step=1cm](" << beta << ',' << alpha << ");\n"
     << "\\draw[] (0," << alpha << ") -- (" << beta << ",0);\n";

  os << "\\draw[ultra thick] ";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) os << " -- ";
    os << pt(path.vertices[i]);
  }
  os << ";\n";

  for (const auto& p : path.es_turns) os << "\\draw[fill] " << pt(p) << " circle [radius=0.1];\n";

  for (Value b = alpha - 1; b >= 1; --b) {
    for (Value a = 1; a < beta; ++a) {
      const LatticePoint p{a, b};
      if (!is_strict_gap_point(s, p)) continue;
      const bool generator = contains_point(path.es_turns, p);
      os << "\\node [below right]" << (generator ? "" : "[gray]") << " at (" << a - 1 << ".15,"
         << b - 1 << ".8) {$" << point_to_value(s, p) << "$};\n";
    }
  }
  for (Value a = 0; a <= beta; ++a) {
    os << "\\node [below right] at (" << a - 1 << ",-0.2) {$\\scriptstyle ("
       << point_to_value(s, {a, 0}) << ")$};\n";
  }
  for (Value b = 1; b <= alpha; ++b) {
    os << "\\node [below right] at (-1," << b - 1 << ".8) {$\\scriptstyle ("
       << point_to_value(s, {0, b}) << ")$};\n";
  }

  const LatticePoint top = max_se_turn(s, path);
  for (const auto& p : path.se_turns) {
    os << "\\draw[fill=white] " << pt(p) << " circle [radius=" << (p == top ? "0.15" : "0.1")
       << "];\n";
  }
  os << "\\draw[fill=white] (0," << alpha << ") circle [radius=0.1];\n"
     << "\\draw[fill=white] (" << beta << ",0) circle [radius=0.1];\n"
     << "\\end{tikzpicture}\n"
     << "\\end{document}\n";
  return os.str();
}

}  // namespace detail

inline std::string render(const SemigroupPair& s, const LatticePath& path, Format format) {
  switch (format) {
    case Format::Ascii: return detail::render_ascii(s, path);
    case Format::Svg: return detail::render_svg(s, path);
    case Format::Tikz: return detail::render_tikz(s, path);
  }
  throw InvalidArgument("unknown render format");
}

}  // namespace semimod
