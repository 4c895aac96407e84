#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semimod/dual.hpp"
#include "semimod/error.hpp"
#include "semimod/lattice_path.hpp"
#include "semimod/semigroup.hpp"
#include "semimod/semimodule.hpp"
#include "semimod/syzygy.hpp"

namespace semimod {

using Json = nlohmann::ordered_json;

/// Named boolean checks in a fixed order.
using CheckList = std::vector<std::pair<std::string, bool>>;

struct ConductorsByMethod {
  Value bruteforce = 0;
  Value syzygy = 0;
  Value apery = 0;
  Value dual = 0;
};

struct AnalysisReport {
  struct SemigroupPart {
    Value alpha = 0;
    Value beta = 0;
    Value conductor = 0;
  } semigroup;
  struct SemimodulePart {
    std::vector<Value> generators;
    std::vector<Value> gaps;
    Value conductor = 0;
    ConductorsByMethod methods;
  } semimodule;
  struct SyzygyPart {
    std::vector<Value> generators;
    Value max = 0;
    LatticePoint max_point;
  } syzygy;
  struct DualPart {
    std::vector<Value> generators;
    Value min = 0;
  } dual;
  CheckList consistency;

  bool all_passed() const {
    for (const auto& [name, ok] : consistency) {
      if (!ok) return false;
    }
    return true;
  }
};

namespace detail {

inline bool same_set(std::vector<Value> l, std::vector<Value> r) {
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

// Runs `fn`, mapping any library error to a failed check.
template <typename Fn>
bool guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace detail

/// Every consistency check on one semimodule, in report order.
inline CheckList run_checks(const Semimodule& d) {
  const auto& s = d.semigroup();
  const Value a = s.alpha(), b = s.beta();
  CheckList out;

  const Value brute = conductor_bruteforce(d);
  const SyzygySet syz = syzygy_generators(d);

  out.emplace_back("syzygy_vs_bruteforce", detail::guarded([&] {
    if (d.is_principal()) {
      // The pairwise union is empty; the degenerate report is the expected outcome.
      try {
        syzygy_bruteforce(d);
        return false;
      } catch (const DegenerateSyzygy&) {
        return syz.generators == std::vector<Value>{s.product()};
      }
    }
    return syzygy_bruteforce(d).generators == syz.generators;
  }));
  out.emplace_back("syzygy_conductor",
                   detail::guarded([&] { return conductor_syzygy(d).conductor == brute; }));
  out.emplace_back("conductor_agreement", detail::guarded([&] {
    return conductor_syzygy(d).conductor == brute && conductor_via_apery(d, a + b) == brute &&
           conductor_dual(d) == brute;
  }));
  out.emplace_back("conductor_forms", detail::guarded([&] {
    conductor_syzygy(d);
    return true;
  }));
  out.emplace_back("apery_conductor", detail::guarded([&] {
    return conductor_via_apery(d, a) == brute && conductor_via_apery(d, b) == brute &&
           conductor_via_apery(d, a + b) == brute;
  }));
  out.emplace_back("max_syzygy_is_max_apery",
                   detail::guarded([&] { return syz.max_value == apery(d, a + b).max(); }));
  out.emplace_back("corollary_membership", s.contains(conductor(s) - brute));
  out.emplace_back("lemma_aux", check_lemma_aux(d, syz));
  out.emplace_back("congruences", check_syzygy_congruences(d, syz));
  out.emplace_back("dual_bijection", detail::guarded([&] {
    return detail::same_set(dual_bruteforce(d).generators, dual_from_syzygy(d).generators);
  }));
  out.emplace_back("dual_conductor", detail::guarded([&] { return conductor_dual(d) == brute; }));
  out.emplace_back("path_round_trip", detail::guarded([&] {
    const auto reading = path_to_semimodule(s, lean_to_path(s, d.generators()));
    return reading.generators == d.generators() && reading.syzygies == syz.generators;
  }));
  return out;
}

inline AnalysisReport analyze(const SemigroupPair& s, std::span<const Value> gens) {
  const Semimodule d(s, gens);
  AnalysisReport r;
  r.semigroup = {s.alpha(), s.beta(), conductor(s)};

  r.semimodule.generators = d.generators();
  r.semimodule.gaps = gaps(d);
  r.semimodule.conductor = conductor_bruteforce(d);
  r.semimodule.methods = {r.semimodule.conductor, conductor_syzygy(d).conductor,
                          conductor_via_apery(d, s.alpha() + s.beta()), conductor_dual(d)};

  const SyzygySet syz = syzygy_generators(d);
  r.syzygy = {syz.generators, syz.max_value, syz.max_point};

  const DualSet dual = dual_bruteforce(d);
  r.dual = {dual.generators, dual.min_value};

  r.consistency = run_checks(d);
  return r;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["semigroup"] = {{"alpha", r.semigroup.alpha},
                    {"beta", r.semigroup.beta},
                    {"conductor", r.semigroup.conductor}};
  j["semimodule"] = {{"generators", r.semimodule.generators},
                     {"gaps", r.semimodule.gaps},
                     {"conductor", r.semimodule.conductor},
                     {"conductor_methods",
                      {{"bruteforce", r.semimodule.methods.bruteforce},
                       {"syzygy", r.semimodule.methods.syzygy},
                       {"apery", r.semimodule.methods.apery},
                       {"dual", r.semimodule.methods.dual}}}};
  j["syzygy"] = {{"generators", r.syzygy.generators},
                 {"max", r.syzygy.max},
                 {"max_point", {r.syzygy.max_point.a, r.syzygy.max_point.b}}};
  j["dual"] = {{"generators", r.dual.generators}, {"min", r.dual.min}};
  Json checks = Json::object();
  for (const auto& [name, ok] : r.consistency) checks[name] = ok;
  j["consistency"] = checks;
  return j;
}

namespace detail {

inline std::string bracket(const std::vector<Value>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace detail

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "semigroup <" << r.semigroup.alpha << ',' << r.semigroup.beta
     << ">  conductor " << r.semigroup.conductor << '\n'
     << "semimodule generators " << detail::bracket(r.semimodule.generators) << '\n'
     << "  gaps        " << detail::bracket(r.semimodule.gaps) << '\n'
     << "  conductor   " << r.semimodule.conductor << "  (bruteforce "
     << r.semimodule.methods.bruteforce << ", syzygy " << r.semimodule.methods.syzygy
     << ", apery " << r.semimodule.methods.apery << ", dual " << r.semimodule.methods.dual
     << ")\n"
     << "syzygy generators " << detail::bracket(r.syzygy.generators) << "  max "
     << r.syzygy.max << " at " << r.syzygy.max_point << '\n'
     << "dual generators " << detail::bracket(r.dual.generators) << "  min " << r.dual.min
     << '\n'
     << "checks\n";
  for (const auto& [name, ok] : r.consistency) {
    os << "  " << (ok ? "ok  " : "FAIL") << ' ' << name << '\n';
  }
  return os.str();
}

struct Violation {
  std::vector<Value> generators;
  std::string check;
};

struct SweepReport {
  Value alpha = 0;
  Value beta = 0;
  Value semimodule_count = 0;
  std::vector<Violation> violations;
  std::chrono::microseconds elapsed{0};
};

/// Runs the full check list on every semimodule of <alpha, beta>.
inline SweepReport verify_pair(const SemigroupPair& s) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep{s.alpha(), s.beta(), 0, {}, {}};
  for_each_lean_set(s, [&](const std::vector<Value>& lean) {
    ++rep.semimodule_count;
    try {
      const Semimodule d(s, lean);
      if (d.generators() != lean) rep.violations.push_back({lean, "enumeration_round_trip"});
      for (const auto& [name, ok] : run_checks(d)) {
        if (!ok) rep.violations.push_back({lean, name});
      }
    } catch (const Error& e) {
      rep.violations.push_back({lean, std::string("error: ") + e.what()});
    }
  });
  if (rep.semimodule_count != rational_catalan(s)) {
    rep.violations.push_back({{}, "enumeration_count"});
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

/// Every coprime 2 <= alpha < beta with alpha + beta <= max_sum, in
/// increasing (alpha + beta, alpha) order.
inline std::vector<SemigroupPair> pairs_up_to(Value max_sum) {
  std::vector<SemigroupPair> out;
  for (Value sum = 5; sum <= max_sum; ++sum) {
    for (Value a = 2; 2 * a < sum; ++a) {
      if (std::gcd(a, sum - a) == 1) out.emplace_back(a, sum - a);
    }
  }
  return out;
}

inline std::vector<SweepReport> sweep_verify(Value max_sum) {
  if (max_sum < 5) {
    throw InvalidArgument("max-sum must be at least 5, got " + std::to_string(max_sum));
  }
  std::vector<SweepReport> out;
  for (const auto& s : pairs_up_to(max_sum)) out.push_back(verify_pair(s));
  return out;
}

inline Json to_json(const std::vector<SweepReport>& reports) {
  Json pairs = Json::array();
  Value total = 0, failures = 0;
  for (const auto& r : reports) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"generators", v.generators}, {"check", v.check}});
    }
    pairs.push_back({{"alpha", r.alpha},
                     {"beta", r.beta},
                     {"semimodule_count", r.semimodule_count},
                     {"violations", violations},
                     {"elapsed_us", r.elapsed.count()}});
    total += r.semimodule_count;
    failures += static_cast<Value>(r.violations.size());
  }
  Json j;
  j["pairs"] = pairs;
  j["total_semimodules"] = total;
  j["total_violations"] = failures;
  return j;
}

inline std::string to_text(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  Value total = 0, failures = 0;
  for (const auto& r : reports) {
    os << '<' << r.alpha << ',' << r.beta << ">  semimodules " << r.semimodule_count
       << "  violations " << r.violations.size() << "  (" << r.elapsed.count() << " us)\n";
    for (const auto& v : r.violations) {
      os << "    " << detail::bracket(v.generators) << ": " << v.check << '\n';
    }
    total += r.semimodule_count;
    failures += static_cast<Value>(r.violations.size());
  }
  os << "total: " << reports.size() << " semigroups, " << total << " semimodules, " << failures
     << " violations\n";
  return os.str();
}

}  // namespace semimod
