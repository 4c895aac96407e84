#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "semimod/lattice_path.hpp"
#include "semimod/syzygy.hpp"

namespace semimod {
namespace {

const SemigroupPair k57(5, 7);
const SemigroupPair k34(3, 4);
const SemigroupPair k23(2, 3);

using Points = std::vector<LatticePoint>;
std::vector<Value> v(std::initializer_list<Value> xs) { return xs; }

const Points kFigurePath{{0, 5}, {0, 3}, {1, 3}, {1, 2}, {2, 2}, {2, 1}, {4, 1}, {4, 0}, {7, 0}};

TEST(LeanToPath, WorkedExample) {
  const auto path = lean_to_path(k57, v({0, 9, 11, 8}));
  EXPECT_EQ(path.vertices, kFigurePath);
  EXPECT_EQ(path.es_turns, (Points{{1, 3}, {2, 2}, {4, 1}}));
  EXPECT_EQ(path.se_turns, (Points{{0, 3}, {1, 2}, {2, 1}, {4, 0}}));
  EXPECT_EQ(path.steps(), "SSESESEESEEE");
}

TEST(LeanToPath, PrincipalAndSmall) {
  EXPECT_EQ(lean_to_path(k57, v({0})).vertices, (Points{{0, 5}, {0, 0}, {7, 0}}));
  EXPECT_EQ(lean_to_path(k34, v({0, 5})).vertices,
            (Points{{0, 3}, {0, 1}, {1, 1}, {1, 0}, {4, 0}}));
}

TEST(LeanToPath, AcceptsAnyInputOrder) {
  EXPECT_EQ(lean_to_path(k57, v({8, 0, 11, 9})).vertices, kFigurePath);
}

TEST(LeanToPath, RejectsNonLeanInput) {
  EXPECT_THROW(lean_to_path(k57, v({0, 7})), InvalidArgument);
  EXPECT_THROW(lean_to_path(k57, v({9, 11})), InvalidArgument);
  EXPECT_THROW(lean_to_path(k57, v({0, 9, 16})), InvalidArgument);
}

TEST(PathToSemimodule, Examples) {
  const auto fig = path_to_semimodule(k57, path_from_vertices(k57, kFigurePath));
  EXPECT_EQ(fig.generators, v({0, 9, 11, 8}));
  EXPECT_EQ(fig.syzygies, v({14, 16, 18, 15}));

  const auto straight = path_to_semimodule(k57, path_from_steps(k57, "SSSSSEEEEEEE"));
  EXPECT_EQ(straight.generators, v({0}));
  EXPECT_EQ(straight.syzygies, v({35}));

  const Points small{{0, 3}, {0, 1}, {1, 1}, {1, 0}, {4, 0}};
  const auto r = path_to_semimodule(k34, path_from_vertices(k34, small));
  EXPECT_EQ(r.generators, v({0, 5}));
  EXPECT_EQ(r.syzygies, v({8, 9}));
}

TEST(PathValidation, RejectsMalformedPaths) {
  // Wrong endpoints.
  EXPECT_THROW(path_from_vertices(k34, Points{{0, 3}, {4, 3}}), InvalidArgument);
  EXPECT_THROW(path_from_vertices(k34, Points{{0, 2}, {0, 0}, {4, 0}}), InvalidArgument);
  // Diagonal move.
  EXPECT_THROW(path_from_vertices(k34, Points{{0, 3}, {1, 2}, {1, 0}, {4, 0}}), InvalidArgument);
  // Above the diagonal: (2,2) has value 12 - 6 - 8 < 0.
  EXPECT_THROW(path_from_vertices(k34, Points{{0, 3}, {0, 2}, {2, 2}, {2, 0}, {4, 0}}),
               InvalidArgument);
  EXPECT_THROW(path_from_steps(k34, "ESSSEEE"), InvalidArgument);
  EXPECT_THROW(path_from_steps(k34, "SSSEEEX"), InvalidArgument);
  EXPECT_THROW(path_from_steps(k34, "SSSEEEEE"), InvalidArgument);
  EXPECT_THROW(path_from_vertices(k34, Points{{0, 3}}), InvalidArgument);
}

TEST(PathValidation, MergesCollinearVertices) {
  const auto p = path_from_vertices(k57, Points{{0, 5}, {0, 4}, {0, 0}, {3, 0}, {7, 0}});
  EXPECT_EQ(p.vertices, (Points{{0, 5}, {0, 0}, {7, 0}}));
  EXPECT_EQ(p, path_from_steps(k57, "SSSSSEEEEEEE"));
}

TEST(Enumerate, SmallPairs) {
  EXPECT_EQ(enumerate_semimodules(k23),
            (std::vector<std::vector<Value>>{{0}, {0, 1}}));
  EXPECT_EQ(enumerate_semimodules(k34),
            (std::vector<std::vector<Value>>{{0}, {0, 5}, {0, 2}, {0, 1}, {0, 1, 2}}));
  EXPECT_EQ(enumerate_semimodules(k57).size(), 66u);
  EXPECT_EQ(oracle::lean_subsets(5, 7).size(), 66u);
  EXPECT_EQ(oracle::binomial(12, 5) / 12, 66);
}

TEST(Enumerate, OrderIsLexicographicWithSouthFirst) {
  std::vector<std::string> steps;
  for_each_lean_set(k57, [&](const std::vector<Value>& lean) {
    steps.push_back(lean_to_path(k57, lean).steps());
  });
  auto key = [](std::string s) {
    for (char& c : s) c = (c == 'S') ? 'a' : 'b';
    return s;
  };
  for (std::size_t i = 1; i < steps.size(); ++i) EXPECT_LT(key(steps[i - 1]), key(steps[i]));
}

class EnumerationProperties : public ::testing::TestWithParam<std::pair<Value, Value>> {};

TEST_P(EnumerationProperties, MatchesSubsetFilterAndCount) {
  const auto [a, b] = GetParam();
  const SemigroupPair s(a, b);
  std::set<std::set<Value>> seen;
  Value count = 0;
  for_each_lean_set(s, [&](const std::vector<Value>& lean) {
    ++count;
    EXPECT_TRUE(seen.emplace(lean.begin(), lean.end()).second) << "duplicate lean set";
    EXPECT_EQ(Semimodule(s, lean).generators(), lean);

    const auto path = lean_to_path(s, lean);
    const auto reading = path_to_semimodule(s, path);
    EXPECT_EQ(reading.generators, lean);
    EXPECT_EQ(reading.syzygies, syzygy_generators(Semimodule(s, lean)).generators);
    EXPECT_EQ(lean_to_path(s, reading.generators), path);
    EXPECT_EQ(path_from_steps(s, path.steps()), path);
  });
  EXPECT_EQ(seen, oracle::lean_subsets(a, b));
  EXPECT_EQ(count, oracle::binomial(a + b, a) / (a + b));
  EXPECT_EQ(count, rational_catalan(s));
}

INSTANTIATE_TEST_SUITE_P(CoprimeUpTo14, EnumerationProperties,
                         ::testing::ValuesIn(oracle::coprime_pairs(14)));

}  // namespace
}  // namespace semimod
