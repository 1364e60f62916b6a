#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "kess/generators.hpp"
#include "kess/io/graph6.hpp"
#include "oracles.hpp"

using namespace kess;

TEST(Generators, ExhaustiveCounts) {
  EXPECT_EQ(generate(GraphFamily::exhaustive(3, 3)).size(), 8u);
  EXPECT_EQ(generate(GraphFamily::exhaustive(4, 4).connected()).size(), 38u);
  EXPECT_EQ(generate(GraphFamily::exhaustive(1, 5).connected()).size(),
            1u + 1u + 4u + 38u + 728u);
  EXPECT_EQ(FamilyStream(GraphFamily::exhaustive(0, 0)).size(), 1u);
}

TEST(Generators, ExhaustiveGraphsAreDistinct) {
  std::set<std::string> seen;
  for (const Graph &g : generate(GraphFamily::exhaustive(5, 5)))
    seen.insert(encode_graph6(g));
  EXPECT_EQ(seen.size(), 1024u);
}

TEST(Generators, TreeEnumerationMatchesCayley) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> seen;
    for (const Graph &t : generate(GraphFamily::all_trees(n, n))) {
      ASSERT_TRUE(is_tree(t));
      seen.insert(encode_graph6(t));
    }
    std::size_t cayley = 1;
    for (int k = 0; k < n - 2; ++k)
      cayley *= static_cast<std::size_t>(n);
    EXPECT_EQ(seen.size(), cayley) << n;
  }
  EXPECT_EQ(FamilyStream(GraphFamily::all_trees(2, 9)).size(), 5063361u);
}

TEST(Generators, PrueferDecode) {
  Graph t = tree_from_pruefer(6, {3, 3, 3, 4});
  EXPECT_EQ(t, Graph(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  EXPECT_THROW(tree_from_pruefer(4, {1}), std::invalid_argument);
  EXPECT_THROW(tree_from_pruefer(4, {1, 9}), std::invalid_argument);
}

TEST(Generators, RandomFamiliesAreSeeded) {
  auto a = generate(GraphFamily::random_gnp(5, 9, 0.4, 50, 77));
  auto b = generate(GraphFamily::random_gnp(5, 9, 0.4, 50, 77));
  auto c = generate(GraphFamily::random_gnp(5, 9, 0.4, 50, 78));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const Graph &g : a) {
    EXPECT_GE(g.order(), 5);
    EXPECT_LE(g.order(), 9);
  }
}

TEST(Generators, RandomTreesAreTrees) {
  for (const Graph &t : generate(GraphFamily::random_trees(10, 16, 300, 5)))
    ASSERT_TRUE(is_tree(t));
}

TEST(Generators, RandomKeGraphsAreConnectedKe) {
  int square_stable = 0;
  for (const Graph &g : generate(GraphFamily::random_ke(7, 10, 300, 9))) {
    ASSERT_TRUE(is_connected(g));
    ASSERT_EQ(oracle::alpha(g) + oracle::mu(g), g.order());
    square_stable += oracle::alpha(g) == oracle::alpha(oracle::square(g));
  }
  EXPECT_EQ(square_stable, 29);
}

TEST(Generators, InvalidFamilies) {
  EXPECT_THROW(FamilyStream(GraphFamily::exhaustive(3, 2)), std::invalid_argument);
  EXPECT_THROW(FamilyStream(GraphFamily::exhaustive(1, 12)), std::invalid_argument);
  EXPECT_THROW(FamilyStream(GraphFamily::random_gnp(3, 4, 1.5, 2, 0)),
               std::invalid_argument);
}

TEST(Generators, Graph6LinesReader) {
  std::istringstream in(">>graph6<<Ch\r\n\n@ \nD~{\n");
  auto lines = read_graph6_lines(in);
  EXPECT_EQ(lines, (std::vector<std::string>{"Ch", "@", "D~{"}));
  auto fam = GraphFamily::graph6(lines);
  EXPECT_EQ(generate(fam).size(), 3u);
  EXPECT_THROW(FamilyStream(GraphFamily::graph6({"Ch", "!!"})),
               std::invalid_argument);
}

TEST(Generators, Describe) {
  EXPECT_EQ(GraphFamily::exhaustive(5, 5).describe(), "exhaustive:5");
  EXPECT_EQ(GraphFamily::random_gnp(7, 8, 0.5, 1000, 3).connected().describe(),
            "gnp:7-8:0.5:1000@seed=3+connected");
}
