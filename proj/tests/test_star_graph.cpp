#include <set>

#include "doctest.h"

#include "starpres/presentation.hpp"
#include "starpres/star_graph.hpp"
#include "starpres/word.hpp"

using namespace starpres;

namespace {

Word w3(std::string_view s) { return Word::reduced(parse_compact(s, 3), 3); }

SimpleGraph cycle(std::uint32_t n) {
  SimpleGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("star graph of the first catalog relator is K3,3") {
  StarGraph g = StarGraph::build(one_relator("xxyyzzxzy"));
  CHECK(g.total_multiplicity() == 9);
  CHECK(g.multiplicity().size() == 9);
  for (const auto& [edge, mult] : g.multiplicity()) CHECK(mult == 1);
  CHECK(is_knn(g, 3));

  // sides {x, y, z} and {x^-1, y^-1, z^-1}
  SimpleGraph s = g.simple();
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = a + 1; b < 6; ++b) {
      bool cross = (a % 2) != (b % 2);
      CHECK(s.has_edge(a, b) == cross);
    }
}

TEST_CASE("star graph edges with multiplicity") {
  // x^2: pairs (x,x),(x,x) give the loopless doubled edge {x, x^-1}
  StarGraph g = StarGraph::build(one_relator("xx", 1));
  REQUIRE(g.multiplicity().size() == 1);
  CHECK(g.multiplicity().begin()->second == 2);
  CHECK(g.total_multiplicity() == 2);

  // commutator xyx^-1y^-1: a 4-cycle, each edge once
  StarGraph c = StarGraph::build(one_relator("xyXY", 2));
  CHECK(c.multiplicity().size() == 4);
  CHECK(c.total_multiplicity() == 4);
  GraphAnalysis a = analyze(c.simple());
  CHECK(a.girth == 4);
  CHECK(a.min_degree == 2);
  CHECK(!check_special(one_relator("xyXY", 2)));
}

TEST_CASE("graph analysis on known graphs") {
  SUBCASE("C6") {
    GraphAnalysis a = analyze(cycle(6));
    CHECK(a.girth == 6);
    CHECK(a.bipartite);
    CHECK(a.component_count == 1);
    CHECK(a.diameter() == 3);
    CHECK(a.min_degree == 2);
  }
  SUBCASE("C5 is odd") {
    GraphAnalysis a = analyze(cycle(5));
    CHECK(a.girth == 5);
    CHECK(!a.bipartite);
    CHECK(a.diameter() == 2);
  }
  SUBCASE("path is acyclic") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    GraphAnalysis a = analyze(g);
    CHECK(!a.girth.has_value());
    CHECK(a.bipartite);
    CHECK(a.diameter() == 3);
  }
  SUBCASE("triangle") {
    GraphAnalysis a = analyze(cycle(3));
    CHECK(a.girth == 3);
    CHECK(!a.bipartite);
  }
  SUBCASE("loop has girth 1") {
    SimpleGraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    GraphAnalysis a = analyze(g);
    CHECK(a.girth == 1);
    CHECK(!a.bipartite);
  }
  SUBCASE("two isomorphic components") {
    SimpleGraph g(8);
    for (std::uint32_t i = 0; i < 4; ++i) {
      g.add_edge(i, (i + 1) % 4);
      g.add_edge(4 + i, 4 + (i + 1) % 4);
    }
    GraphAnalysis a = analyze(g);
    CHECK(a.component_count == 2);
    CHECK(a.components_isomorphic);
    CHECK(a.component_diameters == std::vector<std::uint32_t>{2, 2});
  }
  SUBCASE("non-isomorphic components") {
    SimpleGraph g(7);
    for (std::uint32_t i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 4);
    GraphAnalysis a = analyze(g);
    CHECK(a.component_count == 2);
    CHECK(!a.components_isomorphic);
  }
  SUBCASE("K33 parameters") {
    SimpleGraph g(6);
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) g.add_edge(2 * a, 2 * b + 1);
    GraphAnalysis an = analyze(g);
    CHECK(an.girth == 4);
    CHECK(an.bipartite);
    CHECK(an.min_degree == 3);
    CHECK(an.diameter() == 2);
  }
}

TEST_CASE("special certificate") {
  auto cert = check_special(one_relator("xxyyzzxzy"));
  REQUIRE(cert.has_value());
  CHECK(cert->m == 2);
  CHECK(cert->k == 9);
  CHECK(cert->nu == 1);

  // degree too small: torus relator
  CHECK(!check_special(one_relator("xyXY", 2)));
  // mixed relator lengths never qualify
  Presentation two(3, {w3("xxyyzzxzy"), w3("xyz")});
  CHECK(!check_special(two));
}

TEST_CASE("hyperbolicity inequality, exact integer form") {
  CHECK(!hyperbolic_flag(2, 4));   // 1/2 + 2/4 = 1
  CHECK(hyperbolic_flag(2, 5));    // 1/2 + 2/5 < 1
  CHECK(hyperbolic_flag(2, 9));
  CHECK(!hyperbolic_flag(3, 3));   // 1/3 + 2/3 = 1
  CHECK(hyperbolic_flag(3, 4));
  CHECK(!hyperbolic_flag(2, 3));   // 1/2 + 2/3 > 1
  for (std::uint32_t n = 3; n <= 12; ++n) CHECK(hyperbolic_flag(2, n * n));
}

TEST_CASE("concise refinement drops cyclic-and-inverse duplicates") {
  Word a = w3("xxyyzzxzy");
  Presentation p(3, {a, rotated(a, 4), invert(a), w3("xyz")});
  Presentation q = concise_refine(p);
  CHECK(q.relators().size() == 2);
  CHECK(q.relators()[0] == a);
  CHECK(q.relators()[1] == w3("xyz"));

  // raw overload reduces first and drops empties
  std::vector<LetterSeq> raw = {parse_compact("xyYX", 3),
                                parse_compact("zZxxyyzzxzy", 3)};
  Presentation r = concise_refine(3, raw);
  CHECK(r.relators().size() == 1);
  CHECK(r.relators()[0] == a);
}

TEST_CASE("no short rank-2 relator is special") {
  // scaled-down brute force; the full length-9 sweep runs in acceptance
  for (std::uint32_t len = 1; len <= 6; ++len) {
    std::vector<Letter> word(len, Letter(0, 1));
    std::vector<std::uint32_t> digits(len, 0);
    while (true) {
      LetterSeq seq;
      for (std::uint32_t d : digits) seq.push_back(Letter::from_code(d));
      Word w = Word::reduced(seq, 2);
      if (w.size() == len && w.cyclically_reduced() && !w.empty()) {
        CHECK(!check_special(Presentation(2, {w})));
      }
      std::size_t pos = 0;
      while (pos < len && digits[pos] == 3) digits[pos++] = 0;
      if (pos == len) break;
      ++digits[pos];
    }
  }
}
