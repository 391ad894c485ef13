#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "starpres/presentation.hpp"

namespace starpres {

// Undirected graph on the 2*rank signed generators, vertex v <-> letter
// code v. Loops allowed; parallel edges are collapsed (adjacency only).
class SimpleGraph {
 public:
  explicit SimpleGraph(std::uint32_t num_vertices);

  std::uint32_t num_vertices() const {
    return static_cast<std::uint32_t>(adj_.size());
  }
  void add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    return adj_[u][v];
  }
  const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const {
    return nbr_[v];
  }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(nbr_[v].size());
  }
  std::uint32_t num_edges() const;
  bool has_loop() const;

  friend auto operator<=>(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<std::uint32_t>> nbr_;
};

// Star graph of a presentation: for every cyclically consecutive pair a,b in
// a relator, an edge joining a and b^-1, with multiplicity. Vertices are all
// 2*rank signed generators, whether or not they occur.
class StarGraph {
 public:
  using Edge = std::pair<Letter, Letter>;  // normalized: first <= second

  static StarGraph build(const Presentation& p);

  std::uint32_t rank() const { return rank_; }
  const std::map<Edge, std::uint32_t>& multiplicity() const {
    return multiplicity_;
  }
  std::uint32_t total_multiplicity() const;
  SimpleGraph simple() const;

 private:
  std::uint32_t rank_ = 0;
  std::map<Edge, std::uint32_t> multiplicity_;
};

struct GraphAnalysis {
  std::optional<std::uint32_t> girth;  // nullopt: acyclic (infinite girth)
  bool bipartite = false;
  std::uint32_t min_degree = 0;  // distinct neighbours
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> component_diameters;
  bool components_isomorphic = false;

  bool connected() const { return component_count == 1; }
  // Diameter of the whole graph; nullopt when disconnected.
  std::optional<std::uint32_t> diameter() const {
    if (component_count != 1) return std::nullopt;
    return component_diameters.front();
  }
};

GraphAnalysis analyze(const SimpleGraph& g);

// Exact K_{n,n} recognition: n^2 distinct pairs all of multiplicity one and
// the simple graph complete bipartite with sides of size n.
bool is_knn(const StarGraph& g, std::uint32_t n);

struct SpecialCertificate {
  std::uint32_t m;   // diameter of each component (>= 2)
  std::uint32_t k;   // common relator length (>= 3)
  std::uint32_t nu;  // number of components (>= 1)

  friend auto operator<=>(const SpecialCertificate&,
                          const SpecialCertificate&) = default;
};

// Certificate that the presentation is (m,k,nu)-special: equal relator
// lengths k, star-graph components pairwise isomorphic, each bipartite with
// diameter m, girth 2m and minimum degree >= 3, and k >= 4 whenever m == 2.
std::optional<SpecialCertificate> check_special(const Presentation& p);

// Exact test of 1/m + 2/k < 1 in integer arithmetic.
bool hyperbolic_flag(std::uint32_t m, std::uint32_t k);

// Keeps one relator per cyclic-word-up-to-inversion class (first occurrence
// wins). The raw overload also free/cyclically reduces and drops relators
// that reduce to the empty word.
Presentation concise_refine(const Presentation& p);
Presentation concise_refine(std::uint32_t rank,
                            const std::vector<LetterSeq>& raw_relators);

}  // namespace starpres
