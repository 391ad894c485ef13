#include "starpres/star_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace starpres {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

SimpleGraph::SimpleGraph(std::uint32_t num_vertices)
    : adj_(num_vertices, std::vector<bool>(num_vertices, false)),
      nbr_(num_vertices) {}

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw std::invalid_argument("add_edge: vertex out of range");
  }
  if (adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = true;
  nbr_[u].push_back(v);
  if (u != v) nbr_[v].push_back(u);
  std::sort(nbr_[u].begin(), nbr_[u].end());
  if (u != v) std::sort(nbr_[v].begin(), nbr_[v].end());
}

std::uint32_t SimpleGraph::num_edges() const {
  std::uint32_t twice = 0;
  for (std::uint32_t v = 0; v < num_vertices(); ++v) {
    twice += degree(v);
    if (adj_[v][v]) ++twice;  // loop contributes one edge, one neighbour
  }
  return twice / 2;
}

bool SimpleGraph::has_loop() const {
  for (std::uint32_t v = 0; v < num_vertices(); ++v) {
    if (adj_[v][v]) return true;
  }
  return false;
}

StarGraph StarGraph::build(const Presentation& p) {
  StarGraph g;
  g.rank_ = p.rank();
  for (const Word& r : p.relators()) {
    const LetterSeq& ls = r.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      Letter a = ls[i];
      Letter b = ls[(i + 1) % ls.size()].inverse();
      Edge e = a <= b ? Edge{a, b} : Edge{b, a};
      ++g.multiplicity_[e];
    }
  }
  return g;
}

std::uint32_t StarGraph::total_multiplicity() const {
  std::uint32_t total = 0;
  for (const auto& [e, m] : multiplicity_) total += m;
  return total;
}

SimpleGraph StarGraph::simple() const {
  SimpleGraph g(2 * rank_);
  for (const auto& [e, m] : multiplicity_) {
    g.add_edge(e.first.code(), e.second.code());
  }
  return g;
}

namespace {

struct BfsResult {
  std::vector<std::uint32_t> dist;
  std::uint32_t eccentricity = 0;
};

BfsResult bfs(const SimpleGraph& g, std::uint32_t root) {
  BfsResult r;
  r.dist.assign(g.num_vertices(), kUnset);
  r.dist[root] = 0;
  std::deque<std::uint32_t> queue{root};
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    r.eccentricity = std::max(r.eccentricity, r.dist[v]);
    for (std::uint32_t u : g.neighbours(v)) {
      if (r.dist[u] == kUnset) {
        r.dist[u] = r.dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return r;
}

// Shortest cycle through BFS trees from every root; exact on simple graphs.
std::optional<std::uint32_t> girth_of(const SimpleGraph& g) {
  if (g.has_loop()) return 1;
  std::uint32_t best = kUnset;
  std::vector<std::uint32_t> dist(g.num_vertices());
  std::vector<std::uint32_t> parent(g.num_vertices());
  for (std::uint32_t root = 0; root < g.num_vertices(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    std::fill(parent.begin(), parent.end(), kUnset);
    dist[root] = 0;
    std::deque<std::uint32_t> queue{root};
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t u : g.neighbours(v)) {
        if (dist[u] == kUnset) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v] && v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

std::vector<std::uint32_t> component_labels(const SimpleGraph& g,
                                            std::uint32_t& count) {
  std::vector<std::uint32_t> label(g.num_vertices(), kUnset);
  count = 0;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    if (label[v] != kUnset) continue;
    std::deque<std::uint32_t> queue{v};
    label[v] = count;
    while (!queue.empty()) {
      std::uint32_t w = queue.front();
      queue.pop_front();
      for (std::uint32_t u : g.neighbours(w)) {
        if (label[u] == kUnset) {
          label[u] = count;
          queue.push_back(u);
        }
      }
    }
    ++count;
  }
  return label;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> colour(g.num_vertices(), -1);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    if (colour[v] != -1) continue;
    colour[v] = 0;
    std::deque<std::uint32_t> queue{v};
    while (!queue.empty()) {
      std::uint32_t w = queue.front();
      queue.pop_front();
      for (std::uint32_t u : g.neighbours(w)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[w];
          queue.push_back(u);
        } else if (colour[u] == colour[w]) {
          return false;
        }
      }
    }
  }
  return true;
}

SimpleGraph induced(const SimpleGraph& g,
                    const std::vector<std::uint32_t>& vertices) {
  SimpleGraph h(static_cast<std::uint32_t>(vertices.size()));
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (std::uint32_t j = i; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

bool extend_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                        std::vector<std::uint32_t>& map,
                        std::vector<bool>& used, std::uint32_t v) {
  if (v == a.num_vertices()) return true;
  for (std::uint32_t w = 0; w < b.num_vertices(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = a.has_edge(v, v) == b.has_edge(w, w);
    for (std::uint32_t u = 0; ok && u < v; ++u) {
      if (a.has_edge(v, u) != b.has_edge(w, map[u])) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_isomorphism(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  auto degrees = [](const SimpleGraph& g) {
    std::vector<std::uint32_t> d;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      d.push_back(g.degree(v));
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<std::uint32_t> map(a.num_vertices(), 0);
  std::vector<bool> used(b.num_vertices(), false);
  return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace

GraphAnalysis analyze(const SimpleGraph& g) {
  GraphAnalysis a;
  a.girth = girth_of(g);
  a.bipartite = is_bipartite(g);
  a.min_degree = g.num_vertices() == 0 ? 0 : kUnset;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    a.min_degree = std::min(a.min_degree, g.degree(v));
  }
  std::vector<std::uint32_t> label = component_labels(g, a.component_count);
  std::vector<std::vector<std::uint32_t>> comps(a.component_count);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    comps[label[v]].push_back(v);
  }
  a.component_diameters.assign(a.component_count, 0);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    a.component_diameters[label[v]] =
        std::max(a.component_diameters[label[v]], bfs(g, v).eccentricity);
  }
  a.components_isomorphic = true;
  if (a.component_count > 1) {
    SimpleGraph first = induced(g, comps[0]);
    for (std::uint32_t c = 1; a.components_isomorphic && c < a.component_count;
         ++c) {
      if (!isomorphic(first, induced(g, comps[c]))) {
        a.components_isomorphic = false;
      }
    }
  }
  return a;
}

bool is_knn(const StarGraph& g, std::uint32_t n) {
  if (g.rank() != n || n == 0) return false;
  if (g.multiplicity().size() != static_cast<std::size_t>(n) * n) return false;
  for (const auto& [e, m] : g.multiplicity()) {
    if (m != 1) return false;
  }
  SimpleGraph s = g.simple();
  if (s.has_loop() || s.num_edges() != n * n) return false;
  // Complete bipartite with sides of size n: 2-colour and check every cross
  // pair is an edge.
  std::vector<int> colour(s.num_vertices(), -1);
  colour[0] = 0;
  std::deque<std::uint32_t> queue{0};
  std::uint32_t reached = 1;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t u : s.neighbours(v)) {
      if (colour[u] == -1) {
        colour[u] = 1 - colour[v];
        queue.push_back(u);
        ++reached;
      } else if (colour[u] == colour[v]) {
        return false;
      }
    }
  }
  if (reached != s.num_vertices()) return false;
  std::vector<std::uint32_t> side[2];
  for (std::uint32_t v = 0; v < s.num_vertices(); ++v) {
    side[colour[v]].push_back(v);
  }
  if (side[0].size() != n || side[1].size() != n) return false;
  for (std::uint32_t u : side[0]) {
    for (std::uint32_t v : side[1]) {
      if (!s.has_edge(u, v)) return false;
    }
  }
  return true;
}

std::optional<SpecialCertificate> check_special(const Presentation& p) {
  if (p.relators().empty()) return std::nullopt;
  std::size_t k = p.relators().front().size();
  for (const Word& r : p.relators()) {
    if (r.size() != k) return std::nullopt;
  }
  if (k < 3) return std::nullopt;
  GraphAnalysis a = analyze(StarGraph::build(p).simple());
  if (!a.bipartite || a.min_degree < 3 || !a.components_isomorphic) {
    return std::nullopt;
  }
  if (!a.girth) return std::nullopt;
  std::uint32_t m = a.component_diameters.front();
  for (std::uint32_t d : a.component_diameters) {
    if (d != m) return std::nullopt;
  }
  if (m < 2 || *a.girth != 2 * m) return std::nullopt;
  if (m == 2 && k < 4) return std::nullopt;
  return SpecialCertificate{m, static_cast<std::uint32_t>(k),
                            a.component_count};
}

bool hyperbolic_flag(std::uint32_t m, std::uint32_t k) {
  // 1/m + 2/k < 1  <=>  k + 2m < m*k  (m, k positive)
  return static_cast<std::uint64_t>(k) + 2ull * m <
         static_cast<std::uint64_t>(m) * k;
}

namespace {

std::vector<Word> dedupe_relators(const std::vector<Word>& relators) {
  std::vector<Word> kept;
  std::vector<Word> seen;
  for (const Word& r : relators) {
    Word key = canonical_cyclic(r);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      kept.push_back(r);
    }
  }
  return kept;
}

}  // namespace

Presentation concise_refine(const Presentation& p) {
  return Presentation(p.rank(), dedupe_relators(p.relators()));
}

Presentation concise_refine(std::uint32_t rank,
                            const std::vector<LetterSeq>& raw_relators) {
  std::vector<Word> reduced;
  for (const LetterSeq& raw : raw_relators) {
    Word w = cyclic_reduce(free_reduce(raw, rank));
    if (!w.empty()) reduced.push_back(w);
  }
  return Presentation(rank, dedupe_relators(reduced));
}

}  // namespace starpres
