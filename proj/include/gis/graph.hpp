#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gis/error.hpp"

namespace gis {

struct Edge {
  std::string id;
  std::string src;
  std::string dst;

  friend bool operator==(Edge const&, Edge const&) = default;
};

//! A finite directed multigraph with opaque string identifiers.  Vertex and
//! edge ids live in disjoint namespaces; parallel edges and loops are fine.
//! Instances are immutable and shared via GraphPtr.
class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

class Graph {
 public:
  //! Validating factory.  Throws Error naming the offending id on duplicate
  //! ids, namespace collisions, dangling endpoints, or ill-formed ids.
  static GraphPtr make(std::vector<std::string> vertices,
                       std::vector<Edge> edges) {
    return GraphPtr(new Graph(std::move(vertices), std::move(edges)));
  }

  //! Parses the canonical graph document:
  //!   {"vertices":[...ids], "edges":[{"id","src","dst"},...]}
  //! Unknown keys are rejected; ids must match [A-Za-z0-9_]+.
  static GraphPtr from_document(std::string_view text);

  std::vector<std::string> const& vertices() const { return vertices_; }
  std::vector<Edge> const& edges() const { return edges_; }

  bool has_vertex(std::string_view id) const {
    return vertex_index_.count(std::string(id)) > 0;
  }

  bool has_edge(std::string_view id) const {
    return edge_index_.count(std::string(id)) > 0;
  }

  Edge const& edge(std::string const& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) {
      throw Error("unknown edge id \"" + id + "\"");
    }
    return edges_[it->second];
  }

  //! Out-edge ids of a vertex, sorted lexicographically.
  std::vector<std::string> const& out_edges(std::string const& v) const {
    return adjacency(out_, v);
  }

  //! In-edge ids of a vertex, sorted lexicographically.
  std::vector<std::string> const& in_edges(std::string const& v) const {
    return adjacency(in_, v);
  }

  void require_vertex(std::string const& v) const {
    if (!has_vertex(v)) {
      throw Error("unknown vertex \"" + v + "\"");
    }
  }

  friend bool operator==(Graph const& a, Graph const& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](Edge const& a, Edge const& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto const& v = vertices_[i];
      if (v.empty()) {
        throw Error("empty vertex id");
      }
      if (!vertex_index_.emplace(v, i).second) {
        throw Error("duplicate vertex id \"" + v + "\"");
      }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto const& e = edges_[i];
      if (e.id.empty()) {
        throw Error("empty edge id");
      }
      if (vertex_index_.count(e.id)) {
        throw Error("edge id \"" + e.id + "\" collides with a vertex id");
      }
      if (!edge_index_.emplace(e.id, i).second) {
        throw Error("duplicate edge id \"" + e.id + "\"");
      }
      if (!vertex_index_.count(e.src)) {
        throw Error("edge \"" + e.id + "\" has dangling endpoint \"" + e.src +
                    "\"");
      }
      if (!vertex_index_.count(e.dst)) {
        throw Error("edge \"" + e.id + "\" has dangling endpoint \"" + e.dst +
                    "\"");
      }
    }
    for (auto const& e : edges_) {
      out_[e.src].push_back(e.id);
      in_[e.dst].push_back(e.id);
    }
    // edges_ is id-sorted, so adjacency lists come out sorted already
  }

  std::vector<std::string> const& adjacency(
      std::unordered_map<std::string, std::vector<std::string>> const& table,
      std::string const& v) const {
    require_vertex(v);
    static const std::vector<std::string> kEmpty;
    auto it = table.find(v);
    return it == table.end() ? kEmpty : it->second;
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::unordered_map<std::string, std::vector<std::string>> out_;
  std::unordered_map<std::string, std::vector<std::string>> in_;
};

namespace detail {

inline bool valid_id(std::string_view id) {
  if (id.empty()) {
    return false;
  }
  for (char c : id) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline GraphPtr Graph::from_document(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error("malformed graph document: not valid JSON");
  }
  if (!doc.is_object()) {
    throw Error("malformed graph document: top level must be an object");
  }
  for (auto const& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges") {
      throw Error("malformed graph document: unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error("malformed graph document: missing \"vertices\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error("malformed graph document: missing \"edges\" array");
  }
  std::vector<std::string> vertices;
  for (auto const& v : doc["vertices"]) {
    if (!v.is_string() || !detail::valid_id(v.get<std::string>())) {
      throw Error("malformed vertex id " + v.dump());
    }
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (auto const& e : doc["edges"]) {
    if (!e.is_object()) {
      throw Error("malformed edge entry " + e.dump());
    }
    for (auto const& [key, _] : e.items()) {
      if (key != "id" && key != "src" && key != "dst") {
        throw Error("malformed edge entry: unknown key \"" + key + "\"");
      }
    }
    for (char const* key : {"id", "src", "dst"}) {
      if (!e.contains(key) || !e[key].is_string() ||
          !detail::valid_id(e[key].get<std::string>())) {
        throw Error("malformed edge entry " + e.dump() + ": bad \"" +
                    std::string(key) + "\"");
      }
    }
    edges.push_back(Edge{e["id"].get<std::string>(), e["src"].get<std::string>(),
                         e["dst"].get<std::string>()});
  }
  return make(std::move(vertices), std::move(edges));
}

//! Partition of the vertices into strongly connected components together
//! with the partial order:  X <= Y  iff some path starts in Y and ends in X.
class ComponentSet {
 public:
  ComponentSet(GraphPtr graph, std::vector<std::vector<std::string>> blocks,
               std::vector<std::vector<char>> leq)
      : graph_(std::move(graph)), blocks_(std::move(blocks)),
        leq_(std::move(leq)) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (auto const& v : blocks_[b]) {
        block_of_[v] = static_cast<int>(b);
      }
    }
  }

  GraphPtr const& graph() const { return graph_; }

  //! Blocks, each sorted; blocks ordered by their smallest vertex id.
  std::vector<std::vector<std::string>> const& blocks() const {
    return blocks_;
  }

  int block_of(std::string const& vertex) const {
    auto it = block_of_.find(vertex);
    if (it == block_of_.end()) {
      throw Error("unknown vertex \"" + vertex + "\"");
    }
    return it->second;
  }

  std::vector<std::string> const& block(int index) const {
    require_block(index);
    return blocks_[static_cast<std::size_t>(index)];
  }

  //! X <= Y: some path runs from Y down into X (reflexive).
  bool leq(int x, int y) const {
    require_block(x);
    require_block(y);
    return leq_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0;
  }

  void require_block(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= blocks_.size()) {
      throw Error("unknown block index " + std::to_string(index));
    }
  }

 private:
  GraphPtr graph_;
  std::vector<std::vector<std::string>> blocks_;
  std::vector<std::vector<char>> leq_;
  std::unordered_map<std::string, int> block_of_;
};

//! Tarjan's algorithm, iterative.  One pass over the graph; the component
//! order is closed afterwards over the condensation.
inline ComponentSet scc(GraphPtr const& g) {
  auto const& vs = g->vertices();
  std::size_t const n = vs.size();
  std::unordered_map<std::string, int> idx_of;
  for (std::size_t i = 0; i < n; ++i) {
    idx_of[vs[i]] = static_cast<int>(i);
  }

  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  int n_comps = 0;

  struct Frame {
    int v;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) {
      continue;
    }
    call.push_back({static_cast<int>(root), 0});
    while (!call.empty()) {
      Frame& f = call.back();
      int v = f.v;
      if (f.edge_pos == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      auto const& outs = g->out_edges(vs[static_cast<std::size_t>(v)]);
      bool descended = false;
      while (f.edge_pos < outs.size()) {
        int w = idx_of[g->edge(outs[f.edge_pos]).dst];
        ++f.edge_pos;
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      }
      if (descended) {
        continue;
      }
      if (lowlink[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = n_comps;
          if (w == v) {
            break;
          }
        }
        ++n_comps;
      }
      call.pop_back();
      if (!call.empty()) {
        lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      }
    }
  }

  // group vertices, order blocks by smallest member id
  std::vector<std::vector<std::string>> raw(static_cast<std::size_t>(n_comps));
  for (std::size_t i = 0; i < n; ++i) {
    raw[static_cast<std::size_t>(comp[i])].push_back(vs[i]);
  }
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return raw[a].front() < raw[b].front(); });
  std::vector<std::vector<std::string>> blocks;
  std::vector<int> renumber(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    renumber[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    blocks.push_back(raw[static_cast<std::size_t>(order[i])]);
  }

  // condensation successors: block -> blocks it has an edge into
  std::size_t const m = blocks.size();
  std::vector<std::vector<char>> reaches(m, std::vector<char>(m, 0));
  for (std::size_t b = 0; b < m; ++b) {
    reaches[b][b] = 1;
  }
  for (auto const& e : g->edges()) {
    auto a = static_cast<std::size_t>(
        renumber[static_cast<std::size_t>(comp[idx_of[e.src]])]);
    auto b = static_cast<std::size_t>(
        renumber[static_cast<std::size_t>(comp[idx_of[e.dst]])]);
    reaches[a][b] = 1;
  }
  // transitive closure over the condensation (acyclic, tiny next to |E|)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (!reaches[a][b] || a == b) {
          continue;
        }
        for (std::size_t c = 0; c < m; ++c) {
          if (reaches[b][c] && !reaches[a][c]) {
            reaches[a][c] = 1;
            changed = true;
          }
        }
      }
    }
  }
  // leq[x][y] iff y reaches x
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      leq[x][y] = reaches[y][x];
    }
  }
  return ComponentSet(g, std::move(blocks), std::move(leq));
}

inline bool component_order(ComponentSet const& cs, int x, int y) {
  return cs.leq(x, y);
}

//! Subgraph induced by a nonempty vertex subset: keeps exactly the edges
//! with both endpoints inside.
inline GraphPtr induced_subgraph(GraphPtr const& g,
                                 std::vector<std::string> const& subset) {
  if (subset.empty()) {
    throw Error("induced subgraph needs a nonempty vertex set");
  }
  std::unordered_set<std::string> keep;
  for (auto const& v : subset) {
    g->require_vertex(v);
    keep.insert(v);
  }
  std::vector<Edge> edges;
  for (auto const& e : g->edges()) {
    if (keep.count(e.src) && keep.count(e.dst)) {
      edges.push_back(e);
    }
  }
  return Graph::make(std::vector<std::string>(keep.begin(), keep.end()),
                     std::move(edges));
}

namespace detail {

//! Vertices reachable from `sources` by edges of `g` (reflexive).
inline std::unordered_set<std::string> reachable_from(
    Graph const& g, std::vector<std::string> const& sources) {
  std::unordered_set<std::string> seen(sources.begin(), sources.end());
  std::vector<std::string> queue(sources.begin(), sources.end());
  while (!queue.empty()) {
    std::string v = std::move(queue.back());
    queue.pop_back();
    for (auto const& eid : g.out_edges(v)) {
      auto const& w = g.edge(eid).dst;
      if (seen.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  return seen;
}

//! Vertices that sit on some cycle of positive length in `g`.
inline std::unordered_set<std::string> cycle_vertices(GraphPtr const& g) {
  std::unordered_set<std::string> result;
  ComponentSet cs = scc(g);
  for (auto const& block : cs.blocks()) {
    if (block.size() > 1) {
      result.insert(block.begin(), block.end());
    }
  }
  for (auto const& e : g->edges()) {
    if (e.src == e.dst) {
      result.insert(e.src);
    }
  }
  return result;
}

}  // namespace detail

inline bool is_acyclic(GraphPtr const& g) {
  return detail::cycle_vertices(g).empty();
}

//! True iff no cycle passes through `e`: e's component is {e} and e has no
//! loop edge.
inline bool is_acyclic_at(GraphPtr const& g, std::string const& e) {
  g->require_vertex(e);
  return detail::cycle_vertices(g).count(e) == 0;
}

//! Decidability layer over the path sets anchored at a vertex e:
//!   I_e  paths ending at e
//!   Q_e  paths whose only visit to e is their final vertex
//!   C_e  cycles at e (including the trivial one)
//!   C1_e first-return cycles at e (plus the trivial one)
struct FinitenessReport {
  std::string vertex;
  bool i_finite;
  bool q_finite;
  bool c_finite;
  bool c1_finite;
};

inline FinitenessReport finiteness(GraphPtr const& g, std::string const& e) {
  g->require_vertex(e);
  bool const c_finite = is_acyclic_at(g, e);

  bool q_finite = true;
  bool c1_finite = true;
  if (g->vertices().size() > 1) {
    std::vector<std::string> rest;
    for (auto const& v : g->vertices()) {
      if (v != e) {
        rest.push_back(v);
      }
    }
    GraphPtr punctured = induced_subgraph(g, rest);
    auto cyc = detail::cycle_vertices(punctured);

    std::vector<std::string> out_nbrs, in_nbrs;
    for (auto const& eid : g->out_edges(e)) {
      auto const& w = g->edge(eid).dst;
      if (w != e) {
        out_nbrs.push_back(w);
      }
    }
    for (auto const& eid : g->in_edges(e)) {
      auto const& w = g->edge(eid).src;
      if (w != e) {
        in_nbrs.push_back(w);
      }
    }

    auto from_out = detail::reachable_from(*punctured, out_nbrs);
    // reaches_in: vertices of the punctured graph that reach an in-neighbor
    std::unordered_set<std::string> reaches_in;
    for (auto const& v : punctured->vertices()) {
      auto r = detail::reachable_from(*punctured, {v});
      for (auto const& t : in_nbrs) {
        if (r.count(t)) {
          reaches_in.insert(v);
          break;
        }
      }
    }
    for (auto const& v : cyc) {
      if (reaches_in.count(v)) {
        q_finite = false;
        if (from_out.count(v)) {
          c1_finite = false;
        }
      }
    }
  }
  // single-vertex graphs: every positive cycle is a product of loops, so
  // Q_e = {e} and C1_e = {e} + loops, both finite
  return FinitenessReport{e, q_finite && c_finite, q_finite, c_finite,
                          c1_finite};
}

//! Component-level analogue for the sets I_A and Q_A.
struct ComponentFiniteness {
  bool i_finite;
  bool q_finite;
};

inline ComponentFiniteness component_finiteness(ComponentSet const& cs,
                                                int block) {
  cs.require_block(block);
  auto const& g = cs.graph();
  auto const& members = cs.block(block);
  std::unordered_set<std::string> in_block(members.begin(), members.end());

  bool q_finite = true;
  if (in_block.size() < g->vertices().size()) {
    std::vector<std::string> rest;
    for (auto const& v : g->vertices()) {
      if (!in_block.count(v)) {
        rest.push_back(v);
      }
    }
    GraphPtr punctured = induced_subgraph(g, rest);
    auto cyc = detail::cycle_vertices(punctured);
    std::vector<std::string> in_nbrs;
    for (auto const& v : members) {
      for (auto const& eid : g->in_edges(v)) {
        auto const& w = g->edge(eid).src;
        if (!in_block.count(w)) {
          in_nbrs.push_back(w);
        }
      }
    }
    for (auto const& v : cyc) {
      auto r = detail::reachable_from(*punctured, {v});
      bool hits = false;
      for (auto const& t : in_nbrs) {
        if (r.count(t)) {
          hits = true;
          break;
        }
      }
      if (hits) {
        q_finite = false;
        break;
      }
    }
  }

  // Path(E_A) is finite iff the induced subgraph is acyclic, which for a
  // strongly connected block means a single vertex without a loop.
  bool block_acyclic = members.size() == 1;
  if (block_acyclic) {
    for (auto const& eid : g->out_edges(members.front())) {
      if (g->edge(eid).dst == members.front()) {
        block_acyclic = false;
        break;
      }
    }
  }
  return ComponentFiniteness{q_finite && block_acyclic, q_finite};
}

}  // namespace gis
