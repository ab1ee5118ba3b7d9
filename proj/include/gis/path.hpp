#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gis/error.hpp"
#include "gis/graph.hpp"

namespace gis {

//! A vertex (length 0) or a composable sequence of edges.  Immutable; tagged
//! with its graph so cross-graph operations fail loudly instead of silently.
class Path {
 public:
  //! The trivial path sitting at a vertex.
  static Path at_vertex(GraphPtr graph, std::string vertex) {
    graph->require_vertex(vertex);
    return Path(std::move(graph), vertex, {}, vertex);
  }

  //! A positive-length path from its edge-id sequence.
  static Path along(GraphPtr graph, std::vector<std::string> edge_ids) {
    if (edge_ids.empty()) {
      throw Error("a positive-length path needs at least one edge");
    }
    for (std::size_t i = 0; i + 1 < edge_ids.size(); ++i) {
      auto const& here = graph->edge(edge_ids[i]);
      auto const& next = graph->edge(edge_ids[i + 1]);
      if (here.dst != next.src) {
        throw Error("edges \"" + here.id + "\" and \"" + next.id +
                    "\" do not compose");
      }
    }
    std::string base = graph->edge(edge_ids.front()).src;
    std::string range = graph->edge(edge_ids.back()).dst;
    return Path(std::move(graph), std::move(base), std::move(edge_ids),
                std::move(range));
  }

  GraphPtr const& graph() const { return graph_; }
  std::string const& source() const { return base_; }
  std::string const& range() const { return range_; }
  std::vector<std::string> const& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool trivial() const { return edges_.empty(); }

  //! Vertex visited after the first `index` edges (0 = the source).
  std::string const& vertex_at(std::size_t index) const {
    if (index > edges_.size()) {
      throw Error("vertex index " + std::to_string(index) +
                  " beyond path length");
    }
    if (index == 0) {
      return base_;
    }
    return graph_->edge(edges_[index - 1]).dst;
  }

  //! Contiguous piece [from, to) of the edge list, as a path.
  Path slice(std::size_t from, std::size_t to) const {
    if (from > to || to > edges_.size()) {
      throw Error("bad path slice bounds");
    }
    if (from == to) {
      return at_vertex(graph_, vertex_at(from));
    }
    return along(graph_, std::vector<std::string>(edges_.begin() + from,
                                                  edges_.begin() + to));
  }

  friend bool operator==(Path const& a, Path const& b) {
    if (a.graph_ != b.graph_ && !(*a.graph_ == *b.graph_)) {
      return false;
    }
    return a.base_ == b.base_ && a.edges_ == b.edges_;
  }

 private:
  Path(GraphPtr graph, std::string base, std::vector<std::string> edges,
       std::string range)
      : graph_(std::move(graph)), base_(std::move(base)),
        edges_(std::move(edges)), range_(std::move(range)) {}

  GraphPtr graph_;
  std::string base_;
  std::vector<std::string> edges_;
  std::string range_;
};

namespace detail {

inline void require_same_graph(GraphPtr const& a, GraphPtr const& b) {
  if (a != b && !(*a == *b)) {
    throw Error("operands belong to different graphs");
  }
}

}  // namespace detail

//! Deterministic path order: shorter first, then edge sequence, then source.
inline bool path_less(Path const& a, Path const& b) {
  if (a.length() != b.length()) {
    return a.length() < b.length();
  }
  if (a.edges() != b.edges()) {
    return a.edges() < b.edges();
  }
  return a.source() < b.source();
}

//! Path composition; vertex paths are two-sided identities at their vertex.
inline Path concat(Path const& p, Path const& q) {
  detail::require_same_graph(p.graph(), q.graph());
  if (p.range() != q.source()) {
    throw Error("paths do not compose: range \"" + p.range() +
                "\" vs source \"" + q.source() + "\"");
  }
  if (p.trivial()) {
    return q;
  }
  if (q.trivial()) {
    return p;
  }
  std::vector<std::string> edges = p.edges();
  edges.insert(edges.end(), q.edges().begin(), q.edges().end());
  return Path::along(p.graph(), std::move(edges));
}

//! If q = concat(p, w) for some w, returns w; absence means "not a prefix".
inline std::optional<Path> strip_prefix(Path const& p, Path const& q) {
  detail::require_same_graph(p.graph(), q.graph());
  if (p.source() != q.source() || p.length() > q.length()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p.edges()[i] != q.edges()[i]) {
      return std::nullopt;
    }
  }
  return q.slice(p.length(), q.length());
}

inline bool is_prefix(Path const& p, Path const& q) {
  return strip_prefix(p, q).has_value();
}

//! Path literal: "@v" is the vertex path at v; otherwise edge ids joined
//! by "." (e.g. "x.y").
inline Path parse_path(GraphPtr const& g, std::string_view literal) {
  if (literal.empty()) {
    throw Error("empty path literal");
  }
  if (literal.front() == '@') {
    std::string v(literal.substr(1));
    if (!g->has_vertex(v)) {
      throw Error("unknown vertex \"" + v + "\" in path literal");
    }
    return Path::at_vertex(g, v);
  }
  std::vector<std::string> edge_ids;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = literal.find('.', start);
    std::string token(literal.substr(
        start, dot == std::string_view::npos ? dot : dot - start));
    if (token.empty()) {
      throw Error("empty edge id in path literal \"" + std::string(literal) +
                  "\"");
    }
    if (!g->has_edge(token)) {
      throw Error("unknown edge \"" + token + "\" in path literal");
    }
    edge_ids.push_back(std::move(token));
    if (dot == std::string_view::npos) {
      break;
    }
    start = dot + 1;
  }
  return Path::along(g, std::move(edge_ids));
}

inline std::string to_literal(Path const& p) {
  if (p.trivial()) {
    return "@" + p.source();
  }
  std::string out;
  for (auto const& e : p.edges()) {
    if (!out.empty()) {
      out += '.';
    }
    out += e;
  }
  return out;
}

//! The path families anchored at a vertex e or a component A:
//!   I_e  paths u with r(u) = e
//!   Q_e  paths whose only visit to e is their final vertex
//!   C_e  cycles at e, the trivial one included
//!   C1_e the vertex e plus cycles at e with no interior visit of e
//!   I_A  paths u with r(u) in A
//!   Q_A  paths whose only visit to A is their final vertex
enum class PathSetKind { I_e, Q_e, C_e, C1_e, I_A, Q_A };

inline std::string_view kind_name(PathSetKind kind) {
  switch (kind) {
    case PathSetKind::I_e: return "I_e";
    case PathSetKind::Q_e: return "Q_e";
    case PathSetKind::C_e: return "C_e";
    case PathSetKind::C1_e: return "C1_e";
    case PathSetKind::I_A: return "I_A";
    case PathSetKind::Q_A: return "Q_A";
  }
  throw Error("unreachable path-set kind");
}

inline bool kind_is_component(PathSetKind kind) {
  return kind == PathSetKind::I_A || kind == PathSetKind::Q_A;
}

//! All members of one path family up to a length bound, in deterministic
//! order (length first, then edge sequence, then source vertex).  The
//! `complete` flag is exact: it derives from the finiteness analysis, never
//! from the enumeration running dry.
struct PathSet {
  PathSetKind kind;
  std::vector<std::string> anchor;  // one vertex, or the block's vertices
  std::size_t bound;
  std::vector<Path> members;
  bool complete;
};

namespace detail {

//! Levelwise backward growth: all paths of length <= bound whose range lies
//! in `targets`, subject to `first_visit` (interior and source must avoid
//! `targets`).  Result ordered by (length, edge sequence, source).
inline std::vector<Path> grow_backward(
    GraphPtr const& g, std::unordered_set<std::string> const& targets,
    bool first_visit, std::size_t bound) {
  std::vector<Path> result;
  std::vector<Path> level;
  std::vector<std::string> roots;
  for (auto const& v : g->vertices()) {
    if (targets.count(v)) {
      roots.push_back(v);
    }
  }
  for (auto const& v : roots) {
    level.push_back(Path::at_vertex(g, v));
  }
  result.insert(result.end(), level.begin(), level.end());
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Path> next;
    for (auto const& p : level) {
      for (auto const& eid : g->in_edges(p.source())) {
        auto const& src = g->edge(eid).src;
        if (first_visit && targets.count(src)) {
          continue;
        }
        std::vector<std::string> edges;
        edges.reserve(p.length() + 1);
        edges.push_back(eid);
        edges.insert(edges.end(), p.edges().begin(), p.edges().end());
        next.push_back(Path::along(g, std::move(edges)));
      }
    }
    std::sort(next.begin(), next.end(), path_less);
    result.insert(result.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return result;
}

//! Levelwise forward growth from `e`: cycles at e of length <= bound.  With
//! `first_return`, interior visits of e are forbidden.  Includes the trivial
//! cycle.  Ordered by (length, edge sequence).
inline std::vector<Path> grow_cycles(GraphPtr const& g, std::string const& e,
                                     bool first_return, std::size_t bound) {
  std::vector<Path> result{Path::at_vertex(g, e)};
  std::vector<Path> level{Path::at_vertex(g, e)};
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Path> next;
    std::vector<Path> found;
    for (auto const& p : level) {
      for (auto const& eid : g->out_edges(p.range())) {
        auto const& dst = g->edge(eid).dst;
        std::vector<std::string> edges = p.edges();
        edges.push_back(eid);
        Path q = Path::along(g, std::move(edges));
        if (dst == e) {
          found.push_back(q);
          if (!first_return && len < bound) {
            next.push_back(std::move(q));
          }
        } else if (len < bound) {
          next.push_back(std::move(q));
        }
      }
    }
    std::sort(found.begin(), found.end(), path_less);
    result.insert(result.end(), found.begin(), found.end());
    std::sort(next.begin(), next.end(), path_less);
    level = std::move(next);
  }
  return result;
}

inline std::vector<Path> members_of(GraphPtr const& g, PathSetKind kind,
                                    std::vector<std::string> const& anchor,
                                    std::size_t bound) {
  std::unordered_set<std::string> targets(anchor.begin(), anchor.end());
  switch (kind) {
    case PathSetKind::I_e:
    case PathSetKind::I_A:
      return grow_backward(g, targets, /*first_visit=*/false, bound);
    case PathSetKind::Q_e:
    case PathSetKind::Q_A:
      return grow_backward(g, targets, /*first_visit=*/true, bound);
    case PathSetKind::C_e:
      return grow_cycles(g, anchor.front(), /*first_return=*/false, bound);
    case PathSetKind::C1_e:
      return grow_cycles(g, anchor.front(), /*first_return=*/true, bound);
  }
  throw Error("unreachable path-set kind");
}

inline bool family_finite(GraphPtr const& g, PathSetKind kind,
                          std::vector<std::string> const& anchor) {
  if (kind_is_component(kind)) {
    // Rebuild the component view to pull the exact analysis for this block.
    ComponentSet cs = scc(g);
    int block = cs.block_of(anchor.front());
    ComponentFiniteness fin = component_finiteness(cs, block);
    return kind == PathSetKind::I_A ? fin.i_finite : fin.q_finite;
  }
  FinitenessReport fin = finiteness(g, anchor.front());
  switch (kind) {
    case PathSetKind::I_e: return fin.i_finite;
    case PathSetKind::Q_e: return fin.q_finite;
    case PathSetKind::C_e: return fin.c_finite;
    case PathSetKind::C1_e: return fin.c1_finite;
    default: throw Error("unreachable path-set kind");
  }
}

}  // namespace detail

//! Enumerates one path family.  For a finite family every member is shorter
//! than the vertex count, so probing slightly past the bound settles the
//! `complete` flag exactly.
inline PathSet enumerate_paths(GraphPtr const& g, PathSetKind kind,
                               std::vector<std::string> anchor,
                               std::size_t bound) {
  if (anchor.empty()) {
    throw Error("path-set anchor must be nonempty");
  }
  if (!kind_is_component(kind) && anchor.size() != 1) {
    throw Error("vertex-anchored path set takes a single vertex");
  }
  for (auto const& v : anchor) {
    g->require_vertex(v);
  }
  std::sort(anchor.begin(), anchor.end());

  bool finite = detail::family_finite(g, kind, anchor);
  bool complete = false;
  std::vector<Path> members;
  if (!finite) {
    members = detail::members_of(g, kind, anchor, bound);
  } else {
    std::size_t probe = std::max(bound, g->vertices().size() + 1);
    members = detail::members_of(g, kind, anchor, probe);
    complete = true;
    while (!members.empty() && members.back().length() > bound) {
      members.pop_back();
      complete = false;
    }
  }
  return PathSet{kind, std::move(anchor), bound, std::move(members), complete};
}

inline PathSet enumerate_paths(GraphPtr const& g, PathSetKind kind,
                               std::string const& vertex, std::size_t bound) {
  return enumerate_paths(g, kind, std::vector<std::string>{vertex}, bound);
}

inline PathSet enumerate_paths(GraphPtr const& g, PathSetKind kind,
                               ComponentSet const& cs, int block,
                               std::size_t bound) {
  return enumerate_paths(g, kind, cs.block(block), bound);
}

//! Splits u (with r(u) = e) at its first visit of e: u = u1 u2 with u1 the
//! part strictly before e is ever reached and u2 the cycle remainder.  The
//! split is unique with u1 avoiding e internally and u2 a cycle at e.
inline std::pair<Path, Path> factor_at_vertex(Path const& u,
                                              std::string const& e) {
  u.graph()->require_vertex(e);
  if (u.range() != e) {
    throw Error("path range \"" + u.range() + "\" is not \"" + e + "\"");
  }
  std::size_t cut = 0;
  while (u.vertex_at(cut) != e) {
    ++cut;
  }
  return {u.slice(0, cut), u.slice(cut, u.length())};
}

//! Component analogue: splits u (with r(u) in A) at its first visit of any
//! vertex of A; the tail then never leaves A, so it is a path of the
//! induced subgraph.
inline std::pair<Path, Path> factor_at_component(
    Path const& u, std::vector<std::string> const& block) {
  std::unordered_set<std::string> in_block(block.begin(), block.end());
  if (!in_block.count(u.range())) {
    throw Error("path range \"" + u.range() + "\" is outside the component");
  }
  std::size_t cut = 0;
  while (!in_block.count(u.vertex_at(cut))) {
    ++cut;
  }
  return {u.slice(0, cut), u.slice(cut, u.length())};
}

//! Cuts a cycle at e at every interior visit of e; the factors are exactly
//! the first-return cycles composing u, and the list is empty iff u is the
//! vertex itself.
inline std::vector<Path> cycle_factorize(Path const& u, std::string const& e) {
  u.graph()->require_vertex(e);
  if (u.source() != e || u.range() != e) {
    throw Error("not a cycle at \"" + e + "\"");
  }
  std::vector<Path> factors;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= u.length(); ++i) {
    if (u.vertex_at(i) == e) {
      factors.push_back(u.slice(start, i));
      start = i;
    }
  }
  return factors;
}

}  // namespace gis
