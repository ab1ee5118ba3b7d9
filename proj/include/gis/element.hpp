#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/error.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

//! Zero, or a canonical pair (u, v) of paths with r(u) = r(v), denoting the
//! formal product u v^{-1}.  Equality is structural on the canonical pair;
//! multiplication only ever builds canonical pairs, so no normalization pass
//! exists anywhere.  Zero is graph-tagged like every other element, so
//! cross-graph arithmetic is an error instead of a silent Zero.
class GisElement {
 public:
  static GisElement zero(GraphPtr graph) {
    return GisElement(std::move(graph));
  }

  static GisElement make(Path u, Path v) {
    detail::require_same_graph(u.graph(), v.graph());
    if (u.range() != v.range()) {
      throw Error("element needs matching ranges: \"" + u.range() +
                  "\" vs \"" + v.range() + "\"");
    }
    GraphPtr g = u.graph();
    return GisElement(std::move(g),
                      std::make_pair(std::move(u), std::move(v)));
  }

  //! The idempotent u u^{-1}.
  static GisElement idempotent(Path u) {
    Path copy = u;
    return make(std::move(copy), std::move(u));
  }

  //! The idempotent of a vertex: the vertex path paired with itself.
  static GisElement vertex_idempotent(GraphPtr const& g,
                                      std::string const& vertex) {
    return idempotent(Path::at_vertex(g, vertex));
  }

  GraphPtr const& graph() const { return graph_; }
  bool is_zero() const { return !pair_.has_value(); }

  Path const& u() const { return nonzero().first; }
  Path const& v() const { return nonzero().second; }

  //! Range vertex shared by u and v; only nonzero elements have one.
  std::string const& range() const { return u().range(); }

  friend bool operator==(GisElement const& a, GisElement const& b) {
    if (a.graph_ != b.graph_ && !(*a.graph_ == *b.graph_)) {
      return false;
    }
    return a.pair_ == b.pair_;
  }

 private:
  explicit GisElement(GraphPtr graph,
                      std::optional<std::pair<Path, Path>> pair = std::nullopt)
      : graph_(std::move(graph)), pair_(std::move(pair)) {}

  std::pair<Path, Path> const& nonzero() const {
    if (!pair_) {
      throw Error("zero element has no path components");
    }
    return *pair_;
  }

  GraphPtr graph_;
  std::optional<std::pair<Path, Path>> pair_;
};

//! Prefix-cancellation product:
//!   (u1 v1^{-1})(u2 v2^{-1}) = u1 w v2^{-1}   if u2 = v1 w,
//!                              u1 (v2 w)^{-1} if v1 = u2 w,
//!                              0              otherwise.
inline GisElement multiply(GisElement const& x, GisElement const& y) {
  detail::require_same_graph(x.graph(), y.graph());
  if (x.is_zero() || y.is_zero()) {
    return GisElement::zero(x.graph());
  }
  if (auto w = strip_prefix(x.v(), y.u())) {
    return GisElement::make(concat(x.u(), *w), y.v());
  }
  if (auto w = strip_prefix(y.u(), x.v())) {
    return GisElement::make(x.u(), concat(y.v(), *w));
  }
  return GisElement::zero(x.graph());
}

inline GisElement inverse(GisElement const& x) {
  if (x.is_zero()) {
    return x;
  }
  return GisElement::make(x.v(), x.u());
}

inline bool is_idempotent(GisElement const& x) {
  return x.is_zero() || x.u() == x.v();
}

enum class GreenRelation { L, R, H, D, J };

inline GreenRelation parse_relation(std::string_view name) {
  if (name == "L") return GreenRelation::L;
  if (name == "R") return GreenRelation::R;
  if (name == "H") return GreenRelation::H;
  if (name == "D") return GreenRelation::D;
  if (name == "J") return GreenRelation::J;
  throw Error("unknown Green relation \"" + std::string(name) +
              "\" (expected one of L, R, H, D, J)");
}

inline std::string_view relation_name(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::L: return "L";
    case GreenRelation::R: return "R";
    case GreenRelation::H: return "H";
    case GreenRelation::D: return "D";
    case GreenRelation::J: return "J";
  }
  throw Error("unreachable relation");
}

//! Green predicates in canonical-pair form.  Zero relates only to Zero.
//! L compares the v-paths (x^{-1}x determines them), R the u-paths, H both;
//! D compares range vertices, J their strongly connected components.
inline bool green(GreenRelation rel, GisElement const& x, GisElement const& y,
                  ComponentSet const& components) {
  detail::require_same_graph(x.graph(), y.graph());
  if (x.is_zero() || y.is_zero()) {
    return x.is_zero() == y.is_zero();
  }
  switch (rel) {
    case GreenRelation::L: return x.v() == y.v();
    case GreenRelation::R: return x.u() == y.u();
    case GreenRelation::H: return x.v() == y.v() && x.u() == y.u();
    case GreenRelation::D: return x.range() == y.range();
    case GreenRelation::J:
      return components.block_of(x.range()) == components.block_of(y.range());
  }
  throw Error("unreachable relation");
}

//! Convenience form; computes the component structure on demand when the
//! J relation asks for it (the others never consult it).
inline bool green(GreenRelation rel, GisElement const& x, GisElement const& y) {
  detail::require_same_graph(x.graph(), y.graph());
  if (x.is_zero() || y.is_zero()) {
    return x.is_zero() == y.is_zero();
  }
  switch (rel) {
    case GreenRelation::L: return x.v() == y.v();
    case GreenRelation::R: return x.u() == y.u();
    case GreenRelation::H: return x.v() == y.v() && x.u() == y.u();
    case GreenRelation::D: return x.range() == y.range();
    case GreenRelation::J: return green(rel, x, y, scc(x.graph()));
  }
  throw Error("unreachable relation");
}

//! The unique vertex in the D-class of a nonzero element.
inline std::string const& dclass_vertex(GisElement const& x) {
  if (x.is_zero()) {
    throw Error("zero element has no class vertex");
  }
  return x.range();
}

//! All nonzero elements u v^{-1} with r(u) = r(v) = e and both path lengths
//! within the bound; u-major order over the I_e enumeration order.
inline std::vector<GisElement> enumerate_dclass(GraphPtr const& g,
                                                std::string const& e,
                                                std::size_t bound) {
  PathSet ie = enumerate_paths(g, PathSetKind::I_e, e, bound);
  std::vector<GisElement> out;
  out.reserve(ie.members.size() * ie.members.size());
  for (auto const& u : ie.members) {
    for (auto const& v : ie.members) {
      out.push_back(GisElement::make(u, v));
    }
  }
  return out;
}

//! Union of the bounded D-class slices over the block's vertices, vertices
//! in lexicographic order.
inline std::vector<GisElement> enumerate_jclass(
    GraphPtr const& g, std::vector<std::string> block, std::size_t bound) {
  std::sort(block.begin(), block.end());
  std::vector<GisElement> out;
  for (auto const& e : block) {
    auto part = enumerate_dclass(g, e, bound);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

//! Element literal: "0", or "<path>;<path>" denoting u v^{-1}.  Whitespace
//! is insignificant.
inline GisElement parse_element(GraphPtr const& g, std::string_view literal) {
  std::string compact;
  for (char c : literal) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      compact += c;
    }
  }
  if (compact == "0") {
    return GisElement::zero(g);
  }
  std::size_t semi = compact.find(';');
  if (semi == std::string::npos) {
    throw Error("element literal \"" + compact +
                "\" needs the form \"u;v\" or \"0\"");
  }
  if (compact.find(';', semi + 1) != std::string::npos) {
    throw Error("element literal \"" + compact + "\" has more than one ';'");
  }
  Path u = parse_path(g, std::string_view(compact).substr(0, semi));
  Path v = parse_path(g, std::string_view(compact).substr(semi + 1));
  return GisElement::make(std::move(u), std::move(v));
}

inline std::string to_literal(GisElement const& x) {
  if (x.is_zero()) {
    return "0";
  }
  return to_literal(x.u()) + ";" + to_literal(x.v());
}

}  // namespace gis
