#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gis/brandt.hpp"
#include "gis/element.hpp"
#include "gis/error.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "gis/polycyclic.hpp"

namespace gis {

//! Everything the local structure maps need around one vertex e: the
//! first-return cycles C1_e (their literals form the label alphabet of the
//! local polycyclic monoid) and the first-visit paths Q_e (the Brandt index
//! set), each materialized up to a bound with an exact completeness flag.
class LocalStructure {
 public:
  LocalStructure(GraphPtr graph, std::string vertex, std::size_t bound)
      : graph_(std::move(graph)), vertex_(std::move(vertex)), bound_(bound),
        c1_(enumerate_paths(graph_, PathSetKind::C1_e, vertex_, bound)),
        q_(enumerate_paths(graph_, PathSetKind::Q_e, vertex_, bound)) {
    std::vector<std::string> labels;
    for (auto const& cycle : c1_.members) {
      if (cycle.trivial()) {
        continue;
      }
      std::string label = to_literal(cycle);
      label_to_cycle_.emplace(label, cycle);
      labels.push_back(std::move(label));
    }
    alphabet_ = Alphabet::make(std::move(labels));
    for (auto const& q : q_.members) {
      index_to_path_.emplace(to_literal(q), q);
    }
  }

  GraphPtr const& graph() const { return graph_; }
  std::string const& vertex() const { return vertex_; }
  std::size_t bound() const { return bound_; }
  PathSet const& c1() const { return c1_; }
  PathSet const& q() const { return q_; }

  //! Labels of the local polycyclic monoid: the nontrivial first-return
  //! cycles themselves, by literal.
  AlphabetPtr const& alphabet() const { return alphabet_; }

  //! The Brandt extension the local D-class maps into, indexed by the
  //! materialized Q_e literals.
  BrandtSemigroup<PolySemigroup> brandt() const {
    std::vector<std::string> indices;
    indices.reserve(index_to_path_.size());
    for (auto const& [literal, _] : index_to_path_) {
      indices.push_back(literal);
    }
    return BrandtSemigroup<PolySemigroup>(std::move(indices),
                                          PolySemigroup(alphabet_));
  }

  Path const& cycle_of_label(std::string const& label) const {
    auto it = label_to_cycle_.find(label);
    if (it == label_to_cycle_.end()) {
      throw Error("label \"" + label + "\" is not a materialized cycle");
    }
    return it->second;
  }

  Path const& path_of_index(std::string const& literal) const {
    auto it = index_to_path_.find(literal);
    if (it == index_to_path_.end()) {
      throw Error("index \"" + literal +
                  "\" is not a materialized first-visit path");
    }
    return it->second;
  }

  bool has_label(std::string const& label) const {
    return label_to_cycle_.count(label) > 0;
  }

  bool has_index(std::string const& literal) const {
    return index_to_path_.count(literal) > 0;
  }

 private:
  GraphPtr graph_;
  std::string vertex_;
  std::size_t bound_;
  PathSet c1_;
  PathSet q_;
  AlphabetPtr alphabet_;
  std::map<std::string, Path> label_to_cycle_;
  std::map<std::string, Path> index_to_path_;
};

namespace detail {

//! Cycle factors of u as a label word; out-of-alphabet factors mean the
//! bound was too small (or, were the alphabet complete, an impossibility).
inline PolyElement::Word factor_word(LocalStructure const& ls, Path const& u) {
  PolyElement::Word word;
  for (auto const& factor : cycle_factorize(u, ls.vertex())) {
    std::string label = to_literal(factor);
    if (!ls.has_label(label)) {
      if (ls.c1().complete) {
        throw Error("cycle factor \"" + label +
                    "\" missing from a complete alphabet");
      }
      throw BoundError("cycle factor \"" + label +
                       "\" is beyond the materialized bound " +
                       std::to_string(ls.bound()));
    }
    word.push_back(std::move(label));
  }
  return word;
}

}  // namespace detail

//! The local cycle semigroup <C_e> = {u v^{-1} | u, v in C_e} + 0 maps onto
//! the polycyclic monoid over the first-return labels: each cycle factors
//! uniquely into first-return cycles, and the factor lists are the words.
inline PolyElement cycles_to_poly(LocalStructure const& ls,
                                  GisElement const& x) {
  detail::require_same_graph(ls.graph(), x.graph());
  if (x.is_zero()) {
    return PolyElement::zero(ls.alphabet());
  }
  for (auto const* side : {&x.u(), &x.v()}) {
    if (side->source() != ls.vertex() || side->range() != ls.vertex()) {
      throw Error("element is outside the cycle subsemigroup at \"" +
                  ls.vertex() + "\"");
    }
  }
  return PolyElement::make(ls.alphabet(), detail::factor_word(ls, x.u()),
                           detail::factor_word(ls, x.v()));
}

inline GisElement poly_to_cycles(LocalStructure const& ls,
                                 PolyElement const& p) {
  detail::require_same_alphabet(ls.alphabet(), p.alphabet());
  if (p.is_zero()) {
    return GisElement::zero(ls.graph());
  }
  auto assemble = [&](PolyElement::Word const& word) {
    Path path = Path::at_vertex(ls.graph(), ls.vertex());
    for (auto const& label : word) {
      path = concat(path, ls.cycle_of_label(label));
    }
    return path;
  };
  return GisElement::make(assemble(p.pos()), assemble(p.neg()));
}

//! The D-class map h: D_e^0 -> B0_{Q_e}(P_lambda),
//!   h(u v^{-1}) = (u1, f(u2 v2^{-1}), v1)
//! where u = u1 u2 and v = v1 v2 split at the first visit of e.
inline BrandtElement<PolyElement> dclass_to_brandt(LocalStructure const& ls,
                                                   GisElement const& x) {
  detail::require_same_graph(ls.graph(), x.graph());
  if (x.is_zero()) {
    return BrandtElement<PolyElement>::zero();
  }
  if (x.range() != ls.vertex()) {
    throw Error("element is outside the D-class of \"" + ls.vertex() + "\"");
  }
  auto [u1, u2] = factor_at_vertex(x.u(), ls.vertex());
  auto [v1, v2] = factor_at_vertex(x.v(), ls.vertex());
  for (auto const* head : {&u1, &v1}) {
    if (!ls.has_index(to_literal(*head))) {
      if (ls.q().complete) {
        throw Error("first-visit path \"" + to_literal(*head) +
                    "\" missing from a complete index set");
      }
      throw BoundError("first-visit path \"" + to_literal(*head) +
                       "\" is beyond the materialized bound " +
                       std::to_string(ls.bound()));
    }
  }
  PolyElement payload = cycles_to_poly(ls, GisElement::make(u2, v2));
  return BrandtElement<PolyElement>::triple(to_literal(u1), std::move(payload),
                                            to_literal(v1));
}

inline GisElement brandt_to_dclass(LocalStructure const& ls,
                                   BrandtElement<PolyElement> const& t) {
  if (t.is_zero()) {
    return GisElement::zero(ls.graph());
  }
  Path const& u1 = ls.path_of_index(t.left());
  Path const& v1 = ls.path_of_index(t.right());
  GisElement tail = poly_to_cycles(ls, t.payload());
  return GisElement::make(concat(u1, tail.u()), concat(v1, tail.v()));
}

//! Everything the J-class embedding needs around one strongly connected
//! component A: the induced subgraph E_A and the first-visit paths Q_A.
class JClassEmbedding {
 public:
  JClassEmbedding(GraphPtr graph, std::vector<std::string> block,
                  std::size_t bound)
      : graph_(std::move(graph)), block_(std::move(block)), bound_(bound),
        induced_(induced_subgraph(graph_, block_)),
        q_(enumerate_paths(graph_, PathSetKind::Q_A, block_, bound)) {
    std::sort(block_.begin(), block_.end());
    for (auto const& q : q_.members) {
      index_to_path_.emplace(to_literal(q), q);
    }
  }

  JClassEmbedding(GraphPtr const& graph, ComponentSet const& cs, int block,
                  std::size_t bound)
      : JClassEmbedding(graph, cs.block(block), bound) {}

  GraphPtr const& graph() const { return graph_; }
  std::vector<std::string> const& block() const { return block_; }
  GraphPtr const& induced() const { return induced_; }
  std::size_t bound() const { return bound_; }
  PathSet const& q() const { return q_; }

  //! The Brandt extension of G(E_A) the J-class embeds into.
  BrandtSemigroup<GisSemigroup> brandt() const {
    std::vector<std::string> indices;
    indices.reserve(index_to_path_.size());
    for (auto const& [literal, _] : index_to_path_) {
      indices.push_back(literal);
    }
    return BrandtSemigroup<GisSemigroup>(std::move(indices),
                                         GisSemigroup(induced_));
  }

  bool has_index(std::string const& literal) const {
    return index_to_path_.count(literal) > 0;
  }

  Path const& path_of_index(std::string const& literal) const {
    auto it = index_to_path_.find(literal);
    if (it == index_to_path_.end()) {
      throw Error("index \"" + literal +
                  "\" is not a materialized first-visit path");
    }
    return it->second;
  }

 private:
  GraphPtr graph_;
  std::vector<std::string> block_;
  std::size_t bound_;
  GraphPtr induced_;
  PathSet q_;
  std::map<std::string, Path> index_to_path_;
};

namespace detail {

//! Rebuilds a path on another graph carrying the same edge ids.
inline Path transplant(GraphPtr const& target, Path const& p) {
  if (p.trivial()) {
    return Path::at_vertex(target, p.source());
  }
  return Path::along(target, p.edges());
}

}  // namespace detail

//! The J-class embedding J_A^0 -> B0_{Q_A}(G(E_A)),
//!   u v^{-1} |-> (u1, u2 v2^{-1}, v1)
//! splitting u and v at their first visit of A.  A path that starts and
//! ends inside a strongly connected component never leaves it, so the
//! tails are always paths of the induced subgraph.
inline BrandtElement<GisElement> jclass_to_brandt(JClassEmbedding const& emb,
                                                  GisElement const& x) {
  detail::require_same_graph(emb.graph(), x.graph());
  if (x.is_zero()) {
    return BrandtElement<GisElement>::zero();
  }
  bool in_block = std::binary_search(emb.block().begin(), emb.block().end(),
                                     x.range());
  if (!in_block) {
    throw Error("element is outside the J-class of the component");
  }
  auto [u1, u2] = factor_at_component(x.u(), emb.block());
  auto [v1, v2] = factor_at_component(x.v(), emb.block());
  for (auto const* head : {&u1, &v1}) {
    if (!emb.has_index(to_literal(*head))) {
      if (emb.q().complete) {
        throw Error("first-visit path \"" + to_literal(*head) +
                    "\" missing from a complete index set");
      }
      throw BoundError("first-visit path \"" + to_literal(*head) +
                       "\" is beyond the materialized bound " +
                       std::to_string(emb.bound()));
    }
  }
  GisElement payload = GisElement::make(detail::transplant(emb.induced(), u2),
                                        detail::transplant(emb.induced(), v2));
  return BrandtElement<GisElement>::triple(to_literal(u1), std::move(payload),
                                           to_literal(v1));
}

//! Partial inverse of the embedding: defined exactly on the image.  A triple
//! lies outside the image precisely when an index path does not attach to
//! its payload side's source vertex.
inline GisElement brandt_to_jclass(JClassEmbedding const& emb,
                                   BrandtElement<GisElement> const& t) {
  if (t.is_zero()) {
    return GisElement::zero(emb.graph());
  }
  Path const& u1 = emb.path_of_index(t.left());
  Path const& v1 = emb.path_of_index(t.right());
  GisElement const& payload = t.payload();
  detail::require_same_graph(emb.induced(), payload.graph());
  if (payload.is_zero()) {
    throw Error("zero payload is not a triple (Rees quotient)");
  }
  if (u1.range() != payload.u().source() ||
      v1.range() != payload.v().source()) {
    throw Error("triple is outside the embedded image: index \"" +
                to_literal(u1.range() != payload.u().source() ? u1 : v1) +
                "\" does not attach to its payload path");
  }
  Path u = concat(u1, detail::transplant(emb.graph(), payload.u()));
  Path v = concat(v1, detail::transplant(emb.graph(), payload.v()));
  return GisElement::make(std::move(u), std::move(v));
}

//! One vertex's worth of structural data in the report.
struct VertexStructure {
  std::string vertex;
  bool acyclic_at = false;
  bool lambda_finite = false;
  std::size_t lambda = 0;   // |C1_e \ {e}|; truncated count when infinite
  bool q_finite = false;
  std::size_t q_count = 0;  // |Q_e|; truncated count when infinite
  bool i_finite = false;
  std::size_t i_count = 0;  // |I_e|; truncated count when infinite
  std::string iso;          // pinned isomorphism-type string
};

struct ComponentStructure {
  std::vector<std::string> vertices;
  bool q_finite = false;
  std::size_t q_count = 0;  // |Q_A|; truncated count when infinite
  std::vector<VertexStructure> locals;
};

//! Whole-graph decomposition summary: components with their order, local
//! data per vertex, and the global flags.
struct StructureReport {
  GraphPtr graph;
  std::size_t bound = 0;
  bool acyclic = false;
  bool j_equals_d = false;
  std::vector<ComponentStructure> components;
  std::vector<std::pair<int, int>> strict_order;  // (x, y) with X < Y
};

namespace detail {

inline std::string count_text(bool finite, std::size_t count) {
  return finite ? std::to_string(count) : "∞";
}

//! Exact size of a finite family, or the bounded count when infinite.
inline std::pair<bool, std::size_t> family_size(GraphPtr const& g,
                                                PathSetKind kind,
                                                std::vector<std::string> anchor,
                                                std::size_t bound) {
  PathSet set = enumerate_paths(g, kind, std::move(anchor), bound);
  bool finite = detail::family_finite(g, kind, set.anchor);
  if (!finite) {
    return {false, set.members.size()};
  }
  std::size_t probe = std::max(bound, g->vertices().size() + 1);
  PathSet all = enumerate_paths(g, kind, set.anchor, probe);
  return {true, all.members.size()};
}

}  // namespace detail

inline StructureReport structural_report(GraphPtr const& g,
                                         std::size_t bound) {
  StructureReport report;
  report.graph = g;
  report.bound = bound;
  ComponentSet cs = scc(g);

  report.acyclic = is_acyclic(g);
  report.j_equals_d = true;
  for (auto const& block : cs.blocks()) {
    if (block.size() > 1) {
      report.j_equals_d = false;
    }
  }

  int const n = static_cast<int>(cs.blocks().size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && cs.leq(x, y)) {
        report.strict_order.emplace_back(x, y);
      }
    }
  }

  for (int b = 0; b < n; ++b) {
    ComponentStructure comp;
    comp.vertices = cs.block(b);
    auto [qa_fin, qa_count] =
        detail::family_size(g, PathSetKind::Q_A, comp.vertices, bound);
    comp.q_finite = qa_fin;
    comp.q_count = qa_count;

    for (auto const& e : comp.vertices) {
      VertexStructure vs;
      vs.vertex = e;
      vs.acyclic_at = is_acyclic_at(g, e);
      auto [c1_fin, c1_count] =
          detail::family_size(g, PathSetKind::C1_e, {e}, bound);
      vs.lambda_finite = c1_fin;
      vs.lambda = c1_count - 1;  // the trivial cycle is always enumerated
      auto [q_fin, q_count] = detail::family_size(g, PathSetKind::Q_e, {e}, bound);
      vs.q_finite = q_fin;
      vs.q_count = q_count;
      auto [i_fin, i_count] = detail::family_size(g, PathSetKind::I_e, {e}, bound);
      vs.i_finite = i_fin;
      vs.i_count = i_count;

      std::string const lam = detail::count_text(vs.lambda_finite, vs.lambda);
      std::string const qn = detail::count_text(vs.q_finite, vs.q_count);
      std::string const in = detail::count_text(vs.i_finite, vs.i_count);
      if (vs.acyclic_at) {
        vs.iso = "D_" + e + "^0 ≅ B⁰_" + in + " (matrix units)";
      } else if (vs.q_finite && vs.q_count == 1) {
        vs.iso = "D_" + e + "^0 ≅ B⁰_1(P_" + lam + ") ≅ P_" + lam;
      } else {
        vs.iso = "D_" + e + "^0 ≅ B⁰_" + qn + "(P_" + lam + ")";
      }
      comp.locals.push_back(std::move(vs));
    }
    report.components.push_back(std::move(comp));
  }
  return report;
}

namespace detail {

inline std::string block_text(std::vector<std::string> const& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += vertices[i];
  }
  return out + "}";
}

}  // namespace detail

inline std::string to_text(StructureReport const& report) {
  std::string out;
  out += "graph: " + std::to_string(report.graph->vertices().size()) +
         " vertices, " + std::to_string(report.graph->edges().size()) +
         " edges\n";
  out += "bound: " + std::to_string(report.bound) + "\n";
  out += std::string("acyclic: ") + (report.acyclic ? "yes" : "no") + "\n";
  out += std::string("J = D: ") + (report.j_equals_d ? "yes" : "no") + "\n";
  out += "components: " + std::to_string(report.components.size()) + "\n";
  for (std::size_t b = 0; b < report.components.size(); ++b) {
    auto const& comp = report.components[b];
    out += "  [" + std::to_string(b) + "] " + detail::block_text(comp.vertices) +
           "  |Q_A| = " + detail::count_text(comp.q_finite, comp.q_count) +
           "\n";
  }
  if (!report.strict_order.empty()) {
    out += "order:";
    for (auto const& [x, y] : report.strict_order) {
      out += " [" + std::to_string(x) + "] < [" + std::to_string(y) + "]";
    }
    out += "\n";
  }
  for (auto const& comp : report.components) {
    for (auto const& vs : comp.locals) {
      out += "vertex " + vs.vertex + ": λ = " +
             detail::count_text(vs.lambda_finite, vs.lambda) + ", |Q_" +
             vs.vertex + "| = " + detail::count_text(vs.q_finite, vs.q_count) +
             ", |I_" + vs.vertex + "| = " +
             detail::count_text(vs.i_finite, vs.i_count) +
             (vs.acyclic_at ? ", acyclic here" : ", cyclic here") + "\n";
      out += "  " + vs.iso + "\n";
    }
  }
  return out;
}

inline nlohmann::ordered_json to_json(StructureReport const& report) {
  nlohmann::ordered_json doc;
  doc["graph"] = {{"vertices", report.graph->vertices().size()},
                  {"edges", report.graph->edges().size()}};
  doc["bound"] = report.bound;
  doc["acyclic"] = report.acyclic;
  doc["j_equals_d"] = report.j_equals_d;
  doc["components"] = nlohmann::ordered_json::array();
  for (auto const& comp : report.components) {
    nlohmann::ordered_json c;
    c["vertices"] = comp.vertices;
    c["q_count"] = comp.q_finite ? nlohmann::ordered_json(comp.q_count)
                                 : nlohmann::ordered_json(nullptr);
    c["locals"] = nlohmann::ordered_json::array();
    for (auto const& vs : comp.locals) {
      nlohmann::ordered_json v;
      v["vertex"] = vs.vertex;
      v["acyclic_at"] = vs.acyclic_at;
      v["lambda"] = vs.lambda_finite ? nlohmann::ordered_json(vs.lambda)
                                     : nlohmann::ordered_json(nullptr);
      v["q_count"] = vs.q_finite ? nlohmann::ordered_json(vs.q_count)
                                 : nlohmann::ordered_json(nullptr);
      v["i_count"] = vs.i_finite ? nlohmann::ordered_json(vs.i_count)
                                 : nlohmann::ordered_json(nullptr);
      v["iso"] = vs.iso;
      c["locals"].push_back(std::move(v));
    }
    doc["components"].push_back(std::move(c));
  }
  doc["order"] = nlohmann::ordered_json::array();
  for (auto const& [x, y] : report.strict_order) {
    doc["order"].push_back({x, y});
  }
  return doc;
}

}  // namespace gis
