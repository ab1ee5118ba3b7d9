#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "gis/graph.hpp"
#include "gis/path.hpp"

#include "helpers.hpp"

using Catch::Matchers::ContainsSubstring;
using namespace gis;

TEST_CASE("fixture corpus parses with expected shapes") {
  auto a2 = fixtures::load("g_a2.json");
  REQUIRE(a2->vertices() == std::vector<std::string>{"a", "b"});
  REQUIRE(a2->edges().size() == 1);
  REQUIRE(a2->edge("x").src == "a");
  REQUIRE(a2->edge("x").dst == "b");

  auto r2 = fixtures::load("g_r2.json");
  REQUIRE(r2->vertices() == std::vector<std::string>{"e"});
  REQUIRE(r2->edges().size() == 2);

  auto flow = fixtures::load("g_flow.json");
  REQUIRE(flow->vertices() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(flow->out_edges("b") == std::vector<std::string>{"y", "z"});
  REQUIRE(flow->in_edges("a") == std::vector<std::string>{"y"});

  auto diamond = fixtures::load("g_diamond.json");
  REQUIRE(diamond->vertices().size() == 4);
  REQUIRE(diamond->edges().size() == 4);
}

TEST_CASE("document parsing rejects malformed input") {
  REQUIRE_THROWS_WITH(Graph::from_document("not json"),
                      ContainsSubstring("not valid JSON"));
  REQUIRE_THROWS_WITH(Graph::from_document("[1, 2]"),
                      ContainsSubstring("top level must be an object"));
  REQUIRE_THROWS_WITH(Graph::from_document(R"({"vertices": ["a"]})"),
                      ContainsSubstring("missing \"edges\""));
  REQUIRE_THROWS_WITH(Graph::from_document(R"({"edges": []})"),
                      ContainsSubstring("missing \"vertices\""));
  REQUIRE_THROWS_WITH(
      Graph::from_document(R"({"vertices": ["a"], "edges": [], "x": 1})"),
      ContainsSubstring("unknown key \"x\""));
  REQUIRE_THROWS_WITH(
      Graph::from_document(R"({"vertices": ["a", 7], "edges": []})"),
      ContainsSubstring("malformed vertex id"));
  REQUIRE_THROWS_WITH(
      Graph::from_document(R"({"vertices": ["a!"], "edges": []})"),
      ContainsSubstring("malformed vertex id"));
  REQUIRE_THROWS_WITH(
      Graph::from_document(
          R"({"vertices": ["a"], "edges": [{"id": "e", "src": "a"}]})"),
      ContainsSubstring("malformed edge entry"));
  REQUIRE_THROWS_WITH(
      Graph::from_document(
          R"({"vertices": ["a"],
          "edges": [{"id": "e", "src": "a", "dst": "a", "w": 1}]})"),
      ContainsSubstring("unknown key \"w\""));
  REQUIRE_THROWS_WITH(
      Graph::from_document(
          R"({"vertices": ["a"],
          "edges": [{"id": "e", "src": "a", "dst": "b"}]})"),
      ContainsSubstring("dangling endpoint \"b\""));
}

TEST_CASE("graph construction validates identifiers") {
  REQUIRE_THROWS_WITH(Graph::make({"a", "a"}, {}),
                      ContainsSubstring("duplicate vertex id \"a\""));
  REQUIRE_THROWS_WITH(Graph::make({""}, {}),
                      ContainsSubstring("empty vertex id"));
  REQUIRE_THROWS_WITH(
      Graph::make({"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}),
      ContainsSubstring("duplicate edge id \"e\""));
  REQUIRE_THROWS_WITH(Graph::make({"a"}, {{"a", "a", "a"}}),
                      ContainsSubstring("collides with a vertex id"));
  REQUIRE_THROWS_WITH(Graph::make({"a"}, {{"e", "a", "zz"}}),
                      ContainsSubstring("dangling endpoint \"zz\""));
  auto g = Graph::make({"b", "a"}, {{"e", "a", "b"}});
  REQUIRE(g->vertices() == std::vector<std::string>{"a", "b"});
  REQUIRE(g->has_vertex("a"));
  REQUIRE_FALSE(g->has_vertex("c"));
  REQUIRE(g->has_edge("e"));
  REQUIRE_THROWS_WITH(g->edge("zz"), ContainsSubstring("unknown edge"));
}

static std::vector<gis::GraphPtr> graphs_under_test() {
  auto out = fixtures::all();
  out.push_back(fixtures::isolated_pair());
  out.push_back(fixtures::flow_with_tail());
  return out;
}

TEST_CASE("strongly connected components match brute-force reachability") {
  for (auto const& g : graphs_under_test()) {
    ComponentSet cs = scc(g);

    // every vertex appears in exactly one block
    std::set<std::string> seen;
    for (auto const& block : cs.blocks()) {
      REQUIRE_FALSE(block.empty());
      REQUIRE(std::is_sorted(block.begin(), block.end()));
      for (auto const& v : block) {
        REQUIRE(seen.insert(v).second);
      }
    }
    REQUIRE(seen.size() == g->vertices().size());

    // blocks ordered by smallest member
    for (std::size_t i = 1; i < cs.blocks().size(); ++i) {
      REQUIRE(cs.blocks()[i - 1].front() < cs.blocks()[i].front());
    }

    // same block iff mutually reachable
    for (auto const& u : g->vertices()) {
      for (auto const& v : g->vertices()) {
        bool together = cs.block_of(u) == cs.block_of(v);
        bool mutual = fixtures::reaches(g, u, v) && fixtures::reaches(g, v, u);
        INFO("graph with " << g->vertices().size() << " vertices: " << u
                           << " vs " << v);
        REQUIRE(together == mutual);
      }
    }
  }
}

TEST_CASE("component order matches reachability and is a partial order") {
  for (auto const& g : graphs_under_test()) {
    ComponentSet cs = scc(g);
    int const n = static_cast<int>(cs.blocks().size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        // X <= Y iff some path runs from Y down into X
        bool expected = false;
        for (auto const& src : cs.block(y)) {
          for (auto const& dst : cs.block(x)) {
            expected = expected || fixtures::reaches(g, src, dst);
          }
        }
        REQUIRE(cs.leq(x, y) == expected);
        REQUIRE(component_order(cs, x, y) == expected);
        if (x != y) {
          REQUIRE_FALSE((cs.leq(x, y) && cs.leq(y, x)));  // antisymmetry
        }
      }
      REQUIRE(cs.leq(x, x));  // reflexivity
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (cs.leq(x, y) && cs.leq(y, z)) {
            REQUIRE(cs.leq(x, z));  // transitivity
          }
        }
      }
    }
  }
  REQUIRE_THROWS_WITH(scc(fixtures::load("g_a2.json")).block(9),
                      ContainsSubstring("unknown block index"));
}

TEST_CASE("cycle vertex detection matches brute force") {
  for (auto const& g : graphs_under_test()) {
    auto cyc = gis::detail::cycle_vertices(g);
    for (auto const& v : g->vertices()) {
      REQUIRE(static_cast<bool>(cyc.count(v)) == fixtures::on_cycle(g, v));
      REQUIRE(is_acyclic_at(g, v) == !fixtures::on_cycle(g, v));
    }
    bool any = false;
    for (auto const& v : g->vertices()) {
      any = any || fixtures::on_cycle(g, v);
    }
    REQUIRE(is_acyclic(g) == !any);
  }
}

namespace {

struct FinitenessRow {
  std::string fixture;
  std::string vertex;
  bool i, q, c, c1;
};

}  // namespace

TEST_CASE("per-vertex finiteness analysis matches hand-derived table") {
  std::vector<FinitenessRow> const rows = {
      {"g_a2.json", "a", true, true, true, true},
      {"g_a2.json", "b", true, true, true, true},
      {"g_r1.json", "e", false, true, false, true},
      {"g_r2.json", "e", false, true, false, true},
      {"g_c2.json", "a", false, true, false, true},
      {"g_c2.json", "b", false, true, false, true},
      {"g_flow.json", "a", false, true, false, true},
      {"g_flow.json", "b", false, true, false, true},
      {"g_flow.json", "c", false, false, true, true},
      {"g_diamond.json", "a", true, true, true, true},
      {"g_diamond.json", "d", true, true, true, true},
  };
  for (auto const& row : rows) {
    auto g = fixtures::load(row.fixture);
    auto rep = finiteness(g, row.vertex);
    INFO(row.fixture << " at " << row.vertex);
    REQUIRE(rep.vertex == row.vertex);
    REQUIRE(rep.i_finite == row.i);
    REQUIRE(rep.q_finite == row.q);
    REQUIRE(rep.c_finite == row.c);
    REQUIRE(rep.c1_finite == row.c1);
  }

  auto tail = fixtures::flow_with_tail();
  auto at_c = finiteness(tail, "c");
  REQUIRE_FALSE(at_c.q_finite);
  REQUIRE(at_c.c_finite);
  auto at_d = finiteness(tail, "d");
  REQUIRE(at_d.i_finite);
  REQUIRE(at_d.q_finite);
  REQUIRE_THROWS_WITH(finiteness(tail, "nope"),
                      ContainsSubstring("unknown vertex"));
}

TEST_CASE("finiteness flags agree with enumeration growth") {
  // A family with infinitely many members gains one within any window of
  // |V| extra length (pump a simple cycle); a finite family has all
  // members no longer than |V| and stops growing there.
  for (auto const& g : graphs_under_test()) {
    std::size_t const nv = g->vertices().size();
    std::size_t const lo = nv + 1;
    std::size_t const hi = 2 * nv + 2;
    for (auto const& v : g->vertices()) {
      auto rep = finiteness(g, v);
      auto probe = [&](PathSetKind kind, bool finite) {
        auto small = enumerate_paths(g, kind, v, lo);
        auto big = enumerate_paths(g, kind, v, hi);
        INFO(kind_name(kind) << " at " << v << " (graph of " << nv
                             << " vertices)");
        if (finite) {
          REQUIRE(small.members.size() == big.members.size());
          REQUIRE(small.complete);
          REQUIRE(big.complete);
        } else {
          REQUIRE(small.members.size() < big.members.size());
          REQUIRE_FALSE(small.complete);
          REQUIRE_FALSE(big.complete);
        }
      };
      probe(PathSetKind::I_e, rep.i_finite);
      probe(PathSetKind::Q_e, rep.q_finite);
      probe(PathSetKind::C_e, rep.c_finite);
      probe(PathSetKind::C1_e, rep.c1_finite);
    }
  }
}

TEST_CASE("component finiteness analysis matches hand-derived table") {
  auto flow = fixtures::load("g_flow.json");
  ComponentSet cs = scc(flow);
  REQUIRE(cs.blocks().size() == 2);
  int ab = cs.block_of("a");
  int c = cs.block_of("c");
  REQUIRE(cs.block(ab) == std::vector<std::string>{"a", "b"});

  auto at_ab = component_finiteness(cs, ab);
  REQUIRE(at_ab.q_finite);
  REQUIRE_FALSE(at_ab.i_finite);
  auto at_c = component_finiteness(cs, c);
  REQUIRE_FALSE(at_c.q_finite);
  REQUIRE_FALSE(at_c.i_finite);

  auto r1 = fixtures::load("g_r1.json");
  ComponentSet rcs = scc(r1);
  auto at_e = component_finiteness(rcs, 0);
  REQUIRE(at_e.q_finite);
  REQUIRE_FALSE(at_e.i_finite);  // single vertex but carries a loop

  auto iso = fixtures::isolated_pair();
  ComponentSet ics = scc(iso);
  REQUIRE(ics.blocks().size() == 2);
  for (int b = 0; b < 2; ++b) {
    auto rep = component_finiteness(ics, b);
    REQUIRE(rep.q_finite);
    REQUIRE(rep.i_finite);
  }

  auto tail = fixtures::flow_with_tail();
  ComponentSet tcs = scc(tail);
  auto rep = component_finiteness(tcs, tcs.block_of("a"));
  REQUIRE(rep.q_finite);  // the only way in is the single tail edge
  REQUIRE_FALSE(rep.i_finite);
}

TEST_CASE("component growth window agrees with the component analysis") {
  for (auto const& g : graphs_under_test()) {
    ComponentSet cs = scc(g);
    std::size_t const nv = g->vertices().size();
    for (int b = 0; b < static_cast<int>(cs.blocks().size()); ++b) {
      auto rep = component_finiteness(cs, b);
      auto probe = [&](PathSetKind kind, bool finite) {
        auto small = enumerate_paths(g, kind, cs, b, nv + 1);
        auto big = enumerate_paths(g, kind, cs, b, 2 * nv + 2);
        if (finite) {
          REQUIRE(small.members.size() == big.members.size());
          REQUIRE(big.complete);
        } else {
          REQUIRE(small.members.size() < big.members.size());
          REQUIRE_FALSE(big.complete);
        }
      };
      probe(PathSetKind::Q_A, rep.q_finite);
      probe(PathSetKind::I_A, rep.i_finite);
    }
  }
}

TEST_CASE("induced subgraph keeps exactly the interior edges") {
  auto flow = fixtures::load("g_flow.json");
  auto ab = induced_subgraph(flow, {"a", "b"});
  REQUIRE(ab->vertices() == std::vector<std::string>{"a", "b"});
  REQUIRE(ab->has_edge("x"));
  REQUIRE(ab->has_edge("y"));
  REQUIRE_FALSE(ab->has_edge("z"));

  auto bc = induced_subgraph(flow, {"b", "c"});
  REQUIRE(bc->edges().size() == 1);
  REQUIRE(bc->has_edge("z"));

  auto just_c = induced_subgraph(flow, {"c"});
  REQUIRE(just_c->edges().size() == 0);

  REQUIRE_THROWS_WITH(induced_subgraph(flow, {}),
                      ContainsSubstring("nonempty vertex set"));
  REQUIRE_THROWS_WITH(induced_subgraph(flow, {"zzz"}),
                      ContainsSubstring("unknown vertex"));
}

TEST_CASE("graph equality is structural") {
  auto one = fixtures::load("g_a2.json");
  auto two = fixtures::load("g_a2.json");
  REQUIRE(one.get() != two.get());
  REQUIRE(*one == *two);
  auto other = fixtures::load("g_c2.json");
  REQUIRE_FALSE(*one == *other);
}
