#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "gis/polycyclic.hpp"
#include "gis/structure.hpp"

#include "helpers.hpp"

using Catch::Matchers::ContainsSubstring;
using namespace gis;

namespace {

GisElement el(GraphPtr const& g, std::string const& text) {
  return parse_element(g, text);
}

}  // namespace

TEST_CASE("local structure gathers cycles, heads, and the alphabet") {
  auto r2 = fixtures::load("g_r2.json");
  LocalStructure ls(r2, "e", 3);
  REQUIRE(ls.vertex() == "e");
  REQUIRE(ls.alphabet()->labels() == std::vector<std::string>{"p", "q"});
  REQUIRE(ls.q().members.size() == 1);
  REQUIRE(ls.q().complete);
  REQUIRE(to_literal(ls.cycle_of_label("p")) == "p");
  REQUIRE(ls.has_label("q"));
  REQUIRE_FALSE(ls.has_label("p.p"));  // not a first-return cycle
  REQUIRE_THROWS_WITH(ls.cycle_of_label("zz"),
                      ContainsSubstring("not a materialized cycle"));
  REQUIRE(to_literal(ls.path_of_index("@e")) == "@e");
  REQUIRE_THROWS_WITH(ls.path_of_index("p"),
                      ContainsSubstring("not a materialized"));

  auto c2 = fixtures::load("g_c2.json");
  LocalStructure at_a(c2, "a", 4);
  REQUIRE(at_a.alphabet()->labels() == std::vector<std::string>{"x.y"});
  REQUIRE(at_a.q().members.size() == 2);  // @a and y

  auto a2 = fixtures::load("g_a2.json");
  LocalStructure at_b(a2, "b", 3);
  REQUIRE(at_b.alphabet()->size() == 0);  // acyclic at b
  REQUIRE(at_b.q().members.size() == 2);
}

TEST_CASE("cycle subsemigroup maps to the polycyclic monoid, worked by hand") {
  auto r2 = fixtures::load("g_r2.json");
  LocalStructure ls(r2, "e", 3);

  PolyElement f1 = cycles_to_poly(ls, el(r2, "p.q;q"));
  REQUIRE(to_literal(f1) == "p q q'");
  REQUIRE(cycles_to_poly(ls, el(r2, "@e;@e")).is_identity());
  REQUIRE(cycles_to_poly(ls, GisElement::zero(r2)).is_zero());
  REQUIRE(to_literal(cycles_to_poly(ls, el(r2, "q.p;p.p"))) == "q p p' p'");

  // inverse direction reproduces the element
  REQUIRE(poly_to_cycles(ls, f1) == el(r2, "p.q;q"));
  PolyElement raw = PolyElement::make(ls.alphabet(), {"q", "q"}, {"p"});
  REQUIRE(to_literal(poly_to_cycles(ls, raw)) == "q.q;p");

  auto c2 = fixtures::load("g_c2.json");
  LocalStructure at_a(c2, "a", 4);
  REQUIRE(to_literal(cycles_to_poly(at_a, el(c2, "x.y.x.y;x.y"))) ==
          "x.y x.y x.y'");

  // elements outside the cycle subsemigroup are rejected
  REQUIRE_THROWS_WITH(cycles_to_poly(at_a, el(c2, "x;x")),
                      ContainsSubstring("outside the cycle subsemigroup"));
  REQUIRE_THROWS_WITH(cycles_to_poly(at_a, el(c2, "y;@a")),
                      ContainsSubstring("outside the cycle subsemigroup"));
}

TEST_CASE("an unmaterialized cycle factor raises the bound error") {
  auto r2 = fixtures::load("g_r2.json");
  LocalStructure thin(r2, "e", 0);  // no nontrivial cycle fits bound 0
  REQUIRE(thin.alphabet()->size() == 0);
  REQUIRE_FALSE(thin.c1().complete);
  REQUIRE_THROWS_AS(cycles_to_poly(thin, el(r2, "p;@e")), BoundError);

  // with a complete alphabet the same element converts fine at any length
  LocalStructure ls(r2, "e", 1);
  REQUIRE(ls.c1().complete);
  REQUIRE(to_literal(cycles_to_poly(ls, el(r2, "p.p.p.q;q.q"))) ==
          "p p p q q' q'");
}

TEST_CASE("D-classes embed into Brandt extensions, worked by hand") {
  auto a2 = fixtures::load("g_a2.json");
  LocalStructure at_b(a2, "b", 3);
  auto brandt = at_b.brandt();
  REQUIRE(brandt.indices() == std::vector<std::string>{"@b", "x"});

  auto t = dclass_to_brandt(at_b, el(a2, "x;@b"));
  REQUIRE(brandt.to_text(t) == "(x | 1 | @b)");
  REQUIRE(brandt_to_dclass(at_b, t) == el(a2, "x;@b"));
  REQUIRE(dclass_to_brandt(at_b, GisElement::zero(a2)).is_zero());

  auto c2 = fixtures::load("g_c2.json");
  LocalStructure at_a(c2, "a", 4);
  auto h = dclass_to_brandt(at_a, el(c2, "y.x.y;@a"));
  REQUIRE(at_a.brandt().to_text(h) == "(y | x.y | @a)");
  auto hi = dclass_to_brandt(at_a, el(c2, "@a;y.x.y"));
  REQUIRE(at_a.brandt().to_text(hi) == "(@a | x.y' | y)");
  REQUIRE(brandt_to_dclass(at_a, h) == el(c2, "y.x.y;@a"));

  // elements of another D-class are rejected
  REQUIRE_THROWS_WITH(dclass_to_brandt(at_a, el(c2, "x;x")),
                      ContainsSubstring("outside the D-class"));
}

TEST_CASE("a first-visit head beyond the materialized heads raises") {
  auto flow = fixtures::load("g_flow.json");
  LocalStructure at_c(flow, "c", 1);
  REQUIRE_FALSE(at_c.q().complete);
  REQUIRE_THROWS_AS(dclass_to_brandt(at_c, el(flow, "x.z;@c")), BoundError);
  // the same element converts once the head is materialized
  LocalStructure wider(flow, "c", 2);
  auto t = dclass_to_brandt(wider, el(flow, "x.z;@c"));
  REQUIRE(wider.brandt().to_text(t) == "(x.z | 1 | @c)");
}

TEST_CASE("round trips cover the full bounded D-class slices") {
  for (auto const& g : fixtures::all()) {
    for (auto const& v : g->vertices()) {
      LocalStructure ls(g, v, 3);
      for (auto const& x : enumerate_dclass(g, v, 3)) {
        auto t = dclass_to_brandt(ls, x);
        REQUIRE(brandt_to_dclass(ls, t) == x);
      }
    }
  }
}

TEST_CASE("J-classes embed into Brandt extensions over the induced graph") {
  auto flow = fixtures::load("g_flow.json");
  ComponentSet cs = scc(flow);
  JClassEmbedding emb(flow, cs, cs.block_of("a"), 3);
  REQUIRE(emb.induced()->vertices() == std::vector<std::string>{"a", "b"});
  REQUIRE(emb.induced()->edges().size() == 2);
  REQUIRE(emb.q().members.size() == 2);
  REQUIRE(emb.q().complete);

  auto brandt = emb.brandt();
  auto t = jclass_to_brandt(emb, el(flow, "x.y;@a"));
  REQUIRE(brandt.to_text(t) == "(@a | x.y;@a | @a)");
  REQUIRE(brandt_to_jclass(emb, t) == el(flow, "x.y;@a"));

  auto across = jclass_to_brandt(emb, el(flow, "x;@b"));
  REQUIRE(brandt.to_text(across) == "(@a | x;@b | @b)");

  REQUIRE(jclass_to_brandt(emb, GisElement::zero(flow)).is_zero());
  REQUIRE_THROWS_WITH(jclass_to_brandt(emb, el(flow, "@c;@c")),
                      ContainsSubstring("outside the J-class"));

  // an attachment mismatch is outside the embedded image
  auto bogus = BrandtElement<GisElement>::triple(
      "@a", GisElement::vertex_idempotent(emb.induced(), "b"), "@a");
  REQUIRE_THROWS_WITH(brandt_to_jclass(emb, bogus),
                      ContainsSubstring("outside the embedded image"));

  // round trips across the full bounded slice
  for (auto const& g : fixtures::all()) {
    ComponentSet gcs = scc(g);
    for (auto const& block : gcs.blocks()) {
      JClassEmbedding e2(g, block, 3);
      for (auto const& x : enumerate_jclass(g, block, 3)) {
        REQUIRE(brandt_to_jclass(e2, jclass_to_brandt(e2, x)) == x);
      }
    }
  }
}

TEST_CASE("structural report text for the arrow graph") {
  auto a2 = fixtures::load("g_a2.json");
  auto report = structural_report(a2, 4);
  REQUIRE(report.acyclic);
  REQUIRE(report.j_equals_d);
  std::string expected =
      "graph: 2 vertices, 1 edges\n"
      "bound: 4\n"
      "acyclic: yes\n"
      "J = D: yes\n"
      "components: 2\n"
      "  [0] {a}  |Q_A| = 1\n"
      "  [1] {b}  |Q_A| = 2\n"
      "order: [1] < [0]\n"
      "vertex a: λ = 0, |Q_a| = 1, |I_a| = 1, acyclic here\n"
      "  D_a^0 ≅ B⁰_1 (matrix units)\n"
      "vertex b: λ = 0, |Q_b| = 2, |I_b| = 2, acyclic here\n"
      "  D_b^0 ≅ B⁰_2 (matrix units)\n";
  REQUIRE(to_text(report) == expected);
}

TEST_CASE("structural report text for the two-loop rose") {
  auto r2 = fixtures::load("g_r2.json");
  auto report = structural_report(r2, 4);
  REQUIRE_FALSE(report.acyclic);
  REQUIRE(report.j_equals_d);  // single singleton component
  std::string expected =
      "graph: 1 vertices, 2 edges\n"
      "bound: 4\n"
      "acyclic: no\n"
      "J = D: yes\n"
      "components: 1\n"
      "  [0] {e}  |Q_A| = 1\n"
      "vertex e: λ = 2, |Q_e| = 1, |I_e| = ∞, cyclic here\n"
      "  D_e^0 ≅ B⁰_1(P_2) ≅ P_2\n";
  REQUIRE(to_text(report) == expected);
}

TEST_CASE("structural report text for the cycle with an exit") {
  auto flow = fixtures::load("g_flow.json");
  auto report = structural_report(flow, 4);
  REQUIRE_FALSE(report.acyclic);
  REQUIRE_FALSE(report.j_equals_d);
  std::string expected =
      "graph: 3 vertices, 3 edges\n"
      "bound: 4\n"
      "acyclic: no\n"
      "J = D: no\n"
      "components: 2\n"
      "  [0] {a, b}  |Q_A| = 2\n"
      "  [1] {c}  |Q_A| = ∞\n"
      "order: [1] < [0]\n"
      "vertex a: λ = 1, |Q_a| = 2, |I_a| = ∞, cyclic here\n"
      "  D_a^0 ≅ B⁰_2(P_1)\n"
      "vertex b: λ = 1, |Q_b| = 2, |I_b| = ∞, cyclic here\n"
      "  D_b^0 ≅ B⁰_2(P_1)\n"
      "vertex c: λ = 0, |Q_c| = ∞, |I_c| = ∞, acyclic here\n"
      "  D_c^0 ≅ B⁰_∞ (matrix units)\n";
  REQUIRE(to_text(report) == expected);
}

TEST_CASE("report flags across the corpus") {
  struct Row {
    std::string fixture;
    bool acyclic;
    bool j_equals_d;
  };
  std::vector<Row> const rows = {
      {"g_a2.json", true, true},   {"g_r1.json", false, true},
      {"g_r2.json", false, true},  {"g_c2.json", false, false},
      {"g_flow.json", false, false}, {"g_diamond.json", true, true},
  };
  for (auto const& row : rows) {
    auto report = structural_report(fixtures::load(row.fixture), 3);
    INFO(row.fixture);
    REQUIRE(report.acyclic == row.acyclic);
    REQUIRE(report.j_equals_d == row.j_equals_d);
  }

  auto diamond = structural_report(fixtures::load("g_diamond.json"), 4);
  std::string text = to_text(diamond);
  REQUIRE_THAT(text, ContainsSubstring(
                         "order: [1] < [0] [2] < [0] [3] < [0] [3] < [1] "
                         "[3] < [2]"));
  REQUIRE_THAT(text, ContainsSubstring("D_d^0 ≅ B⁰_5 (matrix units)"));
}

TEST_CASE("report JSON carries exact counts with null for infinity") {
  auto flow = fixtures::load("g_flow.json");
  auto doc = to_json(structural_report(flow, 4));
  REQUIRE(doc["graph"]["vertices"] == 3);
  REQUIRE(doc["acyclic"] == false);
  REQUIRE(doc["j_equals_d"] == false);
  REQUIRE(doc["components"].size() == 2);
  REQUIRE(doc["components"][0]["vertices"] ==
          nlohmann::ordered_json::array({"a", "b"}));
  REQUIRE(doc["components"][0]["q_count"] == 2);
  REQUIRE(doc["components"][1]["q_count"].is_null());
  auto const& at_c = doc["components"][1]["locals"][0];
  REQUIRE(at_c["vertex"] == "c");
  REQUIRE(at_c["acyclic_at"] == true);
  REQUIRE(at_c["lambda"] == 0);
  REQUIRE(at_c["q_count"].is_null());
  REQUIRE(at_c["i_count"].is_null());
  REQUIRE(doc["order"].size() == 1);

  auto a2 = fixtures::load("g_a2.json");
  auto flat = to_json(structural_report(a2, 4));
  REQUIRE(flat["components"][1]["locals"][0]["i_count"] == 2);
}
