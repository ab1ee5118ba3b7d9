#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gis/brandt.hpp"
#include "gis/element.hpp"
#include "gis/error.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "gis/polycyclic.hpp"
#include "gis/sample.hpp"
#include "gis/structure.hpp"

namespace gis {

//! Outcome of one named check: exhaustive and sampled case counts, the
//! number of cases that could not be decided within the bound (skipped,
//! never counted as passes), and the first counterexample if any failed.
struct CheckResult {
  std::string name;
  std::string anchor;  // the statement exercised, in mathematical form
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::string counterexample;
  std::string note;  // informational detail (witnesses and the like)

  void fail(std::string description) {
    ++failures;
    if (counterexample.empty()) {
      counterexample = std::move(description);
    }
  }

  void check(bool ok, std::string const& description) {
    ++cases;
    if (!ok) {
      fail(description);
    }
  }
};

struct VerificationReport {
  GraphPtr graph;
  std::size_t bound = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (auto const& c : checks) {
      if (c.failures > 0) {
        return false;
      }
    }
    return true;
  }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::size_t sample_count(std::size_t bound) {
  // enough to be meaningful at CLI speed; the deep fuzz lives in the tests
  return 500 + 500 * bound;
}

//! Cap on quadratic case sweeps: below it every pair is visited, above it
//! a seeded uniform sample of this many pairs keeps runs fast yet
//! reproducible for a fixed seed.
inline constexpr std::size_t pair_budget = 120000;

template <class Fn>
inline void for_cross(std::size_t m, std::size_t n, std::uint64_t seed,
                      Fn&& fn) {
  if (m == 0 || n == 0) {
    return;
  }
  if (m <= pair_budget / n) {  // m·n fits the budget, no overflow
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        fn(i, j);
      }
    }
    return;
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < pair_budget; ++k) {
    fn(rng.next_below(m), rng.next_below(n));
  }
}

template <class Fn>
inline void for_pairs(std::size_t n, std::uint64_t seed, Fn&& fn) {
  for_cross(n, n, seed, std::forward<Fn>(fn));
}

inline std::vector<GisElement> slice_with_zero(std::vector<GisElement> slice,
                                               GraphPtr const& g) {
  slice.push_back(GisElement::zero(g));
  return slice;
}

//! All bounded nonzero elements, grouped the way the J-classes see them.
inline std::vector<GisElement> universe_slice(GraphPtr const& g,
                                              std::size_t bound) {
  std::vector<GisElement> out;
  for (auto const& e : g->vertices()) {
    auto part = enumerate_dclass(g, e, bound);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::string pair_text(GisElement const& x, GisElement const& y) {
  return "x = " + to_literal(x) + ", y = " + to_literal(y);
}

//! All label words whose lifted path length stays within the bound, in
//! label order; the empty word included.
inline void bounded_words(LocalStructure const& ls, std::size_t budget,
                          PolyElement::Word& current,
                          std::vector<PolyElement::Word>& out) {
  out.push_back(current);
  for (auto const& label : ls.alphabet()->labels()) {
    std::size_t cost = ls.cycle_of_label(label).length();
    if (cost > budget) {
      continue;
    }
    current.push_back(label);
    bounded_words(ls, budget - cost, current, out);
    current.pop_back();
  }
}

inline CheckResult check_associativity(GraphPtr const& g, std::size_t bound,
                                       std::uint64_t seed) {
  CheckResult r{"algebra-associativity", "(x·y)·z = x·(y·z)"};
  Rng rng(mix_seed(seed, r.name));
  std::size_t const n = sample_count(bound);
  for (std::size_t i = 0; i < n; ++i) {
    GisElement x = random_element(g, bound + 1, rng);
    GisElement y = random_element(g, bound + 1, rng);
    GisElement z = random_element(g, bound + 1, rng);
    bool ok = multiply(multiply(x, y), z) == multiply(x, multiply(y, z));
    r.check(ok, pair_text(x, y) + ", z = " + to_literal(z));
  }
  return r;
}

inline CheckResult check_inverse_axioms(GraphPtr const& g, std::size_t bound,
                                        std::uint64_t seed) {
  CheckResult r{"algebra-inverse-axioms", "x·x⁻¹·x = x and x⁻¹·x·x⁻¹ = x⁻¹"};
  Rng rng(mix_seed(seed, r.name));
  std::size_t const n = sample_count(bound);
  for (std::size_t i = 0; i < n; ++i) {
    GisElement x = random_element(g, bound + 1, rng);
    GisElement xi = inverse(x);
    bool ok = multiply(multiply(x, xi), x) == x &&
              multiply(multiply(xi, x), xi) == xi;
    r.check(ok, "x = " + to_literal(x));
  }
  return r;
}

inline CheckResult check_idempotents_commute(GraphPtr const& g,
                                             std::size_t bound,
                                             std::uint64_t seed) {
  CheckResult r{"algebra-idempotents-commute",
                "e·f = f·e for idempotents e, f"};
  Rng rng(mix_seed(seed, r.name));
  std::size_t const n = sample_count(bound);
  for (std::size_t i = 0; i < n; ++i) {
    GisElement f1 = multiply(random_element(g, bound + 1, rng),
                             inverse(random_element(g, bound + 1, rng)));
    f1 = multiply(f1, inverse(f1));  // force an idempotent
    GisElement f2 = random_element(g, bound + 1, rng);
    f2 = multiply(f2, inverse(f2));
    bool ok = multiply(f1, f2) == multiply(f2, f1);
    r.check(ok, pair_text(f1, f2));
  }
  for (auto const& a : g->vertices()) {
    for (auto const& b : g->vertices()) {
      GisElement f1 = GisElement::vertex_idempotent(g, a);
      GisElement f2 = GisElement::vertex_idempotent(g, b);
      r.check(multiply(f1, f2) == multiply(f2, f1), pair_text(f1, f2));
    }
  }
  return r;
}

inline CheckResult check_trapped_paths(GraphPtr const& g, std::size_t bound,
                                       ComponentSet const& cs) {
  CheckResult r{"component-trapped-paths",
                "s(w) ∈ A and r(w) ∈ A imply w ∈ Path(E_A)"};
  for (auto const& block : cs.blocks()) {
    GraphPtr sub = induced_subgraph(g, block);
    PathSet ia = enumerate_paths(g, PathSetKind::I_A, block, bound);
    std::unordered_set<std::string> in_block(block.begin(), block.end());
    for (auto const& w : ia.members) {
      if (!in_block.count(w.source())) {
        continue;
      }
      bool trapped = true;
      for (auto const& eid : w.edges()) {
        if (!sub->has_edge(eid)) {
          trapped = false;
        }
      }
      r.check(trapped, "w = " + to_literal(w));
    }
  }
  return r;
}

inline CheckResult check_cycles_poly(GraphPtr const& g, std::size_t bound,
                                     std::uint64_t seed) {
  CheckResult r{"cycles-poly-isomorphism",
                "⟨C_e⟩ ≅ P_λ with λ = |C¹_e \\ {e}|"};
  for (auto const& e : g->vertices()) {
    LocalStructure ls(g, e, bound);
    PathSet ce = enumerate_paths(g, PathSetKind::C_e, e, bound);
    std::vector<GisElement> slice{GisElement::zero(g)};
    for (auto const& u : ce.members) {
      for (auto const& v : ce.members) {
        slice.push_back(GisElement::make(u, v));
      }
    }
    // injectivity and round-trip
    std::map<std::string, GisElement> seen;
    for (auto const& x : slice) {
      PolyElement p = cycles_to_poly(ls, x);
      r.check(poly_to_cycles(ls, p) == x,
              "round trip broke at x = " + to_literal(x));
      auto [it, fresh] = seen.emplace(to_literal(p), x);
      r.check(fresh || it->second == x,
              "collision at " + to_literal(p) + ": " + to_literal(x) +
                  " vs " + to_literal(it->second));
    }
    // surjectivity onto the bounded word slice
    std::vector<PolyElement::Word> words;
    PolyElement::Word scratch;
    bounded_words(ls, bound, scratch, words);
    for_pairs(words.size(), mix_seed(seed, r.name + "/onto/" + e),
              [&](std::size_t i, std::size_t j) {
                PolyElement p =
                    PolyElement::make(ls.alphabet(), words[i], words[j]);
                GisElement x = poly_to_cycles(ls, p);
                r.check(cycles_to_poly(ls, x) == p,
                        "no preimage reproduces " + to_literal(p));
              });
    // homomorphism on in-slice pairs; convert each element once
    std::vector<PolyElement> image;
    image.reserve(slice.size());
    for (auto const& x : slice) {
      image.push_back(cycles_to_poly(ls, x));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/hom/" + e),
              [&](std::size_t i, std::size_t j) {
                PolyElement lhs = cycles_to_poly(ls, multiply(slice[i],
                                                              slice[j]));
                PolyElement rhs = poly_multiply(image[i], image[j]);
                r.check(lhs == rhs, pair_text(slice[i], slice[j]));
              });
  }
  return r;
}

inline CheckResult check_dclass_brandt(GraphPtr const& g, std::size_t bound,
                                       std::uint64_t seed) {
  CheckResult r{"dclass-brandt-isomorphism", "D_e⁰ ≅ B⁰_{Q_e}(P_λ) via h"};
  for (auto const& e : g->vertices()) {
    LocalStructure ls(g, e, bound);
    auto brandt = ls.brandt();
    auto slice = slice_with_zero(enumerate_dclass(g, e, bound), g);
    std::map<std::string, GisElement> seen;
    std::vector<BrandtElement<PolyElement>> image(slice.size());
    std::vector<bool> has_image(slice.size(), false);
    for (std::size_t i = 0; i < slice.size(); ++i) {
      auto const& x = slice[i];
      BrandtElement<PolyElement> t;
      try {
        t = dclass_to_brandt(ls, x);
      } catch (BoundError const&) {
        ++r.skipped;
        continue;
      }
      image[i] = t;
      has_image[i] = true;
      r.check(brandt_to_dclass(ls, t) == x,
              "round trip broke at x = " + to_literal(x));
      auto [it, fresh] = seen.emplace(brandt.to_text(t), x);
      r.check(fresh || it->second == x,
              "collision at " + brandt.to_text(t));
      // transpose law: h(x⁻¹) is the reversed triple with inverted payload
      BrandtElement<PolyElement> ti = dclass_to_brandt(ls, inverse(x));
      BrandtElement<PolyElement> expected =
          t.is_zero() ? BrandtElement<PolyElement>::zero()
                      : BrandtElement<PolyElement>::triple(
                            t.right(), poly_inverse(t.payload()), t.left());
      r.check(brandt.equal(ti, expected),
              "transpose mismatch at x = " + to_literal(x));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/hom/" + e),
              [&](std::size_t i, std::size_t j) {
                if (!has_image[i] || !has_image[j]) {
                  ++r.skipped;
                  return;
                }
                BrandtElement<PolyElement> txy;
                try {
                  txy = dclass_to_brandt(ls, multiply(slice[i], slice[j]));
                } catch (BoundError const&) {
                  ++r.skipped;
                  return;
                }
                r.check(brandt.equal(txy, brandt.product(image[i], image[j])),
                        pair_text(slice[i], slice[j]));
              });
  }
  return r;
}

inline CheckResult check_jclass_embedding(GraphPtr const& g, std::size_t bound,
                                          ComponentSet const& cs,
                                          std::uint64_t seed) {
  CheckResult r{"jclass-brandt-embedding", "J_A⁰ ↪ B⁰_{Q_A}(G(E_A))"};
  for (auto const& block : cs.blocks()) {
    JClassEmbedding emb(g, block, bound);
    auto brandt = emb.brandt();
    auto slice = slice_with_zero(enumerate_jclass(g, block, bound), g);
    std::map<std::string, GisElement> seen;
    std::vector<BrandtElement<GisElement>> image(slice.size());
    std::vector<bool> has_image(slice.size(), false);
    for (std::size_t i = 0; i < slice.size(); ++i) {
      auto const& x = slice[i];
      BrandtElement<GisElement> t;
      try {
        t = jclass_to_brandt(emb, x);
      } catch (BoundError const&) {
        ++r.skipped;
        continue;
      }
      image[i] = t;
      has_image[i] = true;
      r.check(brandt_to_jclass(emb, t) == x,
              "round trip broke at x = " + to_literal(x));
      auto [it, fresh] = seen.emplace(brandt.to_text(t), x);
      r.check(fresh || it->second == x,
              "collision at " + brandt.to_text(t));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/hom/" + block[0]),
              [&](std::size_t i, std::size_t j) {
                if (!has_image[i] || !has_image[j]) {
                  ++r.skipped;
                  return;
                }
                BrandtElement<GisElement> txy;
                try {
                  txy = jclass_to_brandt(emb, multiply(slice[i], slice[j]));
                } catch (BoundError const&) {
                  ++r.skipped;
                  return;
                }
                r.check(brandt.equal(txy, brandt.product(image[i], image[j])),
                        pair_text(slice[i], slice[j]));
              });
    // off-image probe: on a block with two vertices, mismatched attachment
    // points must be rejected by the inverse map
    if (block.size() >= 2 && !emb.q().members.empty()) {
      for (auto const& q1 : emb.q().members) {
        for (auto const& v : block) {
          if (v == q1.range()) {
            continue;
          }
          auto t = BrandtElement<GisElement>::triple(
              to_literal(q1),
              GisElement::vertex_idempotent(emb.induced(), v), to_literal(q1));
          bool rejected = false;
          try {
            brandt_to_jclass(emb, t);
          } catch (Error const&) {
            rejected = true;
          }
          r.check(rejected, "off-image triple accepted: index " +
                                to_literal(q1) + " with payload at " + v);
        }
      }
    }
  }
  return r;
}

inline CheckResult check_product_landing(GraphPtr const& g, std::size_t bound,
                                         std::uint64_t seed) {
  CheckResult r{"dclass-product-landing",
                "x ∈ D_e, y ∈ D_f imply x·y ∈ D_e⁰ ∪ D_f⁰"};
  for (auto const& e : g->vertices()) {
    auto de = enumerate_dclass(g, e, bound);
    for (auto const& f : g->vertices()) {
      auto df = enumerate_dclass(g, f, bound);
      for_cross(de.size(), df.size(),
                mix_seed(seed, r.name + "/" + e + "/" + f),
                [&](std::size_t i, std::size_t j) {
                  GisElement xy = multiply(de[i], df[j]);
                  bool ok = xy.is_zero() || xy.range() == e ||
                            xy.range() == f;
                  r.check(ok, pair_text(de[i], df[j]));
                });
    }
  }
  return r;
}

inline CheckResult check_dclass_closure(GraphPtr const& g, std::size_t bound,
                                        std::uint64_t seed) {
  CheckResult r{"dclass-inverse-subsemigroup",
                "D_e⁰ is an inverse subsemigroup"};
  for (auto const& e : g->vertices()) {
    auto slice = slice_with_zero(enumerate_dclass(g, e, bound), g);
    for (auto const& x : slice) {
      GisElement xi = inverse(x);
      r.check(xi.is_zero() || xi.range() == e,
              "inverse left the class: x = " + to_literal(x));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/" + e),
              [&](std::size_t i, std::size_t j) {
                GisElement xy = multiply(slice[i], slice[j]);
                r.check(xy.is_zero() || xy.range() == e,
                        pair_text(slice[i], slice[j]));
              });
  }
  return r;
}

inline CheckResult check_jclass_closure(GraphPtr const& g, std::size_t bound,
                                        ComponentSet const& cs,
                                        std::uint64_t seed) {
  CheckResult r{"jclass-inverse-subsemigroup",
                "J_A⁰ is an inverse subsemigroup"};
  for (auto const& block : cs.blocks()) {
    std::unordered_set<std::string> in_block(block.begin(), block.end());
    auto slice = slice_with_zero(enumerate_jclass(g, block, bound), g);
    for (auto const& x : slice) {
      GisElement xi = inverse(x);
      r.check(xi.is_zero() || in_block.count(xi.range()) > 0,
              "inverse left the class: x = " + to_literal(x));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/" + block[0]),
              [&](std::size_t i, std::size_t j) {
                GisElement xy = multiply(slice[i], slice[j]);
                r.check(xy.is_zero() || in_block.count(xy.range()) > 0,
                        pair_text(slice[i], slice[j]));
              });
  }
  return r;
}

inline CheckResult check_order_absorption(GraphPtr const& g,
                                          std::size_t bound,
                                          ComponentSet const& cs,
                                          std::uint64_t seed) {
  CheckResult r{"jclass-order-absorption",
                "X ≤ Y implies J_X⁰·J_Y⁰ ∪ J_Y⁰·J_X⁰ ⊆ J_X⁰"};
  int const n = static_cast<int>(cs.blocks().size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !cs.leq(x, y)) {
        continue;
      }
      auto const& bx = cs.block(x);
      std::unordered_set<std::string> in_x(bx.begin(), bx.end());
      auto jx = enumerate_jclass(g, bx, bound);
      auto jy = enumerate_jclass(g, cs.block(y), bound);
      for_cross(jx.size(), jy.size(),
                mix_seed(seed, r.name + "/" + bx[0] + "/" + cs.block(y)[0]),
                [&](std::size_t i, std::size_t j) {
                  auto const& a = jx[i];
                  auto const& b = jy[j];
                  for (GisElement const& ab : {multiply(a, b),
                                               multiply(b, a)}) {
                    r.check(ab.is_zero() || in_x.count(ab.range()) > 0,
                            pair_text(a, b));
                  }
                });
    }
  }
  return r;
}

inline CheckResult check_incomparable(GraphPtr const& g, std::size_t bound,
                                      ComponentSet const& cs,
                                      std::uint64_t seed) {
  CheckResult r{"jclass-incomparable-annihilate",
                "X ≰ Y and Y ≰ X imply J_X⁰·J_Y⁰ ∪ J_Y⁰·J_X⁰ = {0}"};
  int const n = static_cast<int>(cs.blocks().size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (cs.leq(x, y) || cs.leq(y, x)) {
        continue;
      }
      auto jx = enumerate_jclass(g, cs.block(x), bound);
      auto jy = enumerate_jclass(g, cs.block(y), bound);
      for_cross(jx.size(), jy.size(),
                mix_seed(seed,
                         r.name + "/" + cs.block(x)[0] + "/" + cs.block(y)[0]),
                [&](std::size_t i, std::size_t j) {
                  auto const& a = jx[i];
                  auto const& b = jy[j];
                  r.check(multiply(a, b).is_zero() &&
                              multiply(b, a).is_zero(),
                          pair_text(a, b));
                });
    }
  }
  return r;
}

inline CheckResult check_matrix_units(GraphPtr const& g, std::size_t bound,
                                      std::uint64_t seed) {
  CheckResult r{"matrix-units-at-acyclic-vertices",
                "acyclic at e implies D_e⁰ ≅ B⁰_{I_e} matrix units"};
  for (auto const& e : g->vertices()) {
    if (!is_acyclic_at(g, e)) {
      continue;
    }
    LocalStructure ls(g, e, bound);
    PathSet ie = enumerate_paths(g, PathSetKind::I_e, e, bound);
    // acyclic at e forces I_e = Q_e and a trivial local monoid
    r.check(ls.alphabet()->size() == 0, "alphabet not empty at " + e);
    r.check(ie.members.size() == ls.q().members.size(),
            "I_" + e + " and Q_" + e + " diverge");
    std::vector<std::string> indices;
    for (auto const& u : ie.members) {
      indices.push_back(to_literal(u));
    }
    auto slice = slice_with_zero(enumerate_dclass(g, e, bound), g);
    auto to_unit = [&](GisElement const& x) {
      return x.is_zero() ? MatrixUnit{}
                         : MatrixUnit::unit(to_literal(x.u()),
                                            to_literal(x.v()));
    };
    for (auto const& x : slice) {
      if (x.is_zero()) {
        continue;
      }
      BrandtElement<PolyElement> t;
      try {
        t = dclass_to_brandt(ls, x);
      } catch (BoundError const&) {
        ++r.skipped;
        continue;
      }
      r.check(t.payload().is_identity(),
              "payload not the identity at x = " + to_literal(x));
    }
    for_pairs(slice.size(), mix_seed(seed, r.name + "/" + e),
              [&](std::size_t i, std::size_t j) {
                MatrixUnit expect = matrix_unit_multiply(
                    indices, to_unit(slice[i]), to_unit(slice[j]));
                r.check(to_unit(multiply(slice[i], slice[j])) == expect,
                        pair_text(slice[i], slice[j]));
              });
  }
  return r;
}

inline CheckResult check_j_vs_d(GraphPtr const& g, std::size_t bound,
                                ComponentSet const& cs, std::uint64_t seed) {
  CheckResult r{"green-j-vs-d",
                "J = D iff every component is a single vertex"};
  bool singletons = true;
  for (auto const& block : cs.blocks()) {
    if (block.size() > 1) {
      singletons = false;
    }
  }
  auto slice = slice_with_zero(universe_slice(g, bound), g);
  if (singletons) {
    for_pairs(slice.size(), mix_seed(seed, r.name + "/agree"),
              [&](std::size_t i, std::size_t j) {
                r.check(green(GreenRelation::J, slice[i], slice[j], cs) ==
                            green(GreenRelation::D, slice[i], slice[j], cs),
                        pair_text(slice[i], slice[j]));
              });
    r.note = "components are singletons; J and D agree on the whole slice";
  } else {
    // D always refines J
    for_pairs(slice.size(), mix_seed(seed, r.name + "/refine"),
              [&](std::size_t i, std::size_t j) {
                bool ok = !green(GreenRelation::D, slice[i], slice[j], cs) ||
                          green(GreenRelation::J, slice[i], slice[j], cs);
                r.check(ok, pair_text(slice[i], slice[j]));
              });
    // a block with two vertices yields a J-not-D witness
    for (auto const& block : cs.blocks()) {
      if (block.size() < 2) {
        continue;
      }
      GisElement x = GisElement::vertex_idempotent(g, block[0]);
      GisElement y = GisElement::vertex_idempotent(g, block[1]);
      bool witness = green(GreenRelation::J, x, y, cs) &&
                     !green(GreenRelation::D, x, y, cs);
      r.check(witness, "expected J-not-D witness failed: " + pair_text(x, y));
      if (witness && r.note.empty()) {
        r.note = "J-not-D witness: " + to_literal(x) + " vs " + to_literal(y);
      }
    }
  }
  return r;
}

}  // namespace detail

//! Runs every structural check on exhaustive bounded slices plus seeded
//! sampling.  Failures are data, not errors; the report carries them.
inline VerificationReport verify_suite(GraphPtr const& g, std::size_t bound,
                                       std::uint64_t seed) {
  VerificationReport report;
  report.graph = g;
  report.bound = bound;
  report.seed = seed;
  ComponentSet cs = scc(g);

  report.checks.push_back(detail::check_associativity(g, bound, seed));
  report.checks.push_back(detail::check_inverse_axioms(g, bound, seed));
  report.checks.push_back(detail::check_idempotents_commute(g, bound, seed));
  report.checks.push_back(detail::check_trapped_paths(g, bound, cs));
  report.checks.push_back(detail::check_cycles_poly(g, bound, seed));
  report.checks.push_back(detail::check_dclass_brandt(g, bound, seed));
  report.checks.push_back(detail::check_jclass_embedding(g, bound, cs, seed));
  report.checks.push_back(detail::check_product_landing(g, bound, seed));
  report.checks.push_back(detail::check_dclass_closure(g, bound, seed));
  report.checks.push_back(detail::check_jclass_closure(g, bound, cs, seed));
  report.checks.push_back(detail::check_order_absorption(g, bound, cs, seed));
  report.checks.push_back(detail::check_incomparable(g, bound, cs, seed));
  report.checks.push_back(detail::check_matrix_units(g, bound, seed));
  report.checks.push_back(detail::check_j_vs_d(g, bound, cs, seed));

  std::sort(report.checks.begin(), report.checks.end(),
            [](CheckResult const& a, CheckResult const& b) {
              return a.name < b.name;
            });
  return report;
}

inline std::string to_text(VerificationReport const& report) {
  std::string out;
  out += "bound: " + std::to_string(report.bound) +
         ", seed: " + std::to_string(report.seed) + "\n";
  for (auto const& c : report.checks) {
    out += (c.failures == 0 ? "PASS " : "FAIL ") + c.name + "  (" + c.anchor +
           ")  cases: " + std::to_string(c.cases);
    if (c.skipped > 0) {
      out += ", skipped: " + std::to_string(c.skipped);
    }
    if (c.failures > 0) {
      out += ", failures: " + std::to_string(c.failures);
    }
    out += "\n";
    if (!c.counterexample.empty()) {
      out += "     counterexample: " + c.counterexample + "\n";
    }
    if (!c.note.empty()) {
      out += "     note: " + c.note + "\n";
    }
  }
  out += report.all_passed() ? "all checks passed\n" : "CHECKS FAILED\n";
  return out;
}

inline nlohmann::ordered_json to_json(VerificationReport const& report) {
  nlohmann::ordered_json doc;
  doc["bound"] = report.bound;
  doc["seed"] = report.seed;
  doc["all_passed"] = report.all_passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (auto const& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["anchor"] = c.anchor;
    entry["cases"] = c.cases;
    entry["skipped"] = c.skipped;
    entry["failures"] = c.failures;
    entry["counterexample"] = c.counterexample;
    entry["note"] = c.note;
    doc["checks"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace gis
