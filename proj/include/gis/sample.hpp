#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

//! Seeded generator with a hand-rolled bounded draw.  std::mt19937_64 output
//! is pinned by the standard; the distribution classes are not, so sampling
//! goes through rejection here to keep runs reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  //! Uniform draw from [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) {
      throw Error("empty draw range");
    }
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t value;
    do {
      value = gen_();
    } while (value >= limit);
    return value % n;
  }

  bool coin() { return next_below(2) == 1; }

 private:
  std::mt19937_64 gen_;
};

//! Random path ending at `target`, grown backward edge by edge; the walk
//! stops at the drawn length or when no in-edge exists.
inline Path random_path_to(GraphPtr const& g, std::string const& target,
                           std::size_t max_length, Rng& rng) {
  g->require_vertex(target);
  std::size_t length = static_cast<std::size_t>(rng.next_below(max_length + 1));
  std::vector<std::string> edges;
  std::string at = target;
  for (std::size_t i = 0; i < length; ++i) {
    auto const& ins = g->in_edges(at);
    if (ins.empty()) {
      break;
    }
    auto const& eid = ins[static_cast<std::size_t>(rng.next_below(ins.size()))];
    edges.insert(edges.begin(), eid);
    at = g->edge(eid).src;
  }
  if (edges.empty()) {
    return Path::at_vertex(g, target);
  }
  return Path::along(g, edges);
}

//! Random element: a pair of random paths into a random common range
//! vertex; roughly one draw in sixteen is Zero.
inline GisElement random_element(GraphPtr const& g, std::size_t max_length,
                                 Rng& rng) {
  if (rng.next_below(16) == 0) {
    return GisElement::zero(g);
  }
  auto const& vs = g->vertices();
  std::string const& e = vs[static_cast<std::size_t>(rng.next_below(vs.size()))];
  Path u = random_path_to(g, e, max_length, rng);
  Path v = random_path_to(g, e, max_length, rng);
  return GisElement::make(std::move(u), std::move(v));
}

}  // namespace gis
