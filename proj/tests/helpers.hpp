#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace fixtures {

inline gis::GraphPtr load(std::string const& name) {
  std::string path = std::string(GIS_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in.good()) {
    throw std::runtime_error("cannot open fixture " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return gis::Graph::from_document(buf.str());
}

inline std::vector<std::string> names() {
  return {"g_a2.json",   "g_r1.json",   "g_r2.json",
          "g_c2.json",   "g_flow.json", "g_diamond.json"};
}

inline std::vector<gis::GraphPtr> all() {
  std::vector<gis::GraphPtr> out;
  for (auto const& n : names()) {
    out.push_back(load(n));
  }
  return out;
}

//! Two vertices, no edges.
inline gis::GraphPtr isolated_pair() {
  return gis::Graph::make({"a", "b"}, {});
}

//! The two-cycle with an exit, plus a source vertex feeding the cycle.
inline gis::GraphPtr flow_with_tail() {
  return gis::Graph::make({"a", "b", "c", "d"},
                          {{"x", "a", "b"},
                           {"y", "b", "a"},
                           {"z", "b", "c"},
                           {"w", "d", "a"}});
}

//! Independent path generator: forward breadth-first extension from every
//! vertex, returned in the library's canonical order.  Deliberately grows
//! forward (the library grows backward) so the two constructions only
//! agree if both are right.
inline std::vector<gis::Path> all_paths_upto(gis::GraphPtr const& g,
                                             std::size_t bound) {
  std::vector<gis::Path> out;
  std::vector<gis::Path> level;
  for (auto const& v : g->vertices()) {
    level.push_back(gis::Path::at_vertex(g, v));
  }
  out = level;
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<gis::Path> next;
    for (auto const& p : level) {
      for (auto const& eid : g->out_edges(p.range())) {
        std::vector<std::string> edges = p.edges();
        edges.push_back(eid);
        next.push_back(gis::Path::along(g, edges));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), gis::path_less);
  return out;
}

//! Plain depth-first reachability: a path (possibly trivial) runs a -> b.
inline bool reaches(gis::GraphPtr const& g, std::string const& a,
                    std::string const& b) {
  std::set<std::string> seen;
  std::vector<std::string> stack{a};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    if (v == b) {
      return true;
    }
    if (!seen.insert(v).second) {
      continue;
    }
    for (auto const& eid : g->out_edges(v)) {
      stack.push_back(g->edge(eid).dst);
    }
  }
  return false;
}

//! A nontrivial cycle passes through v.
inline bool on_cycle(gis::GraphPtr const& g, std::string const& v) {
  for (auto const& eid : g->out_edges(v)) {
    if (reaches(g, g->edge(eid).dst, v)) {
      return true;
    }
  }
  return false;
}

}  // namespace fixtures
