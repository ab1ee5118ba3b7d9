#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gis/element.hpp"
#include "gis/error.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "gis/polycyclic.hpp"
#include "gis/structure.hpp"
#include "gis/verify.hpp"

namespace gis::cli {

namespace detail {

inline GraphPtr load_graph_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open graph file \"" + path + "\"");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Graph::from_document(buffer.str());
}

inline bool color_enabled() {
  char const* value = std::getenv("GIS_COLOR");
  return value == nullptr || std::string_view(value) != "0";
}

inline PathSetKind parse_kind(std::string const& name) {
  if (name == "I_e") return PathSetKind::I_e;
  if (name == "Q_e") return PathSetKind::Q_e;
  if (name == "C_e") return PathSetKind::C_e;
  if (name == "C1_e") return PathSetKind::C1_e;
  if (name == "I_A") return PathSetKind::I_A;
  if (name == "Q_A") return PathSetKind::Q_A;
  throw Error("unknown path-set kind \"" + name + "\"");
}

inline AlphabetPtr parse_alphabet(std::string const& text) {
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', start);
    std::string label =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (label.empty()) {
      throw Error("empty label in alphabet \"" + text + "\"");
    }
    labels.push_back(std::move(label));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return Alphabet::make(std::move(labels));
}

//! Renders a verification-style report, coloring the verdict words when
//! styling is on.
inline std::string render_report(VerificationReport const& report,
                                 bool color) {
  std::string text = to_text(report);
  if (!color) {
    return text;
  }
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? end : end - start);
    if (line.rfind("PASS ", 0) == 0) {
      line = "\033[32mPASS\033[0m" + line.substr(4);
    } else if (line.rfind("FAIL ", 0) == 0) {
      line = "\033[31mFAIL\033[0m" + line.substr(4);
    } else if (line == "all checks passed") {
      line = "\033[32m" + line + "\033[0m";
    } else if (line == "CHECKS FAILED") {
      line = "\033[31m" + line + "\033[0m";
    }
    out += line;
    out += '\n';
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace detail

//! Front end over the library.  Exit codes: 0 success, 1 domain errors
//! (bad graph file, unknown id, ill-formed element), 2 usage errors,
//! 3 when `verify` or `iso-check` finds a failing check.
inline int run(std::vector<std::string> const& args, std::istream& /*in*/,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"exact symbolic computation in graph inverse semigroups"};
  app.require_subcommand(1);

  std::string graph_path;
  std::size_t bound = 4;
  std::uint64_t seed = 0;
  bool json = false;

  auto add_common = [&](CLI::App* sub, bool with_bound, bool with_seed) {
    sub->add_option("graph", graph_path, "graph file (JSON)")->required();
    if (with_bound) {
      sub->add_option("--bound", bound, "path-length bound")
          ->capture_default_str();
    }
    if (with_seed) {
      sub->add_option("--seed", seed, "sampling seed")->capture_default_str();
    }
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "structural decomposition report for a graph");
  add_common(analyze, true, false);

  auto* mul = app.add_subcommand("mul", "multiply two elements");
  std::string mul_x, mul_y;
  add_common(mul, false, false);
  mul->add_option("x", mul_x, "left element literal")->required();
  mul->add_option("y", mul_y, "right element literal")->required();

  auto* green_cmd =
      app.add_subcommand("green", "test a Green relation on two elements");
  std::string green_rel, green_x, green_y;
  add_common(green_cmd, false, false);
  green_cmd->add_option("relation", green_rel, "one of L, R, H, D, J")
      ->required()
      ->check(CLI::IsMember({"L", "R", "H", "D", "J"}));
  green_cmd->add_option("x", green_x, "left element literal")->required();
  green_cmd->add_option("y", green_y, "right element literal")->required();

  auto* enum_cmd =
      app.add_subcommand("enum", "enumerate a path family up to a bound");
  std::string enum_kind, enum_vertex, enum_component;
  add_common(enum_cmd, true, false);
  enum_cmd->add_option("--kind", enum_kind, "path family")
      ->required()
      ->check(CLI::IsMember({"I_e", "Q_e", "C_e", "C1_e", "I_A", "Q_A"}));
  enum_cmd->add_option("--vertex", enum_vertex, "anchor vertex");
  enum_cmd->add_option("--component", enum_component,
                       "any vertex of the anchor component");

  auto* factor = app.add_subcommand(
      "factor", "factor a path at the first visit of a vertex or component");
  std::string factor_path, factor_vertex, factor_component;
  bool factor_cycles = false;
  add_common(factor, false, false);
  factor->add_option("path", factor_path, "path literal")->required();
  factor->add_option("--vertex", factor_vertex, "anchor vertex");
  factor->add_option("--component", factor_component,
                     "any vertex of the anchor component");
  factor->add_flag("--cycles", factor_cycles,
                   "split a cycle at every interior visit instead");

  auto* iso = app.add_subcommand(
      "iso-check", "run the structural isomorphism checks");
  add_common(iso, true, true);

  auto* poly_cmd = app.add_subcommand("poly", "polycyclic monoid operations");
  poly_cmd->require_subcommand(1);
  std::string poly_alphabet;
  auto* poly_reduce_cmd = poly_cmd->add_subcommand(
      "reduce", "reduce a generator word to normal form");
  std::string poly_word, poly_word2;
  poly_reduce_cmd
      ->add_option("--alphabet", poly_alphabet, "comma-separated labels")
      ->required();
  poly_reduce_cmd->add_option("word", poly_word, "generator word")->required();
  poly_reduce_cmd->add_flag("--json", json, "machine-readable output");
  auto* poly_mul_cmd =
      poly_cmd->add_subcommand("mul", "multiply two generator words");
  poly_mul_cmd
      ->add_option("--alphabet", poly_alphabet, "comma-separated labels")
      ->required();
  poly_mul_cmd->add_option("x", poly_word, "left generator word")->required();
  poly_mul_cmd->add_option("y", poly_word2, "right generator word")
      ->required();
  poly_mul_cmd->add_flag("--json", json, "machine-readable output");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the full verification suite");
  add_common(verify_cmd, true, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return 0;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return 2;
  }

  bool const color = detail::color_enabled();
  try {
    if (app.got_subcommand(analyze)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      StructureReport report = structural_report(g, bound);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << to_text(report);
      }
      return 0;
    }

    if (app.got_subcommand(mul)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      GisElement product =
          multiply(parse_element(g, mul_x), parse_element(g, mul_y));
      if (json) {
        nlohmann::ordered_json doc;
        doc["result"] = to_literal(product);
        out << doc.dump(2) << "\n";
      } else {
        out << to_literal(product) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(green_cmd)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      bool related = green(parse_relation(green_rel), parse_element(g, green_x),
                           parse_element(g, green_y));
      if (json) {
        nlohmann::ordered_json doc;
        doc["relation"] = green_rel;
        doc["related"] = related;
        out << doc.dump(2) << "\n";
      } else {
        out << (related ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(enum_cmd)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      PathSetKind kind = detail::parse_kind(enum_kind);
      std::vector<std::string> anchor;
      if (kind_is_component(kind)) {
        if (enum_component.empty()) {
          throw Error("kind " + enum_kind + " needs --component");
        }
        ComponentSet cs = scc(g);
        anchor = cs.block(cs.block_of(enum_component));
      } else {
        if (enum_vertex.empty()) {
          throw Error("kind " + enum_kind + " needs --vertex");
        }
        anchor = {enum_vertex};
      }
      PathSet set = enumerate_paths(g, kind, anchor, bound);
      if (json) {
        nlohmann::ordered_json doc;
        doc["kind"] = std::string(kind_name(set.kind));
        doc["anchor"] = set.anchor;
        doc["bound"] = set.bound;
        doc["complete"] = set.complete;
        doc["members"] = nlohmann::ordered_json::array();
        for (auto const& p : set.members) {
          doc["members"].push_back(to_literal(p));
        }
        out << doc.dump(2) << "\n";
      } else {
        for (auto const& p : set.members) {
          out << to_literal(p) << "\n";
        }
        out << "complete: " << (set.complete ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(factor)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      Path u = parse_path(g, factor_path);
      if (factor_cycles) {
        if (factor_vertex.empty()) {
          throw Error("--cycles needs --vertex");
        }
        auto factors = cycle_factorize(u, factor_vertex);
        if (json) {
          nlohmann::ordered_json doc;
          doc["factors"] = nlohmann::ordered_json::array();
          for (auto const& f : factors) {
            doc["factors"].push_back(to_literal(f));
          }
          out << doc.dump(2) << "\n";
        } else {
          out << "factors=";
          for (std::size_t i = 0; i < factors.size(); ++i) {
            out << (i > 0 ? " " : "") << to_literal(factors[i]);
          }
          out << "\n";
        }
        return 0;
      }
      std::pair<Path, Path> split = [&] {
        if (!factor_vertex.empty()) {
          return factor_at_vertex(u, factor_vertex);
        }
        if (!factor_component.empty()) {
          ComponentSet cs = scc(g);
          return factor_at_component(u,
                                     cs.block(cs.block_of(factor_component)));
        }
        throw Error("factor needs --vertex or --component");
      }();
      if (json) {
        nlohmann::ordered_json doc;
        doc["u1"] = to_literal(split.first);
        doc["u2"] = to_literal(split.second);
        out << doc.dump(2) << "\n";
      } else {
        out << "u1=" << to_literal(split.first)
            << " u2=" << to_literal(split.second) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(iso)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      ComponentSet cs = scc(g);
      VerificationReport report;
      report.graph = g;
      report.bound = bound;
      report.seed = seed;
      report.checks.push_back(gis::detail::check_cycles_poly(g, bound, seed));
      report.checks.push_back(gis::detail::check_dclass_brandt(g, bound, seed));
      report.checks.push_back(
          gis::detail::check_jclass_embedding(g, bound, cs, seed));
      report.checks.push_back(gis::detail::check_matrix_units(g, bound, seed));
      std::sort(report.checks.begin(), report.checks.end(),
                [](CheckResult const& a, CheckResult const& b) {
                  return a.name < b.name;
                });
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << detail::render_report(report, color);
      }
      return report.all_passed() ? 0 : 3;
    }

    if (app.got_subcommand(poly_cmd)) {
      AlphabetPtr alphabet = detail::parse_alphabet(poly_alphabet);
      PolyElement result = PolyElement::zero(alphabet);
      if (poly_cmd->got_subcommand(poly_reduce_cmd)) {
        result = poly_reduce(alphabet,
                             parse_generator_word(alphabet, poly_word));
      } else {
        PolyElement x =
            poly_reduce(alphabet, parse_generator_word(alphabet, poly_word));
        PolyElement y =
            poly_reduce(alphabet, parse_generator_word(alphabet, poly_word2));
        result = poly_multiply(x, y);
      }
      if (json) {
        nlohmann::ordered_json doc;
        doc["result"] = to_literal(result);
        out << doc.dump(2) << "\n";
      } else {
        out << to_literal(result) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      GraphPtr g = detail::load_graph_file(graph_path);
      VerificationReport report = verify_suite(g, bound, seed);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << detail::render_report(report, color);
      }
      return report.all_passed() ? 0 : 3;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand handled\n";
  return 2;
}

}  // namespace gis::cli
