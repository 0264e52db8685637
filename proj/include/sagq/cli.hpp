// Copyright 2026 The sagq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The sagq command line. run() is the whole program; tools/sagq.cpp only
// forwards argv to it.
//
// Exit codes: 0 success, 1 domain error (the first word on stderr is the
// error tag), 2 usage error or unreadable input.

#ifndef SAGQ_CLI_HPP_
#define SAGQ_CLI_HPP_

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bands.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "forbidden.hpp"
#include "io.hpp"
#include "quiver.hpp"
#include "random.hpp"
#include "strmod.hpp"
#include "transform.hpp"
#include "walk.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace sagq::cli {

using nlohmann::json;

namespace detail {
  inline std::vector<std::string> split_ids(std::string const& list) {
    std::vector<std::string> out;
    std::string              item;
    std::istringstream       in(list);
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  inline json arrow_ids(BoundQuiver const& bq, std::vector<ArrowIndex> const& arrows) {
    json out = json::array();
    for (ArrowIndex a : arrows) {
      out.push_back(bq.arrow_id(a));
    }
    return out;
  }

  inline void write_file(std::string const& path, std::string const& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content)) {
      throw std::runtime_error("cannot write '" + path + "'");
    }
  }

  inline std::string render(BoundQuiver const& bq, std::string const& path) {
    if (path.ends_with(".json")) {
      return to_json(bq).dump(2) + "\n";
    }
    return to_dsl(bq);
  }

  inline json transform_json(TransformResult const& tr) {
    json vertex_map = json::object(), arrow_map = json::object();
    for (ArrowIndex a : tr.index.arrows()) {
      vertex_map[tr.source.arrow_id(a)] = tr.quiver.vertex_id(*tr.split_vertex[a]);
      arrow_map[tr.source.arrow_id(a)]  = {tr.quiver.arrow_id(*tr.left_part[a]),
                                           tr.quiver.arrow_id(*tr.right_part[a])};
    }
    return {{"R", arrow_ids(tr.source, tr.index.arrows())},
            {"quiver", to_json(tr.quiver)},
            {"vertex_map", vertex_map},
            {"arrow_map", arrow_map}};
  }
}  // namespace detail

inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound quivers of string and SAG algebras", "sagq"};
  app.require_subcommand(1);

  std::string file, out_file, dot_file, index_list, from_walk, to_walk;
  std::string string_walk, band_walk, projective_vertex, arrow_name;
  bool        as_json = false, find = false, all_indices = false, string_kind = false;
  std::size_t max_letters = 0, cap = 4096;
  RandomSagSpec gen_spec;
  double        long_density = 0.3;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "quiver file (DSL or JSON)")->required();
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  auto* validate = app.add_subcommand("validate", "parse a quiver and optionally check a walk");
  add_file(validate);
  validate->add_option("--string", string_walk, "walk to check as a string");
  validate->add_option("--band", band_walk, "walk to check as a band");

  auto* classify_cmd = app.add_subcommand("classify", "check string / almost gentle / SAG axioms");
  add_file(classify_cmd);

  auto* strings = app.add_subcommand("strings", "enumerate strings up to equivalence");
  add_file(strings);
  strings->add_option("--max-letters", max_letters, "maximal string length")->required();

  auto* bands = app.add_subcommand("bands", "decide whether a band exists");
  add_file(bands);
  bands->add_flag("--find", find, "print a shortest band");

  auto* reptype = app.add_subcommand("reptype", "representation type");
  add_file(reptype);

  auto* forbidden = app.add_subcommand("forbidden", "forbidden arrows and cycles, perfect index");
  add_file(forbidden);

  auto* transform = app.add_subcommand("transform", "R-bound quiver for an index R");
  add_file(transform);
  transform->add_option("--R", index_list, "comma-separated left forbidden arrows")->required();
  transform->add_option("--out", out_file, "write the quiver (.json for JSON)");
  transform->add_option("--dot", dot_file, "write Graphviz DOT");

  auto* cma_cmd = app.add_subcommand("cma", "Cohen-Macaulay Auslander algebra of a SAG algebra");
  add_file(cma_cmd);
  cma_cmd->add_option("--out", out_file, "write the quiver (.json for JSON)");
  cma_cmd->add_option("--dot", dot_file, "write Graphviz DOT");

  auto* homdim = app.add_subcommand("homdim", "dim Hom(M(from), M(to)) for strings");
  add_file(homdim);
  homdim->add_option("--from", from_walk, "source string")->required();
  homdim->add_option("--to", to_walk, "target string")->required();

  auto* module_string = app.add_subcommand("module-string", "string of P(v) or alpha*A");
  add_file(module_string);
  auto* which = module_string->add_option_group("module", "exactly one of");
  which->add_option("--projective", projective_vertex, "vertex v");
  which->add_option("--arrow", arrow_name, "arrow alpha");
  which->require_option(1);

  auto* verify = app.add_subcommand("verify", "compare dim End(M_R) with dim of the R-bound quiver");
  add_file(verify);
  verify->add_option("--R", index_list, "comma-separated left forbidden arrows");
  verify->add_flag("--all-indices", all_indices, "check every subset of left forbidden arrows");
  verify->add_option("--cap", cap, "maximal number of subsets for --all-indices");

  auto* dim = app.add_subcommand("dim", "dimension of kQ/I");
  add_file(dim);

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz DOT of the bound quiver");
  export_dot->add_option("file", file, "quiver file")->required();
  export_dot->add_option("--out", out_file, "output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "random SAG (or string) bound quiver");
  gen->add_option("--seed", gen_spec.seed, "64-bit seed");
  gen->add_option("--vertices", gen_spec.num_vertices, "number of vertices");
  gen->add_option("--arrows", gen_spec.num_arrows, "number of arrows");
  gen->add_option("--density", gen_spec.relation_density, "extra relation density")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--string", string_kind, "allow relations of length 3");
  gen->add_option("--long-density", long_density, "density of length-3 relations")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--json", as_json, "emit JSON instead of the DSL");

  std::vector<char const*> argv{"sagq"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "UsageError: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (gen->parsed()) {
      BoundQuiver bq = string_kind
                           ? gen_random_string_quiver(RandomStringSpec{gen_spec, long_density})
                           : gen_random_sag(gen_spec);
      out << (as_json ? to_json(bq).dump(2) + "\n" : to_dsl(bq));
      return 0;
    }

    BoundQuiver const bq = load_quiver(file);

    if (validate->parsed()) {
      json doc{{"vertices", bq.num_vertices()},
               {"arrows", bq.num_arrows()},
               {"relations", bq.relations().size()}};
      if (!string_walk.empty()) {
        auto v         = validate_string(bq, parse_walk(bq, string_walk));
        doc["string"] = {{"valid", v.ok}, {"reason", v.reason}};
      }
      if (!band_walk.empty()) {
        auto v       = validate_band(bq, parse_band(bq, band_walk));
        doc["band"] = {{"valid", v.ok}, {"reason", v.reason}};
      }
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        out << "valid quiver: " << bq.num_vertices() << " vertices, " << bq.num_arrows()
            << " arrows, " << bq.relations().size() << " relations\n";
        for (char const* key : {"string", "band"}) {
          if (doc.contains(key)) {
            bool ok = doc[key]["valid"];
            out << key << ": " << (ok ? "valid" : "invalid");
            if (!ok) {
              out << " (" << doc[key]["reason"].get<std::string>() << ")";
            }
            out << "\n";
          }
        }
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      auto c = classify(bq);
      if (as_json) {
        json violations = json::array();
        for (auto const& v : c.violations) {
          violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
        }
        out << json{{"string", c.is_string},
                    {"almost_gentle", c.is_almost_gentle},
                    {"sag", c.is_sag},
                    {"gentle", c.is_gentle},
                    {"violations", violations}}
                   .dump(2)
            << "\n";
      } else {
        out << std::boolalpha << "string: " << c.is_string << "\n"
            << "almost_gentle: " << c.is_almost_gentle << "\n"
            << "sag: " << c.is_sag << "\n"
            << "gentle: " << c.is_gentle << "\n";
        for (auto const& v : c.violations) {
          out << "violation " << v.axiom << ": " << v.witness << "\n";
        }
      }
      return 0;
    }

    if (strings->parsed()) {
      auto all = enumerate_strings(bq, max_letters);
      if (as_json) {
        json list = json::array();
        for (auto const& w : all) {
          list.push_back(format_walk(bq, w));
        }
        out << json{{"count", all.size()}, {"strings", list}}.dump(2) << "\n";
      } else {
        for (auto const& w : all) {
          out << format_walk(bq, w) << "\n";
        }
      }
      return 0;
    }

    if (bands->parsed()) {
      bool exists = band_exists(bq);
      json doc{{"band_exists", exists}};
      if (find) {
        auto b          = find_band(bq);
        doc["witness"] = b ? json(format_band(bq, *b)) : json(nullptr);
      }
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        out << "band: " << (exists ? "yes" : "no") << "\n";
        if (find && exists) {
          out << "witness: " << doc["witness"].get<std::string>() << "\n";
        }
      }
      return 0;
    }

    if (reptype->parsed()) {
      auto t = to_string(representation_type(bq));
      if (as_json) {
        out << json{{"representation_type", t}}.dump(2) << "\n";
      } else {
        out << t << "\n";
      }
      return 0;
    }

    if (forbidden->parsed()) {
      auto lf     = left_forbidden_arrows(bq);
      auto cycles = forbidden_cycles(bq);
      json cycle_list = json::array();
      for (auto const& c : cycles) {
        cycle_list.push_back({{"arrows", detail::arrow_ids(bq, c.arrows)},
                              {"perfect", is_perfect(bq, c)}});
      }
      json perfect = is_sag_pair(bq) ? detail::arrow_ids(bq, perfect_index(bq).arrows)
                                     : json(nullptr);
      if (as_json) {
        out << json{{"left_forbidden", detail::arrow_ids(bq, lf)},
                    {"cycles", cycle_list},
                    {"perfect_index", perfect}}
                   .dump(2)
            << "\n";
      } else {
        out << "left forbidden: " << bq.text(lf) << "\n";
        for (auto const& c : cycles) {
          out << "forbidden cycle: " << bq.text(c.arrows);
          auto ws = perfectness_witnesses(bq, c);
          if (ws.empty()) {
            out << " (perfect)\n";
            continue;
          }
          out << " (not perfect:";
          for (std::size_t i = 0; i < ws.size(); ++i) {
            out << (i ? ", " : " ") << bq.arrow_id(ws[i].first) << " "
                << bq.arrow_id(ws[i].second);
          }
          out << " in I)\n";
        }
        if (perfect.is_null()) {
          out << "perfect index: undefined (not a SAG pair)\n";
        } else {
          out << "perfect index: " << bq.text(perfect_index(bq).arrows) << "\n";
        }
      }
      return 0;
    }

    if (transform->parsed() || cma_cmd->parsed()) {
      TransformResult tr = transform->parsed()
                               ? r_transform(bq, validate_index(bq, detail::split_ids(index_list)))
                               : cma(bq);
      if (!out_file.empty()) {
        detail::write_file(out_file, detail::render(tr.quiver, out_file));
      }
      if (!dot_file.empty()) {
        detail::write_file(dot_file, to_dot(tr.quiver));
      }
      if (as_json) {
        json doc = detail::transform_json(tr);
        if (cma_cmd->parsed()) {
          doc["perfect_index"] = detail::arrow_ids(bq, tr.index.arrows());
        }
        out << doc.dump(2) << "\n";
      } else {
        out << to_dsl(tr.quiver);
      }
      return 0;
    }

    if (homdim->parsed()) {
      auto d = hom_dim(bq, parse_walk(bq, from_walk), parse_walk(bq, to_walk));
      if (as_json) {
        out << json{{"hom_dim", d}}.dump(2) << "\n";
      } else {
        out << d << "\n";
      }
      return 0;
    }

    if (module_string->parsed()) {
      Walk w = !projective_vertex.empty()
                   ? projective_string(bq, bq.vertex_index(projective_vertex))
                   : arrow_module_string(bq, bq.arrow_index(arrow_name));
      if (as_json) {
        out << json{{"walk", format_walk(bq, w)}}.dump(2) << "\n";
      } else {
        out << format_walk(bq, w) << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<RIndex> indices;
      if (all_indices) {
        auto lf = left_forbidden_arrows(bq);
        std::size_t total = lf.size() >= 63 ? cap : std::min<std::size_t>(cap, std::size_t{1} << lf.size());
        for (std::size_t mask = 0; mask < total; ++mask) {
          std::vector<ArrowIndex> subset;
          for (std::size_t i = 0; i < lf.size() && i < 63; ++i) {
            if (mask >> i & 1U) {
              subset.push_back(lf[i]);
            }
          }
          indices.push_back(validate_index(bq, subset));
        }
      } else {
        indices.push_back(validate_index(bq, detail::split_ids(index_list)));
      }
      RepresentationType const source_type = representation_type(bq);
      json        results    = json::array();
      std::size_t mismatches = 0;
      for (auto const& index : indices) {
        auto report = verify_endo_dimension(bq, index);
        auto target_type = representation_type(report.result.quiver);
        bool agree = report.dimensions_agree() && target_type == source_type;
        mismatches += agree ? 0 : 1;
        json obstruction = nullptr;
        if (auto ob = endo_dimension_obstruction(bq, index)) {
          obstruction = {bq.arrow_id(ob->alpha), bq.arrow_id(ob->beta)};
        }
        results.push_back({{"R", detail::arrow_ids(bq, index.arrows())},
                           {"dim_source_endo", report.dim_source_endo},
                           {"dim_transformed", report.dim_transformed},
                           {"reptype_source", to_string(source_type)},
                           {"reptype_transformed", to_string(target_type)},
                           {"agree", agree},
                           {"obstruction", obstruction}});
      }
      if (as_json) {
        out << json{{"results", results}, {"mismatches", mismatches}}.dump(2) << "\n";
      } else {
        for (auto const& r : results) {
          std::string ids;
          for (auto const& id : r["R"]) {
            ids += (ids.empty() ? "" : ",") + id.get<std::string>();
          }
          out << "R={" << ids << "}: dim End(M_R) = " << r["dim_source_endo"].get<std::uint64_t>()
              << ", dim R(A) = " << r["dim_transformed"].get<std::uint64_t>()
              << ", reptype " << r["reptype_source"].get<std::string>() << " / "
              << r["reptype_transformed"].get<std::string>()
              << (r["agree"].get<bool>() ? "" : "  MISMATCH");
          if (!r["obstruction"].is_null()) {
            out << " (" << r["obstruction"][0].get<std::string>() << "*A tops onto "
                << r["obstruction"][1].get<std::string>() << "*A)";
          }
          out << "\n";
        }
        out << "checked " << results.size() << " indices, " << mismatches << " mismatches\n";
      }
      if (mismatches != 0) {
        err << tag(ErrorKind::VerificationFailed) << ": " << mismatches
            << " indices disagree\n";
        return 1;
      }
      return 0;
    }

    if (dim->parsed()) {
      auto d = algebra_dim(bq);
      if (as_json) {
        out << json{{"dim", d}}.dump(2) << "\n";
      } else {
        out << d << "\n";
      }
      return 0;
    }

    if (export_dot->parsed()) {
      if (out_file.empty()) {
        out << to_dot(bq);
      } else {
        detail::write_file(out_file, to_dot(bq));
      }
      return 0;
    }
  } catch (Error const& e) {
    err << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (std::runtime_error const& e) {
    err << "IOError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sagq::cli

#endif  // SAGQ_CLI_HPP_
