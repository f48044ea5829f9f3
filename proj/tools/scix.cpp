// scix: strong chromatic index toolkit command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scix/cache.hpp"
#include "scix/catalog.hpp"
#include "scix/configs.hpp"
#include "scix/discharging.hpp"
#include "scix/embedding.hpp"
#include "scix/graph.hpp"
#include "scix/mad.hpp"
#include "scix/patterns.hpp"
#include "scix/poly.hpp"
#include "scix/solver.hpp"
#include "scix/structure.hpp"
#include "scix/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

scix::Graph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  // accept graph6 one-liners as well as the edge-list format
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != 'n' && text[first] != '#' && text[first] != 'e')
    return scix::parse_graph6(text);
  return scix::parse_edge_list(text);
}

scix::PartialColoring load_fixed(const std::string& path) {
  scix::PartialColoring fixed;
  std::istringstream in(slurp(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    int u, v, c;
    if (tag != "c" || !(ls >> u >> v >> c))
      throw std::runtime_error("fixed coloring, line " + std::to_string(lineno) +
                               ": expected \"c <u> <v> <color>\"");
    fixed[scix::EdgeId(u, v)] = c;
  }
  return fixed;
}

scix::ListAssignment load_lists(const std::string& path) {
  scix::ListAssignment lists;
  std::istringstream in(slurp(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    int u, v;
    if (tag != "l" || !(ls >> u >> v))
      throw std::runtime_error("lists, line " + std::to_string(lineno) +
                               ": expected \"l <u> <v> <colors...>\"");
    std::vector<int> colors;
    int c;
    while (ls >> c) colors.push_back(c);
    lists[scix::EdgeId(u, v)] = colors;
  }
  return lists;
}

void print_coloring(const scix::Coloring& c) {
  for (const auto& [e, color] : c) std::cout << "c " << e.a << " " << e.b << " " << color << "\n";
}

scix::ConfigSpec parse_config_spec(const std::string& family, const std::string& params_csv, int d,
                                   int k) {
  scix::ConfigSpec spec;
  if (family == "cat") spec.family = scix::ConfigFamily::Caterpillar;
  else if (family == "Y") spec.family = scix::ConfigFamily::Y;
  else if (family == "H") spec.family = scix::ConfigFamily::H;
  else if (family == "Phi") spec.family = scix::ConfigFamily::Phi;
  else throw std::runtime_error("unknown family '" + family + "' (expected cat|Y|H|Phi)");
  std::istringstream in(params_csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) spec.params.push_back(std::stoi(item));
  }
  spec.max_degree = d;
  spec.colors = k;
  spec.validate();
  return spec;
}

nlohmann::ordered_json verdict_to_json(const scix::ConfigSpec& spec,
                                       const scix::ReducibilityVerdict& verdict, double seconds) {
  nlohmann::ordered_json obj;
  obj["spec"] = spec.str();
  obj["status"] = verdict.reducible() ? "Reducible" : "NotReducible";
  if (verdict.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& [e, c] : *verdict.witness) w.push_back({e.a, e.b, c});
    obj["witness"] = w;
  }
  obj["precolorings"] = verdict.precolorings;
  obj["seconds"] = seconds;
  return obj;
}

/// check_reducible with the results cache layered underneath. The cache is
/// advisory: hits replay the stored verdict, misses compute and append.
scix::ReducibilityVerdict cached_check_reducible(scix::ResultCache& cache,
                                                 const scix::ConfigSpec& spec, int jobs) {
  const std::string key = "config-check/v1/" + spec.str();
  if (const auto hit = cache.get(key)) {
    const nlohmann::json& payload = *hit;
    scix::ReducibilityVerdict verdict;
    verdict.status = payload.at("status") == "Reducible"
                         ? scix::ReducibilityVerdict::Status::Reducible
                         : scix::ReducibilityVerdict::Status::NotReducible;
    verdict.precolorings = payload.at("precolorings").get<std::uint64_t>();
    if (payload.contains("witness")) {
      scix::PartialColoring w;
      for (const auto& triple : payload.at("witness"))
        w[scix::EdgeId(triple.at(0).get<int>(), triple.at(1).get<int>())] = triple.at(2).get<int>();
      verdict.witness = std::move(w);
    }
    return verdict;
  }
  const scix::ReducibilityVerdict verdict = scix::check_reducible(spec, jobs);
  nlohmann::json payload;
  payload["status"] = verdict.reducible() ? "Reducible" : "NotReducible";
  payload["precolorings"] = verdict.precolorings;
  if (verdict.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [e, c] : *verdict.witness) w.push_back({e.a, e.b, c});
    payload["witness"] = w;
  }
  cache.put(key, payload);
  return verdict;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong chromatic index toolkit"};
  app.require_subcommand(1);

  std::string input, fixed_path, lists_path, report_path, emit_format = "el", emit_poly;
  std::string family, params_csv, name, only_scope;
  int k = 0, d = 3, jobs = 1, p_vertex = 0, cat_t = 8, face_lmax = 0;
  std::uint64_t seed = 1, trials = 10000;
  bool audit_cases = false, no_cache = false;
  std::vector<int> name_params;

  auto* chi = app.add_subcommand("chi", "exact strong chromatic index");
  chi->add_option("--input", input, "edge-list or graph6 file, - for stdin")->required();

  auto* decide = app.add_subcommand("decide", "strong k-colorability, optionally extending a fixed coloring");
  decide->add_option("-k", k, "number of colors")->required();
  decide->add_option("--input", input)->required();
  decide->add_option("--fixed", fixed_path, "file of \"c <u> <v> <color>\" lines");

  auto* list_decide = app.add_subcommand("list-decide", "strong coloring from per-edge lists");
  list_decide->add_option("--lists", lists_path, "file of \"l <u> <v> <colors...>\" lines")->required();
  list_decide->add_option("--input", input)->required();

  auto* mad_cmd = app.add_subcommand("mad", "exact maximum average degree");
  mad_cmd->add_option("--input", input)->required();

  auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
  girth_cmd->add_option("--input", input)->required();

  auto* contract_cmd = app.add_subcommand("contract", "delete all 1-vertices (single pass)");
  contract_cmd->add_option("--input", input)->required();

  auto* expand_cmd = app.add_subcommand("expand", "add pendant edges up to degree d");
  expand_cmd->add_option("--input", input)->required();
  expand_cmd->add_option("-d", d, "target degree")->required();

  auto* config = app.add_subcommand("config", "reducible-configuration checks");
  auto* config_check = config->add_subcommand("check", "decide k-reducibility of one configuration");
  config_check->add_option("--family", family, "cat|Y|H|Phi")->required();
  config_check->add_option("--params", params_csv, "comma-separated parameters")->required();
  config_check->add_option("--max-degree", d)->required();
  config_check->add_option("-k", k, "colors")->required();
  config_check->add_option("--jobs", jobs);
  config_check->add_flag("--no-cache", no_cache, "recompute even on a cache hit");
  auto* config_claims = config->add_subcommand("verify-claims", "run the reducibility catalog for one degree");
  config_claims->add_option("--max-degree", d)->required();
  config_claims->add_option("--report", report_path, "write the JSON report here");
  config_claims->add_option("--jobs", jobs);
  config_claims->add_flag("--no-cache", no_cache);

  auto* cn = app.add_subcommand("cn", "list-coloring certificate coefficient for a caterpillar");
  cn->add_option("--caterpillar", cat_t, "thread length t")->required();
  cn->add_option("-k", k, "list size")->required();
  cn->add_option("--emit-poly", emit_poly, "write the factor list as text");

  auto* discharge = app.add_subcommand("discharge", "run a vertex-charging rule set");
  discharge->add_option("--input", input)->required();
  std::string ruleset = "sparse3";
  discharge->add_option("--ruleset", ruleset, "sparse3|sparse4")->required();

  auto* discharge_list = app.add_subcommand("discharge-list", "embedded rules around a precolored vertex");
  discharge_list->add_option("--embedding", input, "edge list plus \"r <v> <cyclic order>\" lines")->required();
  discharge_list->add_option("--p", p_vertex, "the precolored vertex")->required();

  auto* audit = app.add_subcommand("audit", "arithmetic audits");
  audit->add_option("--face-lmax", face_lmax, "check face inequalities for l in 41..lmax");
  audit->add_flag("--cases", audit_cases, "check the displayed charge identities");

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a named graph");
  catalog_cmd->add_option("--name", name)->required();
  catalog_cmd->add_option("--params", name_params, "integer parameters");
  catalog_cmd->add_option("--emit", emit_format, "el|g6");

  auto* verify = app.add_subcommand("verify-paper", "run the full regression report");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--only", only_scope, "restrict to one scope");
  verify->add_option("--jobs", jobs);
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials, "falsification trials (falsify scope)");
  verify->add_flag("--no-cache", no_cache);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chi) {
      std::cout << scix::chi_strong(load_graph(input)) << "\n";
    } else if (*decide) {
      const auto fixed = fixed_path.empty() ? scix::PartialColoring{} : load_fixed(fixed_path);
      const auto coloring = scix::decide_strong(load_graph(input), k, fixed);
      if (!coloring) {
        std::cout << "NONE\n";
        return 1;
      }
      print_coloring(*coloring);
    } else if (*list_decide) {
      const auto coloring = scix::decide_list(load_graph(input), load_lists(lists_path));
      if (!coloring) {
        std::cout << "NONE\n";
        return 1;
      }
      print_coloring(*coloring);
    } else if (*mad_cmd) {
      std::cout << scix::mad_exact(load_graph(input)).str() << "\n";
    } else if (*girth_cmd) {
      const auto g = scix::girth(load_graph(input));
      if (g) std::cout << *g << "\n";
      else std::cout << "infinite\n";
    } else if (*contract_cmd) {
      const scix::ContractResult res = scix::contract(load_graph(input));
      for (std::size_t nv = 0; nv < res.new_to_old.size(); ++nv)
        std::cout << "# vertex " << nv << " was " << res.new_to_old[nv] << "\n";
      std::cout << scix::emit_edge_list(res.graph);
    } else if (*expand_cmd) {
      std::vector<int> skipped;
      const scix::Graph out = scix::expand(load_graph(input), d, &skipped);
      for (int v : skipped)
        std::cerr << "warning: vertex " << v << " has degree below 2 and was left alone\n";
      std::cout << scix::emit_edge_list(out);
    } else if (*config_check) {
      const scix::ConfigSpec spec = parse_config_spec(family, params_csv, d, k);
      const auto start = std::chrono::steady_clock::now();
      scix::ReducibilityVerdict verdict;
      if (no_cache) {
        verdict = scix::check_reducible(spec, jobs);
      } else {
        scix::ResultCache cache(scix::ResultCache::env_dir());
        verdict = cached_check_reducible(cache, spec, jobs);
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cout << verdict_to_json(spec, verdict, secs).dump(2) << "\n";
      return verdict.reducible() ? 0 : 1;
    } else if (*config_claims) {
      std::optional<scix::ResultCache> cache;
      if (!no_cache) cache.emplace(scix::ResultCache::env_dir());
      const auto runner = [&](const scix::ConfigSpec& spec, int j) {
        return cache ? cached_check_reducible(*cache, spec, j) : scix::check_reducible(spec, j);
      };
      const scix::ClaimReport report = scix::verify_claims(d, jobs, runner);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& entry : report.entries) {
        auto obj = verdict_to_json(entry.spec, entry.verdict, entry.seconds);
        obj["expected"] = entry.expected_reducible ? "Reducible" : "NotReducible";
        arr.push_back(obj);
        std::cerr << (entry.pass() ? "pass " : "FAIL ") << entry.spec.str() << " -> "
                  << (entry.verdict.reducible() ? "Reducible" : "NotReducible") << " ("
                  << entry.verdict.precolorings << " precolorings, " << entry.seconds << "s)\n";
      }
      write_or_print(report_path, arr.dump(2) + "\n");
      return report.pass ? 0 : 1;
    } else if (*cn) {
      const scix::ConfigSpec spec{scix::ConfigFamily::Caterpillar, {cat_t}, 3, k};
      if (!emit_poly.empty())
        write_or_print(emit_poly, scix::caterpillar_polynomial(cat_t).emit_text());
      const scix::CnCertificate cert = scix::cn_certificate(spec);
      std::cout << "coefficient " << cert.coefficient.get_str() << "\n"
                << "list-size " << cert.list_size << "\n"
                << "ok " << (cert.ok ? "true" : "false") << "\n";
      return cert.ok ? 0 : 1;
    } else if (*discharge) {
      const scix::Graph g = load_graph(input);
      const scix::ChargeState state =
          ruleset == "sparse4" ? scix::run_rules_sparse4(g) : scix::run_rules_sparse3(g);
      for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << "v " << v << " " << state.vertex_charge[static_cast<std::size_t>(v)].str() << "\n";
      std::cout << "total " << state.total.str() << "\n";
      for (const auto& w : state.warnings) std::cerr << "note: " << w << "\n";
    } else if (*discharge_list) {
      const scix::Embedding emb = scix::parse_embedding(slurp(input));
      const scix::ChargeState state = scix::run_rules_list(emb, p_vertex);
      for (std::size_t v = 0; v < state.vertex_charge.size(); ++v)
        std::cout << "v " << v << " " << state.vertex_charge[v].str() << "\n";
      for (std::size_t f = 0; f < state.face_charge.size(); ++f)
        std::cout << "f " << f << " " << state.face_charge[f].str() << "\n";
      std::cout << "total " << state.total.str() << "\n";
    } else if (*audit) {
      bool all_ok = true;
      if (face_lmax > 0) {
        const scix::FaceAuditReport r = scix::audit_face_inequality(face_lmax);
        std::cout << "face-inequality 41.." << r.l_max << ": " << (r.pass ? "pass" : "fail")
                  << (r.equality_at_41 ? " (equality at 41)" : "") << "\n";
        std::cout << "boundary value at 40: " << r.boundary_value_40 << "\n";
        all_ok = all_ok && r.pass && r.equality_at_41;
      }
      if (audit_cases) {
        const scix::CaseAuditReport r = scix::audit_case_arithmetic();
        for (const auto& entry : r.entries)
          std::cout << (entry.pass ? "pass " : "FAIL ") << entry.description << "\n";
        all_ok = all_ok && r.pass;
      }
      if (face_lmax <= 0 && !audit_cases)
        throw std::runtime_error("audit: nothing to do (use --face-lmax and/or --cases)");
      return all_ok ? 0 : 1;
    } else if (*catalog_cmd) {
      const scix::Graph g = scix::catalog_get(name, name_params);
      if (emit_format == "g6") std::cout << scix::emit_graph6(g) << "\n";
      else std::cout << scix::emit_edge_list(g);
    } else if (*verify) {
      scix::VerifyOptions opt;
      if (!only_scope.empty()) opt.only.insert(only_scope);
      opt.jobs = jobs;
      opt.seed = seed;
      opt.falsify_trials = trials;
      std::optional<scix::ResultCache> cache;
      if (!no_cache) {
        cache.emplace(scix::ResultCache::env_dir());
        opt.config_runner = [&](const scix::ConfigSpec& spec, int j) {
          return cached_check_reducible(*cache, spec, j);
        };
      }
      const scix::Report report = scix::verify_paper(opt);
      for (const auto& e : report.entries)
        std::cout << (e.status == "pass" ? "pass " : "FAIL ") << e.id << ": " << e.claim << " ["
                  << e.computed << "]\n";
      if (!report_path.empty()) write_or_print(report_path, report.to_json().dump(2) + "\n");
      std::cout << (report.pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << report.entries.size()
                << " checks)\n";
      return report.pass() ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "scix: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
