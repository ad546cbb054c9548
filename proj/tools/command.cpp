#include "command.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hepta/catalog.hpp"
#include "hepta/census.hpp"
#include "hepta/classifier.hpp"
#include "hepta/construct.hpp"
#include "hepta/formulas.hpp"
#include "hepta/graph6.hpp"
#include "hepta/polygons.hpp"
#include "hepta/properties.hpp"
#include "hepta/srg.hpp"

namespace hepta::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Integers that fit in 64 bits become JSON numbers; anything else is the exact "p/q" string.
Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json host_json(const HostGraph& g) { return Json{{"n", g.order()}, {"g6", emit_graph6(g)}}; }

Json params_json(const SrgParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"lambda", kLambda}, {"mu", kMu}};
}

struct Pipeline {
  Catalog catalog = generate_catalog(kClassifierOrder, true);
  Classifier classifier = load_or_build_classifier(catalog, default_cache_dir());
};

std::vector<HostGraph> load_hosts(const Command& cmd) {
  auto hosts = read_graph6_file(cmd.host);
  if (hosts.empty()) throw std::runtime_error("no graph6 records in " + cmd.host.string());
  if (!cmd.all_records) hosts.erase(hosts.begin() + 1, hosts.end());
  return hosts;
}

void emit(std::ostream& out, const Json& j, bool batch) {
  if (batch)
    out << j.dump() << '\n';
  else
    out << j.dump(2) << '\n';
}

CountVector run_census(const Command& cmd, const HostGraph& host, const Classifier& classifier) {
  switch (cmd.engine) {
    case Engine::subset: return census_subsets(host, classifier);
    case Engine::extend:
    case Engine::automatic: return census_extend(host, classifier, cmd.jobs);
  }
  return {};
}

int do_catalog(const Command& cmd, std::ostream& out) {
  const Catalog catalog = generate_catalog(cmd.order, cmd.hamiltonian_only);
  if (cmd.format == Format::g6) {
    for (const auto& e : catalog.entries()) out << emit_graph6(e.graph) << '\n';
    return kExitOk;
  }
  if (cmd.format == Format::csv) {
    out << "id,graph6,edges,hamiltonian,automorphisms\n";
    for (const auto& e : catalog.entries())
      out << e.id << ',' << emit_graph6(e.graph) << ',' << e.edge_count << ','
          << (e.hamiltonian ? "true" : "false") << ',' << e.automorphism_count << '\n';
    return kExitOk;
  }
  Json arr = Json::array();
  for (const auto& e : catalog.entries())
    arr.push_back(Json{{"id", e.id},
                       {"graph6", emit_graph6(e.graph)},
                       {"edges", e.edge_count},
                       {"hamiltonian", e.hamiltonian},
                       {"automorphisms", e.automorphism_count}});
  out << arr.dump(2) << '\n';
  return kExitOk;
}

int do_census(const Command& cmd, std::ostream& out) {
  const Pipeline pipe;
  const auto hosts = load_hosts(cmd);
  if (cmd.format == Format::csv) out << "host,id,g6,count\n";
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    const auto start = std::chrono::steady_clock::now();
    const CountVector counts = run_census(cmd, hosts[h], pipe.classifier);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    if (cmd.format == Format::csv) {
      for (const auto& e : pipe.catalog.entries())
        out << h << ',' << e.id << ',' << emit_graph6(e.graph) << ',' << counts.counts[e.id] << '\n';
      continue;
    }
    Json rows = Json::array();
    for (const auto& e : pipe.catalog.entries())
      rows.push_back(Json{{"id", e.id}, {"g6", emit_graph6(e.graph)}, {"count", counts.counts[e.id]}});
    Json j{{"host", host_json(hosts[h])},
           {"catalog_hash", hex(counts.catalog_hash)},
           {"engine", cmd.engine == Engine::subset ? "subset" : "extend"},
           {"jobs", cmd.jobs},
           {"counts", rows},
           {"elapsed_ms", elapsed.count()}};
    emit(out, j, cmd.all_records);
  }
  return kExitOk;
}

Json polygon_row(int i, std::uint64_t measured, const Rational* formula, const char* relation,
                 bool& mismatch) {
  Json row{{"i", i}, {"measured", measured}};
  if (!formula) {
    row["formula"] = nullptr;
    return row;
  }
  const Rational m(mpz_class(static_cast<unsigned long>(measured)));
  row["formula"] = rational_json(*formula);
  row["relation"] = relation;
  const std::string rel = relation;
  bool holds = false;
  if (rel == "=") holds = m == *formula;
  if (rel == ">=") holds = m >= *formula;
  if (rel == "<=") holds = m <= *formula;
  row["holds"] = holds;
  if (!holds) mismatch = true;
  if (rel != "=") {
    if (!holds)
      row["note"] = "bound violated on this host";
    else if (m == *formula)
      row["note"] = "conjecture holds on this host";
    else
      row["note"] = "bound holds; conjecture fails on this host";
  }
  return row;
}

int do_polygons(const Command& cmd, std::ostream& out) {
  const auto hosts = load_hosts(cmd);
  int exit_code = kExitOk;
  for (const auto& host : hosts) {
    const PolygonCounts measured = count_polygons(host, kMaxPolygon, cmd.jobs);
    const auto family = verify_srg(host).family_params();
    std::optional<PolygonFormulas> f;
    if (family) f = evaluate_p(*family);
    bool mismatch = false;
    Json rows = Json::array();
    rows.push_back(polygon_row(3, measured.p(3), f ? &f->p3 : nullptr, "=", mismatch));
    rows.push_back(polygon_row(4, measured.p(4), f ? &f->p4 : nullptr, "=", mismatch));
    rows.push_back(polygon_row(5, measured.p(5), f ? &f->p5 : nullptr, "=", mismatch));
    rows.push_back(polygon_row(6, measured.p(6), f ? &f->p6_lower : nullptr, ">=", mismatch));
    rows.push_back(polygon_row(7, measured.p(7), f ? &f->p7_upper : nullptr, "<=", mismatch));
    Json j{{"host", host_json(host)},
           {"params", family ? params_json(*family) : Json(nullptr)},
           {"polygons", rows}};
    emit(out, j, cmd.all_records);
    if (mismatch) exit_code = kExitMismatch;
  }
  return exit_code;
}

int do_identities(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto hosts = load_hosts(cmd);
  const Pipeline pipe;
  int exit_code = kExitOk;
  for (const auto& host : hosts) {
    const SrgVerdict verdict = verify_srg(host);
    const auto family = verdict.family_params();
    if (!family) {
      err << "hepta: host is not an srg(n,k,1,2): " << verdict.describe() << '\n';
      return kExitInvalid;
    }
    const CountVector counts = run_census(cmd, host, pipe.classifier);
    const FitResult fit = fit_and_verify(counts, pipe.catalog, *family);

    Json per_index = Json::array();
    for (const auto& m : fit.per_index)
      per_index.push_back(Json{{"index", m.formula_index},
                               {"catalog_id", m.catalog_id},
                               {"predicted", rational_json(m.predicted)},
                               {"measured", m.measured}});
    Json candidates = Json::array();
    for (const auto& c : fit.matching_candidates) candidates.push_back(Json{{"n3", c.n3}, {"h11", c.h11}});
    Json violations = Json::array();
    for (const auto& v : fit.integrality)
      violations.push_back(Json{{"formula", v.formula}, {"value", to_string(v.value)}});

    Json j{{"host", host_json(host)},
           {"params", params_json(*family)},
           {"catalog_hash", hex(pipe.catalog.content_hash())},
           {"fitted", fit.fitted ? Json{{"n3", fit.fitted->n3}, {"h11", fit.fitted->h11}} : Json(nullptr)},
           {"matched", fit.matched},
           {"matching_candidates", candidates},
           {"candidates_tried", fit.candidates_tried},
           {"per_index", per_index},
           {"bounds_ok", fit.bounds_ok},
           {"integrality_violations", violations}};
    emit(out, j, cmd.all_records);
    if (!fit.matched) exit_code = kExitMismatch;
  }
  return exit_code;
}

int do_verify(const Command& cmd, std::ostream& out) {
  const auto hosts = load_hosts(cmd);
  int exit_code = kExitOk;
  for (const auto& host : hosts) {
    const SrgVerdict v = verify_srg(host);
    Json j{{"host", host_json(host)}, {"is_srg", v.is_srg}};
    if (v.params)
      j["params"] = Json{{"n", v.params->n}, {"k", v.params->k}, {"lambda", v.params->lambda}, {"mu", v.params->mu}};
    else
      j["params"] = nullptr;
    j["reason"] = to_string(v.reason);
    if (v.witness_u >= 0) {
      Json w{{"u", v.witness_u}};
      w["v"] = v.witness_v >= 0 ? Json(v.witness_v) : Json(nullptr);
      w["observed"] = v.observed;
      w["expected"] = v.expected;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    j["message"] = v.describe();
    emit(out, j, cmd.all_records);
    if (!v.is_srg) exit_code = kExitMismatch;
  }
  return exit_code;
}

int do_params(const Command& cmd, std::ostream& out) {
  const auto table = feasible_params(cmd.max_k);
  if (cmd.format == Format::csv) {
    out << "n,k,lambda,mu\n";
    for (const auto& p : table) out << p.n << ',' << p.k << ',' << kLambda << ',' << kMu << '\n';
    return kExitOk;
  }
  Json arr = Json::array();
  for (const auto& p : table) arr.push_back(params_json(p));
  out << arr.dump(2) << '\n';
  return kExitOk;
}

int do_construct(const Command& cmd, std::ostream& out) {
  out << emit_graph6(construct(cmd.name)) << '\n';
  return kExitOk;
}

void add_host(CLI::App* sub, Command& c, bool required = true) {
  auto* opt = sub->add_option("--host", c.host, "graph6 file; the first record is used")
                  ->check(CLI::ExistingFile);
  if (required) opt->required();
  sub->add_flag("--all", c.all_records, "process every record, one JSON object per line");
}

void add_output(CLI::App* sub, Command& c) {
  sub->add_option_function<std::string>(
      "-o,--output", [&c](const std::string& p) { c.output = p; }, "write to a file instead of stdout");
}

void add_jobs(CLI::App* sub, Command& c) {
  sub->add_option("--jobs", c.jobs, "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
}

void add_engine(CLI::App* sub, Command& c) {
  sub->add_option("--engine", c.engine, "auto | subset | extend")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Engine>{{"auto", Engine::automatic},
                                        {"subset", Engine::subset},
                                        {"extend", Engine::extend}}));
}

}  // namespace

ParseResult parse_args(std::span<const std::string> args) {
  Command c;
  CLI::App app{"Hamiltonian 7-vertex subgraph census for srg(n,k,1,2)", "hepta"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "list admissible isomorphism classes");
  catalog->add_option("--order", c.order, "vertex count, 3..7")->check(CLI::Range(3, 7));
  catalog->add_flag("--all-classes", [&c](std::int64_t) { c.hamiltonian_only = false; },
                    "keep non-Hamiltonian admissible classes");
  catalog->add_option("--format", c.format, "json | csv | g6")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{
          {"json", Format::json}, {"csv", Format::csv}, {"g6", Format::g6}}));
  add_output(catalog, c);

  auto* census = app.add_subcommand("census", "count induced occurrences of every catalog class");
  add_host(census, c);
  add_engine(census, c);
  add_jobs(census, c);
  census->add_option("--format", c.format, "json | csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
  add_output(census, c);

  auto* polygons = app.add_subcommand("polygons", "induced cycle counts against the closed forms");
  add_host(polygons, c);
  add_jobs(polygons, c);
  add_output(polygons, c);

  auto* identities = app.add_subcommand("identities", "fit and verify the closed-form table");
  add_host(identities, c);
  add_engine(identities, c);
  add_jobs(identities, c);
  add_output(identities, c);

  auto* verify = app.add_subcommand("verify-srg", "check strong regularity");
  add_host(verify, c);
  add_output(verify, c);

  auto* params = app.add_subcommand("params", "feasible srg(n,k,1,2) parameter sets");
  params->add_option("--max-k", c.max_k, "largest degree to scan")->check(CLI::Range(4, 100000000));
  params->add_option("--format", c.format, "json | csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
  add_output(params, c);

  auto* construct = app.add_subcommand("construct", "write a reference graph as graph6");
  construct->add_option("--name", c.name, "rook3x3 | paley9 | paley5 | cycle(m) | complete(m)")
      ->required();
  add_output(construct, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, kExitInvalid, std::string("hepta: ") + e.what() + "\n" + app.help()};
  }

  if (catalog->parsed()) c.subcommand = Subcommand::catalog;
  if (census->parsed()) c.subcommand = Subcommand::census;
  if (polygons->parsed()) c.subcommand = Subcommand::polygons;
  if (identities->parsed()) c.subcommand = Subcommand::identities;
  if (verify->parsed()) c.subcommand = Subcommand::verify_srg;
  if (params->parsed()) c.subcommand = Subcommand::params;
  if (construct->parsed()) c.subcommand = Subcommand::construct;

  if (!c.host.empty()) {
    std::ifstream probe(c.host);
    if (!probe) return {std::nullopt, kExitInvalid, "hepta: cannot read host file " + c.host.string()};
  }
  if (c.jobs == 0) c.jobs = resolve_jobs(0);
  return {c, kExitOk, {}};
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (cmd.output) {
      file.open(*cmd.output);
      if (!file) {
        err << "hepta: cannot open output " << cmd.output->string() << '\n';
        return kExitInvalid;
      }
      sink = &file;
    }
    switch (cmd.subcommand) {
      case Subcommand::catalog: return do_catalog(cmd, *sink);
      case Subcommand::census: return do_census(cmd, *sink);
      case Subcommand::polygons: return do_polygons(cmd, *sink);
      case Subcommand::identities: return do_identities(cmd, *sink, err);
      case Subcommand::verify_srg: return do_verify(cmd, *sink);
      case Subcommand::params: return do_params(cmd, *sink);
      case Subcommand::construct: return do_construct(cmd, *sink);
    }
  } catch (const std::exception& e) {
    err << "hepta: error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace hepta::cli
