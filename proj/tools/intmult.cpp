// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: multiplicities, diagrams, decomposability verdicts,
// cover checks, bipath diagrams and homology ingestion from JSON files.

#include "intmult/errors.hpp"
#include "intmult/grid.hpp"
#include "intmult/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace intmult;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
  std::string field;
  std::string format = "json";
  std::string output;
  std::size_t jobs = 1;
  bool verify = false;
};

class VerifyMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::optional<Field> field_of(const RunConfig& cfg) {
  if (cfg.field.empty()) return std::nullopt;
  return Field::parse(cfg.field);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ParseError("cannot write '" + cfg.output + "'");
  out << text;
}

std::string render(const RunConfig& cfg, const json& j, const std::string& table) {
  return cfg.format == "table" ? table : j.dump(2) + "\n";
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerifyMismatch("verification failed: " + what);
}

int cmd_multiplicity(const RunConfig& cfg, const std::string& module_path, const std::string& spec) {
  PersistenceModule m = io::module_from_json(io::read_json_file(module_path), field_of(cfg));
  Interval i = io::interval_from_spec(m.poset(), spec);
  const std::size_t d = interval_multiplicity(m, i);
  if (cfg.verify) {
    const std::size_t o = oracle_multiplicity(m, i);
    check(o == d, "formula gives " + std::to_string(d) + ", oracle gives " + std::to_string(o));
    if (grid_shape(*m.poset())) {
      check(grid_multiplicity(m, i) == d, "grid presentation disagrees");
      check(reduced_rank_multiplicity(m, i) == d, "reduced-rank evaluation disagrees");
    }
    if (bipath_shape(*m.poset())) check(closed_form_multiplicity(m, i) == d, "bipath closed form disagrees");
  }
  if (cfg.format == "json")
    emit(cfg, json{{"interval", io::interval_to_json(i)}, {"mult", d}}.dump() + "\n");
  else
    emit(cfg, std::to_string(d) + "\n");
  return kExitOk;
}

int cmd_diagram(const RunConfig& cfg, const std::string& module_path) {
  PersistenceModule m = io::module_from_json(io::read_json_file(module_path), field_of(cfg));
  DecomposabilityReport rep = is_interval_decomposable(m, cfg.jobs);
  if (cfg.verify)
    for (const auto& e : rep.diagram.entries)
      check(oracle_multiplicity(m, e.interval) == e.multiplicity, "oracle disagrees on " + e.interval.to_string());
  emit(cfg, render(cfg, io::diagram_to_json(rep.diagram), io::diagram_to_table(rep.diagram)));
  return kExitOk;
}

int cmd_check_decomposable(const RunConfig& cfg, const std::string& module_path) {
  PersistenceModule m = io::module_from_json(io::read_json_file(module_path), field_of(cfg));
  DecomposabilityReport rep = is_interval_decomposable(m, cfg.jobs);
  json accounted = json::object();
  for (Element x = 0; x < m.poset()->size(); ++x)
    accounted[m.poset()->label(x)] = {{"dim", m.dim(x)}, {"accounted", rep.diagram.accounted[x]}};
  json j = {{"decomposable", rep.decomposable},
            {"total_dim", rep.total_dim},
            {"total_accounted", rep.total_accounted},
            {"per_element", accounted}};
  std::string table = std::string("decomposable\t") + (rep.decomposable ? "yes" : "no") + "\n" + "accounted\t" +
                      std::to_string(rep.total_accounted) + "/" + std::to_string(rep.total_dim) + "\n";
  emit(cfg, render(cfg, j, table));
  return kExitOk;
}

int cmd_cover(const RunConfig& cfg, const std::string& map_path, const std::string& spec, const std::string& module_path) {
  json mj = io::read_json_file(map_path);
  std::optional<PersistenceModule> m;
  if (!module_path.empty()) m = io::module_from_json(io::read_json_file(module_path), field_of(cfg));
  OrderMap zeta = io::order_map_from_json(mj, m ? m->poset() : nullptr);
  Interval i = io::interval_from_spec(zeta.codomain(), spec);
  auto cover = essentially_covers(zeta, i);
  json j;
  std::string table;
  if (!cover) {
    j = {{"covered", false}};
    table = "none\n";
  } else {
    j = {{"covered", true}, {"reduced", cover->reduced}, {"witness", io::witness_to_json(cover->witness, zeta)}};
    table = cover->witness.lifted.dump();
  }
  if (cover && m) {
    const std::size_t via = multiplicity_via_cover(*m, i, zeta);
    j["mult"] = via;
    table += "mult\t" + std::to_string(via) + "\n";
    if (cfg.verify) check(via == interval_multiplicity(*m, i), "cover route disagrees with the direct formula");
  }
  emit(cfg, render(cfg, j, table));
  return kExitOk;
}

int cmd_bipath(const RunConfig& cfg, const std::string& module_path, const std::string& route) {
  PersistenceModule m = io::module_from_json(io::read_json_file(module_path), field_of(cfg));
  Diagram d;
  if (route == "closed")
    d = diagram_closed_form(m);
  else if (route == "zigzag")
    d = diagram_via_zigzag(m);
  else if (route == "unified")
    d = diagram_via_unified_cover(m);
  else
    throw ParseError("unknown route '" + route + "'");
  if (cfg.verify) {
    auto same = [](const Diagram& a, const Diagram& b) {
      if (a.entries.size() != b.entries.size()) return false;
      for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (!(a.entries[k].interval == b.entries[k].interval) || a.entries[k].multiplicity != b.entries[k].multiplicity)
          return false;
      return true;
    };
    check(same(d, diagram_closed_form(m)), "closed-form route disagrees");
    check(same(d, diagram_via_zigzag(m)), "zigzag route disagrees");
    check(same(d, maximal_interval_summand(m, cfg.jobs)), "general formula disagrees");
  }
  emit(cfg, render(cfg, io::diagram_to_json(d, true), io::diagram_to_table(d, true)));
  return kExitOk;
}

int cmd_homology(const RunConfig& cfg, const std::string& path, std::size_t degree, const std::string& spec,
                 const std::string& map_path) {
  SimplicialFiltration f = io::filtration_from_json(io::read_json_file(path));
  const Field field = field_of(cfg).value_or(Field());
  PersistenceModule m = persistent_homology(f, degree, field);
  if (spec.empty()) {
    emit(cfg, io::module_to_json(m).dump(2) + "\n");
    return kExitOk;
  }
  Interval i = io::interval_from_spec(f.poset(), spec);
  const std::size_t direct = interval_multiplicity(m, i);
  json j = {{"interval", io::interval_to_json(i)}, {"mult", direct}};
  if (!map_path.empty()) {
    OrderMap zeta = io::order_map_from_json(io::read_json_file(map_path), f.poset());
    const std::size_t via = multiplicity_from_filtration(f, degree, field, i, zeta);
    j["mult_via_cover"] = via;
    if (cfg.verify) check(via == direct, "cover route disagrees with the direct formula");
  }
  if (cfg.verify) check(oracle_multiplicity(m, i) == direct, "oracle disagrees");
  emit(cfg, cfg.format == "json" ? j.dump() + "\n" : std::to_string(direct) + "\n");
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval multiplicities of persistence modules over finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "GF(2), GF(p) for a prime p, or Q (overrides the input file)");
  app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", cfg.jobs, "worker threads for per-interval work")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "write the result to a file instead of stdout");
  app.add_flag("--verify", cfg.verify, "cross-check against the oracle and alternative routes");

  std::string module_path, spec, map_path, route = "closed";
  std::size_t degree = 1;

  auto* mult = app.add_subcommand("multiplicity", "d_M(V_I) for one interval");
  mult->add_option("module", module_path, "module JSON")->required();
  mult->add_option("interval", spec, "element list or 'sc=.. sk=..'")->required();

  auto* diag = app.add_subcommand("diagram", "multiplicity of every interval");
  diag->add_option("module", module_path, "module JSON")->required();

  auto* dec = app.add_subcommand("check-decomposable", "interval-decomposability verdict");
  dec->add_option("module", module_path, "module JSON")->required();

  auto* cov = app.add_subcommand("cover", "essential-cover search for one interval");
  cov->add_option("map", map_path, "order map JSON")->required();
  cov->add_option("interval", spec, "element list or 'sc=.. sk=..'")->required();
  cov->add_option("--module", module_path, "also compute the multiplicity through the cover");

  auto* bip = app.add_subcommand("bipath", "bipath persistence diagram");
  bip->add_option("module", module_path, "module JSON over a bipath poset")->required();
  bip->add_option("--route", route, "closed, zigzag or unified")->check(CLI::IsMember({"closed", "zigzag", "unified"}));

  auto* hom = app.add_subcommand("homology", "persistent homology of a filtration");
  hom->add_option("filtration", module_path, "filtration JSON")->required();
  hom->add_option("-q,--degree", degree, "homology degree");
  hom->add_option("--interval", spec, "report d for this interval instead of the module");
  hom->add_option("--map", map_path, "order map for the cover route");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*mult) return cmd_multiplicity(cfg, module_path, spec);
    if (*diag) return cmd_diagram(cfg, module_path);
    if (*dec) return cmd_check_decomposable(cfg, module_path);
    if (*cov) return cmd_cover(cfg, map_path, spec, module_path);
    if (*bip) return cmd_bipath(cfg, module_path, route);
    if (*hom) return cmd_homology(cfg, module_path, degree, spec, map_path);
  } catch (const VerifyMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
