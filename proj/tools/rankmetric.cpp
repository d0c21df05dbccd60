// rankmetric: command-line front end.
//
// Exit codes: 0 success / true, 1 mathematical false / none, 2 input error,
// 3 budget exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rankmetric/commands.hpp"
#include "rankmetric/errors.hpp"

using namespace rankmetric;
using io::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

// ------------------------------------------------------------------ output

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-metric codes H_{k,s}(L1, L2): construction, invariants, equivalence, automorphisms"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  commands::Options o;
  std::string format = "json";
  std::vector<std::string> files;
  std::vector<int> gamma_args;
  bool closed = false, monomial = false, full = false, count = false;
  app.add_option("--field", o.field, "p,lambda,n[,modulus coefficients] (overrides the input's field)");
  app.add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--table-budget", o.table_budget, "largest field size p^(lambda n) given log tables")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--method", o.method, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  app.add_flag("--all-witnesses", o.all_witnesses, "report every witness");

  auto spec_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", files, "spec JSON file")->required()->expected(1);
    c->fallthrough();
    return c;
  };
  auto* construct = spec_cmd("construct", "build H_{k,s}(L1, L2) and report it");
  auto* check = spec_cmd("check", "norm criterion, minimum distance, MRD");
  auto* dual = spec_cmd("dual", "Delsarte dual");
  auto* adjoint = spec_cmd("adjoint", "adjoint code and its identification");
  auto* nuc = spec_cmd("nucleus", "right and middle nuclei");
  nuc->add_option("--kind", o.kind, "right, middle or both")->check(CLI::IsMember({"right", "middle", "both"}));
  auto* gamma = app.add_subcommand("gamma", "Gamma_{r,s,k} both ways");
  gamma->add_option("args", gamma_args, "n r s k")->required()->expected(4);
  gamma->fallthrough();
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two specs");
  equiv->add_option("specs", files, "specA.json specB.json")->required()->expected(2);
  auto* f_closed = equiv->add_flag("--closed-form", closed, "algebraic condition (default)");
  auto* f_mono = equiv->add_flag("--monomial", monomial, "exhaustive over monomial maps");
  auto* f_full = equiv->add_flag("--full", full, "exhaustive over all invertible maps (tiny fields)");
  f_closed->excludes(f_mono)->excludes(f_full);
  f_mono->excludes(f_full);
  equiv->fallthrough();
  auto* aut = spec_cmd("aut", "automorphism group of H(x, L)");
  auto* f_count = aut->add_flag("--count", count, "order only (default)");
  aut->add_flag("--list", o.list, "list every triple")->excludes(f_count);
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance ledger");
  verify->add_option("--only", o.only, "criteria to run")->delimiter(',');
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (monomial) o.equiv_mode = "monomial";
  if (full) o.equiv_mode = "full";
  const auto* sub = app.get_subcommands().front();
  const auto t0 = std::chrono::steady_clock::now();
  json echo{{"subcommand", sub->get_name()},
            {"argv", std::vector<std::string>(argv + 1, argv + argc)},
            {"field", o.field.empty() ? json(nullptr) : json(o.field)},
            {"budget", o.budget ? json(o.budget) : json(nullptr)},
            {"table_budget", o.table_budget},
            {"method", o.method},
            {"all_witnesses", o.all_witnesses}};
  if (sub == equiv) echo["mode"] = o.equiv_mode;
  if (sub == aut) echo["list"] = o.list;
  if (sub == nuc) echo["kind"] = o.kind;
  int code = 0;
  json report;
  try {
    std::vector<json> specs;
    json inputs = json::object();
    for (const auto& f : files) inputs[f] = specs.emplace_back(read_json_file(f));
    echo["files"] = inputs;
    commands::Outcome out;
    if (sub == construct) out = commands::construct(specs[0], o);
    else if (sub == check) out = commands::check(specs[0], o);
    else if (sub == dual) out = commands::dual(specs[0], o);
    else if (sub == adjoint) out = commands::adjoint(specs[0], o);
    else if (sub == nuc) out = commands::nucleus(specs[0], o);
    else if (sub == gamma) out = commands::gamma(gamma_args[0], gamma_args[1], gamma_args[2], gamma_args[3], o);
    else if (sub == equiv) out = commands::equiv(specs[0], specs[1], o);
    else if (sub == aut) out = commands::aut(specs[0], o);
    else out = commands::verify(o);
    code = out.truth ? 0 : 1;
    report = json{{"inputs_echo", echo}, {"method", out.method}, {"result", out.result}};
  } catch (const BudgetError& e) {
    code = 3;
    report = json{{"inputs_echo", echo}, {"method", nullptr}, {"result", nullptr}, {"error", e.what()}};
  } catch (const std::invalid_argument& e) {
    code = 2;
    report = json{{"inputs_echo", echo}, {"method", nullptr}, {"result", nullptr}, {"error", e.what()}};
  } catch (const json::exception& e) {
    code = 2;
    report = json{{"inputs_echo", echo}, {"method", nullptr}, {"result", nullptr}, {"error", e.what()}};
  }
  report["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << render(report, format) << std::flush;
  if (report.contains("error")) std::cerr << "error: " << report["error"].get<std::string>() << "\n";
  return code;
}
