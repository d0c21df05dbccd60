#include "rankmetric/commands.hpp"

#include <optional>

#include "rankmetric/errors.hpp"
#include "rankmetric/verify.hpp"

namespace rankmetric::commands {

namespace {

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget ? o.budget : fallback; }

CodeSpec load_spec(const Options& o, const json& spec) {
  FieldPtr field = o.field.empty() ? nullptr : io::parse_field_flag(o.field, o.table_budget);
  return io::spec_from_json(spec, field, o.table_budget);
}

void check_method(const std::string& m) {
  require(m == "closed" || m == "oracle" || m == "both", "method must be closed, oracle or both");
}

std::string method_name(const std::string& m, const char* oracle) {
  return m == "closed" ? "closed_form" : m == "oracle" ? oracle : "both";
}

}  // namespace

Outcome construct(const json& spec_json, const Options& o) {
  const CodeSpec spec = load_spec(o, spec_json);
  const Code code = build_h_code(spec);
  json r = io::code_to_json(code);
  r["spec"] = io::spec_to_json(spec);
  r["proportionality"] = to_string(proportionality_class(spec).cls);
  return {r, "construction"};
}

Outcome check(const json& spec_json, const Options& o) {
  const CodeSpec spec = load_spec(o, spec_json);
  const Code code = build_h_code(spec);
  const bool criterion = mrd_norm_criterion(spec);
  const int d = min_distance_exhaustive(code, budget_or(o, std::uint64_t{1} << 24));
  const bool mrd = is_mrd(code, budget_or(o, std::uint64_t{1} << 24));
  return {json{{"criterion", criterion}, {"min_distance", d}, {"is_mrd", mrd}}, "norm criterion + exhaustive", mrd};
}

Outcome dual(const json& spec_json, const Options& o) {
  check_method(o.method);
  const CodeSpec spec = load_spec(o, spec_json);
  const Code code = build_h_code(spec);
  json r;
  bool truth = true;
  std::optional<Code> oracle, closed;
  if (o.method != "closed") oracle = delsarte_dual(code);
  if (o.method != "oracle") closed = dual_closed_form(spec);
  r["dual"] = io::code_to_json(oracle ? *oracle : *closed);
  if (oracle && closed) {
    truth = *oracle == *closed;
    r["closed_form_equals_oracle"] = truth;
  }
  return {r, method_name(o.method, "linear_algebra"), truth};
}

Outcome adjoint(const json& spec_json, const Options& o) {
  const CodeSpec spec = load_spec(o, spec_json);
  json r;
  r["adjoint"] = io::code_to_json(adjoint_code(build_h_code(spec)));
  const auto shape = adjoint_code_shape_check(spec);
  r["shape"] = json{{"passed", shape.passed},
                    {"witnessed_k", shape.witnessed_k},
                    {"printed_k", shape.printed_k},
                    {"printed_matches", shape.printed_matches},
                    {"witnessed_spec", shape.witnessed_spec ? io::spec_to_json(*shape.witnessed_spec) : json(nullptr)},
                    {"note", shape.note}};
  return {r, "adjoint + shape check", shape.passed};
}

Outcome nucleus(const json& spec_json, const Options& o) {
  check_method(o.method);
  require(o.kind == "right" || o.kind == "middle" || o.kind == "both", "kind must be right, middle or both");
  const CodeSpec spec = load_spec(o, spec_json);
  const Code code = build_h_code(spec);
  json r;
  bool truth = true;
  for (auto kind : {NucleusKind::Right, NucleusKind::Middle}) {
    if (o.kind != "both" && o.kind != to_string(kind)) continue;
    json entry;
    std::optional<NucleusResult> oracle;
    if (o.method != "closed") {
      oracle = nucleus(code, kind);
      entry = io::nucleus_to_json(*oracle);
    }
    if (o.method != "oracle") {
      try {
        const int d = kind == NucleusKind::Right ? nucleus_closed_form(spec) : middle_nucleus_closed_form(spec);
        entry["closed_form_d"] = d;
        if (oracle) {
          const bool eq = nucleus_code(code, kind) == scalar_subfield_code(spec.field, d);
          entry["closed_form_equals_oracle"] = eq;
          truth = truth && eq;
        }
      } catch (const PreconditionError& e) {
        if (o.method == "closed") throw;
        entry["closed_form_d"] = nullptr;
        entry["closed_form_note"] = e.what();
      }
    }
    r[to_string(kind)] = entry;
  }
  return {r, method_name(o.method, "linear_algebra"), truth};
}

Outcome gamma(int n, int r, int s, int k, const Options& o) {
  check_method(o.method);
  json res{{"n", n}, {"r", r}, {"s", s}, {"k", k}};
  std::optional<GammaSet> e, c;
  if (o.method != "closed") res["enumerate"] = (e = gamma_enumerate(n, r, s, k))->members;
  if (o.method != "oracle") {
    c = gamma_closed_form(n, r, s, k);
    res["closed_form"] = c->members;
    res["rule"] = c->rule;
  }
  bool truth = true;
  if (e && c) res["equal"] = truth = e->members == c->members;
  return {res, method_name(o.method, "enumeration"), truth};
}

Outcome equiv(const json& a_json, const json& b_json, const Options& o) {
  require(o.equiv_mode == "closed" || o.equiv_mode == "monomial" || o.equiv_mode == "full",
          "equivalence mode must be closed, monomial or full");
  const bool monomial = o.equiv_mode == "monomial";
  const CodeSpec A = load_spec(o, a_json);
  const CodeSpec B = load_spec(o, b_json);
  require(A.field->same_as(*B.field), "field mismatch");
  const Field& F = *A.field;
  const std::uint64_t budget = budget_or(o, kDefaultSearchBudget);
  json r;
  if (o.equiv_mode != "closed") {
    const Code cA = build_h_code(A), cB = build_h_code(B);
    const auto all = monomial ? monomial_equiv_search_all(cA, cB, o.all_witnesses, budget)
                                : full_equiv_search_all(cA, cB, o.all_witnesses, budget);
    auto wj = [&](const EquivMap& m) {
      json w = io::equiv_map_to_json(m);
      if (is_monomial(m.phi1) && is_monomial(m.phi2)) {
        const int l = m.phi1.support().front(), j = m.phi2.support().front();
        w["a"] = io::elem_to_json(F, m.phi1.coeff(l));
        w["b"] = io::elem_to_json(F, m.phi2.coeff(j));
        w["l"] = l;
        w["phi2_exponent"] = j;
      }
      return w;
    };
    r["equivalent"] = !all.empty();
    r["witness"] = all.empty() ? json(nullptr) : wj(all.front());
    if (o.all_witnesses) {
      json ws = json::array();
      for (const auto& m : all) ws.push_back(wj(m));
      r["witnesses"] = ws;
    }
    r["method"] = monomial ? "monomial" : "full";
    return {r, r["method"], !all.empty()};
  }
  const auto all = equiv_closed_form_all(A, B, o.all_witnesses, budget);
  r["equivalent"] = !all.empty();
  r["witness"] = all.empty() ? json(nullptr) : io::closed_form_witness_to_json(F, all.front());
  if (o.all_witnesses) {
    json ws = json::array();
    for (const auto& w : all) ws.push_back(io::closed_form_witness_to_json(F, w));
    r["witnesses"] = ws;
  }
  r["method"] = "closed_form";
  return {r, "closed_form", !all.empty()};
}

Outcome aut(const json& spec_json, const Options& o) {
  check_method(o.method);
  const CodeSpec spec = load_spec(o, spec_json);
  const Field& F = *spec.field;
  json r;
  const bool want_oracle = o.list || o.method != "closed";
  const bool want_closed = !o.list || o.method != "oracle";
  std::optional<AutOrderReport> closed;
  std::optional<std::uint64_t> derived;
  if (want_closed) {
    const bool mono = aut_support(spec).size() == 1;
    closed = mono ? aut_order_monomial(spec) : aut_order_closed_form(spec);
    r["closed_form"] = json{{"order", closed->order}, {"formula", closed->formula}, {"d", closed->d},
                            {"tau", closed->tau},     {"boundary", closed->boundary}};
    if (!mono) {
      r["closed_form"]["kappa"] = closed->kappa;
      derived = aut_order_derived(spec).order;
      r["derived_order"] = *derived;
    }
  }
  std::optional<std::vector<AutTriple>> triples;
  if (want_oracle) {
    try {
      triples = aut_enumerate(spec, budget_or(o, kAutBudget));
    } catch (const BudgetError& e) {
      if (o.method != "both" || o.list) throw;
      r["warning"] = std::string("no enumeration oracle ran: ") + e.what();
    }
  }
  bool truth = true;
  std::string method;
  if (triples && closed) {
    method = "both";
    r["order"] = triples->size();
    truth = closed->order == triples->size();
    r["agree"] = truth;
  } else if (triples) {
    method = "enumeration";
    r["order"] = triples->size();
  } else {
    method = "closed_form";
    r["order"] = closed->order;
  }
  r["method"] = method;
  if (o.list && triples) {
    json ts = json::array();
    for (const auto& t : *triples) ts.push_back(io::aut_triple_to_json(F, t));
    r["triples"] = ts;
  }
  return {r, method, truth};
}

Outcome verify(const Options& o) {
  json lines = json::array();
  bool all = true;
  for (const auto& res : run_acceptance(o.only)) {
    all = all && res.pass;
    lines.push_back(json{{"id", res.id},
                         {"title", res.title},
                         {"pass", res.pass},
                         {"seconds", res.seconds},
                         {"limit_seconds", res.limit_seconds},
                         {"detail", res.detail},
                         {"line", format_result_line(res)}});
  }
  return {json{{"criteria", lines}, {"all_pass", all}}, "acceptance ledger", all};
}

}  // namespace rankmetric::commands
