#include "rankmetric/io.hpp"

#include <sstream>

#include "rankmetric/errors.hpp"

namespace rankmetric::io {

namespace {

std::vector<std::uint32_t> uint_array(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array of integers");
  std::vector<std::uint32_t> out;
  for (const auto& x : j) {
    require(x.is_number_integer() && x.get<std::int64_t>() >= 0, what + " must be an array of integers");
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

int int_field(const json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_integer(), std::string("missing integer \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

json field_to_json(const Field& F) {
  return json{{"p", F.p()},
              {"lambda", F.lambda()},
              {"n", F.n()},
              {"modulus", F.modulus()},
              {"generator", F.coords(F.generator())}};
}

FieldPtr field_from_json(const json& j, std::uint64_t budget) {
  require(j.is_object(), "field must be an object");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j["modulus"].is_null()) modulus = uint_array(j["modulus"], "modulus");
  const int p = int_field(j, "p");
  require(p >= 2, "p must be prime");
  auto F = Field::create(static_cast<std::uint32_t>(p), int_field(j, "lambda"), int_field(j, "n"), modulus, budget);
  if (j.contains("generator") && !j["generator"].is_null())
    require(F->from_coords(uint_array(j["generator"], "generator")) == F->generator(),
            "generator does not match the canonical generator of this field");
  return F;
}

FieldPtr parse_field_flag(const std::string& text, std::uint64_t budget) {
  std::vector<std::int64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      require(used == item.size(), "bad --field value: " + text);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad --field value: " + text);
    }
  }
  require(parts.size() >= 3, "--field expects p,lambda,n[,modulus coefficients]");
  for (auto v : parts) require(v >= 0, "bad --field value: " + text);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (parts.size() > 3) modulus = std::vector<std::uint32_t>(parts.begin() + 3, parts.end());
  require(parts[0] >= 2, "p must be prime");
  return Field::create(static_cast<std::uint32_t>(parts[0]), static_cast<int>(parts[1]), static_cast<int>(parts[2]),
                       modulus, budget);
}

json elem_to_json(const Field& F, Elem x, ElemStyle style) {
  if (style == ElemStyle::Coords) return F.coords(x);
  return F.to_string(x);
}

Elem elem_from_json(const Field& F, const json& j) {
  if (j.is_array()) {
    const auto c = uint_array(j, "element");
    require(c.size() == static_cast<std::size_t>(F.degree()), "element coordinate array must have length lambda*n");
    for (auto v : c) require(v < F.p(), "element coordinates must lie in [0, p)");
    return F.from_coords(c);
  }
  require(j.is_string(), "element must be a coordinate array or \"g^k\"");
  const std::string s = j.get<std::string>();
  if (s == "0") return Field::zero();
  if (s == "1") return Field::one();
  if (s == "g") return F.exp(1);
  require(s.size() > 2 && s.rfind("g^", 0) == 0, "element string must be \"g^k\", \"0\" or \"1\": " + s);
  try {
    std::size_t used = 0;
    const long long k = std::stoll(s.substr(2), &used);
    require(used == s.size() - 2, "bad exponent in " + s);
    return F.exp(k);
  } catch (const std::logic_error&) {
    throw PreconditionError("bad exponent in " + s);
  }
}

json linpoly_to_json(const LinPoly& f, ElemStyle style) {
  json arr = json::array();
  for (auto c : f.coeffs()) arr.push_back(elem_to_json(f.field(), c, style));
  return json{{"coeffs", arr}};
}

LinPoly linpoly_from_json(const FieldPtr& F, const json& j) {
  require(j.is_object() && j.contains("coeffs") && j["coeffs"].is_array(), "LinPoly must be {\"coeffs\": [...]}");
  require(j["coeffs"].size() == static_cast<std::size_t>(F->n()), "LinPoly needs exactly n coefficients");
  std::vector<Elem> c;
  for (const auto& x : j["coeffs"]) c.push_back(elem_from_json(*F, x));
  return LinPoly(F, c);
}

json amap_to_json(const AdditiveMap& m, ElemStyle style) {
  json arr = json::array();
  for (auto c : m.pcoeffs()) arr.push_back(elem_to_json(*m.field_ptr(), c, style));
  return json{{"pcoeffs", arr}};
}

AdditiveMap amap_from_json(const FieldPtr& F, const json& j) {
  require(j.is_object(), "map must be {\"pcoeffs\": [...]} or {\"coeffs\": [...]}");
  if (j.contains("coeffs")) return AdditiveMap::from_linpoly(linpoly_from_json(F, j));
  require(j.contains("pcoeffs") && j["pcoeffs"].is_array(), "map must be {\"pcoeffs\": [...]} or {\"coeffs\": [...]}");
  require(j["pcoeffs"].size() == static_cast<std::size_t>(F->degree()), "map needs exactly lambda*n coefficients");
  std::vector<Elem> c;
  for (const auto& x : j["pcoeffs"]) c.push_back(elem_from_json(*F, x));
  return AdditiveMap(F, c);
}

json spec_to_json(const CodeSpec& spec, ElemStyle style) {
  auto map_json = [&](const AdditiveMap& m) {
    if (auto lp = m.to_linpoly()) return linpoly_to_json(*lp, style);
    return amap_to_json(m, style);
  };
  return json{{"field", field_to_json(*spec.field)},
              {"k", spec.k},
              {"s", spec.s},
              {"L1", map_json(spec.L1)},
              {"L2", map_json(spec.L2)},
              {"family", to_string(spec.family)}};
}

CodeSpec spec_from_json(const json& j, FieldPtr field, std::uint64_t budget) {
  require(j.is_object(), "spec must be an object");
  if (!field) {
    require(j.contains("field"), "spec needs a \"field\" (or pass --field)");
    field = field_from_json(j["field"], budget);
  }
  const int k = int_field(j, "k");
  const int s = j.contains("s") ? int_field(j, "s") : 1;
  const Family family = j.contains("family") ? family_from_string(j["family"].get<std::string>()) : Family::CUSTOM;
  if (family != Family::CUSTOM && !j.contains("L2")) {
    PresetParams params;
    params.k = k;
    params.s = s;
    if (j.contains("h")) params.h = int_field(j, "h");
    if (j.contains("eta")) params.eta = elem_from_json(*field, j["eta"]);
    if (j.contains("theta")) params.theta = elem_from_json(*field, j["theta"]);
    PresetResult r = preset(field, family, params);
    if (!r.ok()) {
      std::string msg = "preset " + to_string(family) + " rejected:";
      for (const auto& v : r.violations) msg += " " + v + ";";
      throw PreconditionError(msg);
    }
    return *r.spec;
  }
  require(j.contains("L2"), "spec needs \"L2\"");
  CodeSpec spec{field,
                k,
                s,
                j.contains("L1") ? amap_from_json(field, j["L1"]) : AdditiveMap::identity(field),
                amap_from_json(field, j["L2"]),
                family};
  spec.validate();
  return spec;
}

json code_to_json(const Code& code, bool with_basis) {
  json out{{"field", field_to_json(code.field())},
           {"dimension_over_p", code.dimension()},
           {"log_q_size", code.log_q_size()},
           {"fq_linear", code.is_fq_linear()}};
  if (with_basis) {
    json b = json::array();
    for (const auto& f : code.basis()) b.push_back(linpoly_to_json(f));
    out["basis"] = b;
  }
  return out;
}

json nucleus_to_json(const NucleusResult& r) {
  json b = json::array();
  for (const auto& g : r.basis) b.push_back(linpoly_to_json(g));
  return json{{"kind", to_string(r.kind)},
              {"dimension_over_p", r.basis.size()},
              {"subfield_degree_if_scalar", r.closed_form_d ? json(*r.closed_form_d) : json(nullptr)},
              {"basis", b}};
}

json equiv_map_to_json(const EquivMap& m) {
  return json{{"phi1", linpoly_to_json(m.phi1)}, {"phi2", linpoly_to_json(m.phi2)}, {"nu", m.nu}};
}

json closed_form_witness_to_json(const Field& F, const ClosedFormWitness& w) {
  return json{{"a", elem_to_json(F, w.a)},
              {"b", elem_to_json(F, w.b)},
              {"l", w.l},
              {"nu", w.nu},
              {"swapped", w.swapped},
              {"T", amap_to_json(w.T)},
              {"map", equiv_map_to_json(w.map)}};
}

json aut_triple_to_json(const Field& F, const AutTriple& t) {
  return json{{"a", elem_to_json(F, t.a)}, {"b", elem_to_json(F, t.b)}, {"l", t.l}, {"nu", t.nu}};
}

}  // namespace rankmetric::io
