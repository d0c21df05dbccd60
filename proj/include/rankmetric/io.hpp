#pragma once

// JSON forms used by the CLI and the Python bindings.
//
//   field    {"p", "lambda", "n", "modulus": [int], "generator": [int]}
//   element  coordinate array (ascending powers of y) or "g^k" / "0" / "1"
//   LinPoly  {"coeffs": [element x n]}           index i <-> x^{q^i}
//   map      {"pcoeffs": [element x lambda n]}   index j <-> x^{p^j}
//   spec     {"field", "k", "s", "L1", "L2", "family"}

#include <string>

#include <json.hpp>

#include "rankmetric/automorphism.hpp"
#include "rankmetric/equivalence.hpp"
#include "rankmetric/invariants.hpp"

namespace rankmetric::io {

using json = nlohmann::json;

enum class ElemStyle { Log, Coords };

json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j, std::uint64_t budget = kDefaultFieldBudget);
// "p,lambda,n[,c_0,...,c_{lambda n}]" with the modulus given constant term first.
FieldPtr parse_field_flag(const std::string& text, std::uint64_t budget = kDefaultFieldBudget);

json elem_to_json(const Field& F, Elem x, ElemStyle style = ElemStyle::Log);
Elem elem_from_json(const Field& F, const json& j);

json linpoly_to_json(const LinPoly& f, ElemStyle style = ElemStyle::Log);
LinPoly linpoly_from_json(const FieldPtr& F, const json& j);
json amap_to_json(const AdditiveMap& m, ElemStyle style = ElemStyle::Log);
// Accepts {"pcoeffs"} or a q-linearized {"coeffs"}.
AdditiveMap amap_from_json(const FieldPtr& F, const json& j);

json spec_to_json(const CodeSpec& spec, ElemStyle style = ElemStyle::Log);
// L1 defaults to x. A preset family (GAB, TG, GTG, AGTG, TZ) without L2 is built
// from "h", "eta", "theta". A non-null field overrides the one in the JSON.
CodeSpec spec_from_json(const json& j, FieldPtr field = nullptr, std::uint64_t budget = kDefaultFieldBudget);

json code_to_json(const Code& code, bool with_basis = true);
json nucleus_to_json(const NucleusResult& r);
json equiv_map_to_json(const EquivMap& m);
json closed_form_witness_to_json(const Field& F, const ClosedFormWitness& w);
json aut_triple_to_json(const Field& F, const AutTriple& t);

}  // namespace rankmetric::io
