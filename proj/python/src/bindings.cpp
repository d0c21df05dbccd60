// _rankmetric: thin JSON-in / JSON-out bindings over rankmetric::commands.
// The pure-Python wrapper in rankmetric/__init__.py converts dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankmetric/commands.hpp"
#include "rankmetric/errors.hpp"

namespace py = pybind11;
using namespace rankmetric;
using io::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(e.what());
  }
}

commands::Options options(const std::string& field, std::uint64_t budget, const std::string& method,
                          bool all_witnesses) {
  commands::Options o;
  o.field = field;
  o.budget = budget;
  o.method = method;
  o.all_witnesses = all_witnesses;
  return o;
}

// Runs without the GIL; returns the report body {method, result, truth} as JSON text.
template <class F>
std::string run(F&& f) {
  commands::Outcome out;
  {
    py::gil_scoped_release release;
    try {
      out = f();
    } catch (const json::exception& e) {
      throw PreconditionError(e.what());
    }
  }
  return json{{"method", out.method}, {"result", out.result}, {"truth", out.truth}}.dump();
}

}  // namespace

PYBIND11_MODULE(_rankmetric, m) {
  m.doc() = "Rank-metric codes H_{k,s}(L1, L2) over F_{q^n}";
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  auto spec_op = [&m](const char* name, commands::Outcome (*op)(const json&, const commands::Options&)) {
    m.def(
        name,
        [op](const std::string& spec, const std::string& field, std::uint64_t budget, const std::string& method) {
          const json j = parse(spec);
          const auto o = options(field, budget, method, false);
          return run([&] { return op(j, o); });
        },
        py::arg("spec"), py::arg("field") = "", py::arg("budget") = 0, py::arg("method") = "both");
  };
  spec_op("construct", commands::construct);
  spec_op("check", commands::check);
  spec_op("dual", commands::dual);
  spec_op("adjoint", commands::adjoint);

  m.def(
      "nucleus",
      [](const std::string& spec, const std::string& kind, const std::string& field, const std::string& method) {
        const json j = parse(spec);
        auto o = options(field, 0, method, false);
        o.kind = kind;
        return run([&] { return commands::nucleus(j, o); });
      },
      py::arg("spec"), py::arg("kind") = "both", py::arg("field") = "", py::arg("method") = "both");

  m.def(
      "gamma",
      [](int n, int r, int s, int k, const std::string& method) {
        const auto o = options("", 0, method, false);
        return run([&] { return commands::gamma(n, r, s, k, o); });
      },
      py::arg("n"), py::arg("r"), py::arg("s"), py::arg("k"), py::arg("method") = "both");

  m.def(
      "equiv",
      [](const std::string& a, const std::string& b, const std::string& mode, bool all_witnesses,
         const std::string& field, std::uint64_t budget) {
        const json ja = parse(a), jb = parse(b);
        auto o = options(field, budget, "both", all_witnesses);
        o.equiv_mode = mode;
        return run([&] { return commands::equiv(ja, jb, o); });
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "closed", py::arg("all_witnesses") = false,
      py::arg("field") = "", py::arg("budget") = 0);

  m.def(
      "aut",
      [](const std::string& spec, bool list, const std::string& method, const std::string& field,
         std::uint64_t budget) {
        const json j = parse(spec);
        auto o = options(field, budget, method, false);
        o.list = list;
        return run([&] { return commands::aut(j, o); });
      },
      py::arg("spec"), py::arg("list") = false, py::arg("method") = "both", py::arg("field") = "",
      py::arg("budget") = 0);

  m.def(
      "verify",
      [](const std::vector<int>& only) {
        commands::Options o;
        o.only = only;
        return run([&] { return commands::verify(o); });
      },
      py::arg("only") = std::vector<int>{});
}
