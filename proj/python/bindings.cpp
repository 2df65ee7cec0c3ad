#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "luka/consistency.hpp"
#include "luka/decision.hpp"
#include "luka/derive.hpp"
#include "luka/parser.hpp"
#include "luka/proof.hpp"
#include "luka/semantics.hpp"

namespace py = pybind11;
using namespace luka;

namespace {

py::object to_fraction(const Rat& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.str());
}

Rat rat_from(const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return Rat::parse(py::str(v).cast<std::string>());
  if (py::isinstance<py::str>(v)) return Rat::parse(v.cast<std::string>());
  // Fraction or anything exposing numerator/denominator
  return Rat::parse(py::str(v.attr("numerator")).cast<std::string>() + "/" +
                    py::str(v.attr("denominator")).cast<std::string>());
}

Valuation valuation_from(const py::dict& d) {
  Valuation v;
  for (const auto& [key, value] : d)
    v.set(key.cast<std::string>(), rat_from(value));
  return v;
}

py::dict valuation_out(const Valuation& v) {
  py::dict d;
  for (const auto& [name, r] : v.entries()) d[py::str(name)] = to_fraction(r);
  return d;
}

Formula formula_from(const py::handle& h) {
  if (py::isinstance<Formula>(h)) return h.cast<Formula>();
  return parse(h.cast<std::string>());
}

py::dict verdict_out(const Verdict& v) {
  py::dict d;
  const char* kind = nullptr;
  switch (v.kind) {
    case Verdict::Kind::Tautology: kind = "tautology"; break;
    case Verdict::Kind::Counterexample: kind = "counterexample"; break;
    case Verdict::Kind::Satisfiable: kind = "satisfiable"; break;
    case Verdict::Kind::Unsatisfiable: kind = "unsatisfiable"; break;
  }
  d["kind"] = kind;
  d["affirmative"] = v.affirmative();
  d["value"] = to_fraction(v.value);
  if (v.kind == Verdict::Kind::Counterexample || v.kind == Verdict::Kind::Satisfiable)
    d["witness"] = valuation_out(v.witness);
  return d;
}

}  // namespace

PYBIND11_MODULE(pyluka, m) {
  m.doc() = "infinite-valued Lukasiewicz logic: exact semantics, decision "
            "procedure, proof checking, Lindenbaum laboratory";

  py::class_<Formula>(m, "Formula")
      .def_static("parse", [](const std::string& s) { return parse(s); })
      .def("__str__", &Formula::str)
      .def("__repr__", [](const Formula& f) { return "Formula(" + f.str() + ")"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash)
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("depth", &Formula::depth)
      .def("variables", &Formula::variables);

  m.def("parse", [](const std::string& s) { return parse(s); });

  m.def("evaluate", [](const py::handle& f, const py::dict& val) {
    return to_fraction(eval(formula_from(f), valuation_from(val)));
  });

  m.def("is_tautology",
        [](const py::handle& f) { return verdict_out(is_tautology(formula_from(f))); });
  m.def("sat_at_one",
        [](const py::handle& f) { return verdict_out(sat_at_one(formula_from(f))); });
  m.def("positively_satisfiable", [](const py::handle& f) {
    return verdict_out(positively_satisfiable(formula_from(f)));
  });

  m.def("min_value", [](const py::handle& f) {
    const auto [value, witness] = min_value(formula_from(f));
    return py::make_tuple(to_fraction(value), valuation_out(witness));
  });
  m.def("max_value", [](const py::handle& f) {
    const auto [value, witness] = max_value(formula_from(f));
    return py::make_tuple(to_fraction(value), valuation_out(witness));
  });

  m.def("grid_min", [](const py::handle& f, int n) {
    const auto [value, witness] = grid_min(formula_from(f), n);
    return py::make_tuple(to_fraction(value), valuation_out(witness));
  });

  m.def("is_consistent", [](const py::list& formulas) {
    FormulaSet s;
    for (const auto& h : formulas) set_add(s, formula_from(h));
    const ConsistencyVerdict v = is_consistent(s);
    py::dict d;
    d["consistent"] = v.consistent;
    if (v.consistent) {
      d["witness"] = valuation_out(v.witness);
      d["value"] = to_fraction(v.value);
    }
    return d;
  });

  m.def("check_proof", [](const std::string& text) {
    py::dict d;
    try {
      const CheckResult r = check_proof(proof_from_text(text));
      d["ok"] = r.ok;
      if (r.ok) {
        d["conclusion"] = r.conclusion->str();
        py::list cited;
        for (const auto id : r.cited) cited.append(scheme_name(id));
        d["cited"] = cited;
      } else {
        d["line"] = r.error_line;
        d["reason"] = r.reason;
      }
    } catch (const ProofParseError& e) {
      d["ok"] = false;
      d["reason"] = std::string(e.what());
    }
    return d;
  });

  m.def("verify_registry", []() {
    py::list out;
    for (const auto& e : verify_registry().entries)
      out.append(py::make_tuple(scheme_name(e.id), e.valid, e.instance.str()));
    return out;
  });

  m.def("derive_conjunction_text", [](const py::list& formulas) {
    std::vector<Formula> gamma;
    for (const auto& h : formulas) gamma.push_back(formula_from(h));
    return proof_to_text(derive_conjunction(gamma));
  });

  m.def("fixtures", []() {
    py::list out;
    for (const auto& fx : fixture_suite()) {
      const CheckResult r = check_proof(fx.proof);
      out.append(py::make_tuple(fx.name, r.ok,
                                r.ok ? r.conclusion->str() : r.reason));
    }
    return out;
  });

  m.def(
      "extend",
      [](const py::list& seed, const std::vector<std::string>& vars, int depth,
         int nmax) {
        FormulaSet s;
        for (const auto& h : seed) set_add(s, formula_from(h));
        const FragmentExtension ext = lindenbaum_extend(s, Fragment::over(vars, depth));
        const MaximalityReport audit = audit_maximality(ext, nmax);
        const TruthLemmaReport probe = probe_truth_lemma(ext);
        py::dict d;
        d["enumerated"] = ext.trace.size();
        py::list accepted;
        for (const auto& f : ext.accepted) accepted.append(f.str());
        d["accepted"] = accepted;
        d["audit_clean"] = audit.clean();
        d["undecided_powers"] = audit.undecided_powers;
        d["canonical_valuation"] = valuation_out(probe.valuation);
        std::size_t matching = 0;
        for (const auto& e : probe.entries)
          if (e.holds_one && e.holds_zero && e.holds_half) ++matching;
        d["truth_lemma_matching"] = matching;
        return d;
      },
      py::arg("seed"), py::arg("vars"), py::arg("depth") = 2, py::arg("nmax") = 8);
}
