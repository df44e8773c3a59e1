#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "goodstein/claims.hpp"
#include "goodstein/errors.hpp"
#include "goodstein/export.hpp"
#include "goodstein/hereditary.hpp"
#include "goodstein/notation.hpp"
#include "goodstein/ordinals.hpp"
#include "goodstein/sequences.hpp"

namespace py = pybind11;

// Python int <-> Natural through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& n, return_value_policy, handle) {
    const std::string text = n.get_str(10);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace goodstein {
namespace {

Budget make_budget(std::uint64_t max_steps, std::uint64_t max_digits,
                   std::uint64_t max_borrow_terms) {
  Budget b{max_steps, max_digits, max_borrow_terms};
  b.validate();
  return b;
}

SeqSpec make_spec(const Natural& seed, const std::string& kind) {
  const auto k = parse_seq_kind(kind);
  if (!k) throw Error("kind must be G or L");
  if (seed < 0) throw Error("seed must be non-negative");
  if (*k == SeqKind::kL) {
    if (!seed.fits_ulong_p()) throw Error("k is out of range");
    return SeqSpec::l_sequence(seed.get_ui());
  }
  return SeqSpec::goodstein(seed);
}

py::dict term_dict(const SeqTerm& t) {
  py::dict d;
  d["index"] = t.index;
  d["base"] = t.rep.base().value();
  d["value"] = t.value ? py::cast(*t.value) : py::none();
  d["rep"] = format(t.rep);
  d["step_class"] =
      t.step_class ? py::cast(std::string(to_string(*t.step_class))) : py::none();
  return d;
}

HereditaryRep checked_decompose(const Natural& m, std::uint64_t base) {
  if (m < 0) throw Error("m must be non-negative");
  return decompose(m, Base(base));
}

}  // namespace
}  // namespace goodstein

PYBIND11_MODULE(_core, m) {
  using namespace goodstein;
  m.doc() = "Hereditary notation, Goodstein sequences and their ordinal mirrors.";

  auto error = py::register_exception<Error>(m, "GoodsteinError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<Budget>(m, "Budget")
      .def(py::init(&make_budget), py::kw_only(), py::arg("max_steps") = Budget{}.max_steps,
           py::arg("max_digits") = Budget{}.max_digits,
           py::arg("max_borrow_terms") = Budget{}.max_borrow_terms)
      .def_readonly("max_steps", &Budget::max_steps)
      .def_readonly("max_digits", &Budget::max_digits)
      .def_readonly("max_borrow_terms", &Budget::max_borrow_terms);

  py::class_<HereditaryRep>(m, "Rep")
      .def_property_readonly("base", [](const HereditaryRep& r) { return r.base().value(); })
      .def_property_readonly("value", [](const HereditaryRep& r) { return evaluate(r); })
      .def_property_readonly("rank", [](const HereditaryRep& r) { return rank_value(r); })
      .def("is_zero", &HereditaryRep::is_zero)
      .def("bump", &bump)
      .def("decrement", [](const HereditaryRep& r) { return decrement(r); })
      .def("rebase", [](const HereditaryRep& r, std::uint64_t u) { return rebase(r, Base(u)); },
           py::arg("u"))
      .def("mirror", [](const HereditaryRep& r) { return to_string(mirror(r)); })
      .def("__str__", [](const HereditaryRep& r) { return format(r); })
      .def("__repr__",
           [](const HereditaryRep& r) {
             return "Rep(base=" + std::to_string(r.base().value()) + ", '" + format(r) + "')";
           })
      .def(py::self == py::self);

  m.def("decompose", &checked_decompose, py::arg("m"), py::arg("base"));
  m.def(
      "parse",
      [](const std::string& text, std::optional<std::uint64_t> base) {
        return parse(text, base ? std::optional<Base>(Base(*base)) : std::nullopt);
      },
      py::arg("text"), py::arg("base") = py::none());

  m.def(
      "generate",
      [](const Natural& seed, const std::string& kind, const Budget& budget) {
        const Sequence s = generate(make_spec(seed, kind), budget);
        py::list terms;
        for (const auto& t : s.terms) terms.append(term_dict(t));
        py::dict out;
        out["outcome"] = to_string(s.outcome);
        out["terminated_at"] =
            s.terminated() ? py::cast(s.outcome.terminated_at) : py::none();
        out["terms"] = terms;
        return out;
      },
      py::arg("seed"), py::arg("kind") = "G", py::arg("budget") = Budget{});

  m.def(
      "predict_termination",
      [](const Natural& value, std::uint64_t base, std::uint64_t index) {
        const HereditaryRep rep = checked_decompose(value, base);
        return predict_termination(make_term(index, rep, Budget{}));
      },
      py::arg("value"), py::arg("base"), py::arg("index"));

  m.def(
      "verify_json",
      [](const std::vector<Natural>& seeds, const std::vector<std::string>& claims,
         const Budget& budget) {
        std::vector<SeqSpec> specs;
        for (const auto& s : seeds) specs.push_back(make_spec(s, "G"));
        std::vector<ClaimId> ids;
        for (const auto& c : claims) {
          const auto id = parse_claim_id(c);
          if (!id) throw Error("unknown claim: " + c);
          ids.push_back(*id);
        }
        if (claims.empty()) ids.assign(all_claims().begin(), all_claims().end());
        return reports_to_json(run_suite(specs, ids, budget));
      },
      py::arg("seeds"), py::arg("claims") = std::vector<std::string>{},
      py::arg("budget") = Budget{});
}
