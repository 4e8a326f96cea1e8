// module.cpp - python bindings: exact values cross the boundary as
// arbitrary-precision ints and fractions.Fraction, never as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "primefractal/construction.hpp"
#include "primefractal/dimension.hpp"
#include "primefractal/measure.hpp"
#include "primefractal/serialize.hpp"
#include "primefractal/stats.hpp"

namespace py = pybind11;
namespace pf = primefractal;

namespace {

py::object int_to_py(const pf::Int& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object rational_to_py(const pf::Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(pf::rational_str(x));
}

// Exact inputs only: int, str "p/q", or fractions.Fraction (whose str() is
// already "p/q"). Floats are rejected rather than silently rounded.
pf::Rational py_to_rational(py::handle obj) {
  if (py::isinstance<py::float_>(obj))
    throw pf::InvalidParams("exact rationals only: pass str, Fraction, or int");
  return pf::parse_rational(py::str(obj).cast<std::string>());
}

pf::Int py_to_int(py::handle obj) {
  if (!py::isinstance<py::int_>(obj))
    throw pf::InvalidParams("expected an integer");
  return pf::Int(py::str(obj).cast<std::string>());
}

pf::SourceSpec to_source(py::handle obj) {
  if (py::isinstance<py::str>(obj))
    return pf::SourceSpec::parse(obj.cast<std::string>());
  return pf::SourceSpec::explicit_list(obj.cast<std::vector<int>>());
}

py::dict verdict_to_py(const pf::MemberVerdict& v) {
  py::dict out;
  out["member"] = v.member;
  out["witness"] = v.witness;
  return out;
}

py::dict bracket_to_py(const pf::MeasureBracket& b) {
  py::dict out;
  out["depth"] = b.depth;
  out["lower"] = rational_to_py(b.lower);
  out["upper"] = rational_to_py(b.upper);
  return out;
}

struct PyLevelSet {
  pf::LevelSet ls;
};

struct PyConstruction {
  explicit PyConstruction(pf::ConstructionParams params) : con(std::move(params)) {}
  pf::Construction con;
};

pf::ConstructionParams make_params(int base, int branch, py::handle source,
                                   std::uint64_t max_intervals,
                                   std::uint64_t sieve_cap) {
  pf::ConstructionParams params;
  params.base = base;
  params.branch = branch;
  params.source = to_source(source);
  params.max_intervals = max_intervals;
  params.sieve_cap = sieve_cap;
  params.validate();
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact level sets of the keep-k-of-m interval construction";

  auto base_exc = py::register_exception<pf::Error>(m, "Error");
  py::register_exception<pf::InvalidParams>(m, "InvalidParams", base_exc);
  py::register_exception<pf::BudgetExceeded>(m, "BudgetExceeded", base_exc);
  py::register_exception<pf::SourceExhausted>(m, "SourceExhausted", base_exc);
  py::register_exception<pf::SieveCapExceeded>(m, "SieveCapExceeded", base_exc);
  py::register_exception<pf::NotAMember>(m, "NotAMember", base_exc);
  py::register_exception<pf::MalformedInput>(m, "MalformedInput", base_exc);
  py::register_exception<pf::IoError>(m, "IoError", base_exc);

  py::class_<PyLevelSet>(m, "LevelSet")
      .def_property_readonly("base", [](const PyLevelSet& s) { return s.ls.params.base; })
      .def_property_readonly("branch",
                             [](const PyLevelSet& s) { return s.ls.params.branch; })
      .def_property_readonly("depth", [](const PyLevelSet& s) { return s.ls.depth; })
      .def_property_readonly("source",
                             [](const PyLevelSet& s) {
                               return s.ls.params.source.descriptor();
                             })
      .def_property_readonly("numerators",
                             [](const PyLevelSet& s) {
                               py::list out;
                               for (const pf::Int& c : s.ls.numerators)
                                 out.append(int_to_py(c));
                               return out;
                             })
      .def_property_readonly("interval_length",
                             [](const PyLevelSet& s) {
                               return rational_to_py(s.ls.interval_length());
                             })
      .def_property_readonly("lebesgue_measure",
                             [](const PyLevelSet& s) {
                               return rational_to_py(s.ls.lebesgue_measure());
                             })
      .def("to_json", [](const PyLevelSet& s) { return pf::level_set_to_json(s.ls); })
      .def("__len__", [](const PyLevelSet& s) { return s.ls.numerators.size(); })
      .def("__repr__", [](const PyLevelSet& s) {
        return "LevelSet(base=" + std::to_string(s.ls.params.base) +
               ", branch=" + std::to_string(s.ls.params.branch) +
               ", depth=" + std::to_string(s.ls.depth) +
               ", intervals=" + std::to_string(s.ls.numerators.size()) + ")";
      });

  m.def("level_set_from_json",
        [](const std::string& text) { return PyLevelSet{pf::level_set_from_json(text)}; },
        py::arg("text"));

  py::class_<PyConstruction>(m, "Construction")
      .def(py::init([](int base, int branch, py::handle source,
                       std::uint64_t max_intervals, std::uint64_t sieve_cap) {
             return PyConstruction(
                 make_params(base, branch, source, max_intervals, sieve_cap));
           }),
           py::arg("base") = 16, py::arg("branch") = 2, py::arg("source") = "primes",
           py::arg("max_intervals") = pf::kDefaultMaxIntervals,
           py::arg("sieve_cap") = pf::kDefaultSieveCap)
      .def_property_readonly("base",
                             [](const PyConstruction& s) { return s.con.params().base; })
      .def_property_readonly(
          "branch", [](const PyConstruction& s) { return s.con.params().branch; })
      .def_property_readonly("source",
                             [](const PyConstruction& s) {
                               return s.con.params().source.descriptor();
                             })
      .def("retained_indices",
           [](const PyConstruction& s, std::size_t level) {
             return s.con.retained_indices(level);
           },
           py::arg("level"))
      .def("build",
           [](const PyConstruction& s, std::size_t depth) {
             return PyLevelSet{s.con.build(depth)};
           },
           py::arg("depth"))
      .def("address_to_numerator",
           [](const PyConstruction& s, const std::vector<int>& word) {
             return int_to_py(s.con.address_to_numerator(pf::Address{word}));
           },
           py::arg("word"))
      .def("numerator_to_address",
           [](const PyConstruction& s, py::handle numerator, std::size_t depth) {
             return s.con.numerator_to_address(py_to_int(numerator), depth).word;
           },
           py::arg("numerator"), py::arg("depth"))
      .def("member_digits",
           [](const PyConstruction& s, const std::vector<int>& digits,
              std::size_t depth, bool terminating) {
             pf::DigitExpansion x;
             x.base = s.con.params().base;
             x.digits = digits;
             x.terminating = terminating;
             return verdict_to_py(s.con.member_prefix(x, depth));
           },
           py::arg("digits"), py::arg("depth"), py::arg("terminating") = true)
      .def("member_value",
           [](const PyConstruction& s, py::handle value, std::size_t depth) {
             return verdict_to_py(s.con.member_value(py_to_rational(value), depth));
           },
           py::arg("value"), py::arg("depth"))
      .def("min_sibling_gap",
           [](const PyConstruction& s, std::size_t level) {
             return rational_to_py(s.con.min_sibling_gap(level));
           },
           py::arg("level"))
      .def("interval_mass",
           [](const PyConstruction& s, py::handle numerator, std::size_t depth) {
             return rational_to_py(pf::interval_mass(s.con, py_to_int(numerator), depth));
           },
           py::arg("numerator"), py::arg("depth"))
      .def("measure_bracket",
           [](const PyConstruction& s, py::handle lo, py::handle hi,
              std::size_t depth) {
             const pf::QueryInterval J(py_to_rational(lo), py_to_rational(hi));
             return bracket_to_py(pf::measure_bracket(s.con, J, depth));
           },
           py::arg("lo"), py::arg("hi"), py::arg("depth"))
      .def("consistency_check",
           [](const PyConstruction& s, std::size_t depth) {
             return pf::consistency_check(s.con, depth);
           },
           py::arg("depth"))
      .def("decay_check",
           [](const PyConstruction& s, std::size_t depth, std::size_t trials,
              std::uint64_t seed) {
             const pf::DecayReport r = pf::decay_check(s.con, depth, trials, seed);
             py::dict out;
             out["depth"] = r.depth;
             out["trials"] = r.trials;
             out["max_ratio_4th_power"] = rational_to_py(r.max_ratio_4th_power);
             out["worst_interval"] = py::make_tuple(rational_to_py(r.worst_interval.lo),
                                                    rational_to_py(r.worst_interval.hi));
             out["max_ratio"] = r.max_ratio;
             out["bound_satisfied"] = r.bound_satisfied;
             return out;
           },
           py::arg("depth"), py::arg("trials"), py::arg("seed") = 0)
      .def("exact_box_counts",
           [](const PyConstruction& s, std::size_t n_max) {
             py::list out;
             for (const auto& [n, count] : pf::exact_box_counts(s.con, n_max).entries)
               out.append(py::make_tuple(n, int_to_py(count)));
             return out;
           },
           py::arg("n_max"))
      .def("dimension_report",
           [](const PyConstruction& s, std::size_t n_max) {
             const pf::DimensionReport r =
                 pf::estimate_dimension(pf::exact_box_counts(s.con, n_max));
             py::dict out;
             out["estimated_slope"] = r.estimated_slope;
             out["theoretical"] = r.theoretical;
             out["residual"] = r.residual;
             return out;
           },
           py::arg("n_max"));

  m.def("s_sum",
        [](const PyLevelSet& ls, py::handle s) {
          py::dict out;
          if (py::isinstance<py::float_>(s)) {
            out["exact"] = false;
            out["approx"] = pf::s_sum(ls.ls, s.cast<double>());
            return out;
          }
          const pf::SSum sum = pf::s_sum(ls.ls, py_to_rational(s));
          out["exact"] = sum.exact;
          if (sum.exact) out["value"] = rational_to_py(sum.exact_value);
          out["approx"] = sum.approx;
          return out;
        },
        py::arg("level_set"), py::arg("s"));

  m.def("box_count_at_scale",
        [](const PyLevelSet& ls, py::handle eps) {
          return int_to_py(pf::box_count_at_scale(ls.ls, py_to_rational(eps)));
        },
        py::arg("level_set"), py::arg("eps"));

  m.def("nth_prime",
        [](std::size_t n, std::uint64_t cap) { return pf::nth_prime(n, cap); },
        py::arg("n"), py::arg("cap") = pf::kDefaultSieveCap);

  m.def("residues",
        [](int modulus, std::size_t count, std::uint64_t cap) {
          return pf::residues(modulus, count, cap);
        },
        py::arg("modulus"), py::arg("count"), py::arg("cap") = pf::kDefaultSieveCap);

  m.def("equidistribution",
        [](int modulus, std::size_t count, std::uint64_t cap) {
          const pf::EquidistributionReport r =
              pf::equidistribution_report(pf::residue_histogram(modulus, count, cap));
          py::dict out;
          out["modulus"] = r.modulus;
          out["sample_count"] = r.sample_count;
          out["coprime_sample_count"] = r.coprime_sample_count;
          out["phi"] = r.phi;
          out["max_deviation"] = r.max_deviation;
          out["chi_square"] = r.chi_square;
          py::list classes;
          for (const pf::ClassStat& stat : r.classes) {
            py::dict entry;
            entry["residue"] = stat.residue;
            entry["count"] = stat.count;
            entry["frequency"] = stat.frequency;
            entry["coprime"] = stat.coprime;
            entry["deviation"] = stat.deviation;
            classes.append(std::move(entry));
          }
          out["classes"] = std::move(classes);
          return out;
        },
        py::arg("modulus"), py::arg("count"), py::arg("cap") = pf::kDefaultSieveCap);
}
