#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "excludant/asymptotics.hpp"
#include "excludant/bijection.hpp"
#include "excludant/errors.hpp"
#include "excludant/identities.hpp"

namespace py = pybind11;
using namespace excludant;

namespace {

py::object to_py(const bigint& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object parse_json(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::list sequence(const std::string& stat, int n, const std::string& engine) {
  const StatisticId id = parse_statistic(stat);
  std::vector<bigint> values;
  if (engine == "series")
    values = sequence_series(id, n).coeffs();
  else if (engine == "enumerate")
    values = sequence_values(id, n);
  else
    throw DomainError("engine must be 'enumerate' or 'series'");
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list statistics() {
  py::list out;
  for (auto id : kAllStatistics) {
    py::dict d;
    d["name"] = statistic_name(id);
    d["identifier"] = statistic_identifier(id);
    d["notation"] = statistic_notation(id);
    d["description"] = statistic_description(id);
    d["asymptotic_law"] = has_asymptotic_law(id);
    out.append(d);
  }
  return out;
}

py::list theorems() {
  py::list out;
  for (auto t : kAllTheorems) out.append(theorem_name(t));
  return out;
}

py::object verify_theorem(const std::string& theorem, int order, int n_enum, bool series_only,
                          bool printed, std::optional<int> perturb_at) {
  VerifyOptions opt;
  opt.series_only = series_only;
  opt.variant = printed ? ClosedFormVariant::AsPrinted : ClosedFormVariant::Corrected;
  opt.perturb_at = perturb_at;
  const auto r = verify(parse_theorem(theorem), order, series_only ? 0 : n_enum, opt);
  return parse_json(to_json(r));
}

std::string phi_map(const std::vector<int>& partition, int k, std::optional<int> n) {
  const Partition p(partition.begin(), partition.end());
  return format_colored(phi({p, k}, n.value_or(weight(p) + k * (k + 1))));
}

py::tuple phi_inv(const std::string& colored) {
  const auto pre = phi_inverse(parse_colored(colored));
  return py::make_tuple(std::vector<int>(pre.partition.begin(), pre.partition.end()), pre.k);
}

py::dict bijection_check(int n) {
  const auto r = check_bijection(n);
  py::dict d;
  d["n"] = r.n;
  d["domain_size"] = r.domain_size;
  d["codomain_size"] = r.codomain_size;
  d["injective"] = r.injective;
  d["surjective"] = r.surjective;
  d["left_inverse"] = r.left_inverse;
  d["right_inverse"] = r.right_inverse;
  d["color_law"] = r.color_law;
  d["pass"] = r.pass();
  return d;
}

py::object asym(const std::string& stat, const std::vector<long>& checkpoints) {
  return parse_json(to_json(convergence_report(parse_statistic(stat), checkpoints)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for excludant partition statistics";
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("statistics", &statistics);
  m.def("theorems", &theorems);
  m.def("sequence", &sequence, py::arg("stat"), py::arg("n"), py::arg("engine") = "series");
  m.def("verify", &verify_theorem, py::arg("theorem"), py::arg("order") = kDefaultOrder,
        py::arg("n_enum") = kDefaultEnumBound, py::arg("series_only") = false,
        py::arg("printed") = false, py::arg("perturb_at") = py::none());
  m.def("phi", &phi_map, py::arg("partition"), py::arg("k"), py::arg("n") = py::none());
  m.def("phi_inverse", &phi_inv, py::arg("colored"));
  m.def("check_bijection", &bijection_check, py::arg("n"));
  m.def("asym", &asym, py::arg("stat"), py::arg("checkpoints"));
  m.def("precision_digits", &precision_digits);
}
