// JSON-string bridge: every argument is a JSON document, a file path, or a builtin
// name accepted by the CLI resolvers; every result is a JSON string.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toricapprox/catalog.hpp"
#include "toricapprox/cli.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

ToricPair pair_of(const std::string& fan, const std::string& cond) {
  ToricPair p;
  p.fan = cli::resolve_fan(fan);
  require_valid(p.fan);
  p.conditions = cli::resolve_conditions(cond, p.fan.ray_count());
  validate_pair(p);
  return p;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (auto& x : m.row(r)) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "toricapprox native core";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<ComputationDefect> defect(m, "ComputationDefect", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const ComputationDefect& e) {
      py::set_error(defect, e.what());
    }
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });

  m.def("validate_fan", [](const std::string& fan) {
    Fan f = cli::resolve_fan(fan);
    auto d = fan_validate(f);
    Json j = {{"valid", d.ok()}, {"diagnostics", d.errors}};
    if (d.ok()) j["fan"] = to_json(f);
    return j.dump();
  });

  m.def("invariants", [](const std::string& fan, const std::string& cond) {
    return to_json(compute_invariants(pair_of(fan, cond))).dump();
  });

  m.def("decide_m_approx", [](const std::string& fan, const std::string& cond, const std::string& field, bool T) {
    return to_json(decide_m_approx(pair_of(fan, cond), cli::resolve_field(field), T)).dump();
  }, py::arg("fan"), py::arg("cond"), py::arg("field") = "q", py::arg("T_nonempty") = true);

  m.def("classify_thinness", [](const std::string& fan, const std::string& cond, const std::string& field,
                                std::size_t excluded_places, bool b_equals_c) {
    auto f = cli::resolve_field(field);
    return to_json(classify_thinness(pair_of(fan, cond), f, default_flags(f, excluded_places), b_equals_c)).dump();
  }, py::arg("fan"), py::arg("cond"), py::arg("field") = "q", py::arg("excluded_places") = 0,
     py::arg("b_equals_c") = false);

  m.def("pi1", [](const std::string& fan, const std::string& mult, std::uint64_t characteristic) {
    return to_json(pi1_root_stack(cli::resolve_fan(fan), cli::parse_ext_list(mult), characteristic)).dump();
  }, py::arg("fan"), py::arg("m"), py::arg("characteristic") = 0);

  m.def("is_m_point", [](const std::string& fan, const std::string& cond, const std::string& point,
                         const std::vector<std::string>& excluded) {
    std::vector<mpz_class> ex;
    for (auto& e : excluded) ex.emplace_back(e);
    return to_json(is_m_point(pair_of(fan, cond), point_from_json(parse_json(point)), ex)).dump();
  }, py::arg("fan"), py::arg("cond"), py::arg("point"), py::arg("excluded") = std::vector<std::string>{});

  m.def("enumerate", [](const std::string& fan, const std::string& cond, std::uint64_t H, bool toric_box,
                        unsigned threads) {
    auto pair = pair_of(fan, cond);
    EnumerateOptions o;
    o.threads = threads;
    py::gil_scoped_release release;
    auto c = (toric_box || !is_projective_space_fan(pair.fan)) ? enumerate_toric(pair, H, o)
                                                               : enumerate_projective(pair, H, o);
    return to_json(c).dump();
  }, py::arg("fan"), py::arg("cond"), py::arg("height"), py::arg("toric") = false, py::arg("threads") = 1);

  m.def("approximate", [](const std::string& fan, const std::string& cond, const std::string& targets,
                          std::uint64_t seed) {
    ApproxOptions o;
    o.seed = seed;
    return to_json(m_point_approximate(pair_of(fan, cond), targets_from_json(parse_json(targets)), o)).dump();
  }, py::arg("fan"), py::arg("cond"), py::arg("targets"), py::arg("seed") = 0);

  m.def("example", [](const std::string& name, long r, std::size_t n, std::size_t d, const std::string& mult,
                      bool T) {
    CatalogParams p;
    p.r = r;
    p.n = n;
    p.d = d;
    if (!mult.empty()) p.m = cli::parse_ext_list(mult);
    if (name == "pn-darmon" && p.n == 0) p.n = p.m.size();
    p.T_nonempty = T;
    auto e = example_catalog(name, p);
    auto v = run_catalog_entry(e);
    return Json{{"example", e.name}, {"formula", e.formula}, {"expected", to_string(e.expected)},
                {"verdict", to_json(v)}}
        .dump();
  }, py::arg("name"), py::arg("r") = 0, py::arg("n") = 0, py::arg("d") = 0, py::arg("m") = "",
     py::arg("T_nonempty") = true);

  m.def("snf", [](const std::string& matrix) {
    Json j = parse_json(matrix);
    std::vector<IntVec> rows;
    for (auto& r : j) {
      IntVec v;
      for (auto& x : r) v.push_back(mpz_from_json(x));
      rows.push_back(v);
    }
    if (rows.empty()) throw InputError("empty matrix");
    auto s = snf(IntMatrix::from_rows(rows, rows[0].size()));
    Json diag = Json::array();
    for (auto& x : s.diagonal()) diag.push_back(to_json(x));
    return Json{{"U", matrix_json(s.U)}, {"S", matrix_json(s.S)}, {"V", matrix_json(s.V)}, {"diagonal", diag}}.dump();
  });
}
