#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pq/catalog.hpp"
#include "pq/error.hpp"
#include "pq/report.hpp"
#include "pq/subgroup_posets.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

pq::RunConfig make_config(const std::string& command, const std::string& group, std::uint64_t p,
                          const std::string& verifier, std::optional<std::uint64_t> r, const std::string& h,
                          const std::string& gdf, const std::string& kind, std::size_t element_cap,
                          std::size_t poset_cap, std::size_t simplex_cap, std::optional<std::string> cache_dir,
                          bool slow) {
  pq::RunConfig c;
  c.command = command;
  c.group = group;
  c.p = p;
  c.verifier = verifier;
  c.r = r;
  c.h = h;
  c.gdf = gdf;
  c.kind = kind;
  c.element_cap = element_cap;
  c.poset_cap = poset_cap;
  c.simplex_cap = simplex_cap;
  c.cache_dir = std::move(cache_dir);
  c.slow = slow;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-subgroup posets, their order complexes and integral homology";
  m.attr("__version__") = pq::kToolVersion;

  py::register_exception<pq::Error>(m, "PqError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::string& command, const std::string& group, std::uint64_t p, const std::string& verifier,
         std::optional<std::uint64_t> r, const std::string& h, const std::string& gdf, const std::string& kind,
         std::size_t element_cap, std::size_t poset_cap, std::size_t simplex_cap,
         std::optional<std::string> cache_dir, bool slow) {
        auto c = make_config(command, group, p, verifier, r, h, gdf, kind, element_cap, poset_cap, simplex_cap,
                             std::move(cache_dir), slow);
        pq::RunResult res;
        {
          py::gil_scoped_release nogil;
          res = pq::run(c);
        }
        return py::make_tuple(res.exit_code, to_py(res.report));
      },
      py::arg("command"), py::arg("group") = "", py::arg("p") = 0, py::arg("verifier") = "",
      py::arg("r") = py::none(), py::arg("H") = "", py::arg("Gdf") = "", py::arg("kind") = "A",
      py::arg("element_cap") = pq::kDefaultElementCap, py::arg("poset_cap") = pq::kDefaultPosetCap,
      py::arg("simplex_cap") = pq::kDefaultSimplexCap, py::arg("cache_dir") = py::none(), py::arg("slow") = false,
      "Run one command; returns (exit_code, report).");

  m.def(
      "euler",
      [](const std::string& spec, std::uint64_t p, const std::string& kind) {
        auto g = pq::build_group(spec).group;
        if (kind == "A") return pq::euler_mobius(pq::quillen_poset(g, p));
        if (kind == "S") return pq::euler_mobius(pq::all_p_subgroups_poset(g, p));
        if (kind == "B") return pq::euler_mobius(pq::bouc_poset(g, p));
        throw pq::Error(pq::ErrorCode::kInvalidArgument, "kind must be A, S or B");
      },
      py::arg("spec"), py::arg("p"), py::arg("kind") = "A", "Reduced Euler characteristic via the Mobius function.");

  m.def(
      "order", [](const std::string& spec) { return pq::build_group(spec).group.order(); }, py::arg("spec"));

  m.def("list_catalog", [] { return to_py(pq::list_catalog()); });
  m.def("verifier_ids", &pq::verifier_ids);
  m.def("canonical_dump", [](const py::object& obj) {
    auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return pq::canonical_dump(nlohmann::json::parse(text));
  });
}
