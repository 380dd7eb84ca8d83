/*
 * Python bindings for the core operations: map/instance handling, one-step
 * generation, the one-shot solver, the lifelong simulator, and metrics.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "mapf/config_gen.hpp"
#include "mapf/lacam.hpp"
#include "mapf/lifelong.hpp"
#include "mapf/metrics.hpp"

namespace py = pybind11;
using namespace mapf;

namespace {

StrategyConfig make_strategy(const std::string& name, int m, double w, int k)
{
  return {parse_strategy(name), m, w, k};
}

}  // namespace

PYBIND11_MODULE(_core, mod)
{
  mod.doc() = "PIBT / LaCAM toolkit for one-shot and lifelong MAPF";

  py::class_<GridMap>(mod, "GridMap")
      .def_static("parse", &GridMap::parse, py::arg("text"))
      .def_property_readonly("width", &GridMap::width)
      .def_property_readonly("height", &GridMap::height)
      .def_property_readonly("num_vertices", &GridMap::num_vertices)
      .def("passable", &GridMap::passable, py::arg("x"), py::arg("y"))
      .def("id_at", &GridMap::id_at, py::arg("x"), py::arg("y"))
      .def("coord_of",
           [](const GridMap& g, int32_t v) {
             const Cell c = g.coord_of(v);
             return py::make_tuple(c.x, c.y);
           })
      .def("neighbors",
           [](const GridMap& g, int32_t v) {
             const auto nb = g.neighbors(v);
             return std::vector<int32_t>(nb.begin(), nb.end());
           })
      .def("serialize", &GridMap::serialize)
      .def("connected", &GridMap::connected);

  mod.def("generate_sortation_map", &generate_sortation_map, py::arg("rows"), py::arg("cols"));
  mod.def("generate_empty_map", &generate_empty_map, py::arg("rows"), py::arg("cols"));
  mod.def("generate_random_map", &generate_random_map, py::arg("rows"), py::arg("cols"),
          py::arg("num_obstacles"), py::arg("seed"));

  py::class_<Instance>(mod, "Instance")
      .def_readonly("starts", &Instance::starts)
      .def_readonly("goals", &Instance::goals)
      .def_property_readonly("n", &Instance::n);

  mod.def(
      "parse_scen",
      [](const std::string& text, const GridMap& map, int n) { return parse_scen(text, map, n); },
      py::arg("text"), py::arg("map"), py::arg("n"), py::keep_alive<0, 2>());
  mod.def("random_instance", &random_instance, py::arg("map"), py::arg("n"), py::arg("seed"),
          py::keep_alive<0, 1>());
  mod.def("soc_lower_bound",
          [](const Instance& ins) { return soc_lower_bound(ins); });

  mod.def(
      "pibt_step",
      [](const GridMap& map, const Config& q_from, const std::vector<int32_t>& goals,
         const std::string& strategy, uint64_t seed, std::optional<std::vector<int32_t>> elapsed,
         int m, double w, int k) {
        DistanceCache cache(map);
        PibtEngine engine(map, cache);
        PriorityState prio = PriorityState::init(static_cast<int>(q_from.size()));
        if (elapsed) prio.elapsed = *elapsed;
        Rng rng(seed);
        Config out;
        if (!generate_config(engine, make_strategy(strategy, m, w, k), q_from, goals, prio, rng,
                             out)) {
          throw std::runtime_error("generation failed");
        }
        return out;
      },
      py::arg("map"), py::arg("q_from"), py::arg("goals"), py::arg("strategy") = "original",
      py::arg("seed") = 0, py::arg("elapsed") = std::nullopt, py::arg("m") = 3,
      py::arg("w") = 0.9, py::arg("k") = 10);

  mod.def(
      "solve",
      [](const Instance& ins, const std::string& strategy, int time_limit_ms, uint64_t seed,
         int m, double w, int k) {
        const auto res = solve_oneshot(ins, make_strategy(strategy, m, w, k),
                                       std::chrono::milliseconds(time_limit_ms), seed);
        py::dict out;
        out["success"] = res.solved();
        out["status"] = status_name(res.status);
        out["runtime_ms"] = res.runtime_ms;
        if (res.solved()) {
          out["solution"] = res.solution;
          const int64_t soc = sum_of_costs(ins, res.solution);
          const int64_t lb = soc_lower_bound(ins);
          out["soc"] = soc;
          out["soc_lb"] = lb;
          out["normalized_soc"] = normalized_soc(soc, lb);
        }
        return out;
      },
      py::arg("instance"), py::arg("strategy") = "original", py::arg("time_limit_ms") = 1000,
      py::arg("seed") = 0, py::arg("m") = 3, py::arg("w") = 0.9, py::arg("k") = 10);

  mod.def(
      "run_lifelong",
      [](const GridMap& map, int n, int horizon, const std::string& strategy, uint64_t seed,
         bool record, int m, double w, int k) {
        const SimResult res =
            run_lifelong(map, n, horizon, make_strategy(strategy, m, w, k), seed, record);
        py::dict out;
        out["tasks_completed"] = res.tasks_completed;
        out["horizon"] = res.horizon;
        out["throughput"] = res.throughput();
        out["per_step_response_ms"] = res.per_step_response_ms;
        if (res.trajectory) out["trajectory"] = *res.trajectory;
        return out;
      },
      py::arg("map"), py::arg("n"), py::arg("horizon") = 1000, py::arg("strategy") = "original",
      py::arg("seed") = 0, py::arg("record") = false, py::arg("m") = 3, py::arg("w") = 0.9,
      py::arg("k") = 10);

  mod.def(
      "validate_solution",
      [](const Instance& ins, const Solution& sol) -> std::optional<std::string> {
        const auto v = validate_solution(ins, sol);
        if (!v) return std::nullopt;
        return v->to_json();
      },
      py::arg("instance"), py::arg("solution"));
  mod.def("sum_of_costs", &sum_of_costs, py::arg("instance"), py::arg("solution"));
  mod.def("normalized_soc",
          py::overload_cast<const Instance&, const Solution&>(&normalized_soc),
          py::arg("instance"), py::arg("solution"));
}
