/*
 * Command-line front end: one-shot solving, lifelong simulation, benchmark
 * sweeps with per-row CSV flushing, and map/scenario generation.
 */
#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapf/config_gen.hpp"
#include "mapf/lacam.hpp"
#include "mapf/lifelong.hpp"
#include "mapf/metrics.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace mapf;

namespace {

fs::path resolve_data_path(const std::string& given)
{
  if (fs::exists(given)) return given;
  if (const char* dir = std::getenv("MAPF_DATA_DIR")) {
    const fs::path candidate = fs::path(dir) / given;
    if (fs::exists(candidate)) return candidate;
  }
  throw std::runtime_error("file not found: " + given);
}

std::string read_file(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

struct StrategyFlags {
  int regret_m = 3;
  double regret_w = 0.9;
  int mc_k = 10;

  void attach(CLI::App* cmd)
  {
    cmd->add_option("--regret-m", regret_m, "regret learning iterations")->check(CLI::Range(1, 1000));
    cmd->add_option("--regret-w", regret_w, "regret averaging weight")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--mc-k", mc_k, "monte-carlo sample count")->check(CLI::Range(1, 10000));
  }
  StrategyConfig config(const std::string& name) const
  {
    return {parse_strategy(name), regret_m, regret_w, mc_k};
  }
};

double percentile(std::vector<double> values, double p)
{
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto idx = static_cast<size_t>(p * (values.size() - 1));
  return values[idx];
}

double mean(const std::vector<double>& values)
{
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// runs indexed tasks on a pool and hands results to `emit` in index order
void run_ordered(int jobs, int task_count, const std::function<std::string(int)>& work,
                 const std::function<void(const std::string&)>& emit)
{
  if (jobs <= 1) {
    for (int i = 0; i < task_count; ++i) emit(work(i));
    return;
  }
  std::vector<std::optional<std::string>> results(task_count);
  std::atomic<int> next{0};
  std::mutex mtx;
  std::condition_variable cv;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= task_count) return;
        std::string row = work(i);
        {
          std::lock_guard lock(mtx);
          results[i] = std::move(row);
        }
        cv.notify_all();
      }
    });
  }
  for (int i = 0; i < task_count; ++i) {
    std::unique_lock lock(mtx);
    cv.wait(lock, [&] { return results[i].has_value(); });
    const std::string row = *results[i];
    results[i].reset();
    lock.unlock();
    emit(row);
  }
  for (auto& th : pool) th.join();
}

struct BenchTask {
  std::string map_name;
  const GridMap* map;
  int agents;
  std::string strategy;
  int instance_index;
};

std::vector<BenchTask> expand_tasks(const std::vector<std::pair<std::string, GridMap>>& maps,
                                    const std::vector<int>& agent_counts,
                                    const std::vector<std::string>& strategies, int instances)
{
  std::vector<BenchTask> tasks;
  for (const auto& [name, map] : maps) {
    for (const int n : agent_counts) {
      for (const auto& s : strategies) {
        for (int i = 0; i < instances; ++i) tasks.push_back({name, &map, n, s, i});
      }
    }
  }
  return tasks;
}

void apply_bench_config(const fs::path& path, std::vector<std::string>& map_args,
                        std::vector<int>& agent_counts, std::vector<std::string>& strategies,
                        int& instances, int& time_limit_ms, int& horizon, uint64_t& seed)
{
  const json cfg = json::parse(read_file(path));
  if (cfg.contains("maps")) map_args = cfg["maps"].get<std::vector<std::string>>();
  if (cfg.contains("agents")) agent_counts = cfg["agents"].get<std::vector<int>>();
  if (cfg.contains("strategies")) strategies = cfg["strategies"].get<std::vector<std::string>>();
  if (cfg.contains("instances")) instances = cfg["instances"].get<int>();
  if (cfg.contains("time_limit_ms")) time_limit_ms = cfg["time_limit_ms"].get<int>();
  if (cfg.contains("horizon")) horizon = cfg["horizon"].get<int>();
  if (cfg.contains("seed")) seed = cfg["seed"].get<uint64_t>();
}

std::vector<std::pair<std::string, GridMap>> load_maps(const std::vector<std::string>& args)
{
  std::vector<std::pair<std::string, GridMap>> maps;
  for (const auto& arg : args) {
    const fs::path path = resolve_data_path(arg);
    maps.emplace_back(path.stem().string(), GridMap::parse(read_file(path)));
  }
  return maps;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"PIBT / LaCAM toolkit for one-shot and lifelong MAPF"};
  app.require_subcommand(1);

  // ---- solve --------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "solve one instance with LaCAM");
  std::string solve_map, solve_scen, solve_strategy = "original", solve_out;
  int solve_agents = 1, solve_limit_ms = 1000;
  uint64_t solve_seed = 0, solve_random_seed = 0;
  bool has_random_seed = false;
  StrategyFlags solve_flags;
  solve->add_option("--map", solve_map, "map file (MovingAI .map)")->required();
  auto* scen_opt = solve->add_option("--scen", solve_scen, "scenario file (MovingAI .scen)");
  auto* rnd_opt = solve
                      ->add_option_function<uint64_t>(
                          "--random-seed",
                          [&](uint64_t v) {
                            solve_random_seed = v;
                            has_random_seed = true;
                          },
                          "sample a random instance with this seed")
                      ->excludes(scen_opt);
  scen_opt->excludes(rnd_opt);
  solve->add_option("--agents", solve_agents, "agent count")->required()->check(CLI::PositiveNumber);
  solve->add_option("--strategy", solve_strategy, "tiebreaking strategy");
  solve->add_option("--time-limit-ms", solve_limit_ms, "wallclock budget")->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_seed, "solver seed");
  solve->add_option("--out", solve_out, "write the solution file here");
  solve_flags.attach(solve);

  // ---- lifelong -----------------------------------------------------
  auto* lifelong = app.add_subcommand("lifelong", "run one lifelong simulation");
  std::string ll_map, ll_strategy = "original", ll_traj_out;
  int ll_agents = 1, ll_horizon = 1000;
  uint64_t ll_seed = 0;
  bool ll_record = false;
  StrategyFlags ll_flags;
  lifelong->add_option("--map", ll_map)->required();
  lifelong->add_option("--agents", ll_agents)->required()->check(CLI::PositiveNumber);
  lifelong->add_option("--horizon", ll_horizon)->check(CLI::PositiveNumber);
  lifelong->add_option("--strategy", ll_strategy);
  lifelong->add_option("--seed", ll_seed);
  lifelong->add_flag("--record", ll_record, "keep the trajectory");
  lifelong->add_option("--traj-out", ll_traj_out, "trajectory file (requires --record)");
  ll_flags.attach(lifelong);

  // ---- bench-oneshot ------------------------------------------------
  auto* bench1 = app.add_subcommand("bench-oneshot", "one-shot sweep, CSV per run");
  std::vector<std::string> b1_maps, b1_strategies{"original"};
  std::vector<int> b1_agents{100};
  std::string b1_out, b1_config;
  int b1_instances = 100, b1_limit_ms = 1000, b1_jobs = 1;
  uint64_t b1_seed = 0;
  StrategyFlags b1_flags;
  bench1->add_option("--config", b1_config, "JSON config (maps/agents/strategies/...)");
  bench1->add_option("--map", b1_maps, "map files");
  bench1->add_option("--agents", b1_agents, "agent counts");
  bench1->add_option("--strategy", b1_strategies, "strategies");
  bench1->add_option("--instances", b1_instances)->check(CLI::PositiveNumber);
  bench1->add_option("--time-limit-ms", b1_limit_ms)->check(CLI::PositiveNumber);
  bench1->add_option("--seed", b1_seed, "base seed");
  bench1->add_option("--jobs", b1_jobs)->check(CLI::PositiveNumber);
  bench1->add_option("--out", b1_out, "CSV output")->required();
  b1_flags.attach(bench1);

  // ---- bench-lifelong -----------------------------------------------
  auto* bench2 = app.add_subcommand("bench-lifelong", "lifelong sweep, CSV per run");
  std::vector<std::string> b2_maps, b2_strategies{"original"};
  std::vector<int> b2_agents{100};
  std::string b2_out, b2_config;
  int b2_seeds = 25, b2_horizon = 1000, b2_jobs = 1;
  uint64_t b2_seed = 0;
  StrategyFlags b2_flags;
  bench2->add_option("--config", b2_config, "JSON config");
  bench2->add_option("--map", b2_maps, "map files");
  bench2->add_option("--agents", b2_agents, "agent counts");
  bench2->add_option("--strategy", b2_strategies, "strategies");
  bench2->add_option("--seeds", b2_seeds, "simulations per setting")->check(CLI::PositiveNumber);
  bench2->add_option("--horizon", b2_horizon)->check(CLI::PositiveNumber);
  bench2->add_option("--seed", b2_seed, "base seed");
  bench2->add_option("--jobs", b2_jobs)->check(CLI::PositiveNumber);
  bench2->add_option("--out", b2_out, "CSV output")->required();
  b2_flags.attach(bench2);

  // ---- gen-map ------------------------------------------------------
  auto* gen_map = app.add_subcommand("gen-map", "generate a map file");
  std::string gm_style = "sortation", gm_out;
  int gm_rows = 0, gm_cols = 0, gm_obstacles = 0;
  uint64_t gm_seed = 0;
  gen_map->add_option("--rows", gm_rows)->required()->check(CLI::PositiveNumber);
  gen_map->add_option("--cols", gm_cols)->required()->check(CLI::PositiveNumber);
  gen_map->add_option("--style", gm_style)
      ->check(CLI::IsMember({"sortation", "empty", "random", "warehouse"}));
  gen_map->add_option("--obstacles", gm_obstacles, "obstacle count (random style)");
  gen_map->add_option("--seed", gm_seed, "seed (random style)");
  gen_map->add_option("--out", gm_out)->required();

  // ---- gen-scen -----------------------------------------------------
  auto* gen_scen = app.add_subcommand("gen-scen", "generate a scenario file");
  std::string gs_map, gs_out;
  int gs_rows = 0;
  uint64_t gs_seed = 0;
  gen_scen->add_option("--map", gs_map)->required();
  gen_scen->add_option("--rows", gs_rows, "entry count")->required()->check(CLI::PositiveNumber);
  gen_scen->add_option("--seed", gs_seed);
  gen_scen->add_option("--out", gs_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const GridMap map = GridMap::parse(read_file(resolve_data_path(solve_map)));
      Instance ins;
      if (!solve_scen.empty()) {
        ins = parse_scen(read_file(resolve_data_path(solve_scen)), map, solve_agents);
      } else if (has_random_seed) {
        ins = random_instance(map, solve_agents, solve_random_seed);
      } else {
        throw std::runtime_error("solve needs --scen or --random-seed");
      }
      const auto result = solve_oneshot(ins, solve_flags.config(solve_strategy),
                                        std::chrono::milliseconds(solve_limit_ms), solve_seed);
      json summary{{"success", result.solved()},
                   {"status", status_name(result.status)},
                   {"runtime_ms", result.runtime_ms}};
      if (result.solved()) {
        const int64_t soc = sum_of_costs(ins, result.solution);
        const int64_t lb = soc_lower_bound(ins);
        summary["soc"] = soc;
        summary["soc_lb"] = lb;
        summary["normalized_soc"] = normalized_soc(soc, lb);
        if (!solve_out.empty()) write_file(solve_out, serialize_solution(map, result.solution));
      }
      std::cout << summary.dump(2) << "\n";
      return result.solved() ? 0 : 2;
    }

    if (*lifelong) {
      const GridMap map = GridMap::parse(read_file(resolve_data_path(ll_map)));
      const SimResult res = run_lifelong(map, ll_agents, ll_horizon,
                                         ll_flags.config(ll_strategy), ll_seed, ll_record);
      const json summary{{"throughput", res.throughput()},
                         {"tasks_completed", res.tasks_completed},
                         {"mean_response_ms", mean(res.per_step_response_ms)},
                         {"p99_response_ms", percentile(res.per_step_response_ms, 0.99)}};
      std::cout << summary.dump(2) << "\n";
      if (ll_record && !ll_traj_out.empty()) {
        write_file(ll_traj_out, serialize_solution(map, *res.trajectory));
      }
      return 0;
    }

    if (*bench1) {
      if (!b1_config.empty()) {
        int unused_horizon = 0;
        apply_bench_config(resolve_data_path(b1_config), b1_maps, b1_agents, b1_strategies,
                           b1_instances, b1_limit_ms, unused_horizon, b1_seed);
      }
      if (b1_maps.empty()) throw std::runtime_error("bench-oneshot needs at least one --map");
      const auto maps = load_maps(b1_maps);
      const auto tasks = expand_tasks(maps, b1_agents, b1_strategies, b1_instances);
      std::ofstream csv(b1_out);
      if (!csv) throw std::runtime_error("cannot write " + b1_out);
      csv << "map,n,strategy,seed,success,runtime_ms,soc,soc_lb,normalized_soc\n" << std::flush;
      run_ordered(
          b1_jobs, static_cast<int>(tasks.size()),
          [&](int idx) {
            const BenchTask& task = tasks[idx];
            const uint64_t instance_seed = Rng::mix(b1_seed, task.instance_index);
            const uint64_t solver_seed = Rng::mix(instance_seed, 1);
            const Instance ins = random_instance(*task.map, task.agents, instance_seed);
            const auto result =
                solve_oneshot(ins, b1_flags.config(task.strategy),
                              std::chrono::milliseconds(b1_limit_ms), solver_seed);
            std::ostringstream row;
            row << task.map_name << ',' << task.agents << ',' << task.strategy << ','
                << instance_seed << ',' << (result.solved() ? 1 : 0) << ',' << result.runtime_ms;
            if (result.solved()) {
              const int64_t soc = sum_of_costs(ins, result.solution);
              const int64_t lb = soc_lower_bound(ins);
              row << ',' << soc << ',' << lb << ',' << normalized_soc(soc, lb);
            } else {
              row << ",,,";
            }
            return row.str();
          },
          [&](const std::string& row) { csv << row << '\n' << std::flush; });
      return 0;
    }

    if (*bench2) {
      if (!b2_config.empty()) {
        int unused_limit = 0;
        apply_bench_config(resolve_data_path(b2_config), b2_maps, b2_agents, b2_strategies,
                           b2_seeds, unused_limit, b2_horizon, b2_seed);
      }
      if (b2_maps.empty()) throw std::runtime_error("bench-lifelong needs at least one --map");
      const auto maps = load_maps(b2_maps);
      const auto tasks = expand_tasks(maps, b2_agents, b2_strategies, b2_seeds);
      std::ofstream csv(b2_out);
      if (!csv) throw std::runtime_error("cannot write " + b2_out);
      csv << "map,n,strategy,seed,throughput,mean_response_ms\n" << std::flush;
      run_ordered(
          b2_jobs, static_cast<int>(tasks.size()),
          [&](int idx) {
            const BenchTask& task = tasks[idx];
            const uint64_t sim_seed = Rng::mix(b2_seed, task.instance_index);
            const SimResult res = run_lifelong(*task.map, task.agents, b2_horizon,
                                               b2_flags.config(task.strategy), sim_seed);
            std::ostringstream row;
            row << task.map_name << ',' << task.agents << ',' << task.strategy << ',' << sim_seed
                << ',' << res.throughput() << ',' << mean(res.per_step_response_ms);
            return row.str();
          },
          [&](const std::string& row) { csv << row << '\n' << std::flush; });
      return 0;
    }

    if (*gen_map) {
      GridMap map = [&] {
        if (gm_style == "empty") return generate_empty_map(gm_rows, gm_cols);
        if (gm_style == "random") return generate_random_map(gm_rows, gm_cols, gm_obstacles, gm_seed);
        if (gm_style == "warehouse") return generate_warehouse_map(gm_rows, gm_cols);
        return generate_sortation_map(gm_rows, gm_cols);
      }();
      write_file(gm_out, map.serialize());
      return 0;
    }

    if (*gen_scen) {
      const fs::path map_path = resolve_data_path(gs_map);
      const GridMap map = GridMap::parse(read_file(map_path));
      const Instance ins = random_instance(map, gs_rows, gs_seed);
      write_file(gs_out, serialize_scen(ins, map_path.filename().string()));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
