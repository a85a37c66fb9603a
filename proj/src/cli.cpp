#include "checkers/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "checkers/closed_form.hpp"
#include "checkers/constructor.hpp"
#include "checkers/counter.hpp"
#include "checkers/enumerator.hpp"
#include "checkers/oracle.hpp"

namespace checkers::cli {

void write_positions(std::ostream& out, const Solution& sol) {
  out << sol.spec.n() << ' ' << sol.spec.m() << ' ' << sol.d << '\n';
  for (std::size_t k = 0; k < sol.steps.size(); ++k) {
    if (k > 0) out << ' ';
    out << sol.steps[k];
  }
  out << '\n';
}

Solution read_positions(std::istream& in) {
  long long n = 0;
  long long m = 0;
  long long d = 0;
  if (!(in >> n >> m >> d)) throw std::invalid_argument("missing header line \"n m d\"");
  if (d != 1 && d != -1) throw std::invalid_argument("header d must be 1 or -1");
  if (n < 1 || m < 1 || n > GameSpec::kMaxCheckers || m > GameSpec::kMaxCheckers) {
    throw std::invalid_argument("header n and m must be positive checker counts");
  }
  Solution sol{GameSpec(static_cast<int>(n), static_cast<int>(m)), static_cast<int>(d), {}};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long pos = 0;
    try {
      pos = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || pos < -(1LL << 30) || pos > (1LL << 30)) {
      throw std::invalid_argument("bad position \"" + token + "\"");
    }
    sol.steps.push_back(static_cast<Position>(pos));
  }
  return sol;
}

namespace {

struct Options {
  int n = 0;
  int m = 0;
  std::string dir = "r";
  std::string method;
  std::string format = "positions";
  std::optional<std::size_t> limit;
  std::string file;
  std::string out_path;
  std::size_t cap = 0;
  int max_n = 1000;
  int max_m = 1000;
  std::size_t samples = 100'000;
};

constexpr std::size_t kGraphCap = 100'000;

int cmd_solve(const Options& opt, std::ostream& out) {
  const GameSpec spec(opt.n, opt.m);
  const Direction dir = opt.dir == "l" ? Direction::L : Direction::R;
  const Solution sol =
      opt.method == "closed-form" ? sequence(spec, sign(dir)) : construct(spec, dir);
  if (opt.format == "positions") {
    write_positions(out, sol);
  } else if (opt.format == "moves") {
    BoardState board = initial_state(spec);
    for (Position pos : sol.steps) {
      out << classify(board, pos).name << '\n';
      board.move(pos);
    }
  } else {
    BoardState board = initial_state(spec);
    out << board.str() << '\n';
    for (Position pos : sol.steps) {
      board.move(pos);
      out << board.str() << '\n';
    }
  }
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  const GameSpec spec(opt.n, opt.m);
  std::size_t printed = 0;
  bool truncated = false;
  for_each_optimal(spec, [&](std::span<const Position> steps) {
    if (opt.limit && printed == *opt.limit) {
      truncated = true;
      return false;
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (k > 0) out << ' ';
      out << steps[k];
    }
    out << '\n';
    ++printed;
    return true;
  });
  if (truncated) err << "output truncated after " << printed << " solutions\n";
  return kOk;
}

int cmd_count(const Options& opt, std::ostream& out, std::ostream& err) {
  const GameSpec spec(opt.n, opt.m);
  if (opt.method == "enumerate") {
    out << for_each_optimal(spec, [](std::span<const Position>) { return true; }) << '\n';
  } else if (opt.method == "bfs") {
    try {
      out << oracle::count_shortest_paths(spec, opt.cap) << '\n';
    } catch (const oracle::CapExceeded& e) {
      err << e.what() << '\n';
      return kFailure;
    }
  } else {
    out << phi(spec) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (opt.file != "-") {
    file.open(opt.file);
    if (!file) {
      err << "cannot open " << opt.file << '\n';
      return kUsage;
    }
    in = &file;
  }

  Solution sol{GameSpec(1, 1), 1, {}};
  try {
    sol = read_positions(*in);
  } catch (const std::invalid_argument& e) {
    out << "malformed solution file: " << e.what() << '\n';
    return kFailure;
  }
  const GameSpec& spec = sol.spec;
  if ((opt.n != 0 && opt.n != spec.n()) || (opt.m != 0 && opt.m != spec.m())) {
    out << "header game " << spec.n() << ' ' << spec.m() << " differs from --n/--m\n";
    return kFailure;
  }

  bool ok = true;
  if (!sol.steps.empty()) {
    const int first = spec.n() + 1 - sol.steps.front();
    if ((first == 1 || first == -1) && first != sol.d) {
      out << "header direction " << sol.d << " does not match first step " << first << '\n';
      ok = false;
    }
  }
  const ValidationReport report = validate(sol, Rules::Optimal);
  if (report.first_violation) {
    out << "illegal step " << report.first_violation->step << ": "
        << report.first_violation->reason << '\n';
    ok = false;
  } else {
    if (report.step_count != spec.optimal_length()) {
      out << "not optimal: " << report.step_count << " ≠ " << spec.optimal_length() << '\n';
      ok = false;
    }
    if (!report.reached_goal) {
      out << "goal " << goal_state(spec).str() << " not reached\n";
      ok = false;
    }
  }
  if (!ok) return kFailure;
  out << "optimal: " << report.step_count << " steps\n";
  return kOk;
}

int cmd_graph(const Options& opt, std::ostream& out, std::ostream& err) {
  const GameSpec spec(opt.n, opt.m);
  std::string dot;
  try {
    dot = oracle::export_dot(spec, opt.cap);
  } catch (const oracle::CapExceeded& e) {
    err << e.what() << '\n';
    return kFailure;
  }
  if (opt.out_path.empty() || opt.out_path == "-") {
    out << dot;
    return kOk;
  }
  std::ofstream file(opt.out_path);
  if (!(file << dot)) {
    err << "cannot write " << opt.out_path << '\n';
    return kFailure;
  }
  return kOk;
}

std::vector<int> bench_axis(int limit) {
  std::vector<int> out;
  for (int scale = 1; scale <= limit; scale *= 10) {
    for (int step : {1, 2, 5}) {
      if (scale * step <= limit) out.push_back(scale * step);
    }
    if (scale > limit / 10) break;
  }
  if (out.empty() || out.back() != limit) out.push_back(limit);
  return out;
}

template <typename F>
double elapsed_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

int cmd_bench(const Options& opt, std::ostream& out) {
  struct GridPoint {
    int n;
    int m;
    std::int64_t steps;
  };
  std::vector<GridPoint> grid;
  for (int n : bench_axis(opt.max_n)) {
    for (int m : bench_axis(opt.max_m)) grid.push_back({n, m, GameSpec(n, m).optimal_length()});
  }
  std::sort(grid.begin(), grid.end(), [](const GridPoint& a, const GridPoint& b) {
    return std::tie(a.steps, a.n, a.m) < std::tie(b.steps, b.n, b.m);
  });

  std::mt19937_64 rng(20240601);
  volatile std::int64_t sink = 0;
  out << std::setw(8) << "n" << std::setw(8) << "m" << std::setw(14) << "steps"
      << std::setw(16) << "construct_ms" << std::setw(16) << "closed_form_ms"
      << std::setw(16) << "random_ns/step" << '\n';
  for (const GridPoint& cell : grid) {
    const GameSpec spec(cell.n, cell.m);
    const double construct_ms =
        elapsed_ms([&] { sink = sink + construct(spec, Direction::R).steps.back(); });
    const double sequence_ms = elapsed_ms([&] { sink = sink + sequence(spec, 1).steps.back(); });

    const ClosedForm form(spec, 1);
    std::uniform_int_distribution<std::int64_t> pick(1, form.length());
    std::vector<std::int64_t> indices(opt.samples);
    for (auto& i : indices) i = pick(rng);
    const double random_ms = elapsed_ms([&] {
      std::int64_t acc = 0;
      for (std::int64_t i : indices) acc += form.x_of(i);
      sink = sink + acc;
    });
    const double per_step_ns =
        opt.samples == 0 ? 0.0 : random_ms * 1e6 / static_cast<double>(opt.samples);

    out << std::setw(8) << cell.n << std::setw(8) << cell.m << std::setw(14) << cell.steps
        << std::fixed << std::setprecision(3) << std::setw(16) << construct_ms
        << std::setw(16) << sequence_ms << std::setprecision(1) << std::setw(16)
        << per_step_ns << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return kOk;
}

void add_game(CLI::App* cmd, Options& opt, bool required = true) {
  auto* n = cmd->add_option("--n", opt.n, "number of black checkers")
                ->check(CLI::Range(1, GameSpec::kMaxCheckers));
  auto* m = cmd->add_option("--m", opt.m, "number of white checkers")
                ->check(CLI::Range(1, GameSpec::kMaxCheckers));
  if (required) {
    n->required();
    m->required();
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Solver, verifier and counter for the shifting-checkers puzzle", "checkers"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "print an optimal solution");
  add_game(solve, opt);
  solve->add_option("--dir", opt.dir, "first move: r = black slides right, l = white slides left")
      ->check(CLI::IsMember({"l", "r"}));
  opt.method = "construct";
  solve->add_option("--method", opt.method, "construct | closed-form")
      ->check(CLI::IsMember({"construct", "closed-form"}));
  solve->add_option("--format", opt.format, "positions | moves | trace")
      ->check(CLI::IsMember({"positions", "moves", "trace"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every optimal solution");
  add_game(enumerate_cmd, opt);
  enumerate_cmd->add_option("--limit", opt.limit, "stop after this many solutions");

  std::string count_method = "formula";
  auto* count = app.add_subcommand("count", "number of optimal solutions");
  add_game(count, opt);
  count->add_option("--method", count_method, "formula | enumerate | bfs")
      ->check(CLI::IsMember({"formula", "enumerate", "bfs"}));
  std::size_t bfs_cap = oracle::kDefaultCap;
  count->add_option("--cap", bfs_cap, "state limit for --method bfs");

  auto* verify = app.add_subcommand("verify", "check a solution in positions format");
  add_game(verify, opt, false);
  verify->add_option("file", opt.file, "solution file, - for stdin")->required();

  std::size_t graph_cap = kGraphCap;
  auto* graph = app.add_subcommand("graph", "write the state space graph as DOT");
  add_game(graph, opt);
  graph->add_option("--out", opt.out_path, "output file (default stdout)");
  graph->add_option("--cap", graph_cap, "state limit");

  auto* bench = app.add_subcommand("bench", "time construction, formula and random access");
  bench->add_option("--max-n", opt.max_n, "largest n on the grid")->check(CLI::Range(1, 100'000));
  bench->add_option("--max-m", opt.max_m, "largest m on the grid")->check(CLI::Range(1, 100'000));
  bench->add_option("--samples", opt.samples, "random accesses per grid cell");

  std::vector<const char*> argv{"checkers"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(opt, out);
    if (*enumerate_cmd) return cmd_enumerate(opt, out, err);
    if (*count) {
      opt.method = count_method;
      opt.cap = bfs_cap;
      return cmd_count(opt, out, err);
    }
    if (*verify) return cmd_verify(opt, out, err);
    if (*graph) {
      opt.cap = graph_cap;
      return cmd_graph(opt, out, err);
    }
    if (*bench) return cmd_bench(opt, out);
  } catch (const InvalidSpec& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace checkers::cli
