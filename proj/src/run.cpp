#include "pdfl/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "pdfl/errors.hpp"
#include "pdfl/format.hpp"
#include "pdfl/oracle.hpp"
#include "pdfl/version.hpp"

namespace pdfl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failure on '" + path + "'");
  return std::move(buf).str();
}

const char* format_name(InputFormat f) {
  switch (f) {
    case InputFormat::Flag: return "flag";
    case InputFormat::DistanceMatrix: return "distmat";
    case InputFormat::Molecule: return "mol";
  }
  return "?";
}

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : c.pairs)
    pairs.push_back({std::isinf(a) ? nlohmann::json("inf") : nlohmann::json(a),
                     std::isinf(b) ? nlohmann::json("inf") : nlohmann::json(b)});
  return {
      {"input", c.input_path},
      {"format", format_name(c.format)},
      {"max_dim", c.max_dim},
      {"complex_dim", c.complex_dim},
      {"zero_tol", c.zero_tol},
      {"pairs", std::move(pairs)},
      {"verify", c.verify},
      {"strict", c.strict},
      {"max_matrix_size", c.max_matrix_size},
      {"threads", c.threads},
      {"cutoff", c.cutoff},
      {"rounding", c.rounding},
      {"bonds_at_zero", c.bonds_at_zero},
      {"all_ligand_pairs", c.all_ligand_pairs},
      {"electronegativities", c.electronegativity_path},
  };
}

}  // namespace

std::vector<std::pair<double, double>> default_pairs(
    const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    pairs.push_back({grid[i], grid[i + 1]});
  if (!grid.empty()) pairs.push_back({grid.back(), grid.back()});
  return pairs;
}

Report run_on(const FilteredDigraph& g, const RunConfig& config) {
  const auto t_total = Clock::now();
  if (config.max_dim < 0)
    throw ValidationError("max dimension must be >= 0");
  const int complex_dim =
      config.complex_dim < 0 ? config.max_dim + 1 : config.complex_dim;
  if (complex_dim < config.max_dim)
    throw ValidationError("complex enumeration cap " +
                          std::to_string(complex_dim) +
                          " is below the reported dimension " +
                          std::to_string(config.max_dim));

  const auto t_build = Clock::now();
  const FilteredFlagComplex cx = build_complex(g, complex_dim);
  const double build_ms = ms_since(t_build);

  std::vector<std::pair<double, double>> pairs =
      config.pairs.empty() ? default_pairs(cx.grid) : config.pairs;
  for (auto [a, b] : pairs) {
    if (std::isnan(a) || std::isnan(b))
      throw ValidationError("filtration pair contains NaN");
    if (a > b)
      throw ValidationError("filtration pair (" + format_double(a) + "," +
                            format_double(b) + ") needs a <= b");
  }

  struct Task {
    int k;
    double a, b;
  };
  std::vector<Task> tasks;
  for (auto [a, b] : pairs)
    for (int k = 0; k <= config.max_dim; ++k) tasks.push_back({k, a, b});

  const auto t_solve = Clock::now();
  std::vector<SpectraRecord> records(tasks.size());
  std::vector<std::string> mismatches(tasks.size());
  std::atomic<long> skipped_checks{0};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        const Task t = tasks[i];
        const PersistentLaplacian L = persistent_laplacian(
            cx, t.k, t.a, t.b, {}, config.max_matrix_size);
        records[i] =
            persistent_spectra(L, {.zero_tol = config.zero_tol});
        if (config.verify) {
          try {
            const int expect =
                t.a == t.b ? oracle_betti(cx, t.k, t.a)
                           : oracle_persistent_betti(cx, t.k, t.a, t.b);
            if (expect != records[i].betti)
              mismatches[i] = "dim " + std::to_string(t.k) + " pair (" +
                              format_double(t.a) + "," + format_double(t.b) +
                              "): spectral betti " +
                              std::to_string(records[i].betti) + ", oracle " +
                              std::to_string(expect);
          } catch (const CapacityError&) {
            skipped_checks.fetch_add(1);
          }
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  unsigned n_threads = config.threads > 0
                           ? static_cast<unsigned>(config.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(
      n_threads,
      static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  const double solve_ms = ms_since(t_solve);

  std::string verify_report;
  for (const auto& m : mismatches) {
    if (m.empty()) continue;
    if (!verify_report.empty()) verify_report += "; ";
    verify_report += m;
  }
  if (!verify_report.empty())
    throw VerificationError("oracle cross-check failed: " + verify_report);

  std::stable_sort(records.begin(), records.end(),
                   [](const SpectraRecord& x, const SpectraRecord& y) {
                     if (x.k != y.k) return x.k < y.k;
                     if (x.a != y.a) return x.a < y.a;
                     return x.b < y.b;
                   });

  Report report;
  report.records = std::move(records);
  report.provenance.version = kVersion;
  report.provenance.config = config_json(config);
  report.provenance.timings_ms = {
      {"build_complex", build_ms},
      {"solve", solve_ms},
      {"total", ms_since(t_total)},
  };
  if (config.verify)
    report.provenance.timings_ms["verify_skipped_records"] =
        static_cast<double>(skipped_checks.load());
  return report;
}

Report run(const RunConfig& config) {
  const auto t_parse = Clock::now();
  const std::string text = read_file(config.input_path);
  FilteredDigraph g;
  switch (config.format) {
    case InputFormat::Flag:
      g = parse_flag_file(text, config.strict);
      break;
    case InputFormat::DistanceMatrix:
      g = from_distance_matrix(parse_distance_csv(text), config.cutoff,
                               config.rounding);
      break;
    case InputFormat::Molecule: {
      MoleculeOptions options;
      options.cutoff = config.cutoff;
      options.rounding = config.rounding;
      options.bonds_at_zero = config.bonds_at_zero;
      options.all_ligand_pairs = config.all_ligand_pairs;
      if (!config.electronegativity_path.empty())
        options.table = parse_electronegativity_table(
            read_file(config.electronegativity_path));
      g = from_molecule(parse_molecule_file(text), options);
      break;
    }
  }
  const double parse_ms = ms_since(t_parse);
  Report report = run_on(g, config);
  report.provenance.timings_ms["parse_input"] = parse_ms;
  return report;
}

}  // namespace pdfl
