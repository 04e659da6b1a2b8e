#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdfl/ingest.hpp"
#include "pdfl/model.hpp"
#include "pdfl/persistent.hpp"
#include "pdfl/report.hpp"

namespace pdfl {

enum class InputFormat { Flag, DistanceMatrix, Molecule };

/// Everything a run needs; echoed verbatim into the report provenance.
struct RunConfig {
  std::string input_path;
  InputFormat format = InputFormat::Flag;

  int max_dim = 2;       // highest reported dimension k
  int complex_dim = -1;  // clique enumeration cap; -1 means max_dim + 1
  double zero_tol = 0.0; // <= 0: automatic per-matrix threshold

  /// Filtration pairs (a, b) to evaluate, a <= b, b may be inf.  Empty means
  /// consecutive pairs of the filtration grid plus the degenerate final pair
  /// (t_last, t_last).
  std::vector<std::pair<double, double>> pairs;

  bool verify = false;   // cross-check every betti against the exact oracle
  bool strict = false;   // flag files: reject instead of clamping edge values
  Eigen::Index max_matrix_size = 2000;
  int threads = 0;       // 0: hardware concurrency

  // distance-matrix and molecule inputs
  double cutoff = 8.0;
  double rounding = 1e-3;
  bool bonds_at_zero = false;
  bool all_ligand_pairs = false;
  std::string electronegativity_path;  // empty: built-in Pauling table
};

/// Consecutive grid pairs plus (t_last, t_last).
std::vector<std::pair<double, double>> default_pairs(
    const std::vector<double>& grid);

/// Loads input_path according to config.format and delegates to run_on.
/// Throws Error subclasses; a VerificationError means at least one oracle
/// cross-check failed.
Report run(const RunConfig& config);

/// Runs the pipeline on an already-built digraph.  Records are sorted by
/// (dim, a, b).  Oracle cross-checks wider than the oracle cap are skipped
/// and noted in the provenance timings as verify_skipped_records.
Report run_on(const FilteredDigraph& g, const RunConfig& config);

}  // namespace pdfl
