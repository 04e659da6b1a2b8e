// Command-line front end: filtered digraph in, spectra tables/plots out.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "pdfl/boundary.hpp"
#include "pdfl/errors.hpp"
#include "pdfl/format.hpp"
#include "pdfl/run.hpp"
#include "pdfl/version.hpp"

namespace {

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  if (text.empty() || text == "consecutive") return {};
  std::vector<std::pair<double, double>> pairs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw pdfl::ValidationError("--pairs items look like a:b, got '" +
                                  item + "'");
    const auto a = pdfl::parse_double(item.substr(0, colon));
    const auto b = pdfl::parse_double(item.substr(colon + 1));
    if (!a || !b)
      throw pdfl::ValidationError("--pairs: cannot parse '" + item + "'");
    pairs.push_back({*a, *b});
    pos = comma + 1;
  }
  return pairs;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw pdfl::Error("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Persistent spectra of the directed flag complex of a filtered "
      "digraph"};
  app.set_version_flag("--version", pdfl::kVersion);

  pdfl::RunConfig config;
  std::string format = "flag", pairs_text, out_csv, out_json, out_plot;
  bool dump_boundaries = false;

  app.add_option("--input", config.input_path, "input file")->required();
  app.add_option("--format", format, "input format")
      ->check(CLI::IsMember({"flag", "distmat", "mol"}))
      ->capture_default_str();
  app.add_option("--max-dim", config.max_dim, "highest reported dimension")
      ->capture_default_str();
  app.add_option("--complex-dim", config.complex_dim,
                 "clique enumeration cap (default: max-dim + 1)");
  app.add_option("--cutoff", config.cutoff,
                 "distance cutoff for distmat/mol inputs")
      ->capture_default_str();
  app.add_option("--round", config.rounding,
                 "distance rounding step, <= 0 disables")
      ->capture_default_str();
  app.add_option("--pairs", pairs_text,
                 "comma-separated a:b filtration pairs (b may be inf); "
                 "default: consecutive grid values plus a final (t,t)");
  app.add_option("--zero-tol", config.zero_tol,
                 "eigenvalues at or below this count as zero; <= 0 picks "
                 "1e-8*max(1,||L||)");
  app.add_flag("--verify", config.verify,
               "cross-check every betti number against the exact rational "
               "oracle; mismatch exits 2");
  app.add_flag("--strict", config.strict,
               "reject edges whose value precedes an endpoint instead of "
               "clamping");
  app.add_flag("--bonds-at-zero", config.bonds_at_zero,
               "covalent bonds enter the filtration at 0 instead of at "
               "bond length");
  app.add_flag("--all-ligand-pairs", config.all_ligand_pairs,
               "also connect non-bonded ligand atom pairs within the cutoff");
  app.add_option("--electronegativities", config.electronegativity_path,
                 "element table file overriding the built-in Pauling values");
  app.add_option("--max-matrix-size", config.max_matrix_size,
                 "dense Laplacian size cap")
      ->capture_default_str();
  app.add_option("--threads", config.threads,
                 "worker threads (0 = hardware)");
  app.add_option("--out-csv", out_csv, "write the summary table here");
  app.add_option("--out-json", out_json,
                 "write the full eigenvalue report here");
  app.add_option("--plot", out_plot, "write an SVG spectra plot here");
  app.add_flag("--dump-boundaries", dump_boundaries,
               "print boundary matrix triplets at the last filtration value "
               "and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    config.format = format == "flag"      ? pdfl::InputFormat::Flag
                    : format == "distmat" ? pdfl::InputFormat::DistanceMatrix
                                          : pdfl::InputFormat::Molecule;
    config.pairs = parse_pairs(pairs_text);

    if (dump_boundaries) {
      pdfl::RunConfig probe = config;
      probe.pairs = {};  // only the complex matters here
      pdfl::FilteredDigraph g;
      {
        std::ifstream in(config.input_path, std::ios::binary);
        if (!in) throw pdfl::Error("cannot open '" + config.input_path + "'");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        switch (config.format) {
          case pdfl::InputFormat::Flag:
            g = pdfl::parse_flag_file(text, config.strict);
            break;
          case pdfl::InputFormat::DistanceMatrix:
            g = pdfl::from_distance_matrix(pdfl::parse_distance_csv(text),
                                           config.cutoff, config.rounding);
            break;
          case pdfl::InputFormat::Molecule: {
            pdfl::MoleculeOptions options;
            options.cutoff = config.cutoff;
            options.rounding = config.rounding;
            options.bonds_at_zero = config.bonds_at_zero;
            options.all_ligand_pairs = config.all_ligand_pairs;
            g = pdfl::from_molecule(pdfl::parse_molecule_file(text), options);
            break;
          }
        }
      }
      const int cap =
          config.complex_dim < 0 ? config.max_dim + 1 : config.complex_dim;
      const auto cx = pdfl::build_complex(g, cap);
      const double last = cx.grid.empty() ? 0.0 : cx.grid.back();
      for (int k = 1; k <= cx.max_dim; ++k) {
        std::cout << "# dim " << k << " at " << pdfl::format_double(last)
                  << '\n';
        pdfl::dump_triplets(pdfl::boundary_matrix(cx, k, last), std::cout);
      }
      return 0;
    }

    const pdfl::Report report = pdfl::run(config);
    if (!out_csv.empty()) write_file(out_csv, pdfl::emit_csv(report));
    if (!out_json.empty()) write_file(out_json, pdfl::emit_json(report));
    if (!out_plot.empty()) write_file(out_plot, pdfl::emit_plot(report));
    if (out_csv.empty() && out_json.empty() && out_plot.empty())
      std::cout << pdfl::emit_csv(report);
    return 0;
  } catch (const pdfl::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
