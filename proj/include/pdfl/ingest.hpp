#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdfl/model.hpp"

namespace pdfl {

/// --- plain-text filtered digraph ("flag") files ---------------------------
///
///   # comment
///   dim 0:
///   <vertex filtration values, whitespace separated>
///   dim 1:
///   <src> <dst> [value]        # one edge per line, 0-based indices
///
/// A missing edge value defaults to max(endpoint values).  `strict` forwards
/// to make_digraph (edge-before-endpoint becomes an error instead of a clamp).
FilteredDigraph parse_flag_file(std::string_view text, bool strict = false);

/// Canonical form of the same format; parse(serialize(g)) == g.
std::string serialize_flag_file(const FilteredDigraph& g);

/// --- distance matrices -----------------------------------------------------

/// Square matrix of reals, one CSV row per line ('#' comments allowed).
Eigen::MatrixXd parse_distance_csv(std::string_view text);

/// Vietoris-Rips-style digraph: vertices at 0; both directed edges (i,j) and
/// (j,i) at round_to(D(i,j), rounding) whenever i != j and D(i,j) <= cutoff.
/// Rejects non-square, asymmetric, negative, or nonzero-diagonal D.
/// rounding <= 0 disables rounding.
FilteredDigraph from_distance_matrix(const Eigen::MatrixXd& D, double cutoff,
                                     double rounding = 1e-3);

/// Nearest multiple of step, ties away from zero; step <= 0 returns x.
double round_to(double x, double step);

/// --- molecular systems -----------------------------------------------------

enum class AtomRole { Ligand, Protein };

struct Atom {
  std::string element;
  double x = 0, y = 0, z = 0;
  AtomRole role = AtomRole::Ligand;
};

struct MolecularSystem {
  std::vector<Atom> atoms;
  std::vector<std::pair<int, int>> bonds;  // ligand-ligand, 0-based atom ids
};

/// Format:  `<element> <x> <y> <z> <ligand|protein>` per atom, then an
/// optional `bonds:` section with `<i> <j>` lines.
MolecularSystem parse_molecule_file(std::string_view text);

/// Pauling electronegativities; lookup of an absent element is an error.
struct ElectronegativityTable {
  std::map<std::string, double> chi;

  static ElectronegativityTable pauling();
  bool contains(const std::string& element) const;
  double at(const std::string& element) const;
};

/// Lines of `<element> <value>`; '#' comments allowed.
ElectronegativityTable parse_electronegativity_table(std::string_view text);

struct MoleculeOptions {
  double cutoff = 8.0;     // protein atoms kept within this of a ligand atom
  double rounding = 1e-3;  // distance rounding step (<= 0: off)
  bool bonds_at_zero = false;      // covalent bonds enter at 0, not length
  bool all_ligand_pairs = false;   // also connect non-bonded ligand pairs
  ElectronegativityTable table = ElectronegativityTable::pauling();
};

/// Element-specific interaction digraph:
///  - keep ligand atoms with element in {C,N,O,S} and protein carbons within
///    cutoff of a kept ligand atom; all vertices enter at 0;
///  - edges: ligand covalent bonds, plus every kept protein-ligand pair
///    within cutoff (never protein-protein), at the rounded distance;
///  - direction: lower Pauling electronegativity -> higher; equal values
///    (e.g. C-C) give both directions.
FilteredDigraph from_molecule(const MolecularSystem& mol,
                              const MoleculeOptions& options = {});

}  // namespace pdfl
