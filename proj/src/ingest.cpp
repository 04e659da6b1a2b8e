#include "pdfl/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "pdfl/errors.hpp"
#include "pdfl/format.hpp"

namespace pdfl {

namespace {

struct Line {
  int number;  // 1-based position in the original text
  std::string text;
};

// Comment-stripped, trimmed, non-blank lines.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++number;
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back({number, std::string(line.substr(first, last - first + 1))});
    if (nl == text.size()) break;
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

double need_double(const std::string& tok, int line) {
  auto v = parse_double(tok);
  if (!v) fail(line, "expected a number, got '" + tok + "'");
  return *v;
}

int need_int(const std::string& tok, int line) {
  auto v = parse_int(tok);
  if (!v) fail(line, "expected an integer, got '" + tok + "'");
  return *v;
}

}  // namespace

FilteredDigraph parse_flag_file(std::string_view text, bool strict) {
  const auto lines = significant_lines(text);
  std::size_t i = 0;
  if (i >= lines.size() || lines[i].text != "dim 0:")
    fail(i < lines.size() ? lines[i].number : 0, "expected 'dim 0:' header");
  ++i;
  if (i >= lines.size())
    fail(lines[i - 1].number, "expected a line of vertex filtration values");
  std::vector<double> vertex_values;
  for (const auto& tok : tokens(lines[i].text))
    vertex_values.push_back(need_double(tok, lines[i].number));
  ++i;

  std::vector<Edge> edges;
  if (i < lines.size()) {
    if (lines[i].text != "dim 1:")
      fail(lines[i].number, "expected 'dim 1:' header");
    ++i;
    for (; i < lines.size(); ++i) {
      const auto toks = tokens(lines[i].text);
      if (toks.size() != 2 && toks.size() != 3)
        fail(lines[i].number, "expected 'src dst [value]'");
      Edge e;
      e.src = need_int(toks[0], lines[i].number);
      e.dst = need_int(toks[1], lines[i].number);
      if (toks.size() == 3) {
        e.value = need_double(toks[2], lines[i].number);
      } else {
        const int n = static_cast<int>(vertex_values.size());
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
          fail(lines[i].number, "edge references a missing vertex");
        e.value = std::max(vertex_values[e.src], vertex_values[e.dst]);
      }
      edges.push_back(e);
    }
  }
  return make_digraph(std::move(vertex_values), std::move(edges),
                      {.strict = strict});
}

std::string serialize_flag_file(const FilteredDigraph& g) {
  std::string out = "dim 0:\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v) out += ' ';
    out += format_double(g.vertex_values[v]);
  }
  out += "\ndim 1:\n";
  for (const Edge& e : g.edges) {
    out += std::to_string(e.src);
    out += ' ';
    out += std::to_string(e.dst);
    out += ' ';
    out += format_double(e.value);
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd parse_distance_csv(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ValidationError("empty distance matrix");
  std::vector<std::vector<double>> rows;
  for (const auto& line : lines) {
    std::string cleaned = line.text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::vector<double> row;
    for (const auto& tok : tokens(cleaned))
      row.push_back(need_double(tok, line.number));
    if (!rows.empty() && row.size() != rows.front().size())
      fail(line.number, "ragged distance matrix row");
    rows.push_back(std::move(row));
  }
  if (rows.size() != rows.front().size())
    throw ValidationError("distance matrix is not square: " +
                          std::to_string(rows.size()) + " rows, " +
                          std::to_string(rows.front().size()) + " columns");
  Eigen::MatrixXd D(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return D;
}

double round_to(double x, double step) {
  if (!(step > 0.0)) return x;
  const double q = x / step;
  const double half = std::floor(q) + 0.5;
  double n;
  if (std::abs(q - half) <= 1e-9 * std::max(1.0, std::abs(q)))
    n = x >= 0 ? std::ceil(half) : std::floor(half);  // tie: away from zero
  else
    n = std::round(q);
  return n * step;
}

FilteredDigraph from_distance_matrix(const Eigen::MatrixXd& D, double cutoff,
                                     double rounding) {
  if (D.rows() != D.cols())
    throw ValidationError("distance matrix is not square");
  const Eigen::Index n = D.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (D(i, i) != 0.0)
      throw ValidationError("distance matrix has a nonzero diagonal entry");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(D(i, j)) || D(i, j) < 0.0)
        throw ValidationError("distances must be finite and nonnegative");
      if (D(i, j) != D(j, i))
        throw ValidationError("distance matrix is not symmetric");
    }
  }
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (D(i, j) <= cutoff) {
        const double v = round_to(D(i, j), rounding);
        edges.push_back({static_cast<int>(i), static_cast<int>(j), v});
        edges.push_back({static_cast<int>(j), static_cast<int>(i), v});
      }
  return make_digraph(std::vector<double>(static_cast<std::size_t>(n), 0.0),
                      std::move(edges));
}

MolecularSystem parse_molecule_file(std::string_view text) {
  const auto lines = significant_lines(text);
  MolecularSystem mol;
  std::size_t i = 0;
  for (; i < lines.size() && lines[i].text != "bonds:"; ++i) {
    const auto toks = tokens(lines[i].text);
    if (toks.size() != 5)
      fail(lines[i].number, "expected '<element> <x> <y> <z> <role>'");
    Atom atom;
    atom.element = toks[0];
    atom.x = need_double(toks[1], lines[i].number);
    atom.y = need_double(toks[2], lines[i].number);
    atom.z = need_double(toks[3], lines[i].number);
    if (!std::isfinite(atom.x) || !std::isfinite(atom.y) ||
        !std::isfinite(atom.z))
      fail(lines[i].number, "atom coordinates must be finite");
    if (toks[4] == "ligand")
      atom.role = AtomRole::Ligand;
    else if (toks[4] == "protein")
      atom.role = AtomRole::Protein;
    else
      fail(lines[i].number, "role must be 'ligand' or 'protein'");
    mol.atoms.push_back(std::move(atom));
  }
  if (i < lines.size()) {  // bonds:
    const int natoms = static_cast<int>(mol.atoms.size());
    std::set<std::pair<int, int>> seen;
    for (++i; i < lines.size(); ++i) {
      const auto toks = tokens(lines[i].text);
      if (toks.size() != 2) fail(lines[i].number, "expected '<i> <j>'");
      int a = need_int(toks[0], lines[i].number);
      int b = need_int(toks[1], lines[i].number);
      if (a < 0 || a >= natoms || b < 0 || b >= natoms)
        fail(lines[i].number, "bond references a missing atom");
      if (a == b) fail(lines[i].number, "bond endpoints coincide");
      if (mol.atoms[a].role != AtomRole::Ligand ||
          mol.atoms[b].role != AtomRole::Ligand)
        fail(lines[i].number, "bonds may only join ligand atoms");
      if (!seen.insert(std::minmax(a, b)).second)
        fail(lines[i].number, "duplicate bond");
      mol.bonds.push_back({a, b});
    }
  }
  if (mol.atoms.empty()) throw ValidationError("no atoms in molecule file");
  return mol;
}

ElectronegativityTable ElectronegativityTable::pauling() {
  return {{
      {"H", 2.20}, {"C", 2.55}, {"N", 3.04}, {"O", 3.44}, {"P", 2.19},
      {"S", 2.58}, {"F", 3.98}, {"Cl", 3.16}, {"Br", 2.96}, {"I", 2.66},
  }};
}

bool ElectronegativityTable::contains(const std::string& element) const {
  return chi.count(element) != 0;
}

double ElectronegativityTable::at(const std::string& element) const {
  auto it = chi.find(element);
  if (it == chi.end())
    throw ValidationError("unknown element '" + element +
                          "' (no electronegativity value)");
  return it->second;
}

ElectronegativityTable parse_electronegativity_table(std::string_view text) {
  ElectronegativityTable table;
  for (const auto& line : significant_lines(text)) {
    const auto toks = tokens(line.text);
    if (toks.size() != 2) fail(line.number, "expected '<element> <value>'");
    const double v = need_double(toks[1], line.number);
    if (!(v > 0) || !std::isfinite(v))
      fail(line.number, "electronegativity must be a positive real");
    if (!table.chi.emplace(toks[0], v).second)
      fail(line.number, "duplicate element '" + toks[0] + "'");
  }
  if (table.chi.empty()) throw ValidationError("empty electronegativity table");
  return table;
}

namespace {

double distance(const Atom& p, const Atom& q) {
  return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

const std::set<std::string>& ligand_elements() {
  static const std::set<std::string> kept{"C", "N", "O", "S"};
  return kept;
}

}  // namespace

FilteredDigraph from_molecule(const MolecularSystem& mol,
                              const MoleculeOptions& options) {
  const int natoms = static_cast<int>(mol.atoms.size());

  std::vector<int> ligand, protein;
  for (int i = 0; i < natoms; ++i) {
    const Atom& a = mol.atoms[i];
    if (a.role == AtomRole::Ligand && ligand_elements().count(a.element))
      ligand.push_back(i);
    else if (a.role == AtomRole::Protein && a.element == "C")
      protein.push_back(i);
  }

  // Protein carbons participate only when close enough to the kept ligand.
  std::vector<int> kept = ligand;
  for (int p : protein) {
    for (int l : ligand) {
      if (distance(mol.atoms[p], mol.atoms[l]) <= options.cutoff) {
        kept.push_back(p);
        break;
      }
    }
  }
  if (kept.empty())
    throw ValidationError("no atoms remain after element/role filtering");
  std::sort(kept.begin(), kept.end());

  // fail fast on missing table entries, even for atoms that end up isolated
  for (int idx : kept)
    (void)options.table.at(mol.atoms[idx].element);

  std::vector<int> vertex_of(static_cast<std::size_t>(natoms), -1);
  std::vector<double> values(kept.size(), 0.0);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < kept.size(); ++v) {
    vertex_of[static_cast<std::size_t>(kept[v])] = static_cast<int>(v);
    const Atom& a = mol.atoms[kept[v]];
    labels.push_back(a.element + std::to_string(kept[v]) +
                     (a.role == AtomRole::Protein ? ":protein" : ":ligand"));
  }

  std::set<std::pair<int, int>> bonded;
  std::vector<Edge> edges;
  auto connect = [&](int i, int j, double value) {
    const double chi_i = options.table.at(mol.atoms[i].element);
    const double chi_j = options.table.at(mol.atoms[j].element);
    const int u = vertex_of[static_cast<std::size_t>(i)];
    const int v = vertex_of[static_cast<std::size_t>(j)];
    if (chi_i <= chi_j) edges.push_back({u, v, value});
    if (chi_j <= chi_i) edges.push_back({v, u, value});
  };

  for (auto [a, b] : mol.bonds) {
    if (vertex_of[static_cast<std::size_t>(a)] < 0 ||
        vertex_of[static_cast<std::size_t>(b)] < 0)
      continue;  // bond to an excluded element
    bonded.insert(std::minmax(a, b));
    const double d = options.bonds_at_zero
                         ? 0.0
                         : round_to(distance(mol.atoms[a], mol.atoms[b]),
                                    options.rounding);
    connect(a, b, d);
  }
  for (int p : kept) {
    if (mol.atoms[p].role != AtomRole::Protein) continue;
    for (int l : ligand) {
      const double d = distance(mol.atoms[p], mol.atoms[l]);
      if (d <= options.cutoff)
        connect(p, l, round_to(d, options.rounding));
    }
  }
  if (options.all_ligand_pairs) {
    for (std::size_t x = 0; x < ligand.size(); ++x)
      for (std::size_t y = x + 1; y < ligand.size(); ++y) {
        const int a = ligand[x], b = ligand[y];
        if (bonded.count(std::minmax(a, b))) continue;
        const double d = distance(mol.atoms[a], mol.atoms[b]);
        if (d <= options.cutoff) connect(a, b, round_to(d, options.rounding));
      }
  }
  return make_digraph(std::move(values), std::move(labels), std::move(edges));
}

}  // namespace pdfl
