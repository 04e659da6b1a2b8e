#include "pdfl/boundary.hpp"

#include <map>
#include <ostream>
#include <string>
#include <unordered_map>

#include "pdfl/errors.hpp"

namespace pdfl {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 1;
    return h;
  }
};

}  // namespace

BoundaryMatrix boundary_matrix(const FilteredFlagComplex& cx, int k,
                               double a) {
  BoundaryMatrix b;
  b.k = k;
  b.a = a;
  auto cols = simplices_at(cx, k, a);
  b.cols.assign(cols.begin(), cols.end());
  b.entries.resize(b.cols.size());
  if (k == 0) return b;  // zero map: C_0 -> 0

  auto rows = simplices_at(cx, k - 1, a);
  b.rows.assign(rows.begin(), rows.end());
  std::unordered_map<std::vector<int>, Eigen::Index, TupleHash> row_of;
  row_of.reserve(b.rows.size());
  for (Eigen::Index r = 0; r < b.row_count(); ++r)
    row_of.emplace(b.rows[r].vertices, r);

  std::vector<int> face(static_cast<std::size_t>(k));
  for (Eigen::Index c = 0; c < b.col_count(); ++c) {
    const auto& verts = b.cols[c].vertices;
    for (int i = 0; i <= k; ++i) {
      face.clear();
      for (int j = 0; j <= k; ++j)
        if (j != i) face.push_back(verts[j]);
      auto it = row_of.find(face);
      if (it == row_of.end())
        throw ValidationError("face of a stored simplex is missing; "
                              "complex is not downward closed");
      b.entries[c].push_back({it->second, i % 2 == 0 ? 1 : -1});
    }
  }
  return b;
}

bool verify_chain_complex(const FilteredFlagComplex& cx, double a) {
  for (int k = 1; k + 1 <= cx.max_dim; ++k) {
    BoundaryMatrix lo = boundary_matrix(cx, k, a);
    BoundaryMatrix hi = boundary_matrix(cx, k + 1, a);
    for (Eigen::Index c = 0; c < hi.col_count(); ++c) {
      std::map<Eigen::Index, long long> acc;
      for (auto [mid, s1] : hi.entries[c])
        for (auto [r, s2] : lo.entries[mid]) acc[r] += s1 * s2;
      for (auto [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

void dump_triplets(const BoundaryMatrix& b, std::ostream& os) {
  for (Eigen::Index c = 0; c < b.col_count(); ++c)
    for (auto [r, s] : b.entries[c]) os << r << ' ' << c << ' ' << s << '\n';
}

}  // namespace pdfl
