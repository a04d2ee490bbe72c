#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hh/linalg.hpp"
#include "hh/matrix.hpp"

namespace hh {

// A subset of the i-cells, standing for the subcomplex X^{i-1} u I(Y).
struct Selection {
  int dim = 0;
  std::vector<int> indices;  // sorted, unique

  bool operator==(const Selection& o) const { return dim == o.dim && indices == o.indices; }
};

struct ValidationFailure {
  int dim;  // composition boundary(dim-1) * boundary(dim) is nonzero
  int row, col;
};

struct ValidationReport {
  bool ok = true;
  std::optional<ValidationFailure> first_failure;
};

// Finite chain complex given by ordered cell labels and integer boundary
// matrices.  With `augmented` set, boundary(0) is the all-ones row into the
// rank-1 group generated by the empty cell, and homology is reduced homology.
class ChainComplex {
 public:
  ChainComplex(std::vector<std::vector<std::string>> cells,
               std::vector<IntMatrix> boundaries, bool augmented = true)
      : cells_(std::move(cells)), boundaries_(std::move(boundaries)), augmented_(augmented) {
    if (cells_.empty()) throw std::invalid_argument("ChainComplex: no cells");
    if (boundaries_.size() != cells_.size() - 1)
      throw std::invalid_argument("ChainComplex: need one boundary matrix per dimension >= 1");
    for (std::size_t i = 1; i < cells_.size(); ++i) {
      const IntMatrix& b = boundaries_[i - 1];
      if (b.rows() != cells_[i - 1].size() || b.cols() != cells_[i].size())
        throw std::invalid_argument("ChainComplex: boundary shape mismatch in dim " +
                                    std::to_string(i));
    }
  }

  int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
  bool augmented() const { return augmented_; }

  std::size_t num_cells(int i) const {
    if (i < 0 || i > top_dim()) return 0;
    return cells_[i].size();
  }

  // Rank of the chain group C_i; the augmented complex has C_{-1} = Z.
  std::size_t chain_rank(int i) const {
    if (i == -1) return augmented_ ? 1 : 0;
    return num_cells(i);
  }

  const std::vector<std::string>& cells(int i) const {
    static const std::vector<std::string> empty;
    if (i < 0 || i > top_dim()) return empty;
    return cells_[i];
  }

  // boundary(i): C_i -> C_{i-1} as a matrix; shape-correct zero matrices
  // outside [0, top_dim], the augmentation row at i = 0 when augmented.
  IntMatrix boundary(int i) const {
    if (i == 0) {
      if (!augmented_) return IntMatrix(0, num_cells(0));
      IntMatrix ones(1, num_cells(0));
      for (std::size_t j = 0; j < num_cells(0); ++j) ones(0, j) = 1;
      return ones;
    }
    if (i < 0 || i > top_dim()) return IntMatrix(chain_rank(i - 1), chain_rank(i));
    return boundaries_[i - 1];
  }

  // coboundary(i) = boundary(i+1)^t : C^i -> C^{i+1}.
  IntMatrix coboundary(int i) const { return boundary(i + 1).transpose(); }

  ValidationReport validate() const {
    ValidationReport rep;
    int lo = augmented_ ? 1 : 2;
    for (int i = lo; i <= top_dim(); ++i) {
      IntMatrix p = boundary(i - 1) * boundary(i);
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c)
          if (p(r, c) != 0) {
            rep.ok = false;
            rep.first_failure = ValidationFailure{i, static_cast<int>(r), static_cast<int>(c)};
            return rep;
          }
    }
    return rep;
  }

  Selection full_selection(int i) const {
    Selection s{i, {}};
    for (std::size_t k = 0; k < num_cells(i); ++k) s.indices.push_back(static_cast<int>(k));
    return s;
  }

  void check_selection(const Selection& y) const {
    if (y.dim < 0 || y.dim > top_dim())
      throw std::invalid_argument("Selection: dimension out of range");
    int prev = -1;
    for (int k : y.indices) {
      if (k <= prev || k < 0 || static_cast<std::size_t>(k) >= num_cells(y.dim))
        throw std::invalid_argument("Selection: indices must be sorted, unique, in range");
      prev = k;
    }
  }

 private:
  std::vector<std::vector<std::string>> cells_;  // cells_[i] = labels in dimension i
  std::vector<IntMatrix> boundaries_;            // boundaries_[i-1] = boundary map in dim i
  bool augmented_;
};

inline Selection complement(const ChainComplex& x, const Selection& y) {
  x.check_selection(y);
  Selection c{y.dim, {}};
  std::size_t n = x.num_cells(y.dim);
  std::size_t p = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (p < y.indices.size() && y.indices[p] == static_cast<int>(k)) {
      ++p;
      continue;
    }
    c.indices.push_back(static_cast<int>(k));
  }
  return c;
}

// Simplicial complex from facet lists.  Vertices are ordered by label, cells
// of each dimension sorted lexicographically; the boundary of [v0..vk] is the
// alternating sum of faces omitting v_j.
inline ChainComplex from_simplicial(const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw std::invalid_argument("from_simplicial: no facets");
  std::set<std::vector<std::string>> faces;
  for (const auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("from_simplicial: empty facet");
    std::vector<std::string> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // all nonempty subsets, preserving order
    std::size_t n = sorted.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1ull << b)) face.push_back(sorted[b]);
      faces.insert(face);
    }
  }
  int d = 0;
  for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);

  std::vector<std::vector<std::vector<std::string>>> by_dim(d + 1);
  for (const auto& f : faces) by_dim[f.size() - 1].push_back(f);
  // std::set iteration is already sorted; keep per-dimension lists sorted too
  for (auto& v : by_dim) std::sort(v.begin(), v.end());

  std::vector<std::map<std::vector<std::string>, int>> index(d + 1);
  std::vector<std::vector<std::string>> labels(d + 1);
  for (int i = 0; i <= d; ++i)
    for (std::size_t k = 0; k < by_dim[i].size(); ++k) {
      index[i][by_dim[i][k]] = static_cast<int>(k);
      std::string lbl;
      for (std::size_t t = 0; t < by_dim[i][k].size(); ++t) {
        if (t) lbl += '.';
        lbl += by_dim[i][k][t];
      }
      labels[i].push_back(lbl);
    }

  std::vector<IntMatrix> boundaries;
  for (int i = 1; i <= d; ++i) {
    IntMatrix b(by_dim[i - 1].size(), by_dim[i].size());
    for (std::size_t c = 0; c < by_dim[i].size(); ++c) {
      const auto& simplex = by_dim[i][c];
      for (std::size_t j = 0; j < simplex.size(); ++j) {
        std::vector<std::string> face = simplex;
        face.erase(face.begin() + j);
        int r = index[i - 1].at(face);
        b(r, c) = (j % 2 == 0) ? 1 : -1;
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(std::move(labels), std::move(boundaries), /*augmented=*/true);
}

// Adjoins a virtual i-cell whose boundary column is z (a cycle in dimension
// i-1), growing the top dimension when i == top_dim + 1.
inline ChainComplex adjoin_virtual_cell(const ChainComplex& x, int i, const IntVec& z,
                                        const std::string& label = "*") {
  if (i < 1 || i > x.top_dim() + 1)
    throw std::invalid_argument("adjoin_virtual_cell: dimension out of range");
  if (z.size() != x.num_cells(i - 1))
    throw std::invalid_argument("adjoin_virtual_cell: boundary length mismatch");
  if (!is_zero(x.boundary(i - 1).apply(z)))
    throw chain_error("adjoin_virtual_cell: z is not a cycle");

  std::vector<std::vector<std::string>> cells;
  std::vector<IntMatrix> boundaries;
  for (int k = 0; k <= x.top_dim(); ++k) cells.push_back(x.cells(k));
  for (int k = 1; k <= x.top_dim(); ++k) boundaries.push_back(x.boundary(k));
  if (i == x.top_dim() + 1) {
    cells.push_back({label});
    boundaries.push_back(IntMatrix::from_columns({z}, z.size()));
  } else {
    cells[i].push_back(label);
    boundaries[i - 1] = boundaries[i - 1].with_column(z);
    if (i < x.top_dim()) {
      // the new cell bounds nothing: zero row in the next boundary map
      boundaries[i] = boundaries[i].with_row(IntVec(x.num_cells(i + 1)));
    }
  }
  return ChainComplex(std::move(cells), std::move(boundaries), x.augmented());
}

// Dual adjunction: a virtual i-cell whose *coboundary* is the cocycle z in
// C^{i+1}.  The new cell has zero boundary and appears in boundary(i+1) as the
// extra row z^t.  The result drops the augmentation (the all-ones row cannot
// be extended over a virtual vertex without breaking d d = 0); cohomology in
// degrees >= 1, which is all the dual constructions use, is unaffected.
inline ChainComplex adjoin_virtual_cocell(const ChainComplex& x, int i, const IntVec& z,
                                          const std::string& label = "*") {
  if (i < 0 || i > x.top_dim() - 1)
    throw std::invalid_argument("adjoin_virtual_cocell: dimension out of range");
  if (z.size() != x.num_cells(i + 1))
    throw std::invalid_argument("adjoin_virtual_cocell: coboundary length mismatch");
  if (!is_zero(x.coboundary(i + 1).apply(z)))
    throw chain_error("adjoin_virtual_cocell: z is not a cocycle");

  std::vector<std::vector<std::string>> cells;
  std::vector<IntMatrix> boundaries;
  for (int k = 0; k <= x.top_dim(); ++k) cells.push_back(x.cells(k));
  for (int k = 1; k <= x.top_dim(); ++k) boundaries.push_back(x.boundary(k));
  cells[i].push_back(label);
  if (i >= 1) boundaries[i - 1] = boundaries[i - 1].with_column(IntVec(x.num_cells(i - 1)));
  boundaries[i] = boundaries[i].with_row(z);
  return ChainComplex(std::move(cells), std::move(boundaries), /*augmented=*/false);
}

// Restricted chain maps for Y in S_i: the boundary of the subcomplex
// X^{i-1} u Y in degree i, and the boundary of the relative pair
// (X, X^{i-1} u Y) in degree i+1 (rows restricted to the complement of Y).
struct SubcomplexMaps {
  IntMatrix sub_boundary;       // boundary(i) restricted to the columns of Y
  IntMatrix relative_boundary;  // boundary(i+1) restricted to rows not in Y
  std::vector<int> relative_cells;
};

inline SubcomplexMaps subcomplex_chain_maps(const ChainComplex& x, const Selection& y) {
  x.check_selection(y);
  Selection rest = complement(x, y);
  SubcomplexMaps maps;
  maps.sub_boundary = x.boundary(y.dim).take_columns(y.indices);
  maps.relative_boundary = x.boundary(y.dim + 1).take_rows(rest.indices);
  maps.relative_cells = rest.indices;
  return maps;
}

}  // namespace hh
