#pragma once

#include <cstddef>
#include <vector>

#include "unital/gf.hpp"

namespace unital {

/// Dense row-major matrix over a Field.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct Nullspace {
  std::size_t rank = 0;
  /// Basis vectors, one per free column in increasing column order.
  std::vector<std::vector<Elem>> basis;
};

/// Reduced row echelon form in place; pivots are taken as the first
/// nonzero entry at or below the current row. Returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);

Nullspace nullspace(const Field& f, Matrix m);

/// True iff u = c v for some nonzero c.
bool proportional(const Field& f, const std::vector<Elem>& u, const std::vector<Elem>& v);

/// True iff v is a linear combination of the given vectors.
bool in_span(const Field& f, const std::vector<std::vector<Elem>>& vectors, const std::vector<Elem>& v);

}  // namespace unital
