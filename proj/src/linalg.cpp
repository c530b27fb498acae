#include "unital/linalg.hpp"

#include <utility>

namespace unital {

std::vector<std::size_t> row_reduce(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == f.zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    const Elem s = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), s);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == f.zero()) continue;
      const Elem factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Nullspace nullspace(const Field& f, Matrix m) {
  const auto pivots = row_reduce(f, m);
  Nullspace out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool proportional(const Field& f, const std::vector<Elem>& u, const std::vector<Elem>& v) {
  if (u.size() != v.size()) return false;
  std::size_t k = 0;
  while (k < u.size() && u[k] == f.zero() && v[k] == f.zero()) ++k;
  if (k == u.size() || u[k] == f.zero() || v[k] == f.zero()) return false;
  const Elem c = f.div(u[k], v[k]);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != f.mul(c, v[i])) return false;
  return true;
}

bool in_span(const Field& f, const std::vector<std::vector<Elem>>& vectors, const std::vector<Elem>& v) {
  const std::size_t n = v.size();
  Matrix without(vectors.size(), n);
  Matrix with(vectors.size() + 1, n);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) without.at(r, c) = with.at(r, c) = vectors[r].at(c);
  for (std::size_t c = 0; c < n; ++c) with.at(vectors.size(), c) = v[c];
  return row_reduce(f, without).size() == row_reduce(f, with).size();
}

}  // namespace unital
