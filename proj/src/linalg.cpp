#include "cohsup/linalg.hpp"

#include <algorithm>

namespace cohsup {

matrix::matrix(const field_spec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, scalar::zero(f)) {}

matrix matrix::from_rows(const field_spec& f, std::size_t cols,
                         const std::vector<std::vector<scalar>>& rows) {
  matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ambient_mismatch{};
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != f) throw field_mismatch{};
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<scalar> matrix::row(std::size_t r) const {
  std::vector<scalar> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

rref_result rref(const matrix& input) {
  matrix m = input;
  const std::size_t nr = m.rows(), nc = m.cols();
  const bool rational = m.field().kind == field_kind::rationals;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;

  auto nnz = [&](std::size_t row) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc; ++c)
      if (!m.at(row, c).is_zero()) ++k;
    return k;
  };

  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    std::size_t best = nr;
    std::size_t best_nnz = 0;
    for (std::size_t i = r; i < nr; ++i) {
      if (m.at(i, col).is_zero()) continue;
      if (!rational) {
        best = i;
        break;
      }
      std::size_t k = nnz(i);
      if (best == nr || k < best_nnz) {
        best = i;
        best_nnz = k;
      }
    }
    if (best == nr) continue;
    if (best != r)
      for (std::size_t c = 0; c < nc; ++c) std::swap(m.at(r, c), m.at(best, c));

    const scalar inv = m.at(r, col).inverse();
    for (std::size_t c = col; c < nc; ++c) m.at(r, c) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      const scalar factor = m.at(i, col);
      for (std::size_t c = col; c < nc; ++c) m.at(i, c) -= factor * m.at(r, c);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  return {std::move(m), pivot_cols.size(), std::move(pivot_cols)};
}

subspace kernel(const matrix& m) {
  const auto rr = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<scalar>> vecs;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<scalar> v(nc, scalar::zero(m.field()));
    v[free] = scalar::one(m.field());
    for (std::size_t i = 0; i < rr.rank; ++i)
      v[rr.pivot_cols[i]] = -rr.reduced.at(i, free);
    vecs.push_back(std::move(v));
  }
  return subspace::from_span(m.field(), nc, vecs);
}

subspace subspace::zero(const field_spec& f, std::size_t ambient) {
  subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  return s;
}

subspace subspace::full(const field_spec& f, std::size_t ambient) {
  subspace s = zero(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<scalar> e(ambient, scalar::zero(f));
    e[i] = scalar::one(f);
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

subspace subspace::from_span(const field_spec& f, std::size_t ambient,
                             const std::vector<std::vector<scalar>>& vecs) {
  const auto rr = rref(matrix::from_rows(f, ambient, vecs));
  subspace s = zero(f, ambient);
  for (std::size_t i = 0; i < rr.rank; ++i) s.rows_.push_back(rr.reduced.row(i));
  s.pivots_ = rr.pivot_cols;
  return s;
}

std::vector<scalar> subspace::reduce(std::vector<scalar> v) const {
  if (v.size() != ambient_) throw ambient_mismatch{};
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const scalar& factor = v[pivots_[i]];
    if (factor.is_zero()) continue;
    const scalar f = factor;  // copy: v[pivots_[i]] mutates below
    for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * rows_[i][c];
  }
  return v;
}

bool subspace::contains(const std::vector<scalar>& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const scalar& c) { return c.is_zero(); });
}

bool subspace::contains(const subspace& other) const {
  if (other.ambient_ != ambient_) throw ambient_mismatch{};
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const std::vector<scalar>& v) { return contains(v); });
}

bool subspace::operator==(const subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && rows_ == o.rows_;
}

subspace annihilator(const subspace& u) {
  if (u.dim() == 0) return subspace::full(u.field(), u.ambient());
  return kernel(matrix::from_rows(u.field(), u.ambient(), u.basis()));
}

subspace intersect(const subspace& u, const subspace& v) {
  if (u.ambient() != v.ambient()) throw ambient_mismatch{};
  if (u.field() != v.field()) throw field_mismatch{};
  // stack the annihilator constraints of both sides
  const subspace au = annihilator(u), av = annihilator(v);
  std::vector<std::vector<scalar>> constraints;
  for (const auto& row : au.basis()) constraints.push_back(row);
  for (const auto& row : av.basis()) constraints.push_back(row);
  if (constraints.empty()) return subspace::full(u.field(), u.ambient());
  return kernel(matrix::from_rows(u.field(), u.ambient(), constraints));
}

subspace restrict_to_coordinates(const subspace& u, const std::vector<std::size_t>& coords) {
  std::vector<bool> keep(u.ambient(), false);
  for (std::size_t c : coords) {
    if (c >= u.ambient()) throw ambient_mismatch{};
    keep[c] = true;
  }
  const subspace au = annihilator(u);
  std::vector<std::vector<scalar>> constraints;
  for (const auto& row : au.basis()) constraints.push_back(row);
  for (std::size_t i = 0; i < u.ambient(); ++i) {
    if (keep[i]) continue;
    std::vector<scalar> e(u.ambient(), scalar::zero(u.field()));
    e[i] = scalar::one(u.field());
    constraints.push_back(std::move(e));
  }
  if (constraints.empty()) return subspace::full(u.field(), u.ambient());
  return kernel(matrix::from_rows(u.field(), u.ambient(), constraints));
}

}  // namespace cohsup
