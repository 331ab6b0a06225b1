#pragma once

#include <cstddef>
#include <vector>

#include "cohsup/scalar.hpp"

namespace cohsup {

class matrix {
 public:
  matrix(const field_spec& f, std::size_t rows, std::size_t cols);
  static matrix from_rows(const field_spec& f, std::size_t cols,
                          const std::vector<std::vector<scalar>>& rows);

  scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const field_spec& field() const { return field_; }
  std::vector<scalar> row(std::size_t r) const;

 private:
  field_spec field_;
  std::size_t rows_, cols_;
  std::vector<scalar> data_;
};

struct rref_result {
  matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan; over the rationals the pivot row is chosen with the fewest
// nonzero entries to limit coefficient growth (result is the unique RREF)
rref_result rref(const matrix& m);

class subspace;

// right null space {v : m v = 0}, canonical
subspace kernel(const matrix& m);

// stored as the reduced row echelon basis, so equality is memberwise
class subspace {
 public:
  subspace() = default;
  static subspace zero(const field_spec& f, std::size_t ambient);
  static subspace full(const field_spec& f, std::size_t ambient);
  static subspace from_span(const field_spec& f, std::size_t ambient,
                            const std::vector<std::vector<scalar>>& vecs);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const field_spec& field() const { return field_; }
  const std::vector<std::vector<scalar>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<scalar>& v) const;
  bool contains(const subspace& other) const;
  // v minus its projection onto the span along pivot coordinates; zero iff contained
  std::vector<scalar> reduce(std::vector<scalar> v) const;

  bool operator==(const subspace& o) const;
  bool operator!=(const subspace& o) const { return !(*this == o); }

 private:
  field_spec field_{};
  std::size_t ambient_ = 0;
  std::vector<std::vector<scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

subspace intersect(const subspace& u, const subspace& v);
// {w : w . u = 0 for all u in the subspace} under the standard bilinear form
subspace annihilator(const subspace& u);
// u ∩ span{e_i : i in coords}; coords are 0-based, duplicates ignored
subspace restrict_to_coordinates(const subspace& u, const std::vector<std::size_t>& coords);

}  // namespace cohsup
