#pragma once

#include <cstddef>
#include <vector>

#include "knotcert/laurent.hpp"

namespace knotcert {

/// Dense matrix over Q[t, t^-1].  Presents modules as coker(columns -> rows).
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static PolyMatrix diagonal(const std::vector<LaurentPoly>& entries);
  // Block-diagonal juxtaposition.
  PolyMatrix direct_sum_with(const PolyMatrix& other) const;

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<LaurentPoly> a_;
};

}  // namespace knotcert
