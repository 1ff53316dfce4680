#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace quatrec {

// Dense row-major matrix over a single base ring.
class ExactMatrix {
 public:
  ExactMatrix(const BaseRing& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Scalar(ring)) {}

  static ExactMatrix identity(const BaseRing& ring, std::size_t n);
  static ExactMatrix from_columns(const BaseRing& ring, std::size_t rows,
                                  const std::vector<std::vector<Scalar>>& cols);

  const BaseRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&);

 private:
  BaseRing ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  ExactMatrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Reduced row echelon form over a field. Over Q the forward pass runs
// fraction-free (Bareiss) on denominator-cleared integer rows; normalization
// and back-substitution restore exact rational entries at the end. Pivot
// choice is the first non-zero entry scanning down each column, so the result
// (already unique as the RREF) is reached deterministically.
RrefResult rref(const ExactMatrix& m);

// Basis of { x : M x = 0 }, one vector per free column of the RREF,
// in ascending free-column order.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

// One solution of M x = b with free variables set to zero, or nullopt when
// inconsistent. The returned vector is re-verified against M before returning.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& b);

std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& v);

}  // namespace quatrec
