#pragma once

#include "strata/errors.hpp"
#include "strata/field.hpp"

#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// Sparse column vector: entries sorted by row index, no explicit zeros.
struct sparse_entry {
  int row;
  rational val;
  bool operator==(const sparse_entry&) const = default;
};
using sparse_vec = std::vector<sparse_entry>;

// x + c*y, merged
sparse_vec sparse_axpy(const field& f, const sparse_vec& x, const rational& c, const sparse_vec& y);
sparse_vec sparse_scale(const field& f, const rational& c, const sparse_vec& x);
sparse_vec sparse_from_dense(const field& f, const std::vector<rational>& v);
std::vector<rational> sparse_to_dense(const sparse_vec& v, int rows);

// Column-sparse exact matrix over a configured field. Immutable in spirit:
// set()/add_to() are builder helpers used before a matrix is shared.
class matrix {
 public:
  matrix(field f, int rows, int cols);
  static matrix identity(const field& f, int n);
  static matrix from_rows(const field& f, const std::vector<std::vector<rational>>& rows);
  static matrix from_columns(const field& f, int rows, std::vector<sparse_vec> cols);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const field& coeff_field() const { return f_; }

  rational entry(int r, int c) const;
  void set(int r, int c, const rational& v);
  void add_to(int r, int c, const rational& v);
  const sparse_vec& column(int c) const { return cols_[static_cast<std::size_t>(c)]; }
  void set_column(int c, sparse_vec v);

  matrix times(const matrix& other) const;
  std::vector<rational> apply(const std::vector<rational>& x) const;
  matrix plus(const matrix& other) const;
  matrix minus(const matrix& other) const;
  matrix negated() const;
  matrix transposed() const;

  // other copied into this at offset (r0, c0); must fit
  void set_block(int r0, int c0, const matrix& other);
  static matrix hstack(const matrix& a, const matrix& b);
  static matrix vstack(const matrix& a, const matrix& b);

  int rank() const;
  int cokernel_dim() const { return rows_ - rank(); }
  // Columns span the kernel; one column per dependent input column, each with
  // unit coefficient at that column's own index. Deterministic.
  matrix kernel_basis() const;
  // Monic echelon columns spanning the column space, in discovery order.
  matrix image_basis() const;
  // Echelon-form particular solution with free variables at zero;
  // std::nullopt when b is outside the column space.
  std::optional<std::vector<rational>> solve(const std::vector<rational>& b) const;
  // Columnwise solve; nullopt if any column is unsolvable.
  std::optional<matrix> solve_matrix(const matrix& B) const;
  std::optional<matrix> inverse() const;  // nullopt when not square or singular

  bool is_zero() const;
  bool operator==(const matrix& other) const;

  std::vector<std::vector<std::string>> to_row_strings() const;

 private:
  field f_;
  int rows_;
  std::vector<sparse_vec> cols_;
};

// Incremental column echelon with a distinct pivot (topmost nonzero row) per
// stored column. Stored columns are monic. When combo tracking is on, each
// stored column also records its expression over the inserted originals, so
// membership reductions double as solvers.
class column_echelon {
 public:
  column_echelon(field f, int rows, bool track_combos);

  struct reduction {
    sparse_vec remainder;  // v - M*combo for the originals M inserted so far
    sparse_vec combo;      // coefficients over original column ids
  };
  reduction reduce(const sparse_vec& v) const;

  // Insert v tagged as original column `original_id`; returns false when v is
  // dependent (nothing stored). `red` must come from reduce(v).
  bool insert_reduced(const reduction& red, int original_id);
  bool insert(const sparse_vec& v, int original_id);

  int rank() const { return static_cast<int>(cols_.size()); }
  int row_count() const { return rows_; }
  const std::vector<sparse_vec>& columns() const { return cols_; }
  const field& coeff_field() const { return f_; }

 private:
  field f_;
  int rows_;
  bool track_combos_;
  std::vector<sparse_vec> cols_;
  std::vector<sparse_vec> combos_;
  std::map<int, int> pivot_slot_;  // pivot row -> index into cols_
};

}  // namespace strata
