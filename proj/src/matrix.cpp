#include "strata/matrix.hpp"

#include <algorithm>

namespace strata {

sparse_vec sparse_axpy(const field& f, const sparse_vec& x, const rational& c, const sparse_vec& y) {
  if (f.is_zero(c)) return x;
  sparse_vec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      out.push_back(x[i]);
      ++i;
    } else if (i == x.size() || y[j].row < x[i].row) {
      out.push_back({y[j].row, f.mul(c, y[j].val)});
      ++j;
    } else {
      rational v = f.add(x[i].val, f.mul(c, y[j].val));
      if (!f.is_zero(v)) out.push_back({x[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

sparse_vec sparse_scale(const field& f, const rational& c, const sparse_vec& x) {
  if (f.is_zero(c)) return {};
  sparse_vec out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.row, f.mul(c, e.val)});
  return out;
}

sparse_vec sparse_from_dense(const field& f, const std::vector<rational>& v) {
  sparse_vec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rational n = f.normalize(v[i]);
    if (n != 0) out.push_back({static_cast<int>(i), std::move(n)});
  }
  return out;
}

std::vector<rational> sparse_to_dense(const sparse_vec& v, int rows) {
  std::vector<rational> out(static_cast<std::size_t>(rows), rational(0));
  for (const auto& e : v) {
    if (e.row < 0 || e.row >= rows) throw dimension_mismatch("sparse entry outside dense range");
    out[static_cast<std::size_t>(e.row)] = e.val;
  }
  return out;
}

matrix::matrix(field f, int rows, int cols) : f_(f), rows_(rows) {
  if (rows < 0 || cols < 0) throw dimension_mismatch("matrix dimensions must be nonnegative");
  cols_.resize(static_cast<std::size_t>(cols));
}

matrix matrix::identity(const field& f, int n) {
  matrix m(f, n, n);
  const rational one = f.from_int(1);
  for (int i = 0; i < n; ++i) m.cols_[static_cast<std::size_t>(i)] = {{i, one}};
  return m;
}

matrix matrix::from_rows(const field& f, const std::vector<std::vector<rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw dimension_mismatch("ragged row list");
    for (int j = 0; j < c; ++j) {
      rational v = f.normalize(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (v != 0) m.cols_[static_cast<std::size_t>(j)].push_back({i, std::move(v)});
    }
  }
  return m;
}

matrix matrix::from_columns(const field& f, int rows, std::vector<sparse_vec> cols) {
  matrix m(f, rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    sparse_vec clean;
    int prev = -1;
    for (auto& e : cols[j]) {
      if (e.row <= prev || e.row >= rows) throw dimension_mismatch("malformed sparse column");
      prev = e.row;
      rational v = f.normalize(e.val);
      if (v != 0) clean.push_back({e.row, std::move(v)});
    }
    m.cols_[j] = std::move(clean);
  }
  return m;
}

rational matrix::entry(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols()) throw dimension_mismatch("entry outside matrix");
  const sparse_vec& col = cols_[static_cast<std::size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const sparse_entry& e, int row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->val;
  return rational(0);
}

void matrix::set(int r, int c, const rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols()) throw dimension_mismatch("entry outside matrix");
  sparse_vec& col = cols_[static_cast<std::size_t>(c)];
  rational n = f_.normalize(v);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const sparse_entry& e, int row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    if (n == 0) col.erase(it);
    else it->val = std::move(n);
  } else if (n != 0) {
    col.insert(it, {r, std::move(n)});
  }
}

void matrix::add_to(int r, int c, const rational& v) { set(r, c, f_.add(entry(r, c), v)); }

void matrix::set_column(int c, sparse_vec v) {
  if (c < 0 || c >= cols()) throw dimension_mismatch("column outside matrix");
  int prev = -1;
  sparse_vec clean;
  for (auto& e : v) {
    if (e.row <= prev || e.row >= rows_) throw dimension_mismatch("malformed sparse column");
    prev = e.row;
    rational n = f_.normalize(e.val);
    if (n != 0) clean.push_back({e.row, std::move(n)});
  }
  cols_[static_cast<std::size_t>(c)] = std::move(clean);
}

matrix matrix::times(const matrix& other) const {
  if (f_ != other.f_) throw invalid_field("mixed coefficient fields");
  if (cols() != other.rows_) throw dimension_mismatch("inner dimensions differ");
  matrix out(f_, rows_, other.cols());
  for (int j = 0; j < other.cols(); ++j) {
    sparse_vec acc;
    for (const auto& e : other.cols_[static_cast<std::size_t>(j)])
      acc = sparse_axpy(f_, acc, e.val, cols_[static_cast<std::size_t>(e.row)]);
    out.cols_[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return out;
}

std::vector<rational> matrix::apply(const std::vector<rational>& x) const {
  if (static_cast<int>(x.size()) != cols()) throw dimension_mismatch("vector length differs from column count");
  sparse_vec acc;
  for (int j = 0; j < cols(); ++j) {
    rational c = f_.normalize(x[static_cast<std::size_t>(j)]);
    if (c != 0) acc = sparse_axpy(f_, acc, c, cols_[static_cast<std::size_t>(j)]);
  }
  return sparse_to_dense(acc, rows_);
}

matrix matrix::plus(const matrix& other) const {
  if (f_ != other.f_) throw invalid_field("mixed coefficient fields");
  if (rows_ != other.rows_ || cols() != other.cols()) throw dimension_mismatch("shape mismatch in sum");
  matrix out(f_, rows_, cols());
  const rational one = f_.from_int(1);
  for (int j = 0; j < cols(); ++j)
    out.cols_[static_cast<std::size_t>(j)] =
        sparse_axpy(f_, cols_[static_cast<std::size_t>(j)], one, other.cols_[static_cast<std::size_t>(j)]);
  return out;
}

matrix matrix::minus(const matrix& other) const {
  if (f_ != other.f_) throw invalid_field("mixed coefficient fields");
  if (rows_ != other.rows_ || cols() != other.cols()) throw dimension_mismatch("shape mismatch in difference");
  matrix out(f_, rows_, cols());
  const rational neg_one = f_.from_int(-1);
  for (int j = 0; j < cols(); ++j)
    out.cols_[static_cast<std::size_t>(j)] =
        sparse_axpy(f_, cols_[static_cast<std::size_t>(j)], neg_one, other.cols_[static_cast<std::size_t>(j)]);
  return out;
}

matrix matrix::negated() const {
  matrix out(f_, rows_, cols());
  for (int j = 0; j < cols(); ++j) {
    sparse_vec col = cols_[static_cast<std::size_t>(j)];
    for (auto& e : col) e.val = f_.neg(e.val);
    out.cols_[static_cast<std::size_t>(j)] = std::move(col);
  }
  return out;
}

matrix matrix::transposed() const {
  matrix out(f_, cols(), rows_);
  for (int c = 0; c < cols(); ++c)
    for (const auto& e : cols_[static_cast<std::size_t>(c)])
      out.cols_[static_cast<std::size_t>(e.row)].push_back({c, e.val});
  return out;
}

void matrix::set_block(int r0, int c0, const matrix& other) {
  if (f_ != other.f_) throw invalid_field("mixed coefficient fields");
  if (r0 < 0 || c0 < 0 || r0 + other.rows_ > rows_ || c0 + other.cols() > cols())
    throw dimension_mismatch("block outside matrix");
  for (int c = 0; c < other.cols(); ++c) {
    const sparse_vec& src = other.cols_[static_cast<std::size_t>(c)];
    sparse_vec& dst = cols_[static_cast<std::size_t>(c0 + c)];
    sparse_vec merged;
    std::size_t i = 0;
    while (i < dst.size() && dst[i].row < r0) merged.push_back(dst[i++]);
    for (const auto& e : src) merged.push_back({r0 + e.row, e.val});
    while (i < dst.size() && dst[i].row < r0 + other.rows_) ++i;
    while (i < dst.size()) merged.push_back(dst[i++]);
    dst = std::move(merged);
  }
}

matrix matrix::hstack(const matrix& a, const matrix& b) {
  if (a.f_ != b.f_) throw invalid_field("mixed coefficient fields");
  if (a.rows_ != b.rows_) throw dimension_mismatch("row counts differ in horizontal stack");
  matrix out(a.f_, a.rows_, a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) out.cols_[static_cast<std::size_t>(j)] = a.cols_[static_cast<std::size_t>(j)];
  for (int j = 0; j < b.cols(); ++j)
    out.cols_[static_cast<std::size_t>(a.cols() + j)] = b.cols_[static_cast<std::size_t>(j)];
  return out;
}

matrix matrix::vstack(const matrix& a, const matrix& b) {
  if (a.f_ != b.f_) throw invalid_field("mixed coefficient fields");
  if (a.cols() != b.cols()) throw dimension_mismatch("column counts differ in vertical stack");
  matrix out(a.f_, a.rows_ + b.rows_, a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    sparse_vec col = a.cols_[static_cast<std::size_t>(j)];
    for (const auto& e : b.cols_[static_cast<std::size_t>(j)]) col.push_back({a.rows_ + e.row, e.val});
    out.cols_[static_cast<std::size_t>(j)] = std::move(col);
  }
  return out;
}

int matrix::rank() const {
  column_echelon ech(f_, rows_, false);
  for (int j = 0; j < cols(); ++j) ech.insert(cols_[static_cast<std::size_t>(j)], j);
  return ech.rank();
}

matrix matrix::kernel_basis() const {
  column_echelon ech(f_, rows_, true);
  std::vector<sparse_vec> kernel_cols;
  const rational one = f_.from_int(1);
  const rational neg_one = f_.from_int(-1);
  for (int j = 0; j < cols(); ++j) {
    auto red = ech.reduce(cols_[static_cast<std::size_t>(j)]);
    if (red.remainder.empty()) {
      sparse_vec ej = {{j, one}};
      kernel_cols.push_back(sparse_axpy(f_, ej, neg_one, red.combo));
    } else {
      ech.insert_reduced(red, j);
    }
  }
  return from_columns(f_, cols(), std::move(kernel_cols));
}

matrix matrix::image_basis() const {
  column_echelon ech(f_, rows_, false);
  for (int j = 0; j < cols(); ++j) ech.insert(cols_[static_cast<std::size_t>(j)], j);
  return from_columns(f_, rows_, ech.columns());
}

std::optional<std::vector<rational>> matrix::solve(const std::vector<rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw dimension_mismatch("right-hand side length differs from row count");
  column_echelon ech(f_, rows_, true);
  for (int j = 0; j < cols(); ++j) ech.insert(cols_[static_cast<std::size_t>(j)], j);
  auto red = ech.reduce(sparse_from_dense(f_, b));
  if (!red.remainder.empty()) return std::nullopt;
  return sparse_to_dense(red.combo, cols());
}

std::optional<matrix> matrix::solve_matrix(const matrix& B) const {
  if (f_ != B.f_) throw invalid_field("mixed coefficient fields");
  if (B.rows_ != rows_) throw dimension_mismatch("row counts differ in solve");
  column_echelon ech(f_, rows_, true);
  for (int j = 0; j < cols(); ++j) ech.insert(cols_[static_cast<std::size_t>(j)], j);
  std::vector<sparse_vec> sol;
  for (int j = 0; j < B.cols(); ++j) {
    auto red = ech.reduce(B.cols_[static_cast<std::size_t>(j)]);
    if (!red.remainder.empty()) return std::nullopt;
    sol.push_back(std::move(red.combo));
  }
  return from_columns(f_, cols(), std::move(sol));
}

std::optional<matrix> matrix::inverse() const {
  if (rows_ != cols()) return std::nullopt;
  return solve_matrix(identity(f_, rows_));
}

bool matrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool matrix::operator==(const matrix& other) const {
  return f_ == other.f_ && rows_ == other.rows_ && cols_ == other.cols_;
}

std::vector<std::vector<std::string>> matrix::to_row_strings() const {
  std::vector<std::vector<std::string>> out(
      static_cast<std::size_t>(rows_),
      std::vector<std::string>(static_cast<std::size_t>(cols()), "0"));
  for (int c = 0; c < cols(); ++c)
    for (const auto& e : cols_[static_cast<std::size_t>(c)])
      out[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(c)] = to_string(e.val);
  return out;
}

column_echelon::column_echelon(field f, int rows, bool track_combos)
    : f_(f), rows_(rows), track_combos_(track_combos) {
  if (rows < 0) throw dimension_mismatch("echelon row count must be nonnegative");
}

column_echelon::reduction column_echelon::reduce(const sparse_vec& v) const {
  reduction red{v, {}};
  while (!red.remainder.empty()) {
    auto it = pivot_slot_.find(red.remainder.front().row);
    if (it == pivot_slot_.end()) break;
    const std::size_t slot = static_cast<std::size_t>(it->second);
    const rational coeff = red.remainder.front().val;
    red.remainder = sparse_axpy(f_, red.remainder, f_.neg(coeff), cols_[slot]);
    if (track_combos_) red.combo = sparse_axpy(f_, red.combo, coeff, combos_[slot]);
  }
  return red;
}

bool column_echelon::insert_reduced(const reduction& red, int original_id) {
  if (red.remainder.empty()) return false;
  if (red.remainder.front().row >= rows_) throw dimension_mismatch("column longer than echelon rows");
  const rational lead_inv = f_.inv(red.remainder.front().val);
  sparse_vec monic = sparse_scale(f_, lead_inv, red.remainder);
  if (track_combos_) {
    if (original_id < 0) throw internal_inconsistency("echelon original ids must be nonnegative");
    sparse_vec expr = {{original_id, f_.from_int(1)}};
    expr = sparse_axpy(f_, expr, f_.from_int(-1), red.combo);
    combos_.push_back(sparse_scale(f_, lead_inv, expr));
  }
  pivot_slot_[monic.front().row] = static_cast<int>(cols_.size());
  cols_.push_back(std::move(monic));
  return true;
}

bool column_echelon::insert(const sparse_vec& v, int original_id) {
  return insert_reduced(reduce(v), original_id);
}

}  // namespace strata
