#include "strata/homology.hpp"

namespace strata {

homology_space::homology_space(const field& f, simplicial_complex K, int degree)
    : f_(f), degree_(degree), complex_(std::move(K)), reps_(f, 0, 0), expr_(f, 0, true) {
  if (degree < 0 || degree > complex_.dim()) return;  // zero space
  chain_complex chains = make_chain_complex(f_, complex_);
  cells_ = chains.cells[static_cast<std::size_t>(degree)];
  const int n = static_cast<int>(cells_.size());

  const matrix& d_q = chains.boundary[static_cast<std::size_t>(degree)];
  matrix cycles = d_q.kernel_basis();
  cycle_rank_ = cycles.cols();

  expr_ = column_echelon(f_, n, true);
  if (degree + 1 <= chains.top_degree()) {
    const matrix& d_up = chains.boundary[static_cast<std::size_t>(degree + 1)];
    for (int j = 0; j < d_up.cols(); ++j)
      if (expr_.insert(d_up.column(j), boundary_rank_)) ++boundary_rank_;
  }

  std::vector<sparse_vec> rep_cols;
  for (int j = 0; j < cycles.cols(); ++j) {
    auto red = expr_.reduce(cycles.column(j));
    if (red.remainder.empty()) continue;  // class already spanned
    // Insert the monic remainder as its own generator, not via the kernel
    // vector's combo, so express() reports coordinates in this exact basis.
    sparse_vec rep = sparse_scale(f_, f_.inv(red.remainder.front().val), red.remainder);
    const int id = boundary_rank_ + static_cast<int>(rep_cols.size());
    if (!expr_.insert(rep, id))
      throw internal_inconsistency("fresh representative failed to extend the echelon");
    rep_cols.push_back(std::move(rep));
  }
  if (static_cast<int>(rep_cols.size()) != cycle_rank_ - boundary_rank_)
    throw internal_inconsistency("homology dimension disagrees with rank count");
  reps_ = matrix::from_columns(f_, n, std::move(rep_cols));
}

std::vector<rational> homology_space::express(const sparse_vec& cycle) const {
  auto red = expr_.reduce(cycle);
  if (!red.remainder.empty())
    throw internal_inconsistency("vector is not a cycle class over the stored basis");
  std::vector<rational> coords(static_cast<std::size_t>(dimension()), rational(0));
  for (const auto& e : red.combo)
    if (e.row >= boundary_rank_)
      coords[static_cast<std::size_t>(e.row - boundary_rank_)] = e.val;
  return coords;
}

linear_map identity_map(const field& f, int dimension) {
  return {matrix::identity(f, dimension)};
}

linear_map induced_map(const homology_space& src, const homology_space& dst) {
  if (src.coeff_field() != dst.coeff_field()) throw invalid_field("mixed coefficient fields");
  if (src.degree() != dst.degree()) throw dimension_mismatch("induced map across degrees");
  if (!src.complex().is_subcomplex_of(dst.complex()))
    throw not_a_subcomplex("induced map requires an inclusion of complexes");
  matrix out(src.coeff_field(), dst.dimension(), src.dimension());
  for (int j = 0; j < src.dimension(); ++j) {
    sparse_vec moved;
    for (const auto& e : src.representatives().column(j)) {
      const int r = cell_index(dst.cell_basis(), src.cell_basis()[static_cast<std::size_t>(e.row)]);
      if (r < 0) throw internal_inconsistency("source cell missing from target basis");
      moved.push_back({r, e.val});
    }
    std::sort(moved.begin(), moved.end(),
              [](const sparse_entry& a, const sparse_entry& b) { return a.row < b.row; });
    std::vector<rational> coords = dst.express(moved);
    for (int i = 0; i < dst.dimension(); ++i)
      if (coords[static_cast<std::size_t>(i)] != 0) out.set(i, j, coords[static_cast<std::size_t>(i)]);
  }
  return {std::move(out)};
}

linear_map transport_map(const homology_space& src, const homology_space& dst,
                         const std::map<int, int>& vertex_map) {
  if (src.coeff_field() != dst.coeff_field()) throw invalid_field("mixed coefficient fields");
  if (src.degree() != dst.degree()) throw dimension_mismatch("transport across degrees");
  int prev_key = -1;
  int prev_val = -1;
  bool first = true;
  for (const auto& [k, v] : vertex_map) {
    if (!first && (k <= prev_key || v <= prev_val))
      throw invalid_complex("transport relabeling must preserve vertex order");
    prev_key = k;
    prev_val = v;
    first = false;
  }
  if (src.complex().relabeled(vertex_map).simplices() != dst.complex().simplices())
    throw invalid_complex("transport relabeling is not an isomorphism onto the target");
  // Order preservation keeps lexicographic cell order, so cell indices match.
  matrix out(src.coeff_field(), dst.dimension(), src.dimension());
  for (int j = 0; j < src.dimension(); ++j) {
    std::vector<rational> coords = dst.express(src.representatives().column(j));
    for (int i = 0; i < dst.dimension(); ++i)
      if (coords[static_cast<std::size_t>(i)] != 0) out.set(i, j, coords[static_cast<std::size_t>(i)]);
  }
  return {std::move(out)};
}

linear_map compose(const linear_map& g, const linear_map& f) {
  return {g.mat.times(f.mat)};
}

linear_map invert(const linear_map& m) {
  if (m.mat.rows() != m.mat.cols())
    throw not_invertible("map between spaces of different dimensions", m.mat.rank(), m.mat.rows(),
                         m.mat.cols());
  auto inv = m.mat.inverse();
  if (!inv.has_value())
    throw not_invertible("map has a nontrivial kernel", m.mat.rank(), m.mat.rows(), m.mat.cols());
  return {std::move(*inv)};
}

std::vector<int> homology_dimensions(const field& f, const simplicial_complex& K, int max_degree) {
  std::vector<int> dims;
  chain_complex chains = make_chain_complex(f, K);
  std::vector<int> ranks(static_cast<std::size_t>(chains.top_degree()) + 2, 0);
  for (int q = 0; q <= chains.top_degree(); ++q)
    ranks[static_cast<std::size_t>(q)] = chains.boundary[static_cast<std::size_t>(q)].rank();
  for (int q = 0; q <= max_degree; ++q) {
    if (q > chains.top_degree()) {
      dims.push_back(0);
      continue;
    }
    const int kernel = chains.cell_count(q) - ranks[static_cast<std::size_t>(q)];
    const int image = q + 1 <= chains.top_degree() ? ranks[static_cast<std::size_t>(q + 1)] : 0;
    dims.push_back(kernel - image);
  }
  return dims;
}

}  // namespace strata
