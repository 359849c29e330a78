#include "strata/zigzag.hpp"

#include <algorithm>
#include <string>

namespace strata {

interval_cover interval_cover::make(std::vector<interval> intervals) {
  if (intervals.empty()) throw cover_invalid("a cover needs at least one interval");
  for (const auto& iv : intervals)
    if (!(iv.lo < iv.hi)) throw cover_invalid("intervals must be nonempty and open");
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
    if (!(intervals[k].lo < intervals[k + 1].lo) || !(intervals[k].hi < intervals[k + 1].hi))
      throw cover_invalid("intervals must be strictly sorted");
    if (!(intervals[k + 1].lo < intervals[k].hi))
      throw cover_invalid("consecutive intervals must overlap");
  }
  for (std::size_t k = 0; k + 2 < intervals.size(); ++k)
    if (intervals[k + 2].lo < intervals[k].hi)
      throw cover_invalid("non-consecutive intervals must be disjoint");
  interval_cover out;
  out.intervals_ = std::move(intervals);
  return out;
}

interval_cover canonical_cover(const std::vector<rational>& criticals) {
  if (criticals.empty()) throw cover_invalid("no critical values to cover");
  for (std::size_t k = 0; k + 1 < criticals.size(); ++k)
    if (!(criticals[k] < criticals[k + 1])) throw cover_invalid("critical values must strictly increase");
  const std::size_t n = criticals.size();
  if (n == 1) return interval_cover::make({{criticals[0] - 1, criticals[0] + 1}});
  rational gap = criticals[1] - criticals[0];
  for (std::size_t k = 1; k + 1 < n; ++k)
    gap = std::min(gap, rational(criticals[k + 1] - criticals[k]));
  const rational delta = gap / 4;
  std::vector<interval> ivs;
  for (std::size_t k = 0; k <= n; ++k) {
    const rational lo = (k == 0 ? criticals[0] - 4 * delta : criticals[k - 1]) - delta;
    const rational hi = (k == n ? criticals[n - 1] + 4 * delta : criticals[k]) + delta;
    ivs.push_back({lo, hi});
  }
  return interval_cover::make(std::move(ivs));
}

levelset_module levelset_zigzag(const field& f, const cut_complex& C, const interval_cover& cover,
                                int q) {
  const std::vector<rational> criticals = C.origin.distinct_heights();
  const auto& ivs = cover.intervals();

  if (cover.size() == 1) {
    for (const rational& c : criticals)
      if (!(ivs[0].lo < c && c < ivs[0].hi))
        throw cover_invalid("single cover interval must contain every vertex height");
    levelset_module out{{f, q, {}, {}}, {}, criticals};
    out.spaces.emplace_back(f, C.complex, q);
    out.module.dims.push_back(out.spaces[0].dimension());
    return out;
  }

  const std::size_t n = criticals.size();
  if (static_cast<std::size_t>(cover.size()) != n + 1)
    throw cover_invalid("cover must have one more interval than critical values");
  for (std::size_t k = 0; k < n; ++k) {
    const rational& olo = ivs[k + 1].lo;
    const rational& ohi = ivs[k].hi;
    if (!(olo < criticals[k] && criticals[k] < ohi))
      throw cover_invalid("overlap does not contain its critical value");
    for (std::size_t l = 0; l < n; ++l)
      if (l != k && olo < criticals[l] && criticals[l] < ohi)
        throw cover_invalid("overlap contains more than one critical value");
  }
  for (const rational& c : criticals)
    if (!std::binary_search(C.cut_levels.begin(), C.cut_levels.end(), c))
      throw missing_critical_level("critical value " + to_string(c) + " is not a cut level");

  levelset_module out{{f, q, {}, {}}, {}, criticals};
  // Positions 2k are slabs [c_k, c_{k+1}] with the ends clamped to
  // [c_1, c_1] and [c_n, c_n]; positions 2k-1 are the fibers at c_k.
  for (std::size_t pos = 0; pos < 2 * n + 1; ++pos) {
    if (pos % 2 == 1) {
      out.spaces.emplace_back(f, fiber(C, criticals[pos / 2]), q);
    } else {
      const std::size_t k = pos / 2;
      const rational lo = criticals[k == 0 ? 0 : k - 1];
      const rational hi = criticals[k == n ? n - 1 : k];
      out.spaces.emplace_back(f, interlevel(C, lo, hi), q);
    }
  }
  for (const auto& s : out.spaces) out.module.dims.push_back(s.dimension());
  for (std::size_t k = 1; k <= n; ++k) {
    out.module.arrows.push_back({induced_map(out.spaces[2 * k - 1], out.spaces[2 * k - 2]), false});
    out.module.arrows.push_back({induced_map(out.spaces[2 * k - 1], out.spaces[2 * k]), true});
  }
  return out;
}

namespace {

// Rows [0, split) of m, and rows [split, rows) shifted down to start at 0.
std::pair<matrix, matrix> split_rows(const matrix& m, int split) {
  const field& f = m.coeff_field();
  std::vector<sparse_vec> top_cols;
  std::vector<sparse_vec> bot_cols;
  for (int j = 0; j < m.cols(); ++j) {
    sparse_vec top;
    sparse_vec bot;
    for (const auto& e : m.column(j)) {
      if (e.row < split) top.push_back(e);
      else bot.push_back({e.row - split, e.val});
    }
    top_cols.push_back(std::move(top));
    bot_cols.push_back(std::move(bot));
  }
  return {matrix::from_columns(f, split, std::move(top_cols)),
          matrix::from_columns(f, m.rows() - split, std::move(bot_cols))};
}

}  // namespace

int generalized_rank(const zigzag_module& Z, int lo, int hi) {
  if (lo < 0 || hi >= Z.length() || lo > hi) throw dimension_mismatch("bad zigzag index range");
  const field& f = Z.coeff_field;
  if (lo == hi) return Z.dims[static_cast<std::size_t>(lo)];

  // Limit sweep: maintain a presentation P with projections L into V_lo and
  // T into the current position k. Forward arrows push T ahead; backward
  // arrows a: V_{k+1} -> V_k refine P to pairs (x, w) with T x = a w.
  matrix L = matrix::identity(f, Z.dims[static_cast<std::size_t>(lo)]);
  matrix T = L;
  for (int k = lo; k < hi; ++k) {
    const zigzag_arrow& a = Z.arrows[static_cast<std::size_t>(k)];
    if (a.forward) {
      T = a.map.mat.times(T);
    } else {
      matrix rel = matrix::hstack(T, a.map.mat.negated());
      matrix K = rel.kernel_basis();
      auto [k_top, k_bot] = split_rows(K, T.cols());
      L = L.times(k_top);
      T = k_bot;
    }
  }

  // Colimit presentation: one relation block per arrow on the direct sum of
  // the V_k; the canonical map factors through any projection, so use V_lo.
  std::vector<int> offset(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int k = lo; k < hi; ++k)
    offset[static_cast<std::size_t>(k - lo + 1)] =
        offset[static_cast<std::size_t>(k - lo)] + Z.dims[static_cast<std::size_t>(k)];
  const int total = offset.back() + Z.dims[static_cast<std::size_t>(hi)];

  int rel_cols = 0;
  for (int k = lo; k < hi; ++k) {
    const zigzag_arrow& a = Z.arrows[static_cast<std::size_t>(k)];
    rel_cols += a.forward ? Z.dims[static_cast<std::size_t>(k)] : Z.dims[static_cast<std::size_t>(k + 1)];
  }
  matrix rel(f, total, rel_cols);
  int col = 0;
  const rational one = f.from_int(1);
  for (int k = lo; k < hi; ++k) {
    const zigzag_arrow& a = Z.arrows[static_cast<std::size_t>(k)];
    const int src_off = offset[static_cast<std::size_t>((a.forward ? k : k + 1) - lo)];
    const int dst_off = offset[static_cast<std::size_t>((a.forward ? k + 1 : k) - lo)];
    const int src_dim = a.forward ? Z.dims[static_cast<std::size_t>(k)] : Z.dims[static_cast<std::size_t>(k + 1)];
    for (int j = 0; j < src_dim; ++j) {
      rel.set(src_off + j, col, one);
      for (const auto& e : a.map.mat.column(j)) rel.add_to(dst_off + e.row, col, f.neg(e.val));
      ++col;
    }
  }

  matrix phi(f, total, L.cols());
  phi.set_block(0, 0, L);
  return matrix::hstack(rel, phi).rank() - rel.rank();
}

barcode barcode_of(const zigzag_module& Z) {
  barcode out{Z.degree, {}};
  const int m = Z.length();
  if (m == 0) return out;

  std::vector<std::vector<int>> r(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = generalized_rank(Z, i, j);

  auto rank_at = [&](int i, int j) {
    if (i < 0 || j > m - 1) return 0;
    return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  std::vector<int> covered(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const int mult = rank_at(i, j) - rank_at(i - 1, j) - rank_at(i, j + 1) + rank_at(i - 1, j + 1);
      if (mult < 0) throw internal_inconsistency("negative interval multiplicity");
      if (mult == 0) continue;
      out.bars.push_back({i, j, mult});
      for (int k = i; k <= j; ++k) covered[static_cast<std::size_t>(k)] += mult;
    }
  for (int i = 0; i < m; ++i)
    if (covered[static_cast<std::size_t>(i)] != Z.dims[static_cast<std::size_t>(i)])
      throw internal_inconsistency("barcode violates the dimension law");
  return out;
}

persistence_maps to_persistence(const zigzag_module& Z) {
  persistence_maps out;
  const std::size_t m = Z.dims.size();
  bool all_forward = true;
  for (const auto& a : Z.arrows)
    if (!a.forward) all_forward = false;

  if (all_forward) {
    out.dims = Z.dims;
    for (const auto& a : Z.arrows) out.maps.push_back(a.map);
    return out;
  }

  if (m % 2 == 0) throw internal_inconsistency("alternating zigzag must have odd length");
  for (std::size_t a = 0; a < Z.arrows.size(); ++a)
    if (Z.arrows[a].forward != (a % 2 == 1))
      throw internal_inconsistency("zigzag arrows are neither all forward nor alternating");

  for (std::size_t k = 0; k < m; k += 2) out.dims.push_back(Z.dims[k]);
  for (std::size_t k = 0; k + 2 < m; k += 2) {
    const zigzag_arrow& back = Z.arrows[k];
    const zigzag_arrow& fwd = Z.arrows[k + 1];
    try {
      out.maps.push_back(compose(fwd.map, invert(back.map)));
    } catch (const not_invertible& e) {
      throw not_invertible("backward arrow at position " + std::to_string(k) + ": " + e.what(),
                           e.rank, e.rows, e.cols);
    }
  }
  return out;
}

}  // namespace strata
