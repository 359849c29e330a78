#include "strata/reeb.hpp"

#include <algorithm>

namespace strata {

namespace {

bool is_cut_level(const cut_complex& C, const rational& t) {
  return std::binary_search(C.cut_levels.begin(), C.cut_levels.end(), t);
}

// Shared by face_map and truncated_reeb so the section space is built once.
linear_map face_map_of(const field& f, const cut_complex& C, const sect_model& sect,
                       slab_end end, int q) {
  const rational& at = end == slab_end::bottom ? sect.lo : sect.hi;
  const rational& half_lo = end == slab_end::bottom ? sect.lo : sect.mid;
  const rational& half_hi = end == slab_end::bottom ? sect.mid : sect.hi;
  homology_space half(f, interlevel(C, half_lo, half_hi), q);
  homology_space end_space(f, fiber(C, at), q);
  linear_map from_mid = induced_map(sect.space, half);
  linear_map end_incl = induced_map(end_space, half);
  try {
    return compose(invert(end_incl), from_mid);
  } catch (const not_invertible& e) {
    throw not_invertible("fiber at " + to_string(at) + " does not carry the homology of the half slab [" +
                             to_string(half_lo) + ", " + to_string(half_hi) + "] in degree " +
                             std::to_string(q),
                         e.rank, e.rows, e.cols);
  }
}

}  // namespace

cut_complex cut_with_midpoints(const simplicial_complex& K) {
  std::vector<rational> levels = K.distinct_heights();
  const std::size_t n = levels.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    levels.push_back(rational((levels[i] + levels[i + 1]) / 2));
  return cut_at_levels(K, levels);
}

sect_model sect_homology(const field& f, const cut_complex& C, const rational& a,
                         const rational& b, int q) {
  if (!(a < b)) throw inverted_interval("slab must run upward");
  const std::vector<rational> criticals = C.origin.distinct_heights();
  if (!std::binary_search(criticals.begin(), criticals.end(), a) ||
      !std::binary_search(criticals.begin(), criticals.end(), b))
    throw missing_critical_level("slab ends must be vertex heights");
  for (const rational& c : criticals)
    if (a < c && c < b)
      throw interval_contains_critical("vertex height " + to_string(c) + " lies inside the slab (" +
                                       to_string(a) + ", " + to_string(b) + ")");
  const rational mid((a + b) / 2);
  if (!is_cut_level(C, mid))
    throw missing_critical_level("slab midpoint " + to_string(mid) + " is not a cut level");
  return {a, b, mid, homology_space(f, fiber(C, mid), q)};
}

linear_map face_map(const field& f, const cut_complex& C, const rational& a, const rational& b,
                    slab_end end, int q) {
  return face_map_of(f, C, sect_homology(f, C, a, b, q), end, q);
}

truncated_reeb_complex truncated_reeb(const field& f, const cut_complex& C, int q) {
  const std::vector<rational> criticals = C.origin.distinct_heights();
  const std::size_t n = criticals.size();

  std::vector<homology_space> fibers;
  for (const rational& c : criticals) fibers.emplace_back(f, fiber(C, c), q);

  std::vector<sect_model> sects;
  std::vector<linear_map> bottoms;
  std::vector<linear_map> tops;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    sect_model sect = sect_homology(f, C, criticals[s], criticals[s + 1], q);
    bottoms.push_back(face_map_of(f, C, sect, slab_end::bottom, q));
    tops.push_back(face_map_of(f, C, sect, slab_end::top, q));
    sects.push_back(std::move(sect));
  }

  std::vector<int> row_off(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) row_off[i + 1] = row_off[i] + fibers[i].dimension();
  std::vector<int> col_off(sects.size() + 1, 0);
  for (std::size_t s = 0; s < sects.size(); ++s)
    col_off[s + 1] = col_off[s] + sects[s].space.dimension();

  matrix d(f, row_off[n], col_off[sects.size()]);
  for (std::size_t s = 0; s < sects.size(); ++s) {
    d.set_block(row_off[s], col_off[s], bottoms[s].mat.negated());
    d.set_block(row_off[s + 1], col_off[s], tops[s].mat);
  }

  return {f, q, criticals, std::move(fibers), std::move(sects),
          std::move(bottoms), std::move(tops), std::move(d)};
}

std::vector<int> homology_of_base(const std::vector<truncated_reeb_complex>& pages) {
  std::vector<int> ranks;
  for (std::size_t q = 0; q < pages.size(); ++q) {
    if (pages[q].degree != static_cast<int>(q))
      throw dimension_mismatch("pages must be ordered by degree starting at 0");
    if (q > 0 && !(pages[q].coeff_field == pages[0].coeff_field))
      throw invalid_field("pages mix coefficient fields");
    ranks.push_back(pages[q].differential.rank());
  }
  std::vector<int> betti;
  for (std::size_t n = 0; n < pages.size(); ++n) {
    int dim = pages[n].differential.rows() - ranks[n];  // cokernel
    if (n > 0) dim += pages[n - 1].differential.cols() - ranks[n - 1];  // kernel below
    betti.push_back(dim);
  }
  return betti;
}

diamond_report verify_diamond(const field& f, const cut_complex& C, const rational& a,
                              const rational& b, int q) {
  sect_model sect = sect_homology(f, C, a, b, q);
  linear_map bottom = face_map_of(f, C, sect, slab_end::bottom, q);
  linear_map top = face_map_of(f, C, sect, slab_end::top, q);

  homology_space fiber_a(f, fiber(C, a), q);
  homology_space fiber_b(f, fiber(C, b), q);
  homology_space slab(f, interlevel(C, a, b), q);

  matrix first = matrix::vstack(bottom.mat.negated(), top.mat);
  matrix second =
      matrix::hstack(induced_map(fiber_a, slab).mat, induced_map(fiber_b, slab).mat);

  diamond_report out{a,
                     b,
                     q,
                     first,
                     second,
                     second.times(first).is_zero(),
                     first.rank(),
                     second.rank(),
                     0,
                     false};
  out.kernel_second = second.cols() - out.rank_second;
  out.exact = out.kernel_second == out.rank_first;
  return out;
}

}  // namespace strata
