#pragma once

#include "strata/cut.hpp"
#include "strata/homology.hpp"

#include <vector>

namespace strata {

// Homology of the space of sections over one slab between adjacent critical
// levels, modeled by the fiber at the slab midpoint.
struct sect_model {
  rational lo;
  rational hi;
  rational mid;  // exactly (lo + hi) / 2
  homology_space space;
};

enum class slab_end { bottom, top };

// Degree-q fiber homology at every critical level, section homology over
// every slab, endpoint evaluation maps, and the assembled critical
// differential from sections into fibers.
struct truncated_reeb_complex {
  field coeff_field;
  int degree;
  std::vector<rational> critical_levels;
  std::vector<homology_space> fiber_spaces;  // one per critical level
  std::vector<sect_model> sect_spaces;       // one per adjacent pair
  std::vector<linear_map> face_bottom;       // evaluation at the slab's lower end
  std::vector<linear_map> face_top;          // evaluation at the upper end
  // Block column s holds face_top[s] at row block s+1 and -face_bottom[s] at
  // row block s; rows sum fiber dimensions, columns sum section dimensions.
  matrix differential;
};

// Subdivide at every vertex height and at the midpoint of every adjacent
// pair, which is exactly what section models and face maps require.
cut_complex cut_with_midpoints(const simplicial_complex& K);

// a and b must be adjacent distinct vertex heights with (a+b)/2 a cut level.
// Throws interval_contains_critical if a vertex height lies strictly
// between, missing_critical_level if the midpoint was never cut.
sect_model sect_homology(const field& f, const cut_complex& C, const rational& a,
                         const rational& b, int q);

// Evaluation of section classes at one end of the slab: the inclusion of the
// midpoint fiber into the half slab, followed by the inverse of the end
// fiber's inclusion. Throws not_invertible when the end inclusion is not an
// isomorphism, which flags a level behaving like an uncut critical value.
linear_map face_map(const field& f, const cut_complex& C, const rational& a, const rational& b,
                    slab_end end, int q);

// Requires cut levels to include every vertex height and every midpoint of
// adjacent heights; cut_with_midpoints produces such a complex.
truncated_reeb_complex truncated_reeb(const field& f, const cut_complex& C, int q);

// dim H_n = coker(differential of pages[n]) + ker(differential of pages[n-1]),
// for n = 0..Q. pages[q] must have degree q.
std::vector<int> homology_of_base(const std::vector<truncated_reeb_complex>& pages);

// Exactness of  sections -> fiber(a) + fiber(b) -> slab  at the middle term.
struct diamond_report {
  rational lo;
  rational hi;
  int degree;
  matrix first;      // stacked (-face_bottom; face_top)
  matrix second;     // side-by-side end fiber inclusions into the slab
  bool composite_zero;
  int rank_first;
  int rank_second;
  int kernel_second;
  bool exact;  // kernel_second == rank_first
  bool pass() const { return composite_zero && exact; }
};

diamond_report verify_diamond(const field& f, const cut_complex& C, const rational& a,
                              const rational& b, int q);

}  // namespace strata
