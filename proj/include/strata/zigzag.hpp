#pragma once

#include "strata/cut.hpp"
#include "strata/homology.hpp"

#include <vector>

namespace strata {

// Open interval (lo, hi).
struct interval {
  rational lo;
  rational hi;
  bool operator==(const interval&) const = default;
};

// Sorted open intervals where consecutive intervals overlap and
// non-consecutive intervals are disjoint.
class interval_cover {
 public:
  static interval_cover make(std::vector<interval> intervals);
  const std::vector<interval>& intervals() const { return intervals_; }
  int size() const { return static_cast<int>(intervals_.size()); }

 private:
  interval_cover() = default;
  std::vector<interval> intervals_;
};

// n+1 intervals whose k'th overlap contains exactly criticals[k]; a single
// critical value gets a single enclosing interval.
interval_cover canonical_cover(const std::vector<rational>& criticals);

// Arrow between adjacent spaces. The matrix always points out of the odd
// (fiber) position: forward means source index a, target a+1; backward means
// source a+1, target a.
struct zigzag_arrow {
  linear_map map;
  bool forward;
};

struct zigzag_module {
  field coeff_field;
  int degree;
  std::vector<int> dims;             // dims[i] = dim V_i
  std::vector<zigzag_arrow> arrows;  // arrows[a] connects V_a and V_{a+1}

  int length() const { return static_cast<int>(dims.size()); }
};

// Levelset zigzag with its computed spaces. Even positions carry interlevel
// slabs between consecutive critical values (the end slabs degenerate to the
// extremal fibers), odd positions carry the critical fibers.
struct levelset_module {
  zigzag_module module;
  std::vector<homology_space> spaces;
  std::vector<rational> criticals;
};

// Requires every distinct vertex height of the origin to be a cut level of C
// and the cover to have one more interval than there are critical values,
// each overlap containing exactly one critical. A one-interval cover yields
// the single space H_q of the whole complex.
levelset_module levelset_zigzag(const field& f, const cut_complex& C, const interval_cover& cover,
                                int q);

struct bar {
  int birth;
  int death;  // inclusive, birth <= death
  int multiplicity;
  bool operator==(const bar&) const = default;
  auto operator<=>(const bar&) const = default;
};

struct barcode {
  int degree;
  std::vector<bar> bars;  // sorted by (birth, death), multiplicities positive
};

// Rank of the canonical map from the limit to the colimit of the subdiagram
// on positions [lo, hi]; equals the number of bars containing [lo, hi].
int generalized_rank(const zigzag_module& Z, int lo, int hi);

// Interval decomposition multiplicities by inclusion-exclusion over
// generalized ranks. Checks the dimension law before returning.
barcode barcode_of(const zigzag_module& Z);

// Forward persistence data extracted from an alternating zigzag whose
// backward arrows are isomorphisms: spaces at even positions, maps
// forward ∘ backward⁻¹. An all-forward module passes through unchanged.
struct persistence_maps {
  std::vector<int> dims;
  std::vector<linear_map> maps;  // maps[k]: W_k -> W_{k+1}
};

persistence_maps to_persistence(const zigzag_module& Z);

}  // namespace strata
