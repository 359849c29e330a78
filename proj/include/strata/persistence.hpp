#pragma once

#include "strata/filtration.hpp"
#include "strata/reeb.hpp"
#include "strata/zigzag.hpp"

#include <vector>

namespace strata {

// Forward persistence module over the filtration indices: maps[k] carries
// classes of stage k into stage k+1.
struct persistence_module {
  field coeff_field;
  int degree;
  std::vector<rational> indices;
  std::vector<int> dims;
  std::vector<linear_map> maps;

  int length() const { return static_cast<int>(dims.size()); }
};

// Inclusion-induced maps between the stage homologies.
persistence_module persistence_direct(const field& f, const filtration& F, int q);

// The same module computed through the telescope: levelset zigzag of the
// telescope's height function with the backward arrows inverted. A backward
// arrow failing to invert signals a telescope construction bug and surfaces
// as internal_inconsistency.
persistence_module persistence_via_telescope(const field& f, const filtration& F, int q);

// Interval decomposition; bar endpoints are stage positions.
barcode barcode_of(const persistence_module& P);

// One square of the ladder between the two routes, both legs landing in the
// telescope fiber over stage + 1: the inclusion-induced map followed by the
// fiber transport, against the transported section map d0 . d1^{-1}.
struct ladder_square {
  int stage;
  linear_map direct_route;
  linear_map section_route;
  bool commutes;
};

struct ladder_report {
  int degree = 0;
  std::vector<ladder_square> squares;
  std::vector<int> noninvertible_slabs;  // stages whose bottom evaluation failed
  barcode direct_bars;
  barcode telescope_bars;
  bool faces_invertible = false;
  bool squares_commute = false;
  bool barcodes_equal = false;

  bool pass() const { return faces_invertible && squares_commute && barcodes_equal; }
};

// Ties the two routes together: every telescope slab's bottom evaluation must
// invert, every ladder square must commute at the matrix level, and the two
// barcodes must agree as multisets.
ladder_report verify_ladder(const field& f, const filtration& F, int q);

}  // namespace strata
