#pragma once

#include <stdexcept>
#include <string>

namespace strata {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error { using error::error; };
struct invalid_field : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct dimension_mismatch : error { using error::error; };
struct invalid_complex : error { using error::error; };
struct face_closure_error : error { using error::error; };
struct level_not_cut : error { using error::error; };
struct inverted_interval : error { using error::error; };
struct not_a_subcomplex : error { using error::error; };
struct internal_inconsistency : error { using error::error; };
struct cover_invalid : error { using error::error; };
struct missing_critical_level : error { using error::error; };
struct interval_contains_critical : error { using error::error; };
struct not_a_filtration : error { using error::error; };
struct uncovered_simplex : error { using error::error; };

// Carries the achieved rank so callers can report how far from invertible
// the offending map was.
struct not_invertible : error {
  int rank = 0;
  int rows = 0;
  int cols = 0;
  not_invertible(const std::string& what, int rank_, int rows_, int cols_)
      : error(what), rank(rank_), rows(rows_), cols(cols_) {}
};

}  // namespace strata
