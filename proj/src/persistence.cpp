#include "strata/persistence.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace strata {

namespace {

// Nested stages keep empty complexes only as a prefix.
int empty_stage_prefix(const filtration& F) {
  int lead = 0;
  while (lead < F.stage_count() &&
         F.stages()[static_cast<std::size_t>(lead)].simplex_count() == 0)
    ++lead;
  return lead;
}

}  // namespace

persistence_module persistence_direct(const field& f, const filtration& F, int q) {
  if (q < 0) throw dimension_mismatch("homology degree must be nonnegative");
  persistence_module out{f, q, F.indices(), {}, {}};
  std::vector<homology_space> spaces;
  spaces.reserve(F.stages().size());
  for (const simplicial_complex& X : F.stages()) spaces.emplace_back(f, X, q);
  for (const homology_space& s : spaces) out.dims.push_back(s.dimension());
  for (std::size_t k = 0; k + 1 < spaces.size(); ++k)
    out.maps.push_back(induced_map(spaces[k], spaces[k + 1]));
  return out;
}

persistence_module persistence_via_telescope(const field& f, const filtration& F, int q) {
  if (q < 0) throw dimension_mismatch("homology degree must be nonnegative");
  persistence_module out{f, q, F.indices(), {}, {}};

  const int lead = empty_stage_prefix(F);
  const int n = F.stage_count();
  if (lead == n) {
    out.dims.assign(static_cast<std::size_t>(n), 0);
    out.maps.assign(static_cast<std::size_t>(n - 1), {matrix(f, 0, 0)});
    return out;
  }

  telescope_result T = telescope(F);
  cut_complex C = cut_with_midpoints(T.complex);
  const std::vector<rational> criticals = T.complex.distinct_heights();
  levelset_module L = levelset_zigzag(f, C, canonical_cover(criticals), q);

  persistence_maps P;
  try {
    P = to_persistence(L.module);
  } catch (const not_invertible& e) {
    throw internal_inconsistency("telescope persistence in degree " + std::to_string(q) +
                                 ": " + e.what());
  }
  // The zigzag ends with a degenerate slab whose space repeats the last
  // stage; the single-stage module has no such duplicate.
  if (criticals.size() >= 2) {
    P.dims.pop_back();
    P.maps.pop_back();
  }

  for (int k = 0; k < lead; ++k) {
    out.dims.push_back(0);
    const int next = (k + 1 < lead) ? 0 : P.dims.front();
    out.maps.push_back({matrix(f, next, 0)});
  }
  out.dims.insert(out.dims.end(), P.dims.begin(), P.dims.end());
  for (linear_map& m : P.maps) out.maps.push_back(std::move(m));
  return out;
}

barcode barcode_of(const persistence_module& P) {
  zigzag_module Z{P.coeff_field, P.degree, P.dims, {}};
  for (const linear_map& m : P.maps) Z.arrows.push_back({m, true});
  return barcode_of(Z);
}

ladder_report verify_ladder(const field& f, const filtration& F, int q) {
  ladder_report out;
  out.degree = q;
  out.direct_bars = barcode_of(persistence_direct(f, F, q));
  out.telescope_bars = barcode_of(persistence_via_telescope(f, F, q));
  out.barcodes_equal = out.direct_bars.bars == out.telescope_bars.bars;

  const int n = F.stage_count();
  const int lead = empty_stage_prefix(F);
  if (lead == n) {
    for (int k = 0; k + 1 < n; ++k)
      out.squares.push_back({k, {matrix(f, 0, 0)}, {matrix(f, 0, 0)}, true});
    out.faces_invertible = true;
    out.squares_commute = true;
    return out;
  }

  telescope_result T = telescope(F);
  cut_complex C = cut_with_midpoints(T.complex);
  const std::vector<rational> criticals = T.complex.distinct_heights();

  std::vector<homology_space> stage_h;
  stage_h.reserve(F.stages().size());
  for (const simplicial_complex& X : F.stages()) stage_h.emplace_back(f, X, q);
  std::vector<homology_space> fiber_h;
  std::vector<linear_map> transports;
  for (std::size_t j = 0; j < criticals.size(); ++j) {
    fiber_h.emplace_back(f, fiber(C, criticals[j]), q);
    const std::size_t stage = static_cast<std::size_t>(lead) + j;
    transports.push_back(transport_map(stage_h[stage], fiber_h[j], T.layer_maps[stage]));
  }

  out.faces_invertible = true;
  for (int k = 0; k + 1 < n; ++k) {
    if (k < lead) {
      // a square out of an empty stage commutes for free
      const int rows = (k + 1 < lead) ? 0 : fiber_h[0].dimension();
      out.squares.push_back({k, {matrix(f, rows, 0)}, {matrix(f, rows, 0)}, true});
      continue;
    }
    const std::size_t j = static_cast<std::size_t>(k - lead);
    linear_map d1 = face_map(f, C, criticals[j], criticals[j + 1], slab_end::bottom, q);
    linear_map d0 = face_map(f, C, criticals[j], criticals[j + 1], slab_end::top, q);
    try {
      linear_map psi = compose(d0, invert(d1));
      linear_map direct_route =
          compose(transports[j + 1],
                  induced_map(stage_h[static_cast<std::size_t>(k)],
                              stage_h[static_cast<std::size_t>(k) + 1]));
      linear_map section_route = compose(psi, transports[j]);
      const bool commutes = direct_route.mat == section_route.mat;
      out.squares.push_back({k, std::move(direct_route), std::move(section_route), commutes});
    } catch (const not_invertible&) {
      out.faces_invertible = false;
      out.noninvertible_slabs.push_back(k);
    }
  }
  out.squares_commute = std::all_of(out.squares.begin(), out.squares.end(),
                                    [](const ladder_square& s) { return s.commutes; });
  return out;
}

}  // namespace strata
