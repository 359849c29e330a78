#pragma once

#include "strata/complex.hpp"

#include <vector>

namespace strata {

// Nested stages X_{i_0} ⊆ … ⊆ X_{i_n} with strictly increasing rational
// indices. Shared vertices keep one height across stages.
class filtration {
 public:
  static filtration make(std::vector<simplicial_complex> stages, std::vector<rational> indices);

  const std::vector<simplicial_complex>& stages() const { return stages_; }
  const std::vector<rational>& indices() const { return indices_; }
  int stage_count() const { return static_cast<int>(stages_.size()); }

 private:
  filtration() = default;
  std::vector<simplicial_complex> stages_;
  std::vector<rational> indices_;
};

// Triangulated mapping telescope: layer k is a fresh copy of stage k at
// height i_k, the slab between layers k and k+1 is the staircase prism over
// stage k, and the top layer carries a full copy of the final stage. The
// fiber at i_k is isomorphic to stage k via layer_maps[k].
struct telescope_result {
  simplicial_complex complex;
  std::vector<std::map<int, int>> layer_maps;  // stage-k vertex id -> layer-k vertex id
};

telescope_result telescope(const filtration& F);

}  // namespace strata
