#include "strata/filtration.hpp"

#include <algorithm>

namespace strata {

namespace {

void close_piece_into(std::set<simplex>& out, const simplex& s) {
  const std::size_t k = s.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    out.insert(std::move(face));
  }
}

}  // namespace

filtration filtration::make(std::vector<simplicial_complex> stages, std::vector<rational> indices) {
  if (stages.empty()) throw not_a_filtration("a filtration needs at least one stage");
  if (stages.size() != indices.size()) throw not_a_filtration("stage and index counts differ");
  for (std::size_t k = 0; k + 1 < indices.size(); ++k)
    if (!(indices[k] < indices[k + 1])) throw not_a_filtration("indices must strictly increase");
  for (std::size_t k = 0; k + 1 < stages.size(); ++k)
    if (!stages[k].is_subcomplex_of(stages[k + 1]))
      throw not_a_filtration("each stage must be a subcomplex of the next");
  filtration f;
  f.stages_ = std::move(stages);
  f.indices_ = std::move(indices);
  return f;
}

telescope_result telescope(const filtration& F) {
  const int n = F.stage_count();
  std::vector<std::map<int, int>> layer(static_cast<std::size_t>(n));
  std::map<int, rational> heights;
  int next_id = 0;
  for (int k = 0; k < n; ++k) {
    for (const auto& [v, h] : F.stages()[static_cast<std::size_t>(k)].heights()) {
      (void)h;
      layer[static_cast<std::size_t>(k)].emplace(v, next_id);
      heights.emplace(next_id, F.indices()[static_cast<std::size_t>(k)]);
      ++next_id;
    }
  }

  std::set<simplex> simplices;
  // Staircase prism over every simplex of stage k, between layers k and k+1.
  // Piece i keeps the first i+1 vertices on the bottom copy and the rest on
  // the top copy; their union over i triangulates the product with [0,1].
  for (int k = 0; k + 1 < n; ++k) {
    const auto& lo = layer[static_cast<std::size_t>(k)];
    const auto& hi = layer[static_cast<std::size_t>(k + 1)];
    for (const auto& s : F.stages()[static_cast<std::size_t>(k)].simplices()) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        simplex piece;
        for (std::size_t j = 0; j <= i; ++j) piece.push_back(lo.at(s[j]));
        for (std::size_t j = i; j < s.size(); ++j) piece.push_back(hi.at(s[j]));
        std::sort(piece.begin(), piece.end());
        close_piece_into(simplices, piece);
      }
    }
  }
  // The final stage sits fully on the top layer.
  const auto& top = layer[static_cast<std::size_t>(n - 1)];
  for (const auto& s : F.stages()[static_cast<std::size_t>(n - 1)].simplices()) {
    simplex copy;
    for (int v : s) copy.push_back(top.at(v));
    std::sort(copy.begin(), copy.end());
    simplices.insert(std::move(copy));
  }

  telescope_result out;
  out.complex = simplicial_complex(std::move(heights), std::move(simplices));
  out.layer_maps = std::move(layer);
  return out;
}

}  // namespace strata
