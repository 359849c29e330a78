#include "strata/cut.hpp"

#include <algorithm>
#include <optional>

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

// Lexicographically least edge {u, v} with min(h_u, h_v) < t < max(h_u, h_v).
std::optional<simplex> first_crossing_edge(const simplicial_complex& X, const rational& t) {
  for (const auto& s : X.simplices()) {
    if (s.size() != 2) continue;
    const rational& a = X.height(s[0]);
    const rational& b = X.height(s[1]);
    if (std::min(a, b) < t && t < std::max(a, b)) return s;
  }
  return std::nullopt;
}

// Replaces every simplex containing {u, v} by its two halves through w.
simplicial_complex split_edge(const simplicial_complex& X, int u, int v, int w, const rational& t) {
  std::map<int, rational> heights = X.heights();
  heights.emplace(w, t);
  std::set<simplex> out;
  for (const auto& s : X.simplices()) {
    const bool has_u = std::binary_search(s.begin(), s.end(), u);
    const bool has_v = std::binary_search(s.begin(), s.end(), v);
    if (!has_u || !has_v) {
      out.insert(s);
      continue;
    }
    simplex piece_u;  // s with v replaced by w
    simplex piece_v;  // s with u replaced by w
    for (int x : s) {
      if (x != v) piece_u.push_back(x);
      if (x != u) piece_v.push_back(x);
    }
    piece_u.push_back(w);
    piece_v.push_back(w);
    std::sort(piece_u.begin(), piece_u.end());
    std::sort(piece_v.begin(), piece_v.end());
    close_piece_into(out, piece_u);
    close_piece_into(out, piece_v);
  }
  return simplicial_complex(std::move(heights), std::move(out));
}

}  // namespace

cut_complex cut_at_levels(const simplicial_complex& K, std::vector<rational> levels) {
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  cut_complex out{K, K, levels, {}};
  int next_id = K.max_vertex_id() + 1;
  for (const rational& t : levels) {
    // Each split removes one crossing edge and creates none at this level:
    // both halves touch height t, and closure edges through w sit at t too.
    while (auto edge = first_crossing_edge(out.complex, t)) {
      const int u = (*edge)[0];
      const int v = (*edge)[1];
      const int w = next_id++;
      out.complex = split_edge(out.complex, u, v, w, t);
      out.new_vertices.push_back({w, u, v, t});
    }
  }
  return out;
}

simplicial_complex fiber(const cut_complex& C, const rational& t) {
  const bool is_cut = std::binary_search(C.cut_levels.begin(), C.cut_levels.end(), t);
  bool is_origin_height = false;
  for (const auto& [v, h] : C.origin.heights()) {
    (void)v;
    if (h == t) {
      is_origin_height = true;
      break;
    }
  }
  if (!is_cut && !is_origin_height) throw level_not_cut("fiber level is neither cut nor a vertex height");
  return C.complex.full_subcomplex([&](int v) { return C.complex.height(v) == t; });
}

simplicial_complex interlevel(const cut_complex& C, const rational& a, const rational& b) {
  if (a > b) throw inverted_interval("interlevel endpoints out of order");
  auto endpoint_ok = [&](const rational& e) {
    if (std::binary_search(C.cut_levels.begin(), C.cut_levels.end(), e)) return true;
    if (C.origin.vertex_count() == 0) return false;
    return e == C.origin.min_height() || e == C.origin.max_height();
  };
  if (!endpoint_ok(a) || !endpoint_ok(b))
    throw level_not_cut("interlevel endpoint is neither cut nor extremal");
  return C.complex.full_subcomplex([&](int v) {
    const rational& h = C.complex.height(v);
    return a <= h && h <= b;
  });
}

}  // namespace strata
