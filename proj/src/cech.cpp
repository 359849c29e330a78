#include "strata/cech.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace strata {

namespace {

// Both arguments are subcomplexes of one ambient complex, so shared vertices
// agree on heights and the simplex-set intersection is face-closed.
simplicial_complex intersect(const simplicial_complex& x, const simplicial_complex& y) {
  std::map<int, rational> heights;
  for (const auto& [v, h] : x.heights())
    if (y.has_vertex(v)) heights.emplace(v, h);
  std::set<simplex> simplices;
  for (const auto& s : x.simplices())
    if (y.contains(s)) simplices.insert(s);
  return simplicial_complex(std::move(heights), std::move(simplices));
}

std::string simplex_text(const simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

pairwise_cover build_cover(const cut_complex& C, const interval_cover& cover) {
  const simplicial_complex& X = C.complex;
  const std::vector<simplex> edges = X.simplices_of_dim(1);
  for (const interval& I : cover.intervals())
    for (const rational& e : {I.lo, I.hi})
      for (const simplex& uv : edges) {
        const rational lo = std::min(X.height(uv[0]), X.height(uv[1]));
        const rational hi = std::max(X.height(uv[0]), X.height(uv[1]));
        if (lo < e && e < hi)
          throw cover_invalid("cover endpoint " + to_string(e) + " crosses the edge " +
                              simplex_text(uv) + "; cut the complex there first");
      }

  pairwise_cover out;
  for (const interval& I : cover.intervals()) {
    out.pieces.push_back(X.full_subcomplex([&](int v) {
      const rational h = X.height(v);
      return !(h < I.lo) && !(I.hi < h);
    }));
    if (out.pieces.back().vertex_count() == 0)
      throw cover_invalid("no vertex of the complex lies in the closure of (" + to_string(I.lo) +
                          ", " + to_string(I.hi) + ")");
  }

  for (const simplex& s : X.simplices()) {
    const bool hit = std::any_of(out.pieces.begin(), out.pieces.end(),
                                 [&](const simplicial_complex& p) { return p.contains(s); });
    if (!hit)
      throw uncovered_simplex("simplex " + simplex_text(s) + " lies in no piece of the cover");
  }

  const int n = cover.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      simplicial_complex part = intersect(out.pieces[a], out.pieces[b]);
      if (part.simplex_count() == 0) continue;
      if (b != a + 1)
        throw cover_invalid("closed models of intervals " + std::to_string(a) + " and " +
                            std::to_string(b) + " meet; widen the gap between them");
      out.overlaps.push_back({a, b, std::move(part)});
    }
  return out;
}

pairwise_cover cover_from_pieces(const simplicial_complex& whole,
                                 std::vector<simplicial_complex> pieces) {
  if (pieces.empty()) throw cover_invalid("a cover needs at least one piece");
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].simplex_count() == 0)
      throw cover_invalid("cover piece " + std::to_string(k) + " is empty");
    if (!pieces[k].is_subcomplex_of(whole))
      throw not_a_subcomplex("cover piece " + std::to_string(k) +
                             " is not a subcomplex of the covered complex");
  }

  for (const simplex& s : whole.simplices()) {
    int hits = 0;
    for (const simplicial_complex& p : pieces)
      if (p.contains(s)) ++hits;
    if (hits == 0)
      throw uncovered_simplex("simplex " + simplex_text(s) + " lies in no piece of the cover");
    if (hits > 2)
      throw cover_invalid("simplex " + simplex_text(s) + " lies in " + std::to_string(hits) +
                          " pieces; covers may meet only pairwise");
  }

  pairwise_cover out{std::move(pieces), {}};
  const int n = static_cast<int>(out.pieces.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      simplicial_complex part = intersect(out.pieces[a], out.pieces[b]);
      if (part.simplex_count() > 0) out.overlaps.push_back({a, b, std::move(part)});
    }
  return out;
}

cech_first_page first_page(const field& f, const pairwise_cover& pc, int max_degree) {
  if (max_degree < 0) throw dimension_mismatch("max degree must be nonnegative");
  cech_first_page out{f, max_degree, {}, {}, {}};
  for (int q = 0; q <= max_degree; ++q) {
    std::vector<homology_space> piece_h;
    piece_h.reserve(pc.pieces.size());
    for (const simplicial_complex& p : pc.pieces) piece_h.emplace_back(f, p, q);
    std::vector<homology_space> overlap_h;
    overlap_h.reserve(pc.overlaps.size());
    for (const pairwise_cover::overlap& e : pc.overlaps) overlap_h.emplace_back(f, e.part, q);

    std::vector<int> row_off(piece_h.size() + 1, 0);
    std::vector<int> prows, ocols;
    for (std::size_t k = 0; k < piece_h.size(); ++k) {
      prows.push_back(piece_h[k].dimension());
      row_off[k + 1] = row_off[k] + prows.back();
    }
    std::vector<int> col_off(overlap_h.size() + 1, 0);
    for (std::size_t e = 0; e < overlap_h.size(); ++e) {
      ocols.push_back(overlap_h[e].dimension());
      col_off[e + 1] = col_off[e] + ocols.back();
    }

    matrix d(f, row_off.back(), col_off.back());
    for (std::size_t e = 0; e < overlap_h.size(); ++e) {
      const pairwise_cover::overlap& ov = pc.overlaps[e];
      d.set_block(row_off[static_cast<std::size_t>(ov.b)], col_off[e],
                  induced_map(overlap_h[e], piece_h[static_cast<std::size_t>(ov.b)]).mat);
      d.set_block(row_off[static_cast<std::size_t>(ov.a)], col_off[e],
                  induced_map(overlap_h[e], piece_h[static_cast<std::size_t>(ov.a)]).mat.negated());
    }
    out.piece_dims.push_back(std::move(prows));
    out.overlap_dims.push_back(std::move(ocols));
    out.differential.push_back(std::move(d));
  }
  return out;
}

std::vector<int> second_page_two_column(const cech_first_page& fp) {
  std::vector<int> rank;
  rank.reserve(fp.differential.size());
  for (const matrix& d : fp.differential) rank.push_back(d.rank());

  std::vector<int> out;
  for (int q = 0; q <= fp.max_degree; ++q) {
    const std::size_t i = static_cast<std::size_t>(q);
    int betti = fp.differential[i].rows() - rank[i];
    if (q > 0) betti += fp.differential[i - 1].cols() - rank[i - 1];
    out.push_back(betti);
  }
  return out;
}

nerve_report nerve_row(const field& f, const pairwise_cover& pc) {
  std::map<int, rational> heights;
  for (std::size_t k = 0; k < pc.pieces.size(); ++k)
    heights.emplace(static_cast<int>(k), rational(0));
  std::vector<simplex> edges;
  for (const pairwise_cover::overlap& ov : pc.overlaps)
    edges.push_back(make_simplex({ov.a, ov.b}));

  nerve_report out;
  out.nerve = simplicial_complex::from_maximal(heights, edges);
  out.nerve_betti = homology_dimensions(f, out.nerve, 1);

  const auto point_like = [&](const simplicial_complex& K) {
    const std::vector<int> b = homology_dimensions(f, K, std::max(K.dim(), 0));
    if (b[0] != 1) return false;
    return std::all_of(b.begin() + 1, b.end(), [](int x) { return x == 0; });
  };
  for (std::size_t k = 0; k < pc.pieces.size(); ++k)
    if (!point_like(pc.pieces[k])) out.bad_pieces.push_back(static_cast<int>(k));
  for (const pairwise_cover::overlap& ov : pc.overlaps)
    if (!point_like(ov.part)) out.bad_overlaps.emplace_back(ov.a, ov.b);
  out.good = out.bad_pieces.empty() && out.bad_overlaps.empty();
  return out;
}

}  // namespace strata
