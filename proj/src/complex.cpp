#include "strata/complex.hpp"

#include <algorithm>

namespace strata {

namespace {

constexpr std::size_t max_closure_vertices = 12;

// All nonempty subsets of s, s itself included.
void close_into(std::set<simplex>& out, const simplex& s) {
  const std::size_t k = s.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    out.insert(std::move(face));
  }
}

}  // namespace

simplex make_simplex(std::vector<int> ids) {
  if (ids.empty()) throw invalid_complex("empty simplex");
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0) throw invalid_complex("negative vertex id");
    if (i > 0 && ids[i] == ids[i - 1]) throw invalid_complex("repeated vertex in simplex");
  }
  return ids;
}

simplicial_complex::simplicial_complex(std::map<int, rational> heights, std::set<simplex> simplices)
    : heights_(std::move(heights)), simplices_(std::move(simplices)) {
  for (const auto& [v, h] : heights_) {
    (void)h;
    if (v < 0) throw invalid_complex("negative vertex id");
    if (simplices_.count({v}) == 0) throw invalid_complex("vertex missing its 0-simplex");
  }
  for (const auto& s : simplices_) {
    if (s.empty()) throw invalid_complex("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0 && s[i] <= s[i - 1]) throw invalid_complex("simplex vertices not strictly ascending");
      if (heights_.count(s[i]) == 0) throw invalid_complex("simplex uses a vertex with no height");
    }
    if (s.size() > 1) {
      simplex facet(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        facet.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) facet.push_back(s[i]);
        if (simplices_.count(facet) == 0) throw face_closure_error("missing face of a listed simplex");
      }
    }
  }
}

simplicial_complex simplicial_complex::from_maximal(const std::map<int, rational>& heights,
                                                    const std::vector<simplex>& maximal) {
  std::set<simplex> closed;
  for (const auto& [v, h] : heights) {
    (void)h;
    if (v < 0) throw invalid_complex("negative vertex id");
    closed.insert({v});
  }
  for (const auto& raw : maximal) {
    simplex s = make_simplex(raw);
    if (s.size() > max_closure_vertices) throw invalid_complex("simplex has too many vertices");
    for (int v : s)
      if (heights.count(v) == 0) throw invalid_complex("simplex uses a vertex with no height");
    close_into(closed, s);
  }
  return simplicial_complex(heights, std::move(closed));
}

rational simplicial_complex::height(int v) const {
  auto it = heights_.find(v);
  if (it == heights_.end()) throw invalid_complex("vertex has no height");
  return it->second;
}

int simplicial_complex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

int simplicial_complex::max_vertex_id() const {
  return heights_.empty() ? -1 : heights_.rbegin()->first;
}

std::vector<simplex> simplicial_complex::simplices_of_dim(int q) const {
  std::vector<simplex> out;
  if (q < 0) return out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == q + 1) out.push_back(s);
  return out;
}

std::vector<rational> simplicial_complex::distinct_heights() const {
  std::set<rational> seen;
  for (const auto& [v, h] : heights_) {
    (void)v;
    seen.insert(h);
  }
  return {seen.begin(), seen.end()};
}

rational simplicial_complex::min_height() const {
  if (heights_.empty()) throw invalid_complex("empty complex has no heights");
  rational m = heights_.begin()->second;
  for (const auto& [v, h] : heights_) {
    (void)v;
    m = std::min(m, h);
  }
  return m;
}

rational simplicial_complex::max_height() const {
  if (heights_.empty()) throw invalid_complex("empty complex has no heights");
  rational m = heights_.begin()->second;
  for (const auto& [v, h] : heights_) {
    (void)v;
    m = std::max(m, h);
  }
  return m;
}

long long simplicial_complex::euler() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

simplicial_complex simplicial_complex::full_subcomplex(const std::function<bool(int)>& keep) const {
  std::map<int, rational> sub_heights;
  for (const auto& [v, h] : heights_)
    if (keep(v)) sub_heights.emplace(v, h);
  std::set<simplex> sub;
  for (const auto& s : simplices_) {
    bool all = true;
    for (int v : s)
      if (sub_heights.count(v) == 0) {
        all = false;
        break;
      }
    if (all) sub.insert(s);
  }
  return simplicial_complex(std::move(sub_heights), std::move(sub));
}

bool simplicial_complex::is_subcomplex_of(const simplicial_complex& other) const {
  for (const auto& [v, h] : heights_) {
    auto it = other.heights_.find(v);
    if (it == other.heights_.end() || it->second != h) return false;
  }
  for (const auto& s : simplices_)
    if (other.simplices_.count(s) == 0) return false;
  return true;
}

simplicial_complex simplicial_complex::relabeled(const std::map<int, int>& vmap) const {
  std::map<int, rational> new_heights;
  for (const auto& [v, h] : heights_) {
    auto it = vmap.find(v);
    if (it == vmap.end()) throw invalid_complex("relabeling misses a vertex");
    if (!new_heights.emplace(it->second, h).second) throw invalid_complex("relabeling is not injective");
  }
  std::set<simplex> new_simplices;
  for (const auto& s : simplices_) {
    std::vector<int> mapped;
    mapped.reserve(s.size());
    for (int v : s) mapped.push_back(vmap.at(v));
    new_simplices.insert(make_simplex(std::move(mapped)));
  }
  return simplicial_complex(std::move(new_heights), std::move(new_simplices));
}

}  // namespace strata
