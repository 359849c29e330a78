#pragma once

// Shared test complexes with height functions, plus small random generators.

#include "strata/complex.hpp"
#include "strata/filtration.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace corpus {

using strata::rational;
using strata::simplex;
using strata::simplicial_complex;

// Octagonal cylinder S^1 x [0,1] with the bottom circle pinched at one point
// and the top circle pinched at the antipodal point. Heights: bottom 0, top
// 1. Homology (1, 3, 0); both extremal fibers are wedges of two circles.
inline simplicial_complex pinched_cylinder() {
  std::map<int, rational> h;
  for (int v : {0, 1, 2, 3, 5, 6, 7}) h.emplace(v, rational(0));
  for (int v : {10, 11, 12, 13, 14, 15, 17}) h.emplace(v, rational(1));
  // bottom cycle positions: 0 1 2 3 0 5 6 7 (0 is the pinch, used twice)
  // top cycle positions:   10 11 12 13 14 15 12 17 (12 is the pinch)
  const int b[8] = {0, 1, 2, 3, 0, 5, 6, 7};
  const int t[8] = {10, 11, 12, 13, 14, 15, 12, 17};
  std::vector<simplex> tris;
  for (int i = 0; i < 8; ++i) {
    const int j = (i + 1) % 8;
    tris.push_back(strata::make_simplex({b[i], b[j], t[j]}));
    tris.push_back(strata::make_simplex({b[i], t[i], t[j]}));
  }
  return simplicial_complex::from_maximal(h, tris);
}

// Circle as a square with two vertices at height 0 and two at height 1.
inline simplicial_complex circle_square() {
  std::map<int, rational> h{{0, rational(0)}, {1, rational(0)}, {2, rational(1)}, {3, rational(1)}};
  return simplicial_complex::from_maximal(
      h, {strata::make_simplex({0, 1}), strata::make_simplex({1, 2}), strata::make_simplex({2, 3}),
          strata::make_simplex({0, 3})});
}

// Octahedron sphere: south pole at 0, equator square at 1/2, north pole at 1.
inline simplicial_complex sphere_octahedron() {
  std::map<int, rational> h{{0, rational(0)}, {1, rational(1, 2)}, {2, rational(1, 2)},
                            {3, rational(1, 2)}, {4, rational(1, 2)}, {5, rational(1)}};
  std::vector<simplex> tris;
  const int eq[4][2] = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  for (const auto& e : eq) {
    tris.push_back(strata::make_simplex({0, e[0], e[1]}));
    tris.push_back(strata::make_simplex({5, e[0], e[1]}));
  }
  return simplicial_complex::from_maximal(h, tris);
}

// 4x4 grid torus, staircase triangulated; the height cycles 0, 1/2, 1, 1/2
// around the first circle factor, so the fiber at 1/2 is two disjoint
// 4-cycles. Homology (1, 2, 1).
inline simplicial_complex torus_grid() {
  const rational colh[4] = {rational(0), rational(1, 2), rational(1), rational(1, 2)};
  std::map<int, rational> h;
  auto id = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h.emplace(id(i, j), colh[i]);
  std::vector<simplex> tris;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      tris.push_back(strata::make_simplex({id(i, j), id(i + 1, j), id(i + 1, j + 1)}));
      tris.push_back(strata::make_simplex({id(i, j), id(i, j + 1), id(i + 1, j + 1)}));
    }
  return simplicial_complex::from_maximal(h, tris);
}

// Random 2-complex: vertices with heights in {0, 1/4, ..., 2}, maximal
// simplices of up to 3 vertices.
inline simplicial_complex random_complex(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> height_step(0, 8);
  std::map<int, rational> h;
  for (int v = 0; v < n; ++v) h.emplace(v, rational(height_step(rng), 4));
  std::uniform_int_distribution<int> nm(0, 2 * n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> sz(1, 3);
  std::vector<simplex> maximal;
  const int m = nm(rng);
  for (int i = 0; i < m; ++i) {
    std::set<int> verts;
    const int k = std::min(sz(rng), n);
    while (static_cast<int>(verts.size()) < k) verts.insert(pick(rng));
    maximal.push_back(simplex(verts.begin(), verts.end()));
  }
  return simplicial_complex::from_maximal(h, maximal);
}

// Random filtration with nested stages built from a growing prefix of
// maximal simplices; every stage is nonempty.
inline strata::filtration random_filtration(std::mt19937& rng, int max_vertices, int max_stages) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> height_step(0, 8);
  std::map<int, rational> h;
  for (int v = 0; v < n; ++v) h.emplace(v, rational(height_step(rng), 4));

  std::uniform_int_distribution<int> nm(1, 2 * n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> sz(1, 3);
  const int m = nm(rng);
  std::vector<simplex> maximal;
  for (int i = 0; i < m; ++i) {
    std::set<int> verts;
    const int k = std::min(sz(rng), n);
    while (static_cast<int>(verts.size()) < k) verts.insert(pick(rng));
    maximal.push_back(simplex(verts.begin(), verts.end()));
  }

  std::uniform_int_distribution<int> ns(1, max_stages);
  const int stages = ns(rng);
  std::vector<int> prefix;
  std::uniform_int_distribution<int> cut(1, m);
  for (int s = 0; s < stages; ++s) prefix.push_back(cut(rng));
  std::sort(prefix.begin(), prefix.end());

  std::vector<simplicial_complex> stage_complexes;
  std::vector<rational> indices;
  for (int s = 0; s < stages; ++s) {
    std::vector<simplex> part(maximal.begin(), maximal.begin() + prefix[static_cast<std::size_t>(s)]);
    std::map<int, rational> used;
    for (const auto& sx : part)
      for (int v : sx) used.emplace(v, h.at(v));
    stage_complexes.push_back(simplicial_complex::from_maximal(used, part));
    indices.push_back(rational(s));
  }
  return strata::filtration::make(std::move(stage_complexes), std::move(indices));
}

}  // namespace corpus
