#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"
#include "strata/chain.hpp"
#include "strata/cut.hpp"
#include "strata/homology.hpp"

#include <random>
#include <vector>

using namespace strata;

namespace {

simplicial_complex flat_triangle(bool solid) {
  std::map<int, rational> h{{0, rational(0)}, {1, rational(0)}, {2, rational(0)}};
  if (solid) return simplicial_complex::from_maximal(h, {{0, 1, 2}});
  return simplicial_complex::from_maximal(h, {{0, 1}, {1, 2}, {0, 2}});
}

std::vector<int> space_dims(const field& f, const simplicial_complex& K, int max_degree) {
  std::vector<int> dims;
  for (int q = 0; q <= max_degree; ++q) dims.push_back(homology_space(f, K, q).dimension());
  return dims;
}

}  // namespace

TEST_CASE("homology dimensions of the fixed complexes") {
  const field F0 = field::rationals();
  CHECK(homology_dimensions(F0, flat_triangle(false), 2) == std::vector<int>{1, 1, 0});
  CHECK(homology_dimensions(F0, flat_triangle(true), 2) == std::vector<int>{1, 0, 0});
  CHECK(homology_dimensions(F0, corpus::circle_square(), 2) == std::vector<int>{1, 1, 0});
  CHECK(homology_dimensions(F0, corpus::sphere_octahedron(), 2) == std::vector<int>{1, 0, 1});
  CHECK(homology_dimensions(F0, corpus::torus_grid(), 2) == std::vector<int>{1, 2, 1});
  CHECK(homology_dimensions(F0, corpus::pinched_cylinder(), 2) == std::vector<int>{1, 3, 0});

  simplicial_complex point = simplicial_complex::from_maximal({{0, rational(0)}}, {});
  CHECK(homology_dimensions(F0, point, 3) == std::vector<int>{1, 0, 0, 0});
  simplicial_complex two =
      simplicial_complex::from_maximal({{0, rational(0)}, {4, rational(1)}}, {});
  CHECK(homology_dimensions(F0, two, 1) == std::vector<int>{2, 0});

  CHECK(homology_space(F0, point, -1).dimension() == 0);
  CHECK(homology_space(F0, point, 1).dimension() == 0);
  CHECK(homology_space(F0, corpus::torus_grid(), 3).dimension() == 0);
}

TEST_CASE("per-degree spaces agree with the one-pass dimensions") {
  const field F0 = field::rationals();
  const field F5 = field::prime(5);
  std::mt19937 rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    simplicial_complex K = corpus::random_complex(rng, 10);
    for (const field& f : {F0, F5})
      CHECK(space_dims(f, K, 3) == homology_dimensions(f, K, 3));
  }
}

TEST_CASE("homology matches the independent rank oracle") {
  const field F0 = field::rationals();
  const field F2 = field::prime(2);
  const field F97 = field::prime(97);
  for (const auto& K : {corpus::pinched_cylinder(), corpus::circle_square(),
                        corpus::sphere_octahedron(), corpus::torus_grid()})
    for (const field& f : {F0, F2, F97})
      CHECK(homology_dimensions(f, K, 3) == oracle::betti(f, K, 3));

  std::mt19937 rng(8088);
  for (int trial = 0; trial < 25; ++trial) {
    simplicial_complex K = corpus::random_complex(rng, 12);
    for (const field& f : {F0, F2, F97})
      CHECK(homology_dimensions(f, K, 3) == oracle::betti(f, K, 3));
  }
}

TEST_CASE("field choice does not change ranks on torsion-free complexes") {
  // The fixed complexes all have torsion-free integral homology, so every
  // field must report the same dimensions. 1000003 stands in for a large
  // prime far beyond any minor of these incidence matrices.
  const field F0 = field::rationals();
  for (const auto& K : {corpus::pinched_cylinder(), corpus::circle_square(),
                        corpus::sphere_octahedron(), corpus::torus_grid()}) {
    const std::vector<int> over_q = homology_dimensions(F0, K, 2);
    for (unsigned long p : {2ul, 3ul, 5ul, 1000003ul})
      CHECK(homology_dimensions(field::prime(p), K, 2) == over_q);
  }
}

TEST_CASE("representatives are independent cycles expressed as themselves") {
  const field F0 = field::rationals();
  const field F7 = field::prime(7);
  std::mt19937 rng(5150);
  std::vector<simplicial_complex> pool{corpus::pinched_cylinder(), corpus::torus_grid()};
  for (int trial = 0; trial < 8; ++trial) pool.push_back(corpus::random_complex(rng, 10));
  for (const auto& K : pool) {
    for (const field& f : {F0, F7}) {
      chain_complex chains = make_chain_complex(f, K);
      for (int q = 0; q <= chains.top_degree(); ++q) {
        homology_space hs(f, K, q);
        CHECK(hs.dimension() == hs.cycle_rank() - hs.boundary_rank());
        CHECK(chains.boundary[static_cast<std::size_t>(q)].times(hs.representatives()).is_zero());
        if (q + 1 <= chains.top_degree()) {
          matrix image = chains.boundary[static_cast<std::size_t>(q + 1)].image_basis();
          CHECK(image.cols() == hs.boundary_rank());
          CHECK(matrix::hstack(image, hs.representatives()).rank() ==
                hs.boundary_rank() + hs.dimension());
        }
        for (int j = 0; j < hs.dimension(); ++j) {
          std::vector<rational> coords = hs.express(hs.representatives().column(j));
          for (int i = 0; i < hs.dimension(); ++i)
            CHECK(coords[static_cast<std::size_t>(i)] == (i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("express rejects vectors outside the cycle space") {
  const field F0 = field::rationals();
  homology_space hs(F0, flat_triangle(false), 1);
  REQUIRE(hs.dimension() == 1);
  // a single edge is not a cycle
  CHECK_THROWS_AS(hs.express({{0, rational(1)}}), internal_inconsistency);
}

TEST_CASE("inclusions induce the expected maps") {
  const field F0 = field::rationals();

  // Two fiber points of a cut circle both land on the single component class.
  cut_complex circle = cut_at_levels(corpus::circle_square(), {rational(1, 2)});
  homology_space fiber0(F0, fiber(circle, rational(1, 2)), 0);
  homology_space whole0(F0, circle.complex, 0);
  REQUIRE(fiber0.dimension() == 2);
  REQUIRE(whole0.dimension() == 1);
  linear_map incl = induced_map(fiber0, whole0);
  CHECK(incl.mat.entry(0, 0) == 1);
  CHECK(incl.mat.entry(0, 1) == 1);

  // The waist circle of the pinched cylinder survives into the whole space.
  cut_complex pc = cut_at_levels(corpus::pinched_cylinder(), {rational(1, 2)});
  homology_space waist1(F0, fiber(pc, rational(1, 2)), 1);
  homology_space all1(F0, pc.complex, 1);
  REQUIRE(waist1.dimension() == 1);
  REQUIRE(all1.dimension() == 3);
  CHECK(induced_map(waist1, all1).mat.rank() == 1);

  homology_space waist0(F0, fiber(pc, rational(1, 2)), 0);
  homology_space all0(F0, pc.complex, 0);
  CHECK(induced_map(waist0, all0).mat.rank() == 1);

  CHECK_THROWS_AS(induced_map(waist0, all1), dimension_mismatch);
  CHECK_THROWS_AS(induced_map(all1, waist1), not_a_subcomplex);
  homology_space mixed(field::prime(5), fiber(pc, rational(1, 2)), 1);
  CHECK_THROWS_AS(induced_map(mixed, all1), invalid_field);
}

TEST_CASE("induced maps compose along nested inclusions") {
  const field F0 = field::rationals();
  std::mt19937 rng(6502);
  for (int trial = 0; trial < 12; ++trial) {
    simplicial_complex C = corpus::random_complex(rng, 11);
    const rational span = C.max_height() - C.min_height();
    const rational lo = C.min_height() + span / 3;
    const rational hi = C.min_height() + span * 2 / 3;
    simplicial_complex A = C.full_subcomplex([&](int v) { return C.height(v) <= lo; });
    simplicial_complex B = C.full_subcomplex([&](int v) { return C.height(v) <= hi; });
    for (int q = 0; q <= 2; ++q) {
      homology_space ha(F0, A, q), hb(F0, B, q), hc(F0, C, q);
      linear_map direct = induced_map(ha, hc);
      linear_map stepped = compose(induced_map(hb, hc), induced_map(ha, hb));
      CHECK(direct.mat == stepped.mat);
      CHECK(induced_map(ha, ha).mat == identity_map(F0, ha.dimension()).mat);
    }
  }
}

TEST_CASE("transport across a relabeling is an isomorphism") {
  const field F0 = field::rationals();
  std::mt19937 rng(1802);
  for (int trial = 0; trial < 10; ++trial) {
    simplicial_complex src = corpus::random_complex(rng, 9);
    std::map<int, int> fwd, bwd;
    for (const auto& [v, h] : src.heights()) {
      fwd.emplace(v, 2 * v + 1);
      bwd.emplace(2 * v + 1, v);
    }
    simplicial_complex dst = src.relabeled(fwd);
    for (int q = 0; q <= 2; ++q) {
      homology_space hs(F0, src, q), hd(F0, dst, q);
      REQUIRE(hs.dimension() == hd.dimension());
      linear_map there = transport_map(hs, hd, fwd);
      linear_map back = transport_map(hd, hs, bwd);
      CHECK(compose(back, there).mat == identity_map(F0, hs.dimension()).mat);
      CHECK(invert(there).mat == back.mat);
    }
  }
}

TEST_CASE("transport validates the relabeling") {
  const field F0 = field::rationals();
  simplicial_complex two =
      simplicial_complex::from_maximal({{0, rational(0)}, {1, rational(0)}}, {{0, 1}});
  homology_space h0(F0, two, 0);
  simplicial_complex other = two.relabeled({{0, 5}, {1, 7}});
  homology_space hother(F0, other, 0);
  CHECK_NOTHROW(transport_map(h0, hother, {{0, 5}, {1, 7}}));
  // order reversal and wrong targets are both rejected
  CHECK_THROWS_AS(transport_map(h0, hother, {{0, 7}, {1, 5}}), invalid_complex);
  CHECK_THROWS_AS(transport_map(h0, hother, {{0, 5}, {1, 9}}), invalid_complex);
}

TEST_CASE("invert reports the failure shape") {
  const field F0 = field::rationals();
  matrix tall(F0, 2, 1);
  tall.set(0, 0, rational(1));
  try {
    invert(linear_map{tall});
    FAIL("expected not_invertible");
  } catch (const not_invertible& e) {
    CHECK(e.rows == 2);
    CHECK(e.cols == 1);
    CHECK(e.rank == 1);
  }
  matrix singular(F0, 2, 2);
  singular.set(0, 0, rational(1));
  singular.set(0, 1, rational(1));
  CHECK_THROWS_AS(invert(linear_map{singular}), not_invertible);
  CHECK(invert(linear_map{matrix::identity(F0, 3)}).mat == matrix::identity(F0, 3));
}
