#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"
#include "strata/persistence.hpp"

#include <random>
#include <vector>

using namespace strata;

namespace {

filtration point_pair_interval() {
  const std::map<int, rational> h{{0, rational(0)}, {1, rational(1)}};
  simplicial_complex s0({{0, rational(0)}}, {{0}});
  simplicial_complex s1(h, {{0}, {1}});
  simplicial_complex s2 = simplicial_complex::from_maximal(h, {{0, 1}});
  return filtration::make({s0, s1, s2}, {rational(-1, 2), rational(1, 3), rational(5, 2)});
}

filtration circle_into_disk() {
  const std::map<int, rational> h{{0, rational(0)}, {1, rational(1, 2)}, {2, rational(1)}};
  simplicial_complex circle = simplicial_complex::from_maximal(h, {{0, 1}, {1, 2}, {0, 2}});
  simplicial_complex disk = simplicial_complex::from_maximal(h, {{0, 1, 2}});
  return filtration::make({circle, disk}, {rational(0), rational(1)});
}

}  // namespace

TEST_CASE("constant filtration gives identity persistence") {
  const field F0 = field::rationals();
  simplicial_complex X = corpus::pinched_cylinder();
  filtration F = filtration::make({X, X, X}, {rational(0), rational(1), rational(2)});

  for (int q = 0; q <= 2; ++q) {
    persistence_module direct = persistence_direct(F0, F, q);
    const int d = direct.dims[0];
    CHECK(direct.dims == std::vector<int>(3, d));
    for (const linear_map& m : direct.maps) CHECK(m.mat == matrix::identity(F0, d));

    persistence_module via = persistence_via_telescope(F0, F, q);
    CHECK(via.dims == direct.dims);
    CHECK(via.indices == F.indices());
    for (const linear_map& m : via.maps) CHECK(m.mat.rank() == d);

    barcode expect{q, {}};
    if (d > 0) expect.bars.push_back({0, 2, d});
    CHECK(barcode_of(direct).bars == expect.bars);
    CHECK(barcode_of(via).bars == expect.bars);
  }
}

TEST_CASE("point, point pair, then an interval") {
  const field F0 = field::rationals();
  filtration F = point_pair_interval();

  persistence_module direct = persistence_direct(F0, F, 0);
  CHECK(direct.dims == std::vector<int>{1, 2, 1});
  CHECK(direct.maps[0].mat.rank() == 1);
  CHECK(direct.maps[1].mat.rank() == 1);
  CHECK(compose(direct.maps[1], direct.maps[0]).mat.rank() == 1);

  persistence_module via = persistence_via_telescope(F0, F, 0);
  CHECK(via.dims == direct.dims);
  CHECK(via.maps[0].mat.rank() == 1);
  CHECK(via.maps[1].mat.rank() == 1);

  const std::vector<bar> expect{{0, 2, 1}, {1, 1, 1}};
  CHECK(barcode_of(direct).bars == expect);
  CHECK(barcode_of(via).bars == expect);
}

TEST_CASE("circle filling into a disk") {
  const field F0 = field::rationals();
  filtration F = circle_into_disk();

  persistence_module d1 = persistence_direct(F0, F, 1);
  CHECK(d1.dims == std::vector<int>{1, 0});
  persistence_module v1 = persistence_via_telescope(F0, F, 1);
  CHECK(v1.dims == std::vector<int>{1, 0});
  CHECK(barcode_of(d1).bars == std::vector<bar>{{0, 0, 1}});
  CHECK(barcode_of(v1).bars == std::vector<bar>{{0, 0, 1}});

  persistence_module d0 = persistence_direct(F0, F, 0);
  CHECK(barcode_of(d0).bars == std::vector<bar>{{0, 1, 1}});
  CHECK(barcode_of(persistence_via_telescope(F0, F, 0)).bars == std::vector<bar>{{0, 1, 1}});

  for (int q = 0; q <= 1; ++q) {
    ladder_report r = verify_ladder(F0, F, q);
    CHECK(r.pass());
    CHECK(r.squares.size() == 1);
    CHECK(r.noninvertible_slabs.empty());
  }
}

TEST_CASE("growing the pinched cylinder from its bottom wedge") {
  const field F0 = field::rationals();
  simplicial_complex X = corpus::pinched_cylinder();
  simplicial_complex wedge =
      X.full_subcomplex([&](int v) { return X.height(v) == rational(0); });
  filtration F = filtration::make({wedge, X}, {rational(0), rational(1)});

  persistence_module direct = persistence_direct(F0, F, 1);
  CHECK(direct.dims == std::vector<int>{2, 3});
  persistence_module via = persistence_via_telescope(F0, F, 1);
  CHECK(via.dims == std::vector<int>{2, 3});
  CHECK(barcode_of(direct).bars == barcode_of(via).bars);

  for (int q = 0; q <= 2; ++q) {
    ladder_report r = verify_ladder(F0, F, q);
    CHECK(r.pass());
    for (const ladder_square& s : r.squares) CHECK(s.direct_route.mat == s.section_route.mat);
  }
}

TEST_CASE("empty stages sit silently at the front") {
  const field F0 = field::rationals();
  const std::map<int, rational> h{{0, rational(0)}, {1, rational(1)}};
  simplicial_complex point({{0, rational(0)}}, {{0}});
  simplicial_complex edge = simplicial_complex::from_maximal(h, {{0, 1}});
  filtration F = filtration::make({simplicial_complex(), point, edge},
                                  {rational(0), rational(1), rational(2)});

  persistence_module direct = persistence_direct(F0, F, 0);
  persistence_module via = persistence_via_telescope(F0, F, 0);
  CHECK(direct.dims == std::vector<int>{0, 1, 1});
  CHECK(via.dims == std::vector<int>{0, 1, 1});
  CHECK(barcode_of(direct).bars == std::vector<bar>{{1, 2, 1}});
  CHECK(barcode_of(via).bars == std::vector<bar>{{1, 2, 1}});

  ladder_report r = verify_ladder(F0, F, 0);
  CHECK(r.pass());
  CHECK(r.squares.size() == 2);

  filtration none = filtration::make({simplicial_complex(), simplicial_complex()},
                                     {rational(0), rational(1)});
  CHECK(persistence_via_telescope(F0, none, 0).dims == std::vector<int>{0, 0});
  CHECK(barcode_of(persistence_via_telescope(F0, none, 0)).bars.empty());
  CHECK(verify_ladder(F0, none, 0).pass());
}

TEST_CASE("both routes agree on random filtrations") {
  const field F0 = field::rationals();
  const field F5 = field::prime(5);
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 12; ++trial) {
    filtration F = corpus::random_filtration(rng, 10, 4);
    for (int q = 0; q <= 2; ++q)
      for (const field& f : {F0, F5}) {
        persistence_module direct = persistence_direct(f, F, q);
        persistence_module via = persistence_via_telescope(f, F, q);
        CHECK(direct.dims == via.dims);
        CHECK(barcode_of(direct).bars == barcode_of(via).bars);
      }
  }
}

TEST_CASE("the ladder verifies on random filtrations") {
  const field F0 = field::rationals();
  std::mt19937 rng(271801);
  for (int trial = 0; trial < 6; ++trial) {
    filtration F = corpus::random_filtration(rng, 8, 4);
    for (int q = 0; q <= 2; ++q) {
      ladder_report r = verify_ladder(F0, F, q);
      CHECK(r.pass());
      CHECK(r.noninvertible_slabs.empty());
      CHECK(static_cast<int>(r.squares.size()) == F.stage_count() - 1);
    }
  }
}

TEST_CASE("persistence rejects negative degrees") {
  const field F0 = field::rationals();
  filtration F = circle_into_disk();
  CHECK_THROWS_AS(persistence_direct(F0, F, -1), dimension_mismatch);
  CHECK_THROWS_AS(persistence_via_telescope(F0, F, -1), dimension_mismatch);
}
