#include <doctest.h>

#include "semihom/error.hpp"
#include "semihom/surface_topology.hpp"

using namespace semihom;

namespace {

GradedGroup graded(std::initializer_list<std::pair<std::int64_t, FgAbGroup>> entries) {
  GradedGroup g;
  for (const auto& [k, grp] : entries) g.add(k, grp);
  return g;
}

}  // namespace

TEST_CASE("middle rank") {
  CHECK(middle_rank(3, 4) == 6);
  CHECK(middle_rank(4, 2) == 2);
  CHECK(middle_rank(5, 3) == 10);
  CHECK(middle_rank(3, 1) == 0);
  CHECK(middle_rank(4, 3) == 7);
  CHECK(middle_rank(5, 2) == 0);
  for (std::int64_t d = 1; d <= 10; ++d) CHECK(middle_rank(3, d) == (d - 1) * (d - 2));
  for (std::int64_t n = 3; n <= 15; n += 2) {
    for (std::int64_t d = 1; d <= 10; ++d) {
      CHECK(middle_rank(n, d) == middle_rank_printed_formula(n, d));
    }
  }
}

TEST_CASE("middle rank equals the primitive Hodge count sum") {
  // Primitive middle cohomology has rank ((d-1)^n + (-1)^n (d-1)) / d.
  for (std::int64_t n = 3; n <= 9; ++n) {
    for (std::int64_t d = 2; d <= 8; ++d) {
      Integer prim = (pow(Integer(d - 1), n) + (n % 2 == 0 ? Integer(d - 1) : Integer(1 - d))) / d;
      Integer expected = n % 2 == 0 ? prim + 1 : prim;
      CHECK(middle_rank(n, d) == expected);
    }
  }
}

TEST_CASE("hypersurface data") {
  auto conic = hypersurface_data(3, 2);
  CHECK(conic.b == 0);
  CHECK(conic.mu == 1);
  CHECK(conic.chi_S == 2);
  CHECK(conic.ring == graded({{0, FgAbGroup(1)}, {2, FgAbGroup(1)}}));

  auto cubic = hypersurface_data(4, 3);
  CHECK(cubic.b == 7);
  CHECK(cubic.mu == 16);
  CHECK(cubic.chi_S == 9);

  auto quartic = hypersurface_data(3, 4);
  CHECK(quartic.mu == 27);
  CHECK(quartic.b == 6);
  CHECK(quartic.chi_S == -4);
  CHECK(euler_char(quartic.ring) == quartic.chi_S);

  CHECK(hypersurface_data(3, 1).degenerate);
  CHECK_THROWS_AS(hypersurface_data(2, 3), InvalidArgument);
  CHECK_THROWS_AS(hypersurface_data(3, 0), InvalidArgument);

  for (std::int64_t n = 3; n <= 8; ++n) {
    for (std::int64_t d = 1; d <= 8; ++d) {
      auto h = hypersurface_data(n, d);
      CHECK(euler_char(h.ring) == h.chi_S);
    }
  }
}

TEST_CASE("cover homology profiles") {
  CHECK(cover_homology(3, 2, -2, 4) == graded({{0, FgAbGroup(1)}, {2, FgAbGroup(1)}}));
  CHECK(cover_homology(3, 4, -1, 8) == graded({{0, FgAbGroup(1)},
                                               {1, FgAbGroup(6, {4})},
                                               {2, FgAbGroup(6)},
                                               {3, FgAbGroup(1)}}));
  CHECK(cover_homology(4, 2, -1, 4) == graded({{0, FgAbGroup(1)},
                                               {2, FgAbGroup(1)},
                                               {3, FgAbGroup(1)},
                                               {5, FgAbGroup(1)}}));
  CHECK(intermediate_cover_homology(3, 2) ==
        graded({{0, FgAbGroup(1)}, {1, FgAbGroup::cyclic(2)}, {3, FgAbGroup(1)}}));
  CHECK(milnor_fiber_homology(3, 4) == graded({{0, FgAbGroup(1)}, {2, FgAbGroup(27)}}));
}

TEST_CASE("Milnor fiber compact cohomology") {
  CHECK(milnor_fiber_compact_cohomology(3, 2) == graded({{2, FgAbGroup(1)}, {4, FgAbGroup(1)}}));
  CHECK(milnor_fiber_compact_cohomology(3, 4) == graded({{2, FgAbGroup(27)}, {4, FgAbGroup(1)}}));
  CHECK(milnor_fiber_compact_cohomology(4, 2) == graded({{3, FgAbGroup(1)}, {6, FgAbGroup(1)}}));
}

TEST_CASE("cone compact cohomology is dual to the cover profile") {
  // Both are C^x-bundles over S with the same Euler class up to sign.
  CHECK(cone_compact_cohomology(3, 4) == graded({{1, FgAbGroup(1)},
                                                 {2, FgAbGroup(6)},
                                                 {3, FgAbGroup(6, {4})},
                                                 {4, FgAbGroup(1)}}));
  for (std::int64_t n = 3; n <= 9; ++n) {
    for (std::int64_t d = 2; d <= 9; ++d) {
      auto cone = cone_compact_cohomology(n, d);
      auto cover = intermediate_cover_homology(n, d);
      CHECK(euler_char(cone) == 0);
      for (std::int64_t k = 0; k <= 2 * n - 2; ++k) {
        CHECK(cone.at(k).rank() == cover.at(2 * n - 2 - k).rank());
      }
      CHECK(cone.at(n).torsion() == cover.at(n - 2).torsion());
    }
  }
  CHECK(euler_char(cone_compact_cohomology(3, 2)) == 0);
  auto c42 = cone_compact_cohomology(4, 2);
  CHECK(c42 == graded({{1, FgAbGroup(1)}, {3, FgAbGroup(1)}, {4, FgAbGroup(1)}, {6, FgAbGroup(1)}}));
}

TEST_CASE("Lefschetz data") {
  auto data = hypersurface_data(3, 4);
  auto lef = lefschetz_data(data);
  CHECK(lef.at(0).cokernel == FgAbGroup::cyclic(4));
  CHECK(lef.at(0).kernel.is_zero());
  CHECK(lef.at(-2).cokernel == FgAbGroup(1));
  CHECK(lef.at(2).kernel == FgAbGroup(1));

  auto even = lefschetz_data(hypersurface_data(4, 3));
  CHECK(even.at(0).cokernel == FgAbGroup(6));
  CHECK(even.at(2).kernel == FgAbGroup(6));
  CHECK_THROWS_AS(lef.at(100), InvalidArgument);
}
