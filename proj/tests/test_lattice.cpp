#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <toric/lattice.hpp>

#include <algorithm>
#include <map>
#include <vector>

using namespace toric;

TEST_CASE("determinant-n matrix quadruples") {
  CHECK(enumerate_H(1) == std::vector<HeckeQuad>{{1, 0, 0, 1}});
  CHECK(enumerate_H(2) ==
        std::vector<HeckeQuad>{{1, 0, 0, 2}, {1, 0, 1, 2}, {2, 0, 0, 1}, {2, 1, 0, 1}});

  SUBCASE("matches brute-force enumeration") {
    for (long n : {2L, 3L, 5L, 7L, 11L, 13L}) {
      // The inequalities force a + d <= n + 1, so a quadruple-nested scan
      // over a, d, b, c is exhaustive.
      std::vector<HeckeQuad> brute;
      for (long a = 1; a <= n; ++a)
        for (long d = 1; d <= n + 1 - a; ++d)
          for (long b = 0; b < a; ++b)
            for (long c = 0; c < d; ++c)
              if (a * d - b * c == n) brute.push_back({a, b, c, d});
      std::sort(brute.begin(), brute.end());
      CHECK(enumerate_H(n) == brute);
    }
  }

  SUBCASE("sorted without duplicates") {
    for (long n : {4L, 6L, 12L}) {
      const auto quads = enumerate_H(n);
      CHECK(std::is_sorted(quads.begin(), quads.end()));
      CHECK(std::adjacent_find(quads.begin(), quads.end()) == quads.end());
      for (const auto& h : quads) CHECK(h.a * h.d - h.b * h.c == n);
    }
  }
}

TEST_CASE("positive quadruples and the thread partition") {
  CHECK(enumerate_I(1).empty());
  CHECK(enumerate_I(2) == std::vector<IQuad>{{1, 1, 1, 1}});
  CHECK(enumerate_I(6).size() == 20);
  CHECK(enumerate_I(12).size() == 80);
  CHECK(threads(6).size() == 8);

  SUBCASE("up and down moves invert each other") {
    for (long D : {2L, 3L, 6L, 12L, 30L}) {
      for (const IQuad& t : enumerate_I(D)) {
        CHECK(t.m1 * t.k1 + t.m2 * t.k2 == D);
        if (const auto up = thread_up(t)) {
          const auto back = thread_down(*up);
          REQUIRE(back.has_value());
          CHECK(*back == t);
        } else {
          CHECK(t.m1 == t.m2);
        }
        if (const auto down = thread_down(t)) {
          const auto back = thread_up(*down);
          REQUIRE(back.has_value());
          CHECK(*back == t);
        } else {
          CHECK(t.k1 == t.k2);
        }
      }
    }
  }

  SUBCASE("threads partition the quadruple set") {
    for (long D : {1L, 2L, 3L, 6L, 12L, 30L}) {
      std::vector<IQuad> flat;
      for (const auto& chain : threads(D)) {
        REQUIRE(!chain.empty());
        CHECK(chain.front().m1 == chain.front().m2);
        CHECK(chain.back().k1 == chain.back().k2);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          const auto next = thread_down(chain[i]);
          REQUIRE(next.has_value());
          CHECK(*next == chain[i + 1]);
        }
        flat.insert(flat.end(), chain.begin(), chain.end());
      }
      std::sort(flat.begin(), flat.end());
      CHECK(flat == enumerate_I(D));
    }
  }
}

TEST_CASE("index-p sublattices") {
  CHECK(sublattices_index_p(2).size() == 3);
  CHECK(sublattices_index_p(5).size() == 6);

  for (long p : {2L, 3L, 5L}) {
    for (const auto& S : sublattices_index_p(p)) {
      CHECK(S.index() == p);
      CHECK(S.contains(S.hnf_a(), S.hnf_b()));
      CHECK(S.contains(0, S.hnf_d()));
      CHECK(S.contains(0, 0));
    }
  }

  const Sublattice checkerboard = Sublattice::from_hnf(1, 1, 2);  // x + y even
  CHECK(checkerboard.contains(1, 1));
  CHECK(checkerboard.contains(2, 0));
  CHECK_FALSE(checkerboard.contains(1, 0));
  CHECK(Sublattice::from_rows({1, 1}, {2, 0}) == checkerboard);

  SUBCASE("membership has index-p density") {
    for (long p : {2L, 3L}) {
      for (const auto& S : sublattices_index_p(p)) {
        long members = 0;
        for (long x = 0; x < p; ++x)
          for (long y = 0; y < p; ++y)
            if (S.contains(x, y)) ++members;
        CHECK(members == p);  // p of the p^2 residue classes
      }
    }
  }
}

TEST_CASE("boundary chains recover the matrix list") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    std::vector<HeckeQuad> collected;
    for (const auto& S : sublattices_index_p(p)) {
      for (const auto& q : boundary_segment_quads(S)) collected.push_back(q);
      // Each segment's endpoints generate S itself.
      for (const auto& [from, to] : boundary_segments(S)) {
        CHECK(Sublattice::from_rows({from.first, from.second}, {to.first, to.second}) == S);
      }
    }
    std::sort(collected.begin(), collected.end());
    CHECK(collected == enumerate_H(p));
  }
  std::size_t segments_at_two = 0;
  for (const auto& S : sublattices_index_p(2)) segments_at_two += boundary_segments(S).size();
  CHECK(segments_at_two == 4);
}

TEST_CASE("matching matrices to column lattices") {
  for (long p : {2L, 3L, 5L}) {
    std::map<Sublattice, std::size_t> counts;
    for (const auto& S : sublattices_index_p(p)) {
      for (const auto& h : hecke_quads_for(S, p)) {
        const Sublattice columns = Sublattice::from_rows({h.a, h.c}, {h.b, h.d});
        CHECK(columns == S);
      }
      counts[S] = hecke_quads_for(S, p).size();
    }
    std::size_t total = 0;
    for (const auto& [S, n] : counts) total += n;
    CHECK(total == enumerate_H(p).size());
  }
}

TEST_CASE("lattice duality") {
  const Sublattice checkerboard = Sublattice::from_hnf(1, 1, 2);
  CHECK(dual_lattice(checkerboard) == checkerboard);

  for (long p : {2L, 3L, 5L}) {
    for (const auto& S : sublattices_index_p(p)) {
      const Sublattice dual = dual_lattice(S);
      CHECK(dual.index() == p);
      CHECK(dual_lattice(dual) == S);

      // The dual is the quarter-turn image: rotating the fan rays of S by 90
      // degrees gives the fan rays of the dual.
      std::vector<LatticePoint> rotated;
      for (const auto& v : rays(S)) rotated.push_back({-v.second, v.first});
      std::vector<LatticePoint> dual_rays = rays(dual);
      std::sort(rotated.begin(), rotated.end());
      std::sort(dual_rays.begin(), dual_rays.end());
      CHECK(rotated == dual_rays);
    }
  }
}

TEST_CASE("fan rays and cones") {
  const Sublattice checkerboard = Sublattice::from_hnf(1, 1, 2);
  CHECK(rays(checkerboard).size() == 8);

  const Cone on_ray = cone_of(checkerboard, 3, 3);
  CHECK(on_ray.is_ray);
  CHECK(on_ray.ray1 == LatticePoint(1, 1));

  const Cone between = cone_of(checkerboard, 3, 1);
  CHECK_FALSE(between.is_ray);
  CHECK(between.ray1 == LatticePoint(1, 0));
  CHECK(between.ray2 == LatticePoint(1, 1));

  SUBCASE("every nonzero lattice point lands in a fan cone") {
    for (const auto& S : sublattices_index_p(3)) {
      for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
          if ((x == 0 && y == 0) || !S.contains(x, y)) continue;
          const Cone c = cone_of(S, x, y);
          if (c.is_ray) {
            // The point is a positive multiple of the ray direction.
            CHECK(x * c.ray1.second == y * c.ray1.first);
            CHECK(x * c.ray1.first + y * c.ray1.second > 0);
          } else {
            // Strictly between the edges in counterclockwise order.
            CHECK(c.ray1.first * y - c.ray1.second * x > 0);
            CHECK(c.ray2.first * y - c.ray2.second * x < 0);
          }
        }
    }
  }
}

TEST_CASE("half-plane region with removed cones") {
  const Sublattice checkerboard = Sublattice::from_hnf(1, 1, 2);

  const CRegion forward(checkerboard, 1, 1);
  CHECK(forward.contains(2, 2));
  CHECK(forward.contains(5, 1));
  CHECK(forward.contains(1, 5));
  CHECK_FALSE(forward.contains(2, 0));   // removed cone through the axis
  CHECK_FALSE(forward.contains(0, 2));
  CHECK_FALSE(forward.contains(-1, 3));  // outside the open half-plane side
  CHECK_FALSE(forward.contains(-2, 2));
  CHECK(forward.boundary_rays() == std::vector<LatticePoint>{{1, 0}, {0, 1}});
  CHECK(forward.boundary_contains(3, 0));
  CHECK_FALSE(forward.boundary_contains(2, 2));

  const CRegion sideways(checkerboard, -1, 1);
  CHECK(sideways.contains(-2, 2));
  CHECK(sideways.contains(-1, 3));
  CHECK(sideways.contains(-3, 1));
  CHECK_FALSE(sideways.contains(0, 2));
  CHECK_FALSE(sideways.contains(-2, 0));
  CHECK_FALSE(sideways.contains(1, 1));
  CHECK_FALSE(sideways.contains(2, 2));
}

TEST_CASE("signed cancellation sum vanishes on admissible quadruples") {
  for (const auto& S : sublattices_index_p(2)) {
    const auto domain = admissible_quadruples(S, 2, 3);
    for (const auto& t : domain) {
      CHECK(t.m1 * t.k1 + t.m2 * t.k2 == 2 * 3);
      CHECK(S.contains(t.m1, t.m2));
      CHECK(dual_lattice(S).contains(t.k1, t.k2));
      CHECK(inside_cancellation_check(S, 2, 5, 1, 0, 1, 2, t) == 0);
      CHECK(inside_cancellation_check(S, 2, 5, 0, 1, 1, 1, t) == 0);
    }
  }
}
