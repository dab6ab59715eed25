#include <algorithm>
#include <set>

#include "doctest.h"
#include "shadowlab/km_cube.hpp"

using namespace shadowlab;

namespace {

const Rational kQuarter(1, 4);

std::vector<Rational> sweep_eps() {
  return {Rational(1, 4), Rational(1, 3), Rational(2, 5)};
}

}  // namespace

TEST_CASE("vertex codes parse, index and flip") {
  const VertexCode u = VertexCode::parse("101");
  CHECK(u.size() == 3);
  CHECK(u.bit(1) == 1);
  CHECK(u.bit(2) == 0);
  CHECK(u.bit(3) == 1);
  CHECK(u.str() == "101");
  CHECK(u.index() == 5);
  CHECK(VertexCode::from_index(3, 5) == u);
  CHECK(VertexCode::from_index(3, 0).str() == "000");
  CHECK(u.flipped(2).str() == "111");
  CHECK(u.flipped(1).str() == "001");

  CHECK_THROWS_AS(VertexCode::parse("10x"), ParseError);
  CHECK_THROWS_AS(VertexCode::parse(""), ParameterError);
  CHECK_THROWS_AS(u.flipped(0), ParameterError);
  CHECK_THROWS_AS(u.flipped(4), ParameterError);
  CHECK_THROWS_AS(KmParams(2, Rational(1, 2)), ParameterError);
  CHECK_THROWS_AS(KmParams(2, Rational(0)), ParameterError);
}

TEST_CASE("km_vertex recursion") {
  const KmParams p(2, kQuarter);
  CHECK(km_vertex(VertexCode::parse("00"), p) == RatVector{0, 0});
  CHECK(km_vertex(VertexCode::parse("10"), p) == RatVector{1, Rational(1, 4)});
  CHECK(km_vertex(VertexCode::parse("11"), p) == RatVector{1, Rational(3, 4)});
  CHECK(km_vertex(VertexCode::parse("01"), p) == RatVector{0, 1});

  const KmParams p5(5, kQuarter);
  CHECK(km_vertex(VertexCode::zeros(5), p5) == RatVector(5));

  CHECK_THROWS_AS(km_vertex(VertexCode::parse("0"), p), DimensionError);
}

TEST_CASE("km_vertex lands on the generator with the coded rows tight") {
  for (const Rational& eps : sweep_eps()) {
    for (std::size_t d = 1; d <= 5; ++d) {
      const KmParams p(d, eps);
      const HPolytope km = make_klee_minty(d, eps);
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx) {
        const VertexCode u = VertexCode::from_index(d, idx);
        const RatVector x = km_vertex(u, p);
        CHECK(is_feasible(km, x));
        std::size_t tight = 0;
        for (std::size_t r = 0; r < km.num_rows(); ++r)
          if (dot(km.row(r), x) == km.rhs(r)) {
            ++tight;
            // tight row of pair j must be the one selected by the code
            const std::size_t j = r / 2;
            CHECK(static_cast<std::size_t>(u.bit(j + 1)) == r % 2);
          }
        CHECK(tight == d);
        // bounds hold coordinatewise; a coordinate is exactly 0 or 1 only
        // while the coupling chain below it is still dormant
        bool prefix_zero = true;
        for (std::size_t j = 0; j < d; ++j) {
          CHECK(x[j] >= Rational(0));
          CHECK(x[j] <= Rational(1));
          const bool binary = x[j] == Rational(0) || x[j] == Rational(1);
          CHECK(binary == prefix_zero);
          prefix_zero = prefix_zero && u.bit(j + 1) == 0;
        }
      }
    }
  }
}

TEST_CASE("parity product with the empty convention") {
  const VertexCode u = VertexCode::parse("101");
  CHECK(parity_sign(u, 1, 3) == 1);  // (-1)(+1)(-1)
  CHECK(parity_sign(u, 1, 1) == -1);
  CHECK(parity_sign(u, 2, 3) == -1);
  CHECK(parity_sign(u, 3, 2) == 1);  // empty product
  CHECK(parity_sign(u, 4, 3) == 1);  // i = d+1 stays in range
  CHECK(parity_sign(VertexCode::zeros(4), 1, 4) == 1);

  CHECK_THROWS_AS(parity_sign(u, 0, 2), ParameterError);
  CHECK_THROWS_AS(parity_sign(u, 1, 5), ParameterError);
  CHECK_THROWS_AS(parity_sign(u, 2, 4), ParameterError);  // nonempty past d
}

TEST_CASE("neighbor_gap difference and closed form") {
  CHECK(neighbor_gap(VertexCode::parse("0"), 1, KmParams(1, kQuarter)) == Rational(1));

  const KmParams p(2, kQuarter);
  // oracle: direct vertex differences
  CHECK(km_vertex(VertexCode::parse("11"), p)[1] -
            km_vertex(VertexCode::parse("10"), p)[1] ==
        Rational(1, 2));
  CHECK(neighbor_gap(VertexCode::parse("10"), 2, p) == Rational(1, 2));
  CHECK(neighbor_gap(VertexCode::parse("11"), 2, p) == Rational(-1, 2));

  for (const Rational& eps : sweep_eps()) {
    const Rational floor = Rational(1) - 2 * eps;
    for (std::size_t d = 1; d <= 6; ++d) {
      const KmParams pd(d, eps);
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx) {
        const VertexCode u = VertexCode::from_index(d, idx);
        for (std::size_t l = 1; l <= d; ++l) {
          const Rational q = neighbor_gap(u, l, pd);
          CHECK(q.sign() == (u.bit(l) == 0 ? 1 : -1));
          CHECK(q.abs() >= floor);
        }
      }
    }
  }
}

TEST_CASE("edge offsets match the vertex recursion exactly") {
  const KmParams p(2, kQuarter);
  // oracle first: the direct difference of the two vertex evaluations
  const RatVector oracle = km_vertex(VertexCode::parse("10"), p) -
                           km_vertex(VertexCode::parse("00"), p);
  CHECK(oracle == RatVector{1, Rational(1, 4)});
  CHECK(edge_delta(VertexCode::parse("00"), 1, p) == oracle);

  for (const Rational& eps : sweep_eps()) {
    for (std::size_t d = 1; d <= 6; ++d) {
      const KmParams pd(d, eps);
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx) {
        const VertexCode u = VertexCode::from_index(d, idx);
        for (std::size_t l = 1; l <= d; ++l) {
          const RatVector delta = edge_delta(u, l, pd);
          CHECK(delta == km_vertex(u.flipped(l), pd) - km_vertex(u, pd));
          CHECK(delta == edge_direction(u, l, pd) * neighbor_gap(u, l, pd));
          for (std::size_t j = 0; j + 1 < l; ++j) CHECK(delta[j].is_zero());
          if (l == d) {
            for (std::size_t j = 0; j + 1 < d; ++j) CHECK(delta[j].is_zero());
            CHECK(delta[d - 1] == neighbor_gap(u, d, pd));
          }
        }
      }
    }
  }
}

TEST_CASE("edge direction vectors") {
  const KmParams p3(3, kQuarter);
  CHECK(edge_direction(VertexCode::parse("000"), 3, p3) ==
        RatVector{0, 0, 1});
  CHECK(edge_direction(VertexCode::parse("000"), 1, p3) ==
        RatVector{1, Rational(1, 4), Rational(1, 16)});
  CHECK(edge_direction(VertexCode::parse("010"), 1, p3) ==
        RatVector{1, Rational(-1, 4), Rational(-1, 16)});
}

TEST_CASE("sweep objective vector") {
  CHECK(objective_c(KmParams(3, kQuarter)) ==
        RatVector{Rational(1, 4096), Rational(1, 64), 0});
  CHECK(objective_c(KmParams(1, kQuarter)) == RatVector{0});
  CHECK(objective_c(KmParams(2, Rational(1, 3))) ==
        RatVector{Rational(1, 27), 0});
}

TEST_CASE("per-vertex multiplier of the last coordinate") {
  const KmParams p1(1, kQuarter);
  CHECK(objective_d_u(VertexCode::parse("0"), p1).vec ==
        RatVector{Rational(-1, 16)});
  CHECK(objective_d_u(VertexCode::parse("1"), p1).vec ==
        RatVector{Rational(1, 16)});

  const KmParams p2(2, kQuarter);
  const ObjectiveD d00 = objective_d_u(VertexCode::parse("00"), p2);
  CHECK(d00.vec == RatVector{0, Rational(-17, 256)});
  CHECK(d00.lambda == Rational(-17, 256));

  // multipliers are pairwise distinct across all codes
  for (const Rational& eps : sweep_eps()) {
    for (std::size_t d = 1; d <= 8; ++d) {
      const KmParams pd(d, eps);
      std::set<Rational> lambdas;
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx)
        lambdas.insert(
            objective_d_u(VertexCode::from_index(d, idx), pd).lambda);
      CHECK(lambdas.size() == (std::size_t(1) << d));
    }
  }
}

TEST_CASE("parity cancellation identity") {
  for (std::size_t d = 1; d <= 6; ++d) {
    const KmParams p(d, kQuarter);
    for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx) {
      const VertexCode u = VertexCode::from_index(d, idx);
      for (std::size_t l = 1; l <= d; ++l)
        for (std::size_t j = l; j <= d; ++j)
          CHECK(parity_sign(u, j + 1, d) * parity_sign(u, l + 1, d) ==
                parity_sign(u, l + 1, j));
    }
  }
}

TEST_CASE("every neighbor loses against the lifted objective") {
  const KmParams p1(1, kQuarter);
  const NeighborDominanceReport r1 = check_neighbor_dominance(VertexCode::parse("0"), p1);
  CHECK(r1.neighbor_gaps == std::vector<Rational>{Rational(-1, 16)});
  CHECK(r1.all_negative);

  const KmParams p3(3, kQuarter);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const VertexCode u = VertexCode::from_index(3, idx);
    const NeighborDominanceReport report = check_neighbor_dominance(u, p3);
    CHECK(report.all_negative);
    CHECK(report.neighbor_gaps.size() == 3);
    for (std::size_t l = 1; l <= 3; ++l) {
      CHECK(report.neighbor_gaps[l - 1].sign() < 0);
      // the gap's sign is forced by -(1-2u_l) * q_l, which is negative
      const int forced =
          -(1 - 2 * u.bit(l)) * neighbor_gap(u, l, p3).sign();
      CHECK(report.neighbor_gaps[l - 1].sign() == forced);
    }
  }

  for (const Rational& eps : sweep_eps()) {
    for (std::size_t d = 1; d <= 6; ++d) {
      const KmParams pd(d, eps);
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx)
        CHECK(check_neighbor_dominance(VertexCode::from_index(d, idx), pd).all_negative);
    }
  }
}

TEST_CASE("start code is the brute-force argmin of the last coordinate") {
  CHECK(km_start_code(KmParams(1, kQuarter)).str() == "0");

  // independent re-derivation over all four codes
  const KmParams p2(2, kQuarter);
  std::uint64_t best = 0;
  Rational best_val = km_vertex(VertexCode::from_index(2, 0), p2)[1];
  for (std::uint64_t idx = 1; idx < 4; ++idx) {
    const Rational v = km_vertex(VertexCode::from_index(2, idx), p2)[1];
    if (v < best_val) {
      best_val = v;
      best = idx;
    }
  }
  CHECK(km_start_code(p2) == VertexCode::from_index(2, best));
  CHECK(km_start_code(p2).str() == "00");

  // uniqueness of the minimizer over a parameter sweep
  for (const Rational& eps : sweep_eps()) {
    for (std::size_t d = 1; d <= 6; ++d) {
      const KmParams pd(d, eps);
      const VertexCode start = km_start_code(pd);
      const Rational start_last = km_vertex(start, pd)[d - 1];
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx) {
        const VertexCode u = VertexCode::from_index(d, idx);
        if (u == start) continue;
        CHECK(km_vertex(u, pd)[d - 1] > start_last);
      }
    }
  }

  CHECK_THROWS_AS(km_start_code(KmParams(25, kQuarter)),
                  InstanceTooLargeError);
}

TEST_CASE("code to basis round trip follows the generator row order") {
  const VertexCode u = VertexCode::parse("101");
  const Basis b = km_code_basis(u);
  CHECK(b.indices() == std::vector<std::size_t>{1, 2, 5});
  CHECK(km_code_from_basis(b, 3) == u);
  CHECK_FALSE(km_code_from_basis(Basis({0, 1, 4}), 3).has_value());
  CHECK_FALSE(km_code_from_basis(Basis({0, 2}), 3).has_value());

  // tight rows of km_vertex are exactly the coded basis
  const KmParams p(3, kQuarter);
  const HPolytope km = make_klee_minty(3, kQuarter);
  CHECK(vertex_of(km, b) == km_vertex(u, p));
}
