// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Every check is exact; there are no numeric tolerances anywhere.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shadowlab/km_cube.hpp"
#include "shadowlab/parametric.hpp"
#include "shadowlab/shadow.hpp"

using namespace shadowlab;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << name
            << "): " << (pass ? "PASS" : "FAIL");
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

std::vector<RatVector> all_km_vertices(const KmParams& p) {
  std::vector<RatVector> out;
  out.reserve(std::size_t(1) << p.d);
  for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << p.d); ++idx)
    out.push_back(km_vertex(VertexCode::from_index(p.d, idx), p));
  return out;
}

// 1. The projected deformed cube keeps all 2^d vertices on its hull.
void criterion_shadow_count() {
  bool pass = true;
  std::string detail;
  for (const Rational& eps : {Rational(1, 4), Rational(1, 3)}) {
    for (std::size_t d = 2; d <= 12 && pass; ++d) {
      const KmParams p(d, eps);
      const ProjectionPair pp(objective_c(p), RatVector::unit(d, d - 1));
      const ShadowResult shadow = shadow_of_vertices(pp, all_km_vertices(p));
      if (shadow.polygon.size() != (std::size_t(1) << d)) {
        pass = false;
        detail = "d=" + std::to_string(d) + " eps=" + eps.str() + " hull=" +
                 std::to_string(shadow.polygon.size());
      }
    }
  }
  report(1, "full 2^d shadow of the deformed cube, d=2..12", pass, detail);
}

// 2. Every neighbor gap under the lifted objective is strictly negative.
void criterion_neighbor_gaps() {
  bool pass = true;
  std::string detail;
  for (const Rational& eps :
       {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    for (std::size_t d = 1; d <= 12 && pass; ++d) {
      const KmParams p(d, eps);
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d) && pass;
           ++idx) {
        const VertexCode u = VertexCode::from_index(d, idx);
        const NeighborDominanceReport r = check_neighbor_dominance(u, p);
        if (!r.all_negative) {
          pass = false;
          detail = "u=" + u.str() + " eps=" + eps.str();
        }
      }
    }
  }
  report(2, "strict negativity of all d*2^d neighbor gaps, d=1..12", pass,
         detail);
}

// 3. Closed-form edge offsets equal the recursion difference; the parity
//    cancellation identity holds.
void criterion_edge_forms() {
  bool pass = true;
  std::string detail;
  for (std::size_t d = 1; d <= 10 && pass; ++d) {
    const KmParams p(d, Rational(1, 4));
    for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d) && pass; ++idx) {
      const VertexCode u = VertexCode::from_index(d, idx);
      for (std::size_t l = 1; l <= d && pass; ++l) {
        const RatVector direct = km_vertex(u.flipped(l), p) - km_vertex(u, p);
        const RatVector closed =
            edge_direction(u, l, p) * neighbor_gap(u, l, p);
        if (!(closed == direct)) {
          pass = false;
          detail = "edge form u=" + u.str() + " l=" + std::to_string(l);
        }
      }
    }
  }
  for (std::size_t d = 1; d <= 8 && pass; ++d) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d) && pass; ++idx) {
      const VertexCode u = VertexCode::from_index(d, idx);
      for (std::size_t l = 1; l <= d && pass; ++l)
        for (std::size_t j = l; j <= d && pass; ++j)
          if (parity_sign(u, j + 1, d) * parity_sign(u, l + 1, d) !=
              parity_sign(u, l + 1, j)) {
            pass = false;
            detail = "parity u=" + u.str();
          }
    }
  }
  report(3, "edge closed forms (d<=10) and parity identity (d<=8)", pass,
         detail);
}

// 4. The sweep walks all 2^d vertices in one-bit steps with strictly
//    increasing breakpoints and exact objective continuity.
void criterion_sweep() {
  bool pass = true;
  std::string detail;
  for (std::size_t d = 2; d <= 12 && pass; ++d) {
    const KmParams p(d, Rational(1, 4));
    const HPolytope km = make_klee_minty(d, p.eps);
    const RatVector c = objective_c(p);
    const RatVector dv = RatVector::unit(d, d - 1);
    ParametricPath path;
    try {
      path = gass_saaty_path(km, c, dv, km_code_basis(km_start_code(p)));
    } catch (const Error& e) {
      pass = false;
      detail = std::string("sweep threw: ") + e.what();
      break;
    }
    if (path.vertex_count() != (std::size_t(1) << d)) {
      pass = false;
      detail = "d=" + std::to_string(d) + " M=" +
               std::to_string(path.vertex_count());
      break;
    }
    for (std::size_t k = 0; k + 1 < path.breakpoints.size(); ++k)
      if (!(path.breakpoints[k] < path.breakpoints[k + 1])) {
        pass = false;
        detail = "breakpoints not strictly increasing";
      }
    for (std::size_t k = 1; k < path.steps.size() && pass; ++k) {
      int flips = 0;
      for (std::size_t j = 1; j <= d; ++j)
        if (path.steps[k - 1].code->bit(j) != path.steps[k].code->bit(j))
          ++flips;
      if (flips != 1) {
        pass = false;
        detail = "non-gray step at k=" + std::to_string(k);
      }
    }
    for (std::size_t k = 0; k < path.breakpoints.size() && pass; ++k) {
      const RatVector objective = c + path.breakpoints[k] * dv;
      if (dot(objective, path.steps[k].vertex) !=
          dot(objective, path.steps[k + 1].vertex)) {
        pass = false;
        detail = "continuity broken at breakpoint " + std::to_string(k);
      }
    }
  }
  report(4, "sweep visits 2^d vertices in gray order, d=2..12", pass, detail);
}

// 5. Enumerated argmax agrees with the path on every interval; the
//    per-vertex multiplier lies strictly inside its interval.
void criterion_oracle() {
  bool pass = true;
  std::string detail;
  for (std::size_t d = 2; d <= 8 && pass; ++d) {
    const KmParams p(d, Rational(1, 4));
    const HPolytope km = make_klee_minty(d, p.eps);
    const RatVector c = objective_c(p);
    const RatVector dv = RatVector::unit(d, d - 1);
    const ParametricPath path =
        gass_saaty_path(km, c, dv, km_code_basis(km_start_code(p)));
    const OracleReport oracle = verify_path_against_oracle(km, path, c, dv);
    if (!oracle.pass) {
      pass = false;
      detail = "oracle mismatch at d=" + std::to_string(d) + ": " +
               oracle.message;
      break;
    }
    for (const auto& step : path.steps) {
      const Rational lambda = objective_d_u(*step.code, p).lambda;
      const bool inside =
          (!step.lo.is_finite() || step.lo.value < lambda) &&
          (!step.hi.is_finite() || lambda < step.hi.value);
      if (!inside) {
        pass = false;
        detail = "multiplier outside interval for code " + step.code->str();
      }
    }
  }
  report(5, "path equals enumeration oracle with interior multipliers, d=2..8",
         pass, detail);
}

// 6. Randomized box shadows respect the 2d bound with matching patterns.
void criterion_box_bound() {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(42);
  const auto draw = [&rng](int bound) {
    const long long num =
        static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    const long long den = static_cast<long long>(rng() % bound) + 1;
    return Rational(num, den);
  };
  for (std::size_t d = 2; d <= 8 && pass; ++d) {
    for (int trial = 0; trial < 200 && pass; ++trial) {
      RatVector lowers(d), uppers(d);
      for (std::size_t i = 0; i < d; ++i) {
        lowers[i] = draw(9);
        Rational width = draw(9).abs();
        if (width.is_zero()) width = Rational(1, 2);
        uppers[i] = lowers[i] + width;
      }
      RatVector c(d), dv(d);
      while (true) {
        for (std::size_t i = 0; i < d; ++i) {
          c[i] = draw(9);
          dv[i] = draw(9);
        }
        try {
          ProjectionPair probe(c, dv);
          break;
        } catch (const IndependenceError&) {
        }
      }
      const BoxShadowReport r =
          box_shadow_report(Box{lowers, uppers}, ProjectionPair(c, dv));
      if (!(r.hull_size <= 2 * d && r.pattern_count <= 2 * d && r.pass())) {
        pass = false;
        detail = "d=" + std::to_string(d) + " trial=" + std::to_string(trial) +
                 " hull=" + std::to_string(r.hull_size);
      }
    }
  }
  report(6, "200 random box shadows per d=2..8 stay within 2d", pass, detail);
}

// 7. Hull idempotence and permutation invariance on random point sets.
void criterion_hull_properties() {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(20240842);
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    const std::size_t n = 3 + rng() % 28;
    std::vector<Point2> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      points.push_back(
          Point2{Rational(static_cast<long long>(rng() % 21) - 10,
                          static_cast<long long>(rng() % 6) + 1),
                 Rational(static_cast<long long>(rng() % 21) - 10,
                          static_cast<long long>(rng() % 6) + 1)});
    }
    const ShadowPolygon hull = hull2d(points);
    if (!(hull2d(hull.vertices) == hull)) {
      pass = false;
      detail = "idempotence failed at trial " + std::to_string(trial);
      break;
    }
    std::vector<Point2> shuffled = points;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng() % i]);
    if (!(hull2d(shuffled) == hull)) {
      pass = false;
      detail = "permutation invariance failed at trial " +
               std::to_string(trial);
    }
  }
  report(7, "hull idempotence and permutation invariance, 1000 sets", pass,
         detail);
}

// 8. Identical flags and seed reproduce verify reports byte for byte.
void criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "shadowlab_acceptance";
  fs::create_directories(dir);
  const auto run_to = [&dir](const std::string& args, const std::string& name) {
    const fs::path out = dir / name;
    const std::string command = std::string(SHADOWLAB_CLI_PATH) + " " + args +
                                " > " + out.string() + " 2>&1";
    if (std::system(command.c_str()) != 0) return std::string();
    std::ifstream is(out, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };

  bool pass = true;
  std::string detail;
  const std::vector<std::string> invocations = {
      "verify box-bound --dim 6 --trials 60 --seed 42",
      "verify km-lemmas --dim 8 --eps 1/3",
      "verify km-shadow --dim 8 --eps 1/4",
      "verify path-oracle --dim 5 --eps 1/4",
  };
  for (std::size_t i = 0; i < invocations.size() && pass; ++i) {
    const std::string first =
        run_to(invocations[i], "run_a_" + std::to_string(i) + ".txt");
    const std::string second =
        run_to(invocations[i], "run_b_" + std::to_string(i) + ".txt");
    if (first.empty() || first != second) {
      pass = false;
      detail = "non-identical output for: " + invocations[i];
    }
  }
  report(8, "verify reports byte-identical across repeated runs", pass,
         detail);
}

}  // namespace

int main() {
  criterion_shadow_count();
  criterion_neighbor_gaps();
  criterion_edge_forms();
  criterion_sweep();
  criterion_oracle();
  criterion_box_bound();
  criterion_hull_properties();
  criterion_determinism();

  if (failures == 0) {
    std::cout << "RESULT: PASS (8/8)" << std::endl;
    return 0;
  }
  std::cout << "RESULT: FAIL (" << (8 - failures) << "/8)" << std::endl;
  return 1;
}
