#include "shadowlab/parametric.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace shadowlab {

bool LambdaBound::at_most(const Rational& r) const {
  switch (kind) {
    case Kind::neg_inf: return true;
    case Kind::finite: return value <= r;
    case Kind::pos_inf: return false;
  }
  return false;
}

bool LambdaBound::at_least(const Rational& r) const {
  switch (kind) {
    case Kind::neg_inf: return false;
    case Kind::finite: return value >= r;
    case Kind::pos_inf: return true;
  }
  return false;
}

std::string LambdaBound::str() const {
  switch (kind) {
    case Kind::neg_inf: return "-inf";
    case Kind::finite: return value.str();
    case Kind::pos_inf: return "inf";
  }
  return "";
}

namespace {

std::size_t count_tight(const HPolytope& P, const RatVector& x) {
  std::size_t tight = 0;
  for (std::size_t i = 0; i < P.num_rows(); ++i)
    if (dot(P.row(i), x) == P.rhs(i)) ++tight;
  return tight;
}

std::optional<VertexCode> code_for(const HPolytope& P, const Basis& B) {
  if (!P.generator() || P.generator()->tag != "klee-minty") return std::nullopt;
  return km_code_from_basis(B, P.dim());
}

}  // namespace

std::vector<std::pair<std::size_t, RatVector>> edge_directions(
    const HPolytope& P, const Basis& B) {
  const std::size_t d = P.dim();
  const RatVector x = vertex_of(P, B);  // validates basis + feasibility
  if (count_tight(P, x) > d)
    throw DegeneracyError("vertex at basis {" + B.str() +
                          "} has more than dim tight rows");

  std::vector<RatVector> rows;
  rows.reserve(d);
  for (std::size_t k = 0; k < d; ++k) rows.push_back(P.row(B[k]));
  RatMatrix inverse;
  try {
    inverse = invert(RatMatrix::from_rows(std::move(rows)));
  } catch (const SingularSystemError&) {
    throw NonBasisError("rows {" + B.str() + "} do not form a basis");
  }

  // Column k of the inverse solves A_B z = e_k; negate to relax row k.
  std::vector<std::pair<std::size_t, RatVector>> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    RatVector z(d);
    for (std::size_t r = 0; r < d; ++r) z[r] = -inverse(r, k);
    out.emplace_back(B[k], std::move(z));
  }
  return out;
}

ParametricPath gass_saaty_path(const HPolytope& P, const RatVector& c,
                               const RatVector& d, const Basis& start) {
  const std::size_t dim = P.dim();
  if (c.size() != dim || d.size() != dim)
    throw DimensionError("objective vectors must match the polytope dimension");

  ParametricPath path;
  Basis basis = start;
  RatVector x = vertex_of(P, basis);

  {
    // The start vertex must maximize -d^T x, with c as the exact tiebreak:
    // every edge must increase d, or keep it constant while decreasing c.
    for (const auto& [row, z] : edge_directions(P, basis)) {
      const Rational dz = dot(d, z);
      const Rational cz = dot(c, z);
      if (dz.is_zero() && cz.is_zero())
        throw GenericityError("objective pair constant along edge relaxing row " +
                              std::to_string(row));
      if (dz.sign() < 0 || (dz.is_zero() && cz.sign() > 0))
        throw BadStartError(
            "start basis {" + start.str() +
            "} is not optimal as the parameter goes to -infinity");
    }
  }

  path.steps.emplace_back(basis, x);
  path.steps.back().code = code_for(P, basis);
  path.steps.back().lo = LambdaBound::neg_inf();

  const std::uint64_t safety_bound = binomial_guarded(P.num_rows(), dim);
  while (true) {
    if (path.steps.size() > safety_bound)
      throw Error("sweep exceeded the basis-count safety bound");

    // Next breakpoint: smallest crossing among edges whose d-rate is
    // positive (those become improving as lambda grows).
    std::optional<Rational> best_lambda;
    std::size_t best_row = 0;
    RatVector best_dir;
    bool tie = false;
    std::size_t tie_row = 0;
    for (auto& [row, z] : edge_directions(P, basis)) {
      const Rational dz = dot(d, z);
      const Rational cz = dot(c, z);
      if (dz.is_zero() && cz.is_zero())
        throw GenericityError("objective pair constant along edge relaxing row " +
                              std::to_string(row));
      if (dz.sign() <= 0) continue;
      Rational crossing = -cz / dz;
      if (!best_lambda || crossing < *best_lambda) {
        best_lambda = std::move(crossing);
        best_row = row;
        best_dir = std::move(z);
        tie = false;
      } else if (crossing == *best_lambda) {
        tie = true;
        tie_row = row;
      }
    }
    if (!best_lambda) break;  // optimal for every larger lambda
    if (tie)
      throw GenericityError("breakpoint tie between edges relaxing rows " +
                            std::to_string(best_row) + " and " +
                            std::to_string(tie_row));
    if (!path.breakpoints.empty() && !(*best_lambda > path.breakpoints.back()))
      throw GenericityError("breakpoints failed to strictly increase");

    // Walk the improving edge to its blocking constraint.
    std::optional<Rational> step;
    std::size_t blocking = 0;
    bool blocked_tie = false;
    for (std::size_t j = 0; j < P.num_rows(); ++j) {
      if (basis.contains(j)) continue;
      const Rational rate = dot(P.row(j), best_dir);
      if (rate.sign() <= 0) continue;
      Rational t = (P.rhs(j) - dot(P.row(j), x)) / rate;
      if (!step || t < *step) {
        step = std::move(t);
        blocking = j;
        blocked_tie = false;
      } else if (t == *step) {
        blocked_tie = true;
      }
    }
    if (!step)
      throw UnboundedError("edge relaxing row " + std::to_string(best_row) +
                           " never hits another constraint");
    if (blocked_tie)
      throw DegeneracyError("two constraints block the same edge; the next vertex is degenerate");

    x += *step * best_dir;
    basis = basis.pivoted(best_row, blocking);

    path.steps.back().hi = LambdaBound::finite(*best_lambda);
    path.breakpoints.push_back(*best_lambda);
    path.pivots.push_back(PivotEvent{best_row, blocking, *best_lambda, best_dir});

    path.steps.emplace_back(basis, x);
    path.steps.back().code = code_for(P, basis);
    path.steps.back().lo = LambdaBound::finite(*best_lambda);
  }
  path.steps.back().hi = LambdaBound::pos_inf();
  return path;
}

std::pair<Basis, RatVector> shadow_vertex_solve(const HPolytope& P,
                                                const RatVector& c,
                                                const Basis& start) {
  vertex_of(P, start);  // surfaces infeasible-basis errors before sweeping

  // Any negated strictly positive combination of the tight rows is uniquely
  // minimized at the start vertex, so the sweep's -infinity end is the start
  // basis by construction. The uniform sum can collide with an unlucky c
  // (exact breakpoint ties); the repair re-weights the combination with
  // successive powers before giving up.
  const Rational zero(0);
  std::optional<GenericityError> failure;
  for (unsigned scheme = 0; scheme < 3; ++scheme) {
    RatVector aux(P.dim());
    std::size_t position = 0;
    for (std::size_t r : start.indices()) {
      const Rational weight =
          Rational(static_cast<long long>(++position)).pow(scheme);
      aux -= weight * P.row(r);
    }
    try {
      const ParametricPath path = gass_saaty_path(P, c, aux, start);
      for (const auto& step : path.steps) {
        if (step.lo.at_most(zero) && step.hi.at_least(zero))
          return {step.basis, step.vertex};
      }
      throw Error("no sweep interval contains lambda = 0");
    } catch (const GenericityError& e) {
      failure = e;
    }
  }
  throw *failure;
}

OracleReport verify_path_against_oracle(const HPolytope& P,
                                        const ParametricPath& path,
                                        const RatVector& c, const RatVector& d,
                                        std::size_t samples) {
  OracleReport report;
  if (path.steps.empty()) {
    report.message = "empty path";
    return report;
  }

  const VertexEnumeration enumeration = enumerate_vertices(P);

  // Representative parameter values: midpoints of finite intervals, one
  // point beyond each open end, plus evenly spaced extras on demand.
  std::vector<std::pair<Rational, std::size_t>> probes;  // (lambda, step)
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto& step = path.steps[k];
    if (step.lo.is_finite() && step.hi.is_finite())
      probes.emplace_back(midpoint(step.lo.value, step.hi.value), k);
    else if (step.hi.is_finite())
      probes.emplace_back(step.hi.value - 1, k);
    else if (step.lo.is_finite())
      probes.emplace_back(step.lo.value + 1, k);
    else
      probes.emplace_back(Rational(0), k);
  }
  for (std::size_t extra = 1; probes.size() < samples; ++extra) {
    bool grew = false;
    for (std::size_t k = 0; k < path.steps.size() && probes.size() < samples;
         ++k) {
      const auto& step = path.steps[k];
      if (!step.lo.is_finite() || !step.hi.is_finite()) continue;
      // interior offsets 1/3, 1/4, 1/5, ... never collide with the midpoint
      const Rational t(1, static_cast<long long>(extra) + 2);
      probes.emplace_back(
          step.lo.value + (step.hi.value - step.lo.value) * t, k);
      grew = true;
    }
    if (!grew) break;  // no finite interval to subdivide further
  }

  for (const auto& [lambda, step_index] : probes) {
    RatVector objective = c + lambda * d;
    std::optional<Rational> best;
    const RatVector* argmax = nullptr;
    bool tie = false;
    for (const auto& [basis, vertex] : enumeration.vertices) {
      Rational value = dot(objective, vertex);
      if (!best || value > *best) {
        best = std::move(value);
        argmax = &vertex;
        tie = false;
      } else if (value == *best) {
        tie = true;
      }
    }
    ++report.samples_checked;
    if (!argmax || tie || !(*argmax == path.steps[step_index].vertex)) {
      report.failing_lambda = lambda;
      std::ostringstream msg;
      msg << "path vertex differs from enumerated optimum at lambda = "
          << lambda;
      if (tie) msg << " (optimum not unique)";
      report.message = msg.str();
      return report;
    }
  }
  report.pass = true;
  report.message = "all " + std::to_string(report.samples_checked) +
                   " sampled parameters match the enumeration oracle";
  return report;
}

void write_path_csv(std::ostream& os, const ParametricPath& path,
                    unsigned decimal_digits) {
  const std::size_t d = path.steps.empty() ? 0 : path.steps.front().vertex.size();
  os << "k,lambda_exact,lambda_decimal,code";
  for (std::size_t j = 1; j <= d; ++j) os << ",x" << j;
  os << '\n';
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto& step = path.steps[k];
    os << k << ',' << step.lo.str() << ',';
    os << (step.lo.is_finite() ? step.lo.value.decimal(decimal_digits) : step.lo.str());
    os << ',' << (step.code ? step.code->str() : "");
    for (std::size_t j = 0; j < step.vertex.size(); ++j)
      os << ',' << step.vertex[j];
    os << '\n';
  }
}

}  // namespace shadowlab
