// Command-line front end: polytope generators, shadow polygons, parametric
// sweeps and the verification suites, all over exact rational arithmetic.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
// 3 genericity/degeneracy error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shadowlab/km_cube.hpp"
#include "shadowlab/parametric.hpp"
#include "shadowlab/polytope.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/svg.hpp"

using namespace shadowlab;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGenericity = 3;

std::uint64_t enumeration_guard() {
  if (const char* env = std::getenv("SHADOWLAB_MAX_ENUM")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError("SHADOWLAB_MAX_ENUM is not an unsigned integer");
    }
  }
  return kDefaultEnumerationGuard;
}

RatVector parse_vector(const std::string& text) {
  std::vector<Rational> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ','))
    entries.push_back(Rational::parse(token));
  if (entries.empty()) throw ParseError("empty vector literal");
  return RatVector(std::move(entries));
}

Rational km_eps_of(const HPolytope& P) {
  const auto eps = P.generator()->param("eps");
  if (!eps) throw ParseError("klee-minty generator tag lacks an eps parameter");
  return Rational::parse(*eps);
}

bool is_km(const HPolytope& P) {
  return P.generator() && P.generator()->tag == "klee-minty";
}

bool is_box_tag(const HPolytope& P) {
  return P.generator() && P.generator()->tag == "box";
}

/// Generator tags are provenance claims; reject files whose rows were
/// edited after generation instead of trusting the tag.
KmParams validated_km_params(const HPolytope& P) {
  const KmParams p(P.dim(), km_eps_of(P));
  const HPolytope regenerated = make_klee_minty(p.d, p.eps);
  if (!(P.lhs() == regenerated.lhs() && P.rhs() == regenerated.rhs()))
    throw ParseError("rows do not match the klee-minty generator tag");
  return p;
}

Box validated_box(const HPolytope& P) {
  const std::size_t d = P.dim();
  if (P.num_rows() != 2 * d)
    throw ParseError("rows do not match the box generator tag");
  RatVector lowers(d), uppers(d);
  for (std::size_t i = 0; i < d; ++i) {
    lowers[i] = -P.rhs(2 * i);
    uppers[i] = P.rhs(2 * i + 1);
  }
  const Box box{std::move(lowers), std::move(uppers)};
  const HPolytope regenerated = make_box(box);
  if (!(P.lhs() == regenerated.lhs() && P.rhs() == regenerated.rhs()))
    throw ParseError("rows do not match the box generator tag");
  return box;
}

struct VertexSet {
  std::vector<RatVector> vertices;
  std::vector<std::string> labels;  // codes for Klee-Minty, indices otherwise
};

/// Vertices of a generated instance come from the closed forms (codes for
/// the deformed cube, corner bits for boxes); custom input falls back to
/// brute-force basis enumeration under the guard.
VertexSet collect_vertices(const HPolytope& P) {
  VertexSet out;
  const std::uint64_t guard = enumeration_guard();
  if (is_km(P)) {
    const KmParams p = validated_km_params(P);
    if (p.d >= 63 || (std::uint64_t(1) << p.d) > guard)
      throw InstanceTooLargeError("2^dim vertices exceed the enumeration guard");
    const std::uint64_t count = std::uint64_t(1) << p.d;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const VertexCode u = VertexCode::from_index(p.d, idx);
      out.vertices.push_back(km_vertex(u, p));
      out.labels.push_back(u.str());
    }
    return out;
  }
  if (is_box_tag(P)) {
    const Box box = validated_box(P);
    const std::size_t d = P.dim();
    if (d >= 63 || (std::uint64_t(1) << d) > guard)
      throw InstanceTooLargeError("2^dim corners exceed the enumeration guard");
    const std::uint64_t count = std::uint64_t(1) << d;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      RatVector v(d);
      for (std::size_t i = 0; i < d; ++i)
        v[i] = ((idx >> i) & 1u) ? box.uppers[i] : box.lowers[i];
      out.vertices.push_back(std::move(v));
      out.labels.push_back(std::to_string(idx));
    }
    return out;
  }
  const VertexEnumeration e = enumerate_vertices(P, guard);
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    out.vertices.push_back(e.vertices[i].second);
    out.labels.push_back(std::to_string(i));
  }
  return out;
}

ProjectionPair resolve_pair(const HPolytope& P, const std::string& c_text,
                            const std::string& d_text, bool km_objectives) {
  if (km_objectives) {
    if (!is_km(P))
      throw ParameterError(
          "--km-objectives requires a klee-minty generator tag");
    const KmParams p = validated_km_params(P);
    return ProjectionPair(objective_c(p), RatVector::unit(p.d, p.d - 1));
  }
  if (c_text.empty() || d_text.empty())
    throw ParameterError("provide --c and --d, or --km-objectives");
  return ProjectionPair(parse_vector(c_text), parse_vector(d_text));
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << bytes;
  if (!os) throw IoError("write failed: " + path);
}

// --- gen --------------------------------------------------------------

int run_gen(bool km, std::size_t dim, const std::string& eps,
            const std::string& bounds, const std::string& out_path) {
  const HPolytope P = [&] {
    if (km) return make_klee_minty(dim, Rational::parse(eps));
    const RatVector flat = parse_vector(bounds);
    if (flat.size() != 2 * dim)
      throw ParameterError("--bounds needs 2*dim values l1,u1,l2,u2,...");
    RatVector lowers(dim), uppers(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      lowers[i] = flat[2 * i];
      uppers[i] = flat[2 * i + 1];
    }
    return make_box(Box{std::move(lowers), std::move(uppers)});
  }();

  write_hpoly_file(out_path, P);
  std::cout << "rows: " << P.num_rows() << "\n"
            << "sparsity: " << sparsity(P) << "\n"
            << "file: " << out_path << "\n";
  return 0;
}

// --- shadow -----------------------------------------------------------

int run_shadow(const std::string& polytope_path, const std::string& c_text,
               const std::string& d_text, bool km_objectives,
               const std::string& csv_path, const std::string& svg_path) {
  const HPolytope P = read_hpoly_file(polytope_path);
  const ProjectionPair pp = resolve_pair(P, c_text, d_text, km_objectives);
  const VertexSet vs = collect_vertices(P);
  const ShadowResult shadow = shadow_of_vertices(pp, vs.vertices);

  std::cout << "input_vertices: " << vs.vertices.size() << "\n"
            << "hull_vertices: " << shadow.polygon.size() << "\n"
            << "degenerate: " << (shadow.polygon.degenerate ? "true" : "false")
            << "\n";

  if (!csv_path.empty()) {
    std::ostringstream os;
    write_polygon_csv(os, shadow, vs.labels);
    write_text_file(csv_path, os.str());
    std::cout << "csv: " << csv_path << "\n";
  }
  if (!svg_path.empty()) {
    std::ostringstream os;
    write_polygon_svg(os, shadow.polygon);
    write_text_file(svg_path, os.str());
    std::cout << "svg: " << svg_path << "\n";
  }
  return 0;
}

// --- path -------------------------------------------------------------

int run_path(const std::string& polytope_path, const std::string& c_text,
             const std::string& d_text, bool km_objectives,
             const std::string& start_text, const std::string& start_code,
             bool km_start, const std::string& csv_path,
             const std::string& svg_path) {
  const HPolytope P = read_hpoly_file(polytope_path);

  RatVector c, d;
  if (km_objectives) {
    const ProjectionPair pp = resolve_pair(P, "", "", true);
    c = pp.c();
    d = pp.d();
  } else {
    if (c_text.empty() || d_text.empty())
      throw ParameterError("provide --c and --d, or --km-objectives");
    c = parse_vector(c_text);
    d = parse_vector(d_text);
  }

  const Basis start = [&] {
    if (km_start) {
      if (!is_km(P))
        throw ParameterError("--km-start requires a klee-minty generator tag");
      return km_code_basis(km_start_code(validated_km_params(P)));
    }
    if (!start_code.empty()) {
      if (!is_km(P))
        throw ParameterError("--start-code requires a klee-minty generator tag");
      const VertexCode u = VertexCode::parse(start_code);
      if (u.size() != P.dim())
        throw ParameterError("--start-code length must equal the dimension");
      return km_code_basis(u);
    }
    if (start_text.empty())
      throw ParameterError(
          "provide --start row indices, --start-code, or --km-start");
    std::vector<std::size_t> rows;
    std::stringstream ss(start_text);
    std::string token;
    while (std::getline(ss, token, ','))
      rows.push_back(std::stoull(token));
    return Basis(std::move(rows));
  }();

  const ParametricPath path = gass_saaty_path(P, c, d, start);
  std::cout << "vertex_count: " << path.vertex_count() << "\n"
            << "breakpoint_count: " << path.breakpoints.size() << "\n";

  if (!csv_path.empty()) {
    std::ostringstream os;
    write_path_csv(os, path);
    write_text_file(csv_path, os.str());
    std::cout << "csv: " << csv_path << "\n";
  }
  if (!svg_path.empty()) {
    // polygon of the projected path vertices with the pivot order overlaid
    const ProjectionPair pp(c, d);
    std::vector<Point2> projected;
    projected.reserve(path.steps.size());
    for (const auto& step : path.steps)
      projected.push_back(project(pp, step.vertex));
    std::ostringstream os;
    write_polygon_svg(os, hull2d(projected), projected);
    write_text_file(svg_path, os.str());
    std::cout << "svg: " << svg_path << "\n";
  }
  return 0;
}

// --- verify -----------------------------------------------------------

class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    lines_.emplace_back(key, os.str());
  }
  void add_bool(const std::string& key, bool value) {
    lines_.emplace_back(key, value ? "true" : "false");
    all_pass_ = all_pass_ && value;
  }
  bool pass() const { return all_pass_; }

  std::string render() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines_) os << k << ": " << v << "\n";
    os << (all_pass_ ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  bool all_pass_ = true;
};

Report verify_km_shadow(std::size_t dim, const Rational& eps) {
  const KmParams p(dim, eps);
  Report report;
  report.add("suite", "km-shadow");
  report.add("dim", dim);
  report.add("eps", eps.str());

  const std::uint64_t count = std::uint64_t(1) << p.d;
  std::vector<RatVector> vertices;
  vertices.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    vertices.push_back(km_vertex(VertexCode::from_index(p.d, idx), p));

  const ProjectionPair pp(objective_c(p), RatVector::unit(p.d, p.d - 1));
  const ShadowResult shadow = shadow_of_vertices(pp, vertices);

  report.add("vertices", count);
  report.add("hull_vertices", shadow.polygon.size());
  report.add("expected_hull_vertices", count);
  report.add_bool("hull_size_matches", shadow.polygon.size() == count);

  std::size_t singletons = 0;
  std::vector<bool> covered(count, false);
  for (const auto& pre : shadow.preimages) {
    if (pre.size() == 1) ++singletons;
    for (std::size_t i : pre) covered[i] = true;
  }
  const bool all_codes =
      std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  report.add_bool("every_vertex_extreme", all_codes);
  report.add_bool("preimages_unique", singletons == shadow.preimages.size());
  return report;
}

Report verify_km_lemmas(std::size_t dim, const Rational& eps) {
  const KmParams p(dim, eps);
  Report report;
  report.add("suite", "km-lemmas");
  report.add("dim", dim);
  report.add("eps", eps.str());

  const std::uint64_t count = std::uint64_t(1) << p.d;
  std::uint64_t negativity_checks = 0;
  std::uint64_t edge_checks = 0;
  bool all_negative = true;
  bool edges_match = true;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const VertexCode u = VertexCode::from_index(p.d, idx);
    const NeighborDominanceReport dominance = check_neighbor_dominance(u, p);
    negativity_checks += dominance.neighbor_gaps.size();
    all_negative = all_negative && dominance.all_negative;
    for (std::size_t l = 1; l <= p.d; ++l) {
      // edge_delta cross-asserts the closed form against the recursion and
      // throws FormulaMismatchError on any divergence
      const RatVector delta = edge_delta(u, l, p);
      edges_match =
          edges_match && delta == edge_direction(u, l, p) * neighbor_gap(u, l, p);
      ++edge_checks;
    }
  }
  report.add("negativity_checks", negativity_checks);
  report.add_bool("all_gaps_negative", all_negative);
  report.add("edge_identity_checks", edge_checks);
  report.add_bool("edge_identity_ok", edges_match);

  const std::size_t parity_dim = std::min<std::size_t>(p.d, 8);
  std::uint64_t parity_checks = 0;
  bool parity_ok = true;
  for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << parity_dim); ++idx) {
    const VertexCode u = VertexCode::from_index(parity_dim, idx);
    for (std::size_t l = 1; l <= parity_dim; ++l)
      for (std::size_t j = l; j <= parity_dim; ++j) {
        parity_ok = parity_ok &&
                    parity_sign(u, j + 1, parity_dim) *
                            parity_sign(u, l + 1, parity_dim) ==
                        parity_sign(u, l + 1, j);
        ++parity_checks;
      }
  }
  report.add("parity_dim", parity_dim);
  report.add("parity_checks", parity_checks);
  report.add_bool("parity_identity_ok", parity_ok);
  return report;
}

Report verify_box_bound(std::size_t dim, std::size_t trials,
                        std::uint64_t seed) {
  Report report;
  report.add("suite", "box-bound");
  report.add("dim", dim);
  report.add("trials", trials);
  report.add("seed", seed);

  std::mt19937_64 rng(seed);
  const auto draw = [&rng](int bound) {
    const long long num =
        static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    const long long den = static_cast<long long>(rng() % bound) + 1;
    return Rational(num, den);
  };

  std::size_t max_hull = 0;
  std::size_t max_patterns = 0;
  bool all_pass = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    RatVector lowers(dim), uppers(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      lowers[i] = draw(9);
      Rational width = draw(9).abs();
      if (width.is_zero()) width = Rational(1, 2);
      uppers[i] = lowers[i] + width;
    }
    RatVector c(dim), d(dim);
    while (true) {
      for (std::size_t i = 0; i < dim; ++i) {
        c[i] = draw(9);
        d[i] = draw(9);
      }
      try {
        ProjectionPair probe(c, d);
        break;
      } catch (const IndependenceError&) {
      }
    }
    const BoxShadowReport r =
        box_shadow_report(Box{lowers, uppers}, ProjectionPair(c, d));
    max_hull = std::max(max_hull, r.hull_size);
    max_patterns = std::max(max_patterns, r.pattern_count);
    all_pass = all_pass && r.pass() && r.hull_size <= 2 * dim &&
               r.pattern_count <= 2 * dim;
  }
  report.add("max_hull_size", max_hull);
  report.add("max_pattern_count", max_patterns);
  report.add("bound", 2 * dim);
  report.add_bool("hull_within_bound", max_hull <= 2 * dim);
  report.add_bool("patterns_within_bound", max_patterns <= 2 * dim);
  report.add_bool("preimages_match_patterns", all_pass);
  return report;
}

Report verify_path_oracle(std::size_t dim, const Rational& eps) {
  const KmParams p(dim, eps);
  Report report;
  report.add("suite", "path-oracle");
  report.add("dim", dim);
  report.add("eps", eps.str());

  const HPolytope km = make_klee_minty(dim, eps);
  const RatVector c = objective_c(p);
  const RatVector d = RatVector::unit(dim, dim - 1);
  const ParametricPath path =
      gass_saaty_path(km, c, d, km_code_basis(km_start_code(p)));

  report.add("vertex_count", path.vertex_count());
  report.add("breakpoint_count", path.breakpoints.size());
  report.add_bool("visits_all_vertices",
                  path.vertex_count() == (std::size_t(1) << dim));

  const OracleReport oracle = verify_path_against_oracle(km, path, c, d);
  report.add("oracle_samples", oracle.samples_checked);
  report.add_bool("oracle_pass", oracle.pass);

  bool interior = true;
  for (const auto& step : path.steps) {
    const Rational lambda = objective_d_u(*step.code, p).lambda;
    if (step.lo.is_finite() && !(step.lo.value < lambda)) interior = false;
    if (step.hi.is_finite() && !(lambda < step.hi.value)) interior = false;
  }
  report.add_bool("multipliers_interior", interior);
  return report;
}

int run_verify(const std::string& suite, std::size_t dim,
               const std::string& eps_text, std::size_t trials,
               std::uint64_t seed, const std::string& out_path) {
  const Rational eps = Rational::parse(eps_text);
  Report report = [&] {
    if (suite == "km-shadow") return verify_km_shadow(dim, eps);
    if (suite == "km-lemmas") return verify_km_lemmas(dim, eps);
    if (suite == "box-bound") return verify_box_bound(dim, trials, seed);
    if (suite == "path-oracle") return verify_path_oracle(dim, eps);
    throw ParameterError("unknown verify suite: " + suite);
  }();

  const std::string rendered = report.render();
  std::cout << rendered;
  if (!out_path.empty()) write_text_file(out_path, rendered);
  return report.pass() ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic laboratory for polytope shadows and parametric "
      "simplex sweeps"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a generated polytope as .hpoly");
  gen->require_subcommand(1);
  std::size_t gen_dim = 2;
  std::string gen_eps = "1/4";
  std::string gen_bounds;
  std::string gen_out = "out.hpoly";
  auto* gen_km =
      gen->add_subcommand("km", "deformed cube with coupled bound pairs");
  gen_km->add_option("--dim", gen_dim, "dimension")->required();
  gen_km->add_option("--eps", gen_eps, "coupling in (0,1/2), e.g. 1/4");
  gen_km->add_option("-o,--out", gen_out, "output .hpoly path");
  auto* gen_box = gen->add_subcommand("box", "axis-parallel box");
  gen_box->add_option("--dim", gen_dim, "dimension")->required();
  gen_box->add_option("--bounds", gen_bounds, "l1,u1,l2,u2,...")->required();
  gen_box->add_option("-o,--out", gen_out, "output .hpoly path");

  auto* shadow =
      app.add_subcommand("shadow", "project vertices and hull them");
  std::string sh_poly, sh_c, sh_d, sh_csv, sh_svg;
  bool sh_km_obj = false;
  shadow->add_option("--polytope", sh_poly, ".hpoly input")->required();
  shadow->add_option("--c", sh_c, "first projection vector, comma separated");
  shadow->add_option("--d", sh_d, "second projection vector");
  shadow->add_flag("--km-objectives", sh_km_obj,
                   "derive the projection pair from the generator's eps");
  shadow->add_option("--csv", sh_csv, "write hull vertices as CSV");
  shadow->add_option("--svg", sh_svg, "write the polygon as SVG");

  auto* path =
      app.add_subcommand("path", "parametric sweep over c + lambda*d");
  std::string pa_poly, pa_c, pa_d, pa_start, pa_start_code, pa_csv, pa_svg;
  bool pa_km_obj = false, pa_km_start = false;
  path->add_option("--polytope", pa_poly, ".hpoly input")->required();
  path->add_option("--c", pa_c, "base objective");
  path->add_option("--d", pa_d, "parametric objective");
  path->add_flag("--km-objectives", pa_km_obj,
                 "derive objectives from the generator's eps");
  path->add_option("--start", pa_start, "start basis row indices i,j,...");
  path->add_option("--start-code", pa_start_code,
                   "start vertex code, e.g. 0101 (klee-minty instances)");
  path->add_flag("--km-start", pa_km_start,
                 "start at the generator's sweep-optimal vertex");
  path->add_option("--csv", pa_csv, "write the breakpoint path as CSV");
  path->add_option("--svg", pa_svg, "plot projected path vertices as SVG");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string ve_suite;
  std::size_t ve_dim = 4;
  std::string ve_eps = "1/4";
  std::size_t ve_trials = 100;
  std::uint64_t ve_seed = 42;
  std::string ve_out;
  verify
      ->add_option("suite", ve_suite,
                   "km-shadow | km-lemmas | box-bound | path-oracle")
      ->required();
  verify->add_option("--dim", ve_dim, "dimension");
  verify->add_option("--eps", ve_eps, "coupling parameter");
  verify->add_option("--trials", ve_trials, "randomized trials (box-bound)");
  verify->add_option("--seed", ve_seed, "random seed (box-bound)");
  verify->add_option("-o,--out", ve_out, "also write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_km->parsed(), gen_dim, gen_eps, gen_bounds, gen_out);
    if (shadow->parsed())
      return run_shadow(sh_poly, sh_c, sh_d, sh_km_obj, sh_csv, sh_svg);
    if (path->parsed())
      return run_path(pa_poly, pa_c, pa_d, pa_km_obj, pa_start, pa_start_code,
                      pa_km_start, pa_csv, pa_svg);
    if (verify->parsed())
      return run_verify(ve_suite, ve_dim, ve_eps, ve_trials, ve_seed, ve_out);
  } catch (const GenericityError& e) {
    std::cerr << "error (genericity): " << e.what() << "\n";
    return kExitGenericity;
  } catch (const DegeneracyError& e) {
    std::cerr << "error (degeneracy): " << e.what() << "\n";
    return kExitGenericity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
