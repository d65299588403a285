#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dessin/arith.hpp"
#include "dessin/belyi.hpp"
#include "dessin/enumerate.hpp"
#include "dessin/errors.hpp"
#include "dessin/genfun.hpp"
#include "dessin/render.hpp"

namespace {

using namespace dessin;

std::string rat(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cpx(Complex z) {
  return "(" + num(z.real()) + "," + num(z.imag()) + ")";
}

void run_count(int edges) {
  for (const auto& [passport, count] : map_counts(edges))
    std::cout << passport.str() << ": " << count << "\n";
}

void run_trees(const std::string& passport_text, int guard) {
  Passport p = Passport::parse(passport_text);
  std::vector<int> auts;
  for (const auto& cls : enumerate_plane_trees(p.edges(), guard))
    if (passport_of(cls.map) == p) auts.push_back(cls.aut);
  std::cout << "count: " << auts.size() << "\n";
  std::cout << "weighted: " << rat(weighted_tree_count(p)) << "\n";
  std::cout << "aut:";
  for (int a : auts) std::cout << " " << a;
  std::cout << "\n";
}

void run_enumerate(const std::string& passport_text, int edges, int guard) {
  std::vector<PlaneMap> maps;
  if (!passport_text.empty()) {
    Passport p = Passport::parse(passport_text);
    for (auto& m : enumerate_21maps(p.edges(), guard))
      if (passport_of(m) == p) maps.push_back(std::move(m));
  } else {
    maps = enumerate_21maps(edges, guard);
  }
  bool first = true;
  for (const auto& m : maps) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << to_text(m);
  }
}

std::string describe_entry(const AdmissibleEntry& e) {
  if (e.unconstrained) return "unconstrained";
  std::string out;
  if (e.via_n_minus_1) out += " (n-1)";
  if (e.via_n_plus_1) out += " (n+1)";
  if (e.via_small_exception) {
    out += " small-exception kappa";
    for (long k : e.kappas) out += " " + std::to_string(k);
  }
  return out.empty() ? "-" : out.substr(1);
}

void run_analyze(const std::string& passport_text, long emax,
                 const std::string& side_name) {
  Passport p = Passport::parse(passport_text);
  Side side = side_name == "black" ? Side::Black : Side::White;

  std::cout << "S-INVARIANT\n";
  for (auto s : {Side::White, Side::Black}) {
    auto value = s_invariant(p, s);
    std::cout << "s(" << (s == Side::White ? "white" : "black") << ") = "
              << (value ? std::to_string(*value) : "none") << "\n";
  }

  Integer n_maps = passport_count(p);
  if (emax <= 0) emax = (long)n_maps;
  auto report = admissible_ramifications(p, side, emax);
  std::cout << "\nADMISSIBLE-E (" << side_name << ", n+1 = " << report.n + 1
            << ", e_max = " << emax << ")\n";
  for (const auto& entry : report.entries)
    std::cout << "e=" << entry.e_tau << ": " << describe_entry(entry) << "\n";
  // the third case read with k = maximal degree instead of the small
  // valuation; flag indices the two readings disagree about
  if (report.s) {
    const auto& counts = side == Side::White ? p.white : p.black;
    long kmax = counts.rbegin()->first;
    std::string extra;
    for (const auto& entry : report.entries) {
      Rational q(*report.s * (entry.e_tau - 2 * kmax), report.n - 1);
      bool alt = report.n >= 2 && denominator(q) == 1 && q > kmax;
      if (alt != entry.via_small_exception)
        extra += " " + std::to_string(entry.e_tau);
    }
    if (!extra.empty())
      std::cout << "note: max-degree reading of the third case differs at e ="
                << extra << "\n";
  }

  auto decomp = orbit_decompositions(p, side, (long)n_maps);
  std::cout << "\nORBIT-DECOMPOSITIONS (" << side_name << ", N = " << n_maps
            << ")\n";
  for (const auto& partition : decomp.partitions) {
    std::string parts, details;
    for (const auto& [part, splits] : partition) {
      if (!parts.empty()) parts += ", ";
      parts += std::to_string(part);
      for (const auto& split : splits) {
        std::string sum;
        for (const auto& [e, n] : split) {
          if (!sum.empty()) sum += " + ";
          sum += std::to_string(e) + "*" + std::to_string(n);
        }
        details += "  " + std::to_string(part) + " = " + sum;
      }
    }
    std::cout << "{" << parts << "}" << details << "\n";
  }
}

void run_newton(const std::string& coeff_list, long prime) {
  std::vector<Integer> coeffs;
  std::stringstream in(coeff_list);
  std::string tok;
  while (std::getline(in, tok, ',')) coeffs.emplace_back(tok);
  auto polygon = newton_polygon(coeffs, prime);
  for (const auto& seg : polygon.segments)
    std::cout << "segment slope " << rat(seg.slope) << " length " << seg.length
              << "\n";
  std::cout << "root valuations: ";
  bool first = true;
  for (const auto& [v, mult] : root_valuations(coeffs, prime)) {
    if (!first) std::cout << ", ";
    first = false;
    std::cout << rat(v) << " x" << mult;
  }
  std::cout << "\n";
}

void print_model(const BelyiModel& m) {
  std::cout << "white:";
  for (const auto& v : m.white) std::cout << " " << cpx(v.z) << "^" << v.degree;
  std::cout << "\nblack:";
  for (const auto& v : m.black) std::cout << " " << cpx(v.z) << "^" << v.degree;
  std::cout << "\nc: " << cpx(m.c) << "\nr: " << cpx(m.r)
            << "\nresidual: " << num(residual(m)) << "\n";
}

void run_solve(const std::string& passport_text, const SolveOptions& opts) {
  Passport p = Passport::parse(passport_text);
  bool first = true;
  for (const auto& m : solve_canonical(p, opts)) {
    if (!first) std::cout << "\n";
    first = false;
    print_model(m);
  }
}

struct RenderArgs {
  std::string passport;
  int solution = 0;
  SolveOptions solve;
  std::string viewport = "0.5,0,3,2";
  std::string size = "600x400";
  RenderOptions render;
  std::string out = "out.ppm";
};

void run_render(const RenderArgs& args) {
  Passport p = Passport::parse(args.passport);
  auto models = solve_canonical(p, args.solve);
  if (args.solution < 0 || args.solution >= (int)models.size())
    throw std::invalid_argument("solution index out of range (found " +
                                std::to_string(models.size()) + " models)");
  Viewport view;
  double cx, cy;
  if (std::sscanf(args.viewport.c_str(), "%lf,%lf,%lf,%lf", &cx, &cy,
                  &view.width, &view.height) != 4)
    throw std::invalid_argument("bad --viewport, expected cx,cy,w,h");
  view.center = Complex(cx, cy);
  if (std::sscanf(args.size.c_str(), "%dx%d", &view.pixels_x,
                  &view.pixels_y) != 2)
    throw std::invalid_argument("bad --size, expected WxH");
  Image img = render(models[args.solution], view, ColorRule{}, args.render);
  write_ppm(img, args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane bipartite 2^1-maps: enumeration, arithmetic, Belyi models"};
  app.require_subcommand(1);

  int edges = 0, guard = kDefaultEdgeGuard;
  std::string passport, side = "white", coeffs;
  long emax = 0, prime = 0;
  SolveOptions solve_opts;
  RenderArgs render_args;

  auto* count = app.add_subcommand("count", "passport counts of 2^1-maps");
  count->add_option("--edges", edges, "edge count")->required();

  auto* trees = app.add_subcommand("trees", "plane trees with a passport");
  trees->add_option("--passport", passport)->required();
  trees->add_option("--guard", guard, "edge budget guard");

  auto* enumerate =
      app.add_subcommand("enumerate", "list 2^1-maps as rotation systems");
  enumerate->add_option("--passport", passport);
  enumerate->add_option("--edges", edges);
  enumerate->add_option("--guard", guard);

  auto* analyze =
      app.add_subcommand("analyze", "field-of-definition constraints");
  analyze->add_option("--passport", passport)->required();
  analyze->add_option("--emax", emax);
  analyze->add_option("--side", side)->check(CLI::IsMember({"white", "black"}));

  auto* newton = app.add_subcommand("newton", "Newton polygon of a polynomial");
  newton->add_option("--coeffs", coeffs, "lowest degree first, comma separated")
      ->required();
  newton->add_option("--prime", prime)->required();

  auto* solve = app.add_subcommand("solve", "canonical Belyi models");
  solve->add_option("--passport", passport)->required();
  solve->add_option("--starts", solve_opts.starts);
  solve->add_option("--tol", solve_opts.tol);
  solve->add_option("--seed", solve_opts.seed);

  auto* rendercmd = app.add_subcommand("render", "attraction-time image");
  rendercmd->add_option("--passport", render_args.passport)->required();
  rendercmd->add_option("--solution", render_args.solution);
  rendercmd->add_option("--starts", render_args.solve.starts);
  rendercmd->add_option("--tol", render_args.solve.tol);
  rendercmd->add_option("--seed", render_args.solve.seed);
  rendercmd->add_option("--viewport", render_args.viewport, "cx,cy,w,h");
  rendercmd->add_option("--size", render_args.size, "WxH");
  rendercmd->add_option("--r0", render_args.render.r0);
  rendercmd->add_option("--escape", render_args.render.escape);
  rendercmd->add_option("--max-iter", render_args.render.max_iter);
  rendercmd->add_option("--threads", render_args.render.threads);
  rendercmd->add_option("--out", render_args.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) run_count(edges);
    if (*trees) run_trees(passport, guard);
    if (*enumerate) {
      if (passport.empty() && edges == 0)
        throw std::invalid_argument("enumerate needs --passport or --edges");
      run_enumerate(passport, edges, guard);
    }
    if (*analyze) run_analyze(passport, emax, side);
    if (*newton) run_newton(coeffs, prime);
    if (*solve) run_solve(passport, solve_opts);
    if (*rendercmd) run_render(render_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
