#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyncube/automorphism.hpp"
#include "dyncube/cubes.hpp"
#include "dyncube/gridcore.hpp"
#include "dyncube/heisenberg.hpp"
#include "dyncube/product.hpp"
#include "dyncube/robinson.hpp"
#include "dyncube/substitution.hpp"
#include "json.hpp"

namespace {

using namespace dyncube;
using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Common {
  std::string system = "morse";
  int level = 4;
  int orientation = 0;
  std::string out;
  bool summary = false;
  long long seed = 0;
  int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_system = true) {
  if (with_system)
    cmd->add_option("--system", c.system,
                    "morse | robinson | product:<file> | custom:<rule-file>");
  cmd->add_option("--level", c.level, "substitution level / supertile order");
  cmd->add_option("--orientation", c.orientation, "robinson supertile orientation 0..3");
  cmd->add_option("--out", c.out, "report path (default stdout)");
  cmd->add_flag("--summary", c.summary, "counts only");
  cmd->add_option("--seed", c.seed, "seed for randomized runs");
  cmd->add_option("--threads", c.threads, "parallelism cap")->check(CLI::PositiveNumber);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Pattern make_patch(const Common& c) {
  if (c.system == "morse") return central_patch(morse_rule(), c.level);
  if (c.system == "robinson") return robinson::supertile(c.level, c.orientation);
  if (c.system.rfind("product:", 0) == 0)
    return build_product(product_spec_from_json(slurp(c.system.substr(8))));
  if (c.system.rfind("custom:", 0) == 0)
    return central_patch(rule_from_json(slurp(c.system.substr(7))), c.level);
  throw ContractError("unknown system: " + c.system);
}

ordered_json provenance(const Common& c) {
  ordered_json j;
  j["tool"] = "dyncube";
  j["version"] = kVersion;
  j["system"] = c.system;
  j["level"] = c.level;
  j["seed"] = c.seed;
  return j;
}

void emit(const Common& c, const ordered_json& j) {
  std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out);
    if (!out) throw ContractError("cannot write file: " + c.out);
    out << text;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write file: " + path);
  out << text;
}

ordered_json rect_json(const Rect& r) {
  return ordered_json{{"x0", r.x0}, {"y0", r.y0}, {"width", r.width}, {"height", r.height}};
}

ordered_json pattern_json(const Pattern& p) {
  return ordered_json::parse(pattern_to_json(p));
}

Rect window_rect(int r) { return {-r, -r, 2 * r + 1, 2 * r + 1}; }

int run_generate(const Common& c, const std::string& pgm, const std::string& ppm) {
  Pattern p = make_patch(c);
  if (!c.out.empty()) write_file(c.out, pattern_to_json(p) + "\n");
  else std::cout << pattern_to_json(p) << "\n";
  if (!pgm.empty()) write_file(pgm, pattern_to_pgm(p));
  if (!ppm.empty()) {
    std::vector<std::array<unsigned char, 3>> pal;
    if (c.system == "robinson") {
      pal = robinson::robinson_palette();
    } else {
      int n = p.alphabet().size();
      for (int i = 0; i < n; ++i) {
        unsigned char g = static_cast<unsigned char>(n <= 1 ? 0 : (255 * i) / (n - 1));
        pal.push_back({g, g, g});
      }
    }
    write_file(ppm, pattern_to_ppm(p, pal));
  }
  return 0;
}

int run_cubes(const Common& c, int wrad, long long nmax, long long mmax) {
  Pattern p = make_patch(c);
  WindowSpec spec{window_rect(wrad), nmax, mmax};
  auto cubes = cube_set(p, spec);
  ordered_json j = provenance(c);
  j["window"] = rect_json(spec.window);
  j["bounds"] = {nmax, mmax};
  j["count"] = cubes.size();
  if (!c.summary) {
    std::map<Pattern, int> ids;
    std::vector<const Pattern*> pats;
    ordered_json qs = ordered_json::array();
    for (const auto& q : cubes) {
      ordered_json e;
      e["base"] = {q.base.n, q.base.m};
      e["n"] = q.n;
      e["m"] = q.m;
      ordered_json w = ordered_json::array();
      for (const auto& win : q.windows) {
        auto [it, fresh] = ids.emplace(win, static_cast<int>(ids.size()));
        if (fresh) pats.push_back(&it->first);
        w.push_back(it->second);
      }
      e["windows"] = w;
      qs.push_back(e);
    }
    j["quadruples"] = qs;
    ordered_json wp = ordered_json::array();
    for (const Pattern* pt : pats) wp.push_back(pattern_json(*pt));
    j["windowPatterns"] = wp;
  }
  emit(c, j);
  return 0;
}

int run_relate(const Common& c, const std::string& kind, int wrad, long long nmax,
               long long mmax) {
  Pattern p = make_patch(c);
  WindowSpec spec{window_rect(wrad), nmax, mmax};
  RelationKind rk = kind == "T" ? RelationKind::R_T : RelationKind::R_S;
  auto pairs = relation_pairs(p, spec, rk);
  long long off_diagonal = 0;
  for (const auto& w : pairs)
    if (!(w.pair.first == w.pair.second)) ++off_diagonal;
  ordered_json j = provenance(c);
  j["kind"] = kind == "T" ? "R_T" : "R_S";
  j["window"] = rect_json(spec.window);
  j["bounds"] = {nmax, mmax};
  j["count"] = pairs.size();
  j["offDiagonal"] = off_diagonal;
  if (!c.summary) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : pairs) {
      ordered_json e;
      e["first"] = pattern_json(w.pair.first);
      e["second"] = pattern_json(w.pair.second);
      e["witness"] = {{"base", {w.quadruple.base.n, w.quadruple.base.m}},
                      {"n", w.quadruple.n},
                      {"m", w.quadruple.m}};
      arr.push_back(e);
    }
    j["pairs"] = arr;
  }
  emit(c, j);
  return 0;
}

int run_detect_product(const Common& c, int radius, int grid) {
  Pattern p = make_patch(c);
  const Rect& s = p.support();
  long long cx = s.x0 + s.width / 2, cy = s.y0 + s.height / 2;
  long long half = grid / 2;
  std::optional<ConflictWitness> first_conflict;
  for (long long dy = -half; dy <= half; ++dy)
    for (long long dx = -half; dx <= half; ++dx) {
      ShiftVector anchor{cx + dx, cy + dy};
      if (cx + dx - radius < s.x0 || cx + dx + radius >= s.x0 + s.width ||
          cy + dy - radius < s.y0 || cy + dy + radius >= s.y0 + s.height)
        continue;
      auto res = detect_product(p, radius, anchor);
      if (std::holds_alternative<ProductDecomposition>(res)) {
        ordered_json j = provenance(c);
        j["radius"] = radius;
        j["result"] = "decomposition";
        j["decomposition"] =
            ordered_json::parse(decomposition_to_json(std::get<ProductDecomposition>(res)));
        emit(c, j);
        return 0;
      }
      if (!first_conflict) first_conflict = std::get<ConflictWitness>(res);
    }
  if (!first_conflict) throw ContractError("no anchor admits the requested radius");
  ordered_json j = provenance(c);
  j["radius"] = radius;
  j["result"] = "conflict";
  j["conflict"] = ordered_json::parse(conflict_to_json(*first_conflict));
  emit(c, j);
  return 2;
}

int run_automorphisms(const Common& c, int radius, long long check_size, long long budget) {
  Pattern p = make_patch(c);
  auto codes = enumerate_codes(p, radius, check_size, budget);
  ordered_json j = provenance(c);
  j["radius"] = radius;
  j["checkSize"] = check_size;
  j["count"] = codes.size();
  if (!c.summary) {
    ordered_json arr = ordered_json::array();
    for (const auto& code : codes) arr.push_back(ordered_json::parse(code_to_json(code)));
    j["codes"] = arr;
  }
  emit(c, j);
  return 0;
}

int run_robinson_faults(Common& c, const std::string& in, const std::string& demo) {
  Pattern p = [&] {
    if (!in.empty()) return pattern_from_json(slurp(in));
    if (demo == "one") return robinson::one_fault_completions(c.level).front();
    if (demo == "two") return robinson::two_fault_completions(c.level).front();
    return robinson::supertile(c.level, c.orientation);
  }();
  auto rep = robinson::fault_lines(p);
  ordered_json j = provenance(c);
  j["decompositionOrder"] = rep.decomposition_order;
  j["horizontal"] = rep.horizontal ? ordered_json(*rep.horizontal) : ordered_json(nullptr);
  j["vertical"] = rep.vertical ? ordered_json(*rep.vertical) : ordered_json(nullptr);
  j["horizontalCrosses"] = rep.horizontal_crosses;
  j["verticalCrosses"] = rep.vertical_crosses;
  emit(c, j);
  return 0;
}

int run_robinson_fibers(const Common& c, int faults) {
  std::vector<Pattern> comps = faults == 1 ? robinson::one_fault_completions(c.level)
                                           : robinson::two_fault_completions(c.level);
  auto hist = classify_fibers(comps);
  ordered_json j = provenance(c);
  j["faultLines"] = faults;
  j["completions"] = comps.size();
  ordered_json h = ordered_json::object();
  for (const auto& [size, count] : hist) h[std::to_string(size)] = count;
  j["classSizes"] = h;
  emit(c, j);
  return 0;
}

int run_heisenberg(const Common& c, double cc, const std::string& alpha_str, double eps,
                   long long nbound, long long scanN) {
  double alpha = alpha_str == "cbrt2" ? std::cbrt(2.0) : std::stod(alpha_str);
  auto rep = heisenberg::witness_search(cc, alpha, eps, nbound);
  ordered_json j = provenance(c);
  j["c"] = cc;
  j["alpha"] = alpha;
  j["eps"] = eps;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["distances"] = rep.distances;
  j["max"] = rep.max;
  j["bound"] = rep.bound;
  j["pass"] = rep.pass;
  if (scanN > 0) j["strongScan"] = heisenberg::strong_witness_scan(cc, alpha, eps, scanN);
  emit(c, j);
  return rep.pass ? 0 : 2;
}

int run_complexity(const Common& c, int n) {
  Pattern p = make_patch(c);
  ordered_json j = provenance(c);
  j["n"] = n;
  ordered_json vals = ordered_json::array();
  for (int k = 0; k <= n; ++k) vals.push_back(complexity_proxy(p, k));
  j["values"] = vals;
  j["value"] = vals.back();
  emit(c, j);
  return 0;
}

int run_return_times(const Common& c, int wrad, long long ax, long long ay, long long nmax,
                     long long mmax) {
  Pattern p = make_patch(c);
  auto times = return_times(p, {ax, ay}, window_rect(wrad), nmax, mmax);
  ordered_json j = provenance(c);
  j["window"] = rect_json(window_rect(wrad));
  j["anchor"] = {ax, ay};
  j["bounds"] = {nmax, mmax};
  j["count"] = times.size();
  if (!c.summary) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : times) arr.push_back({t.n, t.m});
    j["times"] = arr;
  }
  emit(c, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-window workbench for commuting-shift cube structures"};
  app.require_subcommand(1);

  Common c;
  std::string pgm, ppm, kind = "S", in, demo, alpha_str = "cbrt2";
  int wrad = 1, radius = 0, grid = 5, faults = 2, cn = 8;
  long long nmax = 4, mmax = 4, check_size = 2, budget = 20'000'000;
  long long ax = 0, ay = 0, nbound = 10'000'000, scanN = 0;
  double cc = 0.5, eps = 0.01;

  auto* gen = app.add_subcommand("generate", "emit a patch");
  add_common(gen, c);
  gen->add_option("--pgm", pgm);
  gen->add_option("--ppm", ppm);

  auto* cu = app.add_subcommand("cubes", "window cube set");
  add_common(cu, c);
  cu->add_option("--window", wrad, "window radius r (B_r)");
  cu->add_option("--nmax", nmax);
  cu->add_option("--mmax", mmax);

  auto* rel = app.add_subcommand("relate", "window relation pairs");
  add_common(rel, c);
  rel->add_option("--kind", kind, "S | T");
  rel->add_option("--window", wrad);
  rel->add_option("--nmax", nmax);
  rel->add_option("--mmax", mmax);

  auto* dp = app.add_subcommand("detect-product", "product-extension check");
  add_common(dp, c);
  dp->add_option("--radius", radius);
  dp->add_option("--anchors", grid, "side of the centered anchor subgrid");

  auto* au = app.add_subcommand("automorphisms", "block-code search");
  add_common(au, c);
  au->add_option("--radius", radius);
  au->add_option("--check-size", check_size);
  au->add_option("--budget", budget);

  auto* rob = app.add_subcommand("robinson", "robinson tooling");
  auto* rsup = rob->add_subcommand("supertile", "emit a supertile");
  add_common(rsup, c, false);
  rsup->add_option("--pgm", pgm);
  rsup->add_option("--ppm", ppm);
  auto* rfau = rob->add_subcommand("faults", "fault-line report");
  add_common(rfau, c, false);
  rfau->add_option("--in", in, "pattern JSON file");
  rfau->add_option("--demo", demo, "one | two (fault-line assembly)");
  auto* rfib = rob->add_subcommand("fibers", "fiber classification");
  add_common(rfib, c, false);
  rfib->add_option("--faults", faults, "1 | 2");

  auto* hei = app.add_subcommand("heisenberg", "nilmanifold simulator");
  auto* hw = hei->add_subcommand("witness", "regionally-proximal witness");
  add_common(hw, c, false);
  hw->add_option("--c", cc);
  hw->add_option("--alpha", alpha_str, "real value or cbrt2");
  hw->add_option("--eps", eps);
  hw->add_option("--search-bound", nbound);
  hw->add_option("--strong-scan", scanN, "also scan anchored quadruples up to N");

  auto* cx = app.add_subcommand("complexity", "column-class proxy");
  add_common(cx, c);
  cx->add_option("--n", cn);

  auto* rt = app.add_subcommand("return-times", "cylinder return set");
  add_common(rt, c);
  rt->add_option("--window", wrad);
  rt->add_option("--anchor-x", ax);
  rt->add_option("--anchor-y", ay);
  rt->add_option("--nmax", nmax);
  rt->add_option("--mmax", mmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_generate(c, pgm, ppm);
    if (cu->parsed()) return run_cubes(c, wrad, nmax, mmax);
    if (rel->parsed()) return run_relate(c, kind, wrad, nmax, mmax);
    if (dp->parsed()) return run_detect_product(c, radius, grid);
    if (au->parsed()) return run_automorphisms(c, radius, check_size, budget);
    if (rob->parsed()) {
      c.system = "robinson";
      if (rsup->parsed()) return run_generate(c, pgm, ppm);
      if (rfau->parsed()) return run_robinson_faults(c, in, demo);
      if (rfib->parsed()) return run_robinson_fibers(c, faults);
      std::cerr << "robinson: missing subcommand\n";
      return 1;
    }
    if (hei->parsed()) {
      if (hw->parsed()) return run_heisenberg(c, cc, alpha_str, eps, nbound, scanN);
      std::cerr << "heisenberg: missing subcommand\n";
      return 1;
    }
    if (cx->parsed()) return run_complexity(c, cn);
    if (rt->parsed()) return run_return_times(c, wrad, ax, ay, nmax, mmax);
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
