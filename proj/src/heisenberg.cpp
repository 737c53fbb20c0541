#include "dyncube/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace dyncube::heisenberg {

namespace {

double frac(double x) { return x - std::floor(x); }
double circle(double x) {
  double f = frac(x);
  return std::min(f, 1.0 - f);
}

}  // namespace

RotationParams RotationParams::make(double alpha) {
  if (alpha == 0) throw ContractError("alpha must be nonzero");
  return {alpha, {alpha, 0, 0}, {0, 1.0 / alpha, alpha}};
}

HPoint mul(const HPoint& g, const HPoint& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

NilPoint canonical(const HPoint& h) {
  return {frac(h.a), frac(h.b), frac(h.c - h.a * std::floor(h.b))};
}

HPoint lift(const NilPoint& p) { return {p.a, p.b, p.c}; }

NilPoint apply_S(const NilPoint& p, const RotationParams& params) {
  return canonical(mul(params.s, lift(p)));
}

NilPoint apply_T(const NilPoint& p, const RotationParams& params) {
  return canonical(mul(params.t, lift(p)));
}

double torus_dist(const NilPoint& p, const NilPoint& q) {
  return std::max({circle(p.a - q.a), circle(p.b - q.b), circle(p.c - q.c)});
}

WitnessReport witness_search(double c, double alpha, double epsilon,
                             long long search_bound) {
  if (epsilon <= 0 || epsilon >= 1) throw ContractError("epsilon must be in (0,1)");
  if (c < 0 || c >= 1) throw ContractError("c must be in [0,1)");
  WitnessReport rep;
  rep.bound = 6 * epsilon;
  if (c == 0) {  // degenerate diagonal target
    rep.pass = true;
    return rep;
  }

  const NilPoint gamma{0, 0, 0};
  const NilPoint target{0, 0, c};
  WitnessReport best;
  best.bound = rep.bound;
  best.max = 1e300;

  // powers in H: s^n = (n*alpha, 0, 0); t^m = (0, m/alpha, m*alpha)
  auto quad = [&](long long n, long long m, WitnessReport& out) {
    HPoint x{0, c / (n * alpha), 0};
    HPoint sn{n * alpha, 0, 0};
    HPoint tm{0, m / alpha, m * alpha};
    NilPoint x0 = canonical(x);
    NilPoint x1 = canonical(mul(sn, x));
    NilPoint x2 = canonical(mul(tm, x));
    NilPoint x3 = canonical(mul(sn, mul(tm, x)));
    out.n = n;
    out.m = m;
    out.x = x0;
    out.distances = {torus_dist(x0, gamma), torus_dist(x1, target), torus_dist(x2, target),
                     torus_dist(x3, target)};
    out.max = *std::max_element(out.distances.begin(), out.distances.end());
    out.pass = out.max < out.bound;
  };

  std::vector<long long> good_n;
  for (long long n = 1; n <= search_bound && good_n.size() < 64; ++n)
    if (circle(n * alpha) < epsilon && c / (n * alpha) < epsilon && c / (n * alpha) > 0)
      good_n.push_back(n);
  if (good_n.empty())
    throw ResourceError("witness_search: no n with {n*alpha} and c/(n*alpha) below epsilon");

  for (long long n : good_n) {
    for (long long m = 1; m <= search_bound; ++m) {
      if (circle(m * alpha - c) >= 2 * epsilon) continue;  // cheap reject on x2
      WitnessReport cand;
      cand.bound = rep.bound;
      quad(n, m, cand);
      if (cand.max < best.max) best = cand;
      if (cand.pass) return cand;
    }
  }
  std::ostringstream os;
  os << "witness_search: budget " << search_bound << " exhausted; best max distance "
     << best.max;
  throw ResourceError(os.str());
}

bool strong_witness_scan(double c, double alpha, double epsilon, long long N) {
  if (epsilon <= 0) throw ContractError("epsilon must be positive");
  const NilPoint target{0, 0, frac(c)};
  for (long long n = -N; n <= N; ++n) {
    NilPoint x1 = canonical(HPoint{n * alpha, 0, 0});
    if (torus_dist(x1, target) >= epsilon) continue;
    for (long long m = -N; m <= N; ++m) {
      NilPoint x2 = canonical(HPoint{0, m / alpha, m * alpha});
      if (torus_dist(x2, target) >= epsilon) continue;
      NilPoint x3 = canonical(mul(HPoint{n * alpha, 0, 0}, HPoint{0, m / alpha, m * alpha}));
      if (torus_dist(x3, target) < epsilon) return true;
    }
  }
  return false;
}

}  // namespace dyncube::heisenberg
