#pragma once

#include <array>

#include "dyncube/gridcore.hpp"

namespace dyncube::heisenberg {

struct HPoint {
  double a = 0, b = 0, c = 0;
};

// fundamental-domain representative, all coordinates in [0,1)
struct NilPoint {
  double a = 0, b = 0, c = 0;
};

struct RotationParams {
  double alpha;
  HPoint s, t;

  static RotationParams make(double alpha);
};

HPoint mul(const HPoint& g, const HPoint& h);
NilPoint canonical(const HPoint& h);
HPoint lift(const NilPoint& p);

NilPoint apply_S(const NilPoint& p, const RotationParams& params);
NilPoint apply_T(const NilPoint& p, const RotationParams& params);

// max over the three coordinates of the circle distance on the canonical chart
double torus_dist(const NilPoint& p, const NilPoint& q);

struct WitnessReport {
  long long n = 0, m = 0;
  NilPoint x;
  std::array<double, 4> distances{};  // to (Gamma, (0,0,c), (0,0,c), (0,0,c))
  double max = 0;
  double bound = 0;  // 6 * epsilon
  bool pass = false;
};

WitnessReport witness_search(double c, double alpha, double epsilon,
                             long long search_bound = 10'000'000);
bool strong_witness_scan(double c, double alpha, double epsilon, long long N);

}  // namespace dyncube::heisenberg
