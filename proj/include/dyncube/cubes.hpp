#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "dyncube/gridcore.hpp"

namespace dyncube {

struct WindowSpec {
  Rect window;  // the observation window B
  long long nmax = 1, mmax = 1;
};

// finite-window quadruple (x, S^n x, T^m x, S^n T^m x) read off one patch
struct CubeQuadruple {
  ShiftVector base;  // placement of x's window
  long long n = 0, m = 0;
  std::array<Pattern, 4> windows;  // re-anchored

  bool operator==(const CubeQuadruple&) const = default;
  friend bool operator<(const CubeQuadruple& a, const CubeQuadruple& b) {
    auto k = [](const CubeQuadruple& q) { return std::tuple(q.base.m, q.base.n, q.n, q.m); };
    return k(a) < k(b);
  }
};

enum class RelationKind { R_S, R_T, R_star_S, R_star_T };

struct RelationWitness {
  RelationKind kind = RelationKind::R_S;
  std::pair<Pattern, Pattern> pair;
  Pattern companion;  // the repeated coordinate
  CubeQuadruple quadruple;
};

enum class Direction { S, T };

std::vector<CubeQuadruple> cube_set(const Pattern& patch, const WindowSpec& spec);
std::vector<std::array<Pattern, 3>> k_set(const Pattern& patch, const ShiftVector& anchor,
                                          const WindowSpec& spec);
std::vector<RelationWitness> relation_pairs(const Pattern& patch, const WindowSpec& spec,
                                            RelationKind kind);
bool symmetry_closure_check(const CubeQuadruple& q, const Pattern& patch,
                            const WindowSpec& spec);
std::vector<ShiftVector> return_times(const Pattern& patch, const ShiftVector& anchor,
                                      const Rect& window, long long nmax, long long mmax);
// same base point under generators S' = T^{-1}S, T' = T
CubeQuadruple change_generators(const CubeQuadruple& q, const Pattern& patch,
                                const WindowSpec& spec);
bool window_transitivity(const Pattern& patch, const WindowSpec& spec, Direction dir);
bool window_weak_mixing_proxy(const Pattern& patch, const WindowSpec& spec);
// max over height-(n+1) horizontal strips of the number of distinct
// height-(n+1) columns occurring inside the strip
long long complexity_proxy(const Pattern& patch, int n);

}  // namespace dyncube
