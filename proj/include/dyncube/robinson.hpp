#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dyncube/gridcore.hpp"

namespace dyncube::robinson {

enum class EdgeKind : std::uint8_t { Arm, None };
enum class Lateral : std::uint8_t { Left, Center, Right };

struct EdgeLabel {
  EdgeKind kind = EdgeKind::None;
  bool arrowhead = false;  // true: the head is at this edge (arrow leaves the tile)
  Lateral lateral = Lateral::Center;
  bool principal = false;

  bool operator==(const EdgeLabel&) const = default;
  friend bool operator<(const EdgeLabel& a, const EdgeLabel& b) {
    auto k = [](const EdgeLabel& e) {
      return std::tuple(e.kind, e.arrowhead, e.lateral, e.principal);
    };
    return k(a) < k(b);
  }
};

// head-against-tail with equal lateral and principal flags
bool edges_match(const EdgeLabel& a, const EdgeLabel& b);

enum EdgeDir { N = 0, E = 1, S = 2, W = 3 };

struct RobinsonTile {
  int id = -1;
  std::array<EdgeLabel, 4> edges;  // N,E,S,W
  bool is_cross = false;

  bool operator==(const RobinsonTile&) const = default;
};

struct TileOrbitEntry {
  int id;
  int base;  // base tile index 0..4
  int rotation;  // counterclockwise quarter turns applied to the base tile
  bool reflection;  // horizontal flip applied before rotation
};

const std::vector<RobinsonTile>& tileset();
const std::vector<TileOrbitEntry>& orbit_table();
Alphabet robinson_alphabet();  // labels R00..R27

int rotate_id(int id);   // counterclockwise quarter turn
int reflect_id(int id);  // flip across the vertical axis

// tile of the reference configuration at absolute coordinates
int configuration_tile(long long x, long long y);

struct ValidityReport {
  bool ok = true;
  std::string reason;
  // first violating shared edge, as the lower-left cell plus direction
  std::optional<std::pair<std::pair<long long, long long>, EdgeDir>> edge;
};

ValidityReport is_valid(const Pattern& patch);
Pattern supertile(int n, int orientation);

struct FaultLineReport {
  std::optional<long long> horizontal;  // row index
  std::optional<long long> vertical;    // column index
  int horizontal_crosses = 0;
  int vertical_crosses = 0;
  int decomposition_order = 0;  // largest visible supertile grid order
};

FaultLineReport fault_lines(const Pattern& patch);

// four order-n supertiles around a central fault cross; quadrant orientations
// fixed to the compatible arrangement (SW,SE,NW,NE) = (2,3,1,0)
std::vector<Pattern> two_fault_completions(int n);
// two order-n supertiles (orientations 1 | 0) separated by one column
std::vector<Pattern> one_fault_completions(int n);

// 28 colors indexed by tile id; the four crosses get saturated distinct hues
std::vector<std::array<unsigned char, 3>> robinson_palette();

}  // namespace dyncube::robinson
