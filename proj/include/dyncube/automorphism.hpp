#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyncube/cubes.hpp"
#include "dyncube/gridcore.hpp"

namespace dyncube {

// sliding-block code: (2r+1)-square around each cell -> output symbol
struct BlockCode {
  int radius = 0;
  std::map<Pattern, Symbol> table;  // keys re-anchored at (0,0)
  ShiftVector shift;                // applied after the block map

  bool operator==(const BlockCode&) const = default;
};

// image shrinks by radius on each side, then translates by the shift
Pattern apply_code(const BlockCode& code, const Pattern& patch);

// all tables passing language preservation plus the injectivity proxy at
// check_size; DFS over entries ordered by key frequency, forward-checked
std::vector<BlockCode> enumerate_codes(const Pattern& patch, int radius,
                                       long long check_size,
                                       long long budget = 20'000'000);

struct RelationPreservationReport {
  bool ok = true;
  std::optional<std::pair<Pattern, Pattern>> violation;
};
RelationPreservationReport preserves_relations(const BlockCode& code, const Pattern& patch,
                                               const WindowSpec& spec);

// agreement-class sizes of completions that coincide off their fault lines
std::map<long long, long long> classify_fibers(const std::vector<Pattern>& completions);

std::string code_to_json(const BlockCode& code);

}  // namespace dyncube
