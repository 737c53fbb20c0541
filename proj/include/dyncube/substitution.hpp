#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyncube/gridcore.hpp"

namespace dyncube {

struct SubstitutionRule {
  Alphabet alphabet;
  int expansion = 2;                  // s >= 2
  std::vector<Pattern> images;        // per symbol, support Rect(0,0,s,s)
};

struct Rule1D {
  Alphabet alphabet;
  int expansion = 2;
  std::vector<std::vector<Symbol>> images;  // per symbol, length s
};

SubstitutionRule morse_rule();
Rule1D thue_morse_rule();

Pattern iterate(const SubstitutionRule& rule, Symbol seed, int n);
// iterate anchored on the centered square B_n (lower-left at -floor(s^n/2))
Pattern central_patch(const SubstitutionRule& rule, int n);
std::set<Pattern> language(const Pattern& patch, long long w, long long h);
std::vector<Symbol> iterate1d(const Rule1D& rule, Symbol seed, int n);

SubstitutionRule rule_from_json(const std::string& text);

}  // namespace dyncube
