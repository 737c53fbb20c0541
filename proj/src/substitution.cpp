#include "dyncube/substitution.hpp"

#include <cmath>

#include "json.hpp"

namespace dyncube {

SubstitutionRule morse_rule() {
  SubstitutionRule r;
  r.alphabet = Alphabet::binary();
  r.expansion = 2;
  // rows bottom-up: image(0) = [[0,1],[1,0]], image(1) = complement
  r.images.push_back(Pattern(r.alphabet, {0, 0, 2, 2}, {0, 1, 1, 0}));
  r.images.push_back(Pattern(r.alphabet, {0, 0, 2, 2}, {1, 0, 0, 1}));
  return r;
}

Rule1D thue_morse_rule() {
  Rule1D r;
  r.alphabet = Alphabet::binary();
  r.expansion = 2;
  r.images = {{0, 1}, {1, 0}};
  return r;
}

Pattern iterate(const SubstitutionRule& rule, Symbol seed, int n) {
  if (seed >= rule.alphabet.size()) throw ContractError("iterate: seed outside alphabet");
  if (n < 0) throw ContractError("iterate: negative level");
  const long long s = rule.expansion;
  long long side = 1;
  for (int i = 0; i < n; ++i) {
    side *= s;
    if (side > max_patch_side()) throw ResourceError("iterate: patch side exceeds ceiling");
  }
  std::vector<Symbol> cur{seed};
  long long cs = 1;
  for (int level = 0; level < n; ++level) {
    long long ns = cs * s;
    std::vector<Symbol> next(ns * ns);
    for (long long y = 0; y < cs; ++y)
      for (long long x = 0; x < cs; ++x) {
        const Pattern& img = rule.images[cur[y * cs + x]];
        for (long long dy = 0; dy < s; ++dy)
          for (long long dx = 0; dx < s; ++dx)
            next[(y * s + dy) * ns + (x * s + dx)] = img.cells()[dy * s + dx];
      }
    cur = std::move(next);
    cs = ns;
  }
  return Pattern(rule.alphabet, {0, 0, cs, cs}, std::move(cur));
}

Pattern central_patch(const SubstitutionRule& rule, int n) {
  if (n < 1) throw ContractError("central_patch: level must be positive");
  Pattern p = iterate(rule, 0, n);
  long long half = p.support().width / 2;
  return translate(p, {half, half});
}

std::set<Pattern> language(const Pattern& patch, long long w, long long h) {
  if (w < 1 || h < 1 || w > patch.support().width || h > patch.support().height)
    throw ContractError("language: window exceeds patch");
  std::set<Pattern> out;
  const Rect& s = patch.support();
  for (long long y = s.y0; y + h <= s.y0 + s.height; ++y)
    for (long long x = s.x0; x + w <= s.x0 + s.width; ++x)
      out.insert(reanchor(subpattern(patch, {x, y, w, h})));
  return out;
}

std::vector<Symbol> iterate1d(const Rule1D& rule, Symbol seed, int n) {
  if (seed >= rule.alphabet.size()) throw ContractError("iterate1d: seed outside alphabet");
  std::vector<Symbol> cur{seed};
  for (int level = 0; level < n; ++level) {
    std::vector<Symbol> next;
    next.reserve(cur.size() * rule.expansion);
    for (Symbol c : cur)
      next.insert(next.end(), rule.images[c].begin(), rule.images[c].end());
    cur = std::move(next);
  }
  return cur;
}

SubstitutionRule rule_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("rule JSON parse failure: ") + e.what());
  }
  SubstitutionRule r;
  try {
    for (const auto& l : j.at("alphabet")) r.alphabet.labels.push_back(l.get<std::string>());
    r.expansion = j.at("expansion").get<int>();
    if (r.expansion < 2) throw ContractError("rule expansion must be >= 2");
    r.images.resize(r.alphabet.size(), Pattern());
    for (int sym = 0; sym < r.alphabet.size(); ++sym) {
      const auto& rows = j.at("images").at(std::to_string(sym));
      std::vector<Symbol> cells;
      for (const auto& row : rows)
        for (const auto& c : row) cells.push_back(static_cast<Symbol>(c.get<int>()));
      r.images[sym] =
          Pattern(r.alphabet, {0, 0, r.expansion, r.expansion}, std::move(cells));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("rule JSON shape failure: ") + e.what());
  }
  return r;
}

}  // namespace dyncube
