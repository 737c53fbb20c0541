#include "dyncube/automorphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dyncube/robinson.hpp"
#include "dyncube/substitution.hpp"
#include "json.hpp"

namespace dyncube {

Pattern apply_code(const BlockCode& code, const Pattern& patch) {
  const Rect& s = patch.support();
  long long r = code.radius;
  long long w = s.width - 2 * r, h = s.height - 2 * r;
  if (w < 1 || h < 1) throw ContractError("apply_code: patch too small for radius");
  long long side = 2 * r + 1;
  std::vector<Symbol> cells(w * h);
  for (long long y = 0; y < h; ++y)
    for (long long x = 0; x < w; ++x) {
      Pattern b = reanchor(subpattern(patch, {s.x0 + x, s.y0 + y, side, side}));
      auto it = code.table.find(b);
      if (it == code.table.end()) throw ContractError("apply_code: block outside table");
      cells[y * w + x] = it->second;
    }
  Pattern out(patch.alphabet(), {s.x0 + r, s.y0 + r, w, h}, std::move(cells));
  return translate(out, code.shift);
}

namespace {

struct SearchSetup {
  long long cw = 0, ch = 0;               // center grid size
  std::vector<int> key_at;                 // key index per center position
  std::vector<Pattern> keys;               // by key index, frequency-ordered
  std::vector<std::vector<long long>> regions_of_key;  // region ids touching a key
  std::vector<std::vector<int>> region_keys;           // key index per region cell
  std::set<std::vector<Symbol>> check_language;
  long long check = 0;
};

SearchSetup build_setup(const Pattern& patch, int radius, long long check_size) {
  const Rect& s = patch.support();
  long long r = radius, side = 2 * r + 1;
  if (s.width < side + check_size - 1 || s.height < side + check_size - 1)
    throw ContractError("enumerate_codes: patch too small for radius and check size");

  SearchSetup su;
  su.check = check_size;
  su.cw = s.width - 2 * r;
  su.ch = s.height - 2 * r;
  su.key_at.resize(su.cw * su.ch);

  std::map<std::vector<Symbol>, int> seen;
  std::vector<long long> freq;
  for (long long y = 0; y < su.ch; ++y)
    for (long long x = 0; x < su.cw; ++x) {
      std::vector<Symbol> cells;
      cells.reserve(side * side);
      for (long long j = 0; j < side; ++j)
        for (long long i = 0; i < side; ++i)
          cells.push_back(patch.at(s.x0 + x + i, s.y0 + y + j));
      auto [it, fresh] = seen.emplace(std::move(cells), static_cast<int>(seen.size()));
      if (fresh) {
        su.keys.emplace_back(patch.alphabet(), Rect{0, 0, side, side}, it->first);
        freq.push_back(0);
      }
      ++freq[it->second];
      su.key_at[y * su.cw + x] = it->second;
    }

  // reorder keys by descending frequency (ties by pattern order)
  std::vector<int> order(su.keys.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return su.keys[a] < su.keys[b];
  });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<Pattern> keys2(su.keys.size());
  for (size_t i = 0; i < order.size(); ++i) keys2[i] = su.keys[order[i]];
  su.keys = std::move(keys2);
  for (auto& k : su.key_at) k = rank[k];

  for (const auto& w : language(patch, check_size, check_size))
    su.check_language.insert(w.cells());

  su.regions_of_key.resize(su.keys.size());
  for (long long y = 0; y + check_size <= su.ch; ++y)
    for (long long x = 0; x + check_size <= su.cw; ++x) {
      long long rid = static_cast<long long>(su.region_keys.size());
      std::vector<int> rk;
      rk.reserve(check_size * check_size);
      std::set<int> touched;
      for (long long j = 0; j < check_size; ++j)
        for (long long i = 0; i < check_size; ++i) {
          int k = su.key_at[(y + j) * su.cw + (x + i)];
          rk.push_back(k);
          touched.insert(k);
        }
      su.region_keys.push_back(std::move(rk));
      for (int k : touched) su.regions_of_key[k].push_back(rid);
    }
  return su;
}

// does some language word agree with the partial image on this region?
bool region_feasible(const SearchSetup& su, const std::vector<int>& assigned,
                     long long rid) {
  const std::vector<int>& rk = su.region_keys[rid];
  for (const auto& word : su.check_language) {
    bool ok = true;
    for (size_t i = 0; i < rk.size(); ++i) {
      int v = assigned[rk[i]];
      if (v >= 0 && v != word[i]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool injectivity_proxy_ok(const Pattern& patch, const BlockCode& code, long long check) {
  const Rect& s = patch.support();
  long long r = code.radius, big = check + 2 * r;
  if (s.width < big || s.height < big) return true;
  std::map<std::vector<Symbol>, std::vector<Symbol>> image_to_center;
  for (long long y = 0; y + big <= s.height; ++y)
    for (long long x = 0; x + big <= s.width; ++x) {
      Pattern src = reanchor(subpattern(patch, {s.x0 + x, s.y0 + y, big, big}));
      Pattern img = apply_code(code, src);
      std::vector<Symbol> center;
      center.reserve(check * check);
      for (long long j = 0; j < check; ++j)
        for (long long i = 0; i < check; ++i) center.push_back(src.at(r + i, r + j));
      auto [it, fresh] = image_to_center.emplace(img.cells(), center);
      if (!fresh && it->second != center) return false;
    }
  return true;
}

}  // namespace

std::vector<BlockCode> enumerate_codes(const Pattern& patch, int radius,
                                       long long check_size, long long budget) {
  if (radius < 0 || check_size < 1) throw ContractError("enumerate_codes: bad parameters");
  SearchSetup su = build_setup(patch, radius, check_size);
  int nkeys = static_cast<int>(su.keys.size());
  int nsym = patch.alphabet().size();

  std::vector<int> assigned(nkeys, -1);
  std::vector<BlockCode> accepted;
  long long nodes = 0;

  auto dfs = [&](auto&& self, int k) -> void {
    if (k == nkeys) {
      BlockCode code;
      code.radius = radius;
      for (int i = 0; i < nkeys; ++i)
        code.table[su.keys[i]] = static_cast<Symbol>(assigned[i]);
      if (injectivity_proxy_ok(patch, code, check_size)) accepted.push_back(std::move(code));
      return;
    }
    for (int sym = 0; sym < nsym; ++sym) {
      if (++nodes > budget) {
        std::ostringstream os;
        os << "enumerate_codes: search budget " << budget << " exceeded";
        throw ResourceError(os.str());
      }
      assigned[k] = sym;
      bool ok = true;
      for (long long rid : su.regions_of_key[k])
        if (!region_feasible(su, assigned, rid)) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
      assigned[k] = -1;
    }
  };
  dfs(dfs, 0);

  std::sort(accepted.begin(), accepted.end(), [](const BlockCode& a, const BlockCode& b) {
    return a.table < b.table;
  });
  return accepted;
}

RelationPreservationReport preserves_relations(const BlockCode& code, const Pattern& patch,
                                               const WindowSpec& spec) {
  long long r = code.radius;
  if (spec.window.width <= 2 * r || spec.window.height <= 2 * r)
    throw ContractError("preserves_relations: window too small after shrink");
  Pattern image = apply_code(code, patch);
  WindowSpec shrunk{{spec.window.x0 + r, spec.window.y0 + r, spec.window.width - 2 * r,
                     spec.window.height - 2 * r},
                    spec.nmax, spec.mmax};
  for (RelationKind kind : {RelationKind::R_S, RelationKind::R_T}) {
    std::set<std::pair<Pattern, Pattern>> image_pairs;
    for (const auto& w : relation_pairs(image, shrunk, kind))
      image_pairs.insert({reanchor(w.pair.first), reanchor(w.pair.second)});
    for (const auto& w : relation_pairs(patch, spec, kind)) {
      Pattern p = reanchor(apply_code(code, w.pair.first));
      Pattern q = reanchor(apply_code(code, w.pair.second));
      if (!image_pairs.count({p, q})) return {false, std::pair{w.pair.first, w.pair.second}};
    }
  }
  return {true, std::nullopt};
}

std::map<long long, long long> classify_fibers(const std::vector<Pattern>& completions) {
  std::map<long long, long long> hist;
  if (completions.empty()) return hist;
  robinson::FaultLineReport faults = robinson::fault_lines(completions.front());
  std::map<std::vector<Symbol>, long long> classes;
  for (const auto& p : completions) {
    const Rect& s = p.support();
    std::vector<Symbol> key;
    for (long long y = s.y0; y < s.y0 + s.height; ++y) {
      if (faults.horizontal && *faults.horizontal == y) continue;
      for (long long x = s.x0; x < s.x0 + s.width; ++x) {
        if (faults.vertical && *faults.vertical == x) continue;
        key.push_back(p.at(x, y));
      }
    }
    ++classes[std::move(key)];
  }
  for (const auto& [key, n] : classes) ++hist[n];
  return hist;
}

std::string code_to_json(const BlockCode& code) {
  nlohmann::ordered_json j;
  j["radius"] = code.radius;
  j["shift"] = {code.shift.n, code.shift.m};
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, sym] : code.table)
    entries.push_back({nlohmann::ordered_json::parse(pattern_to_json(key)), sym});
  j["table"] = entries;
  return j.dump();
}

}  // namespace dyncube
