#include "dyncube/gridcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace dyncube {

Alphabet Alphabet::numeric(int n) {
  Alphabet a;
  a.labels.reserve(n);
  for (int i = 0; i < n; ++i) a.labels.push_back(std::to_string(i));
  return a;
}

Pattern::Pattern(Alphabet alphabet, Rect support, std::vector<Symbol> cells)
    : alphabet_(std::move(alphabet)), support_(support), cells_(std::move(cells)) {
  if (support_.width < 1 || support_.height < 1)
    throw ContractError("pattern support must be non-empty");
  if (static_cast<long long>(cells_.size()) != support_.width * support_.height)
    throw ContractError("cell count does not match support size");
  for (Symbol s : cells_)
    if (s >= alphabet_.size()) throw ContractError("cell symbol outside alphabet");
}

bool Pattern::in_support(long long x, long long y) const {
  return x >= support_.x0 && y >= support_.y0 && x < support_.x0 + support_.width &&
         y < support_.y0 + support_.height;
}

Symbol Pattern::at(long long x, long long y) const {
  if (!in_support(x, y)) {
    std::ostringstream os;
    os << "cell (" << x << "," << y << ") outside support";
    throw ContractError(os.str());
  }
  return cells_[(y - support_.y0) * support_.width + (x - support_.x0)];
}

void Pattern::set(long long x, long long y, Symbol s) {
  if (!in_support(x, y)) throw ContractError("cell outside support");
  if (s >= alphabet_.size()) throw ContractError("symbol outside alphabet");
  cells_[(y - support_.y0) * support_.width + (x - support_.x0)] = s;
}

long long max_patch_side() {
  if (const char* env = std::getenv("DYNCUBE_MAX_PATCH")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 4096;
}

Pattern subpattern(const Pattern& p, const Rect& r) {
  if (!p.support().contains(r)) {
    std::ostringstream os;
    os << "subpattern rect corner (" << r.x0 << "," << r.y0 << ") size " << r.width << "x"
       << r.height << " leaves support";
    throw ContractError(os.str());
  }
  std::vector<Symbol> cells;
  cells.reserve(r.width * r.height);
  for (long long y = r.y0; y < r.y0 + r.height; ++y)
    for (long long x = r.x0; x < r.x0 + r.width; ++x) cells.push_back(p.at(x, y));
  return Pattern(p.alphabet(), r, std::move(cells));
}

Pattern translate(const Pattern& p, const ShiftVector& v) {
  Rect r = p.support();
  r.x0 -= v.n;
  r.y0 -= v.m;
  return Pattern(p.alphabet(), r, p.cells());
}

Pattern reanchor(const Pattern& p) {
  Rect r = p.support();
  r.x0 = 0;
  r.y0 = 0;
  return Pattern(p.alphabet(), r, p.cells());
}

Pattern transpose(const Pattern& p) {
  const Rect& s = p.support();
  Rect r{s.y0, s.x0, s.height, s.width};
  std::vector<Symbol> cells(s.width * s.height);
  for (long long y = 0; y < s.height; ++y)
    for (long long x = 0; x < s.width; ++x)
      cells[x * s.height + y] = p.cells()[y * s.width + x];
  return Pattern(p.alphabet(), r, std::move(cells));
}

std::vector<ShiftVector> occurrences(const Pattern& needle, const Pattern& haystack) {
  if (!(needle.alphabet() == haystack.alphabet()))
    throw ContractError("occurrences: alphabet mismatch");
  std::vector<ShiftVector> out;
  const Rect& ns = needle.support();
  const Rect& hs = haystack.support();
  for (long long m = hs.y0 - ns.y0; ns.y0 + m + ns.height <= hs.y0 + hs.height; ++m) {
    for (long long n = hs.x0 - ns.x0; ns.x0 + n + ns.width <= hs.x0 + hs.width; ++n) {
      bool ok = true;
      for (long long dy = 0; ok && dy < ns.height; ++dy)
        for (long long dx = 0; dx < ns.width; ++dx)
          if (needle.at(ns.x0 + dx, ns.y0 + dy) != haystack.at(ns.x0 + n + dx, ns.y0 + m + dy)) {
            ok = false;
            break;
          }
      if (ok) out.push_back({n, m});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string pattern_to_json(const Pattern& p) {
  nlohmann::ordered_json j;
  j["alphabet"] = p.alphabet().labels;
  j["origin"] = {p.support().x0, p.support().y0};
  j["width"] = p.support().width;
  j["height"] = p.support().height;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long long y = 0; y < p.support().height; ++y) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long long x = 0; x < p.support().width; ++x)
      row.push_back(p.cells()[y * p.support().width + x]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump();
}

Pattern pattern_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("pattern JSON parse failure: ") + e.what());
  }
  Alphabet a;
  for (const auto& l : j.at("alphabet")) a.labels.push_back(l.get<std::string>());
  Rect r{j.at("origin")[0].get<long long>(), j.at("origin")[1].get<long long>(),
         j.at("width").get<long long>(), j.at("height").get<long long>()};
  std::vector<Symbol> cells;
  for (const auto& row : j.at("rows"))
    for (const auto& c : row) cells.push_back(static_cast<Symbol>(c.get<int>()));
  return Pattern(std::move(a), r, std::move(cells));
}

std::string pattern_to_pgm(const Pattern& p) {
  std::ostringstream os;
  const long long W = p.support().width, H = p.support().height;
  const int n = p.alphabet().size();
  os << "P2\n" << W << " " << H << "\n255\n";
  for (long long y = H - 1; y >= 0; --y) {  // top row first in the image
    for (long long x = 0; x < W; ++x) {
      int k = p.cells()[y * W + x];
      int g = n <= 1 ? 0 : (255 * k) / (n - 1);
      os << g << (x + 1 < W ? ' ' : '\n');
    }
  }
  return os.str();
}

std::string pattern_to_ppm(const Pattern& p,
                           const std::vector<std::array<unsigned char, 3>>& palette) {
  std::ostringstream os;
  const long long W = p.support().width, H = p.support().height;
  os << "P3\n" << W << " " << H << "\n255\n";
  for (long long y = H - 1; y >= 0; --y) {
    for (long long x = 0; x < W; ++x) {
      const auto& c = palette.at(p.cells()[y * W + x]);
      os << int(c[0]) << ' ' << int(c[1]) << ' ' << int(c[2]) << (x + 1 < W ? ' ' : '\n');
    }
  }
  return os.str();
}

}  // namespace dyncube
