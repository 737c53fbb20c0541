#include "dyncube/product.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace dyncube {

Pattern build_product(const ProductSpec& spec) {
  if (spec.rowWord.empty() || spec.colWord.empty())
    throw ContractError("build_product: empty factor word");
  long long w = static_cast<long long>(spec.rowWord.size());
  long long h = static_cast<long long>(spec.colWord.size());
  std::vector<Symbol> cells(w * h);
  for (long long j = 0; j < h; ++j)
    for (long long i = 0; i < w; ++i) {
      auto it = spec.phi.find({spec.rowWord[i], spec.colWord[j]});
      if (it == spec.phi.end()) {
        std::ostringstream os;
        os << "phi undefined on pair ("
           << spec.rowAlphabet.labels.at(spec.rowWord[i]) << ","
           << spec.colAlphabet.labels.at(spec.colWord[j]) << ")";
        throw ContractError(os.str());
      }
      cells[j * w + i] = it->second;
    }
  return Pattern(spec.outAlphabet, {0, 0, w, h}, std::move(cells));
}

std::variant<ProductDecomposition, ConflictWitness> detect_product(
    const Pattern& patch, int radius, const ShiftVector& anchor) {
  if (radius < 0) throw ContractError("detect_product: negative radius");
  const Rect& s = patch.support();
  long long ax = anchor.n, ay = anchor.m, r = radius;
  if (ax - r < s.x0 || ax + r >= s.x0 + s.width || ay - r < s.y0 ||
      ay + r >= s.y0 + s.height)
    throw ContractError("detect_product: radius too large for patch at this anchor");

  long long iMin = s.x0 + r - ax, iMax = s.x0 + s.width - 1 - r - ax;
  long long jMin = s.y0 + r - ay, jMax = s.y0 + s.height - 1 - r - ay;

  long long side = 2 * r + 1;
  auto block = [&](long long cx, long long cy) {
    return reanchor(subpattern(patch, {cx - r, cy - r, side, side}));
  };

  ProductDecomposition d;
  d.radius = radius;
  d.anchor = anchor;
  d.iMin = iMin;
  d.jMin = jMin;
  std::map<Pattern, int> rowIdx, colIdx;
  for (long long i = iMin; i <= iMax; ++i) {
    Pattern b = block(ax + i, ay);
    auto [it, fresh] = rowIdx.emplace(std::move(b), static_cast<int>(d.rowAlphabet.size()));
    if (fresh) d.rowAlphabet.push_back(it->first);
    d.rowIndices.push_back(it->second);
  }
  for (long long j = jMin; j <= jMax; ++j) {
    Pattern b = block(ax, ay + j);
    auto [it, fresh] = colIdx.emplace(std::move(b), static_cast<int>(d.colAlphabet.size()));
    if (fresh) d.colAlphabet.push_back(it->first);
    d.colIndices.push_back(it->second);
  }

  std::map<std::pair<int, int>, std::pair<Symbol, std::pair<long long, long long>>> seen;
  for (long long j = jMin; j <= jMax; ++j)
    for (long long i = iMin; i <= iMax; ++i) {
      int ri = d.rowIndices[i - iMin], ci = d.colIndices[j - jMin];
      Symbol sym = patch.at(ax + i, ay + j);
      auto [it, fresh] = seen.emplace(std::pair{ri, ci}, std::pair{sym, std::pair{i, j}});
      if (!fresh && it->second.first != sym) {
        ConflictWitness w;
        w.anchor = anchor;
        w.first = it->second.second;
        w.second = {i, j};
        w.rowBlock = d.rowAlphabet[ri];
        w.colBlock = d.colAlphabet[ci];
        w.firstSymbol = it->second.first;
        w.secondSymbol = sym;
        return w;
      }
    }
  for (const auto& [key, val] : seen) d.phi[key] = val.first;
  return d;
}

std::pair<std::set<std::vector<int>>, std::set<std::vector<int>>> extract_factors(
    const ProductDecomposition& d, long long len) {
  if (len < 1) throw ContractError("extract_factors: length must be positive");
  auto words = [&](const std::vector<int>& seq) {
    std::set<std::vector<int>> out;
    for (size_t i = 0; i + len <= seq.size(); ++i)
      out.insert(std::vector<int>(seq.begin() + i, seq.begin() + i + len));
    return out;
  };
  return {words(d.rowIndices), words(d.colIndices)};
}

ThreeCoordinateReport verify_three_coordinate_rule(const Pattern& patch,
                                                   const WindowSpec& spec) {
  std::vector<CubeQuadruple> cubes = cube_set(patch, spec);
  std::map<Pattern, int> ids;
  auto id_of = [&](const Pattern& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(ids.size()));
    return it->second;
  };
  // slot -> (three fixed coordinates -> first quadruple and its free coordinate)
  std::map<std::tuple<int, int, int, int>, std::pair<int, const CubeQuadruple*>> seen;
  for (const auto& q : cubes) {
    int w[4];
    for (int k = 0; k < 4; ++k) w[k] = id_of(q.windows[k]);
    for (int slot = 0; slot < 4; ++slot) {
      int a[3];
      int t = 0;
      for (int k = 0; k < 4; ++k)
        if (k != slot) a[t++] = w[k];
      auto [it, fresh] =
          seen.emplace(std::tuple{slot, a[0], a[1], a[2]}, std::pair{w[slot], &q});
      if (!fresh && it->second.first != w[slot])
        return {false, std::pair{*it->second.second, q}};
    }
  }
  return {true, std::nullopt};
}

namespace {

nlohmann::ordered_json pattern_json(const Pattern& p) {
  return nlohmann::ordered_json::parse(pattern_to_json(p));
}

}  // namespace

std::string decomposition_to_json(const ProductDecomposition& d) {
  nlohmann::ordered_json j;
  j["radius"] = d.radius;
  j["anchor"] = {d.anchor.n, d.anchor.m};
  nlohmann::ordered_json ra = nlohmann::ordered_json::array();
  for (const auto& p : d.rowAlphabet) ra.push_back(pattern_json(p));
  j["rowAlphabet"] = ra;
  nlohmann::ordered_json ca = nlohmann::ordered_json::array();
  for (const auto& p : d.colAlphabet) ca.push_back(pattern_json(p));
  j["colAlphabet"] = ca;
  nlohmann::ordered_json phi = nlohmann::ordered_json::array();
  for (const auto& [key, sym] : d.phi) phi.push_back({key.first, key.second, sym});
  j["phi"] = phi;
  j["rowIndices"] = d.rowIndices;
  j["colIndices"] = d.colIndices;
  j["axisOrigin"] = {d.iMin, d.jMin};
  return j.dump();
}

std::string conflict_to_json(const ConflictWitness& w) {
  nlohmann::ordered_json j;
  j["anchor"] = {w.anchor.n, w.anchor.m};
  j["first"] = {w.first.first, w.first.second};
  j["second"] = {w.second.first, w.second.second};
  j["rowBlock"] = pattern_json(w.rowBlock);
  j["colBlock"] = pattern_json(w.colBlock);
  j["firstSymbol"] = w.firstSymbol;
  j["secondSymbol"] = w.secondSymbol;
  return j.dump();
}

ProductSpec product_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("product JSON parse failure: ") + e.what());
  }
  ProductSpec s;
  try {
    for (const auto& l : j.at("rowAlphabet")) s.rowAlphabet.labels.push_back(l.get<std::string>());
    for (const auto& l : j.at("colAlphabet")) s.colAlphabet.labels.push_back(l.get<std::string>());
    for (const auto& l : j.at("outAlphabet")) s.outAlphabet.labels.push_back(l.get<std::string>());
    for (const auto& v : j.at("rowWord")) s.rowWord.push_back(static_cast<Symbol>(v.get<int>()));
    for (const auto& v : j.at("colWord")) s.colWord.push_back(static_cast<Symbol>(v.get<int>()));
    for (const auto& e : j.at("phi"))
      s.phi[{static_cast<Symbol>(e[0].get<int>()), static_cast<Symbol>(e[1].get<int>())}] =
          static_cast<Symbol>(e[2].get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("product JSON shape failure: ") + e.what());
  }
  return s;
}

}  // namespace dyncube
