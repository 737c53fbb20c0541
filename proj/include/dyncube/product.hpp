#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dyncube/cubes.hpp"
#include "dyncube/gridcore.hpp"

namespace dyncube {

struct ProductSpec {
  Alphabet rowAlphabet;  // A_X
  Alphabet colAlphabet;  // A_Y
  Alphabet outAlphabet;  // A_W
  std::vector<Symbol> rowWord;
  std::vector<Symbol> colWord;
  std::map<std::pair<Symbol, Symbol>, Symbol> phi;  // (row, col) -> output
};

struct ProductDecomposition {
  int radius = 0;
  ShiftVector anchor;
  std::vector<Pattern> rowAlphabet;  // observed horizontal-axis blocks
  std::vector<Pattern> colAlphabet;  // observed vertical-axis blocks
  std::map<std::pair<int, int>, Symbol> phi;  // (row idx, col idx) -> symbol
  std::vector<int> rowIndices;  // axis word along i, as rowAlphabet indices
  std::vector<int> colIndices;
  long long iMin = 0, jMin = 0;  // offsets of the first axis positions
};

struct ConflictWitness {
  ShiftVector anchor;
  std::pair<long long, long long> first, second;  // positions (i,j), (i',j')
  Pattern rowBlock, colBlock;
  Symbol firstSymbol = 0, secondSymbol = 0;
};

Pattern build_product(const ProductSpec& spec);
std::variant<ProductDecomposition, ConflictWitness> detect_product(const Pattern& patch,
                                                                   int radius,
                                                                   const ShiftVector& anchor);
// 1D factor languages: all length-len index words along each axis
std::pair<std::set<std::vector<int>>, std::set<std::vector<int>>> extract_factors(
    const ProductDecomposition& d, long long len);

struct ThreeCoordinateReport {
  bool ok = true;
  std::optional<std::pair<CubeQuadruple, CubeQuadruple>> violation;
};
ThreeCoordinateReport verify_three_coordinate_rule(const Pattern& patch,
                                                   const WindowSpec& spec);

std::string decomposition_to_json(const ProductDecomposition& d);
std::string conflict_to_json(const ConflictWitness& w);
ProductSpec product_spec_from_json(const std::string& text);

}  // namespace dyncube
