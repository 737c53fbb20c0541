#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyncube {

// Thrown on violated preconditions / malformed input (CLI exit 1).
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a configured resource ceiling would be exceeded (CLI exit 1).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Symbol = std::uint8_t;

struct Alphabet {
  std::vector<std::string> labels;  // index = symbol id

  int size() const { return static_cast<int>(labels.size()); }
  bool operator==(const Alphabet&) const = default;

  static Alphabet binary() { return Alphabet{{"0", "1"}}; }
  static Alphabet numeric(int n);
};

struct Rect {
  long long x0 = 0, y0 = 0;
  long long width = 1, height = 1;

  bool operator==(const Rect&) const = default;
  bool contains(const Rect& r) const {
    return r.x0 >= x0 && r.y0 >= y0 && r.x0 + r.width <= x0 + width &&
           r.y0 + r.height <= y0 + height;
  }
};

struct ShiftVector {
  long long n = 0, m = 0;

  bool operator==(const ShiftVector&) const = default;
  // canonical result order everywhere: lexicographic on (m, n)
  friend bool operator<(const ShiftVector& a, const ShiftVector& b) {
    return a.m != b.m ? a.m < b.m : a.n < b.n;
  }
};

// Anchored rectangular block of symbols. Cells are stored row-major with the
// bottom row first; cell (i,j) lives at absolute coordinate (i,j).
class Pattern {
 public:
  Pattern() = default;
  Pattern(Alphabet alphabet, Rect support, std::vector<Symbol> cells);

  const Alphabet& alphabet() const { return alphabet_; }
  const Rect& support() const { return support_; }
  const std::vector<Symbol>& cells() const { return cells_; }

  Symbol at(long long x, long long y) const;
  void set(long long x, long long y, Symbol s);
  bool in_support(long long x, long long y) const;

  bool operator==(const Pattern&) const = default;
  friend bool operator<(const Pattern& a, const Pattern& b) {
    if (a.support_.width != b.support_.width) return a.support_.width < b.support_.width;
    if (a.support_.height != b.support_.height) return a.support_.height < b.support_.height;
    return a.cells_ < b.cells_;
  }

 private:
  Alphabet alphabet_;
  Rect support_{0, 0, 1, 1};
  std::vector<Symbol> cells_{0};
};

// Maximum allowed side of a materialized patch; DYNCUBE_MAX_PATCH overrides.
long long max_patch_side();

Pattern subpattern(const Pattern& p, const Rect& r);
// Support moves by (-v.n, -v.m): reading the result at (i,j) equals reading
// the shifted configuration S^n T^m x at (i,j).
Pattern translate(const Pattern& p, const ShiftVector& v);
std::vector<ShiftVector> occurrences(const Pattern& needle, const Pattern& haystack);

// re-anchor at (0,0), keeping size
Pattern reanchor(const Pattern& p);
// swap axes: cell (i,j) of the result is cell (j,i) of the input
Pattern transpose(const Pattern& p);

// JSON + image I/O (bit-exact formats, see tool docs)
std::string pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const std::string& text);
std::string pattern_to_pgm(const Pattern& p);
std::string pattern_to_ppm(const Pattern& p, const std::vector<std::array<unsigned char, 3>>& palette);

}  // namespace dyncube
