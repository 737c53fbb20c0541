#include "dyncube/robinson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace dyncube::robinson {

bool edges_match(const EdgeLabel& a, const EdgeLabel& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == EdgeKind::None) return true;
  return a.arrowhead != b.arrowhead && a.lateral == b.lateral && a.principal == b.principal;
}

namespace {

// an arrow along one axis: principal flag, global direction sign, global side
struct Arrow {
  bool p = false;
  int d = 0;
  int l = 0;
};

using Edges = std::array<EdgeLabel, 4>;

int cls(long long z) {
  if (z < 0) throw ContractError("configuration tile: negative coordinate");
  int k = 1;
  while (z % (1LL << k) != (1LL << (k - 1)) - 1) ++k;
  return k;
}

int tpar(long long z) {
  int k = cls(z);
  return static_cast<int>(((z - ((1LL << (k - 1)) - 1)) >> k) % 2);
}

int hface(long long x) { return tpar(x) == 0 ? +1 : -1; }
int vface(long long y) { return tpar(y) == 0 ? +1 : -1; }

constexpr int SIG = +1;

// arrow pair (low-edge, high-edge) along the line of class k at position pos,
// with perp the face sign of the perpendicular coordinate
std::pair<Arrow, Arrow> axis_state(int k, long long pos, int perp) {
  long long base = (1LL << (k - 1)) - 1;
  long long u = (pos - base) >> k;  // arithmetic shift = floor division
  long long p = 1LL << k;
  long long r = ((pos - base) % p + p) % p;
  long long mid = 1LL << (k - 1);
  int L = SIG * perp;
  if (u % 2 == 0) {
    if (r < mid) return {{true, +1, L}, {true, +1, L}};
    if (r > mid) return {{true, -1, L}, {true, -1, L}};
    return {{true, +1, L}, {true, -1, L}};
  }
  if (r < mid) return {{false, -1, 0}, {false, -1, 0}};
  if (r > mid) return {{false, +1, 0}, {false, +1, 0}};
  return {{false, -1, 0}, {false, +1, 0}};
}

EdgeLabel h_label(const Arrow& a, bool east_edge) {
  EdgeLabel e;
  e.kind = EdgeKind::Arm;
  e.arrowhead = east_edge ? a.d > 0 : a.d < 0;
  int ld = a.l * a.d;
  e.lateral = a.l == 0 ? Lateral::Center : (ld > 0 ? Lateral::Left : Lateral::Right);
  e.principal = a.p;
  return e;
}

EdgeLabel v_label(const Arrow& a, bool north_edge) {
  EdgeLabel e;
  e.kind = EdgeKind::Arm;
  e.arrowhead = north_edge ? a.d > 0 : a.d < 0;
  int ld = a.l * a.d;
  e.lateral = a.l == 0 ? Lateral::Center : (ld < 0 ? Lateral::Left : Lateral::Right);
  e.principal = a.p;
  return e;
}

struct CellArrows {
  std::pair<Arrow, Arrow> H;  // west, east
  std::pair<Arrow, Arrow> V;  // south, north
  bool cross = false;
};

CellArrows cell_arrows(long long x, long long y) {
  int kx = cls(x), ky = cls(y);
  CellArrows c;
  if (kx == ky) {
    int hf = hface(x), vf = vface(y);
    Arrow fv{true, vf, SIG * hf}, bv{false, vf, 0};
    Arrow fh{true, hf, SIG * vf}, bh{false, hf, 0};
    c.V = vf == +1 ? std::pair{bv, fv} : std::pair{fv, bv};
    c.H = hf == +1 ? std::pair{bh, fh} : std::pair{fh, bh};
    c.cross = true;
    return c;
  }
  c.V = axis_state(kx, y, hface(x));
  c.H = axis_state(ky, x, vface(y));
  return c;
}

Edges cell_edges(const CellArrows& c) {
  Edges e;
  e[N] = v_label(c.V.second, true);
  e[E] = h_label(c.H.second, true);
  e[S] = v_label(c.V.first, false);
  e[W] = h_label(c.H.first, false);
  return e;
}

// counterclockwise quarter turn: direction-relative labels just rotate in place
Edges rot_edges(const Edges& t) { return {t[E], t[S], t[W], t[N]}; }

Lateral mirror(Lateral l) {
  if (l == Lateral::Left) return Lateral::Right;
  if (l == Lateral::Right) return Lateral::Left;
  return l;
}

// flip across the vertical axis: swap E/W, mirror every lateral
Edges refl_edges(const Edges& t) {
  Edges e = {t[N], t[W], t[S], t[E]};
  for (auto& lbl : e) lbl.lateral = mirror(lbl.lateral);
  return e;
}

struct TileTables {
  std::vector<RobinsonTile> tiles;
  std::vector<TileOrbitEntry> orbits;
  std::vector<int> rot_id;
  std::vector<int> refl_id;
  std::map<Edges, int> index;
};

const TileTables& tables() {
  static const TileTables t = [] {
    std::map<Edges, bool> found;  // edges -> is_cross
    for (long long x = 0; x < 256; ++x)
      for (long long y = 0; y < 256; ++y) {
        CellArrows c = cell_arrows(x, y);
        found[cell_edges(c)] = c.cross;
      }

    TileTables tt;
    auto assign = [&](const Edges& e, int base, int rot, bool refl) {
      int id = static_cast<int>(tt.tiles.size());
      tt.tiles.push_back({id, e, found.at(e)});
      tt.index[e] = id;
      tt.orbits.push_back({id, base, rot, refl});
    };

    // ids 0..3: the cross at the origin and its quarter turns
    Edges cross0 = cell_edges(cell_arrows(0, 0));
    Edges c = cross0;
    for (int k = 0; k < 4; ++k) {
      assign(c, 0, k, false);
      c = rot_edges(c);
    }

    // remaining orbits, keyed by their minimal element
    std::set<Edges> done;
    for (const auto& t : tt.tiles) done.insert(t.edges);
    std::map<Edges, std::vector<Edges>> orbit_of_min;
    for (const auto& [e, is_cross] : found) {
      if (done.count(e)) continue;
      std::set<Edges> orbit;
      Edges a = e;
      for (int r = 0; r < 4; ++r) {
        orbit.insert(a);
        orbit.insert(refl_edges(a));
        a = rot_edges(a);
      }
      Edges mn = *orbit.begin();
      if (!orbit_of_min.count(mn))
        orbit_of_min[mn] = std::vector<Edges>(orbit.begin(), orbit.end());
      for (const auto& o : orbit) done.insert(o);
    }

    int base = 1;
    for (const auto& [mn, members] : orbit_of_min) {
      std::set<Edges> seen;
      for (int refl = 0; refl < 2; ++refl) {
        Edges a = refl ? refl_edges(mn) : mn;
        for (int r = 0; r < 4; ++r) {
          if (!seen.count(a)) {
            seen.insert(a);
            assign(a, base, r, refl != 0);
          }
          a = rot_edges(a);
        }
      }
      ++base;
    }

    tt.rot_id.resize(tt.tiles.size());
    tt.refl_id.resize(tt.tiles.size());
    for (const auto& t : tt.tiles) {
      tt.rot_id[t.id] = tt.index.at(rot_edges(t.edges));
      tt.refl_id[t.id] = tt.index.at(refl_edges(t.edges));
    }
    return tt;
  }();
  return t;
}

const RobinsonTile& tile_by_id(int id) { return tables().tiles.at(id); }

bool fits(int id, const std::optional<int>& west, const std::optional<int>& east,
          const std::optional<int>& south, const std::optional<int>& north) {
  const Edges& e = tile_by_id(id).edges;
  if (west && !edges_match(tile_by_id(*west).edges[E], e[W])) return false;
  if (east && !edges_match(e[E], tile_by_id(*east).edges[W])) return false;
  if (south && !edges_match(tile_by_id(*south).edges[N], e[S])) return false;
  if (north && !edges_match(e[N], tile_by_id(*north).edges[S])) return false;
  return true;
}

void check_robinson_pattern(const Pattern& patch) {
  if (!(patch.alphabet() == robinson_alphabet()))
    throw ContractError("patch is not over the Robinson alphabet");
}

long long supertile_side(int n) {
  if (n < 1 || n > 32) throw ContractError("supertile order out of range");
  long long side = (1LL << n) - 1;
  if (side > max_patch_side()) throw ResourceError("supertile side exceeds ceiling");
  return side;
}

}  // namespace

const std::vector<RobinsonTile>& tileset() { return tables().tiles; }
const std::vector<TileOrbitEntry>& orbit_table() { return tables().orbits; }

Alphabet robinson_alphabet() {
  Alphabet a;
  for (int i = 0; i < static_cast<int>(tables().tiles.size()); ++i) {
    std::string l = "R";
    l += char('0' + i / 10);
    l += char('0' + i % 10);
    a.labels.push_back(l);
  }
  return a;
}

int rotate_id(int id) { return tables().rot_id.at(id); }
int reflect_id(int id) { return tables().refl_id.at(id); }

int configuration_tile(long long x, long long y) {
  return tables().index.at(cell_edges(cell_arrows(x, y)));
}

Pattern supertile(int n, int orientation) {
  if (orientation < 0 || orientation > 3) throw ContractError("orientation must be 0..3");
  long long side = supertile_side(n);
  std::vector<Symbol> cells(side * side);
  for (long long j = 0; j < side; ++j)
    for (long long i = 0; i < side; ++i)
      cells[j * side + i] = static_cast<Symbol>(configuration_tile(i, j));
  Pattern p(robinson_alphabet(), {0, 0, side, side}, std::move(cells));
  for (int k = 0; k < orientation; ++k) {
    std::vector<Symbol> next(side * side);
    for (long long j = 0; j < side; ++j)
      for (long long i = 0; i < side; ++i)
        next[j * side + i] =
            static_cast<Symbol>(rotate_id(p.cells()[(side - 1 - i) * side + j]));
    p = Pattern(robinson_alphabet(), {0, 0, side, side}, std::move(next));
  }
  return p;
}

ValidityReport is_valid(const Pattern& patch) {
  check_robinson_pattern(patch);
  const Rect& s = patch.support();
  for (long long y = s.y0; y < s.y0 + s.height; ++y)
    for (long long x = s.x0; x < s.x0 + s.width; ++x) {
      const Edges& e = tile_by_id(patch.at(x, y)).edges;
      if (x + 1 < s.x0 + s.width &&
          !edges_match(e[E], tile_by_id(patch.at(x + 1, y)).edges[W]))
        return {false, "east edge mismatch", std::pair{std::pair{x, y}, E}};
      if (y + 1 < s.y0 + s.height &&
          !edges_match(e[N], tile_by_id(patch.at(x, y + 1)).edges[S]))
        return {false, "north edge mismatch", std::pair{std::pair{x, y}, N}};
    }
  auto mod2 = [](long long v) { return ((v % 2) + 2) % 2; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      bool ok = true;
      for (long long y = s.y0; ok && y < s.y0 + s.height; ++y)
        for (long long x = s.x0; x < s.x0 + s.width; ++x)
          if (mod2(x) == a && mod2(y) == b && !tile_by_id(patch.at(x, y)).is_cross) {
            ok = false;
            break;
          }
      if (ok) return {true, "", std::nullopt};
    }
  return {false, "no 2-lattice of crosses", std::nullopt};
}

FaultLineReport fault_lines(const Pattern& patch) {
  ValidityReport v = is_valid(patch);
  if (!v.ok) throw ContractError("fault_lines: invalid patch: " + v.reason);
  const Rect& s = patch.support();
  long long dim = std::min(s.width, s.height);

  int nmax = 1;
  while (nmax < 31 && (1LL << (nmax + 1)) - 1 <= dim) ++nmax;

  FaultLineReport rep;
  for (int n = nmax; n >= 1; --n) {
    long long P = 1LL << n, L = P - 1;
    std::vector<Pattern> sup;
    for (int k = 0; k < 4; ++k) sup.push_back(supertile(n, k));
    auto starts = [&](long long lo, long long len, long long off) {
      std::vector<long long> out;
      long long first = lo + ((off - lo) % P + P) % P;
      for (long long v = first; v + L <= lo + len; v += P) out.push_back(v);
      return out;
    };
    auto block_is_supertile = [&](long long bx, long long by) {
      for (const auto& cand : sup) {
        bool eq = true;
        for (long long j = 0; eq && j < L; ++j)
          for (long long i = 0; i < L; ++i)
            if (patch.at(bx + i, by + j) != cand.cells()[j * L + i]) {
              eq = false;
              break;
            }
        if (eq) return true;
      }
      return false;
    };
    for (long long ox = 0; ox < P; ++ox) {
      auto sx = starts(s.x0, s.width, ox);
      if (sx.empty()) continue;
      for (long long oy = 0; oy < P; ++oy) {
        auto sy = starts(s.y0, s.height, oy);
        if (sy.empty()) continue;
        bool all = true;
        for (long long by : sy) {
          for (long long bx : sx)
            if (!block_is_supertile(bx, by)) {
              all = false;
              break;
            }
          if (!all) break;
        }
        if (!all) continue;
        rep.decomposition_order = n;
        std::vector<bool> col_cov(s.width, false), row_cov(s.height, false);
        for (long long bx : sx)
          for (long long i = 0; i < L; ++i) col_cov[bx + i - s.x0] = true;
        for (long long by : sy)
          for (long long j = 0; j < L; ++j) row_cov[by + j - s.y0] = true;
        for (long long x = s.x0; x < s.x0 + s.width; ++x)
          if (!col_cov[x - s.x0]) {
            rep.vertical = x;
            for (long long y = s.y0; y < s.y0 + s.height; ++y)
              if (tile_by_id(patch.at(x, y)).is_cross) ++rep.vertical_crosses;
            break;
          }
        for (long long y = s.y0; y < s.y0 + s.height; ++y)
          if (!row_cov[y - s.y0]) {
            rep.horizontal = y;
            for (long long x = s.x0; x < s.x0 + s.width; ++x)
              if (tile_by_id(patch.at(x, y)).is_cross) ++rep.horizontal_crosses;
            break;
          }
        return rep;
      }
    }
  }
  return rep;
}

namespace {

std::vector<int> cell_candidates(const std::map<std::pair<long long, long long>, int>& fixed,
                                 long long x, long long y) {
  auto look = [&](long long a, long long b) -> std::optional<int> {
    auto it = fixed.find({a, b});
    return it == fixed.end() ? std::nullopt : std::optional<int>(it->second);
  };
  std::vector<int> out;
  for (const auto& t : tileset())
    if (fits(t.id, look(x - 1, y), look(x + 1, y), look(x, y - 1), look(x, y + 1)))
      out.push_back(t.id);
  return out;
}

}  // namespace

std::vector<Pattern> two_fault_completions(int n) {
  long long L = supertile_side(n);
  long long off = L + 1, tot = 2 * L + 1;
  if (tot > max_patch_side()) throw ResourceError("assembly side exceeds ceiling");
  const int qSW = 2, qSE = 3, qNW = 1, qNE = 0;

  std::map<std::pair<long long, long long>, int> fixed;
  auto place = [&](int q, long long dx, long long dy) {
    Pattern sp = supertile(n, q);
    for (long long j = 0; j < L; ++j)
      for (long long i = 0; i < L; ++i) fixed[{i + dx, j + dy}] = sp.cells()[j * L + i];
  };
  place(qSW, 0, 0);
  place(qSE, off, 0);
  place(qNW, 0, off);
  place(qNE, off, off);

  const long long m = L;
  std::map<std::pair<long long, long long>, std::vector<int>> cand;
  for (long long y = 0; y < tot; ++y) cand[{m, y}] = cell_candidates(fixed, m, y);
  for (long long x = 0; x < tot; ++x)
    if (x != m) cand[{x, m}] = cell_candidates(fixed, x, m);

  // fill the center column bottom-up, then each row arm outward from the center
  std::vector<Pattern> sols;
  std::map<std::pair<long long, long long>, int> asg;

  auto row_fill = [&](bool leftward, const EdgeLabel& seed,
                      auto&& emit) {
    std::vector<int> acc;
    auto rec = [&](auto&& self, long long i, const EdgeLabel& need) -> void {
      if (leftward ? i < 0 : i >= tot) {
        emit(acc);
        return;
      }
      for (int t : cand.at({i, m})) {
        const Edges& e = tile_by_id(t).edges;
        bool ok = leftward ? edges_match(e[E], need) : edges_match(need, e[W]);
        if (!ok) continue;
        acc.push_back(t);
        self(self, leftward ? i - 1 : i + 1, leftward ? e[W] : e[E]);
        acc.pop_back();
      }
    };
    rec(rec, leftward ? m - 1 : m + 1, seed);
  };

  auto column_done = [&]() {
    const Edges& c = tile_by_id(asg.at({m, m})).edges;
    row_fill(true, c[W], [&](const std::vector<int>& lt) {
      row_fill(false, c[E], [&](const std::vector<int>& rt) {
        std::vector<Symbol> cells(tot * tot);
        for (const auto& [pos, t] : fixed) cells[pos.second * tot + pos.first] = t;
        for (const auto& [pos, t] : asg) cells[pos.second * tot + pos.first] = t;
        for (long long i = 0; i < static_cast<long long>(lt.size()); ++i)
          cells[m * tot + (m - 1 - i)] = static_cast<Symbol>(lt[i]);
        for (long long i = 0; i < static_cast<long long>(rt.size()); ++i)
          cells[m * tot + (m + 1 + i)] = static_cast<Symbol>(rt[i]);
        sols.emplace_back(robinson_alphabet(), Rect{0, 0, tot, tot}, std::move(cells));
      });
    });
  };

  auto dfs = [&](auto&& self, long long y) -> void {
    if (y == tot) {
      column_done();
      return;
    }
    for (int t : cand.at({m, y})) {
      if (y > 0 &&
          !edges_match(tile_by_id(asg.at({m, y - 1})).edges[N], tile_by_id(t).edges[S]))
        continue;
      asg[{m, y}] = t;
      self(self, y + 1);
      asg.erase({m, y});
    }
  };
  dfs(dfs, 0);

  std::sort(sols.begin(), sols.end());
  return sols;
}

std::vector<Pattern> one_fault_completions(int n) {
  long long L = supertile_side(n);
  long long off = L + 1, tot = 2 * L + 1;
  if (tot > max_patch_side()) throw ResourceError("assembly side exceeds ceiling");
  const int qL = 1, qR = 0;

  std::map<std::pair<long long, long long>, int> fixed;
  Pattern left = supertile(n, qL), right = supertile(n, qR);
  for (long long j = 0; j < L; ++j)
    for (long long i = 0; i < L; ++i) {
      fixed[{i, j}] = left.cells()[j * L + i];
      fixed[{i + off, j}] = right.cells()[j * L + i];
    }

  const long long m = L;
  std::vector<std::vector<int>> cand(L);
  for (long long y = 0; y < L; ++y) cand[y] = cell_candidates(fixed, m, y);

  std::vector<Pattern> sols;
  std::vector<int> col;
  auto rec = [&](auto&& self, long long y) -> void {
    if (y == L) {
      std::vector<Symbol> cells(tot * L);
      for (const auto& [pos, t] : fixed) cells[pos.second * tot + pos.first] = t;
      for (long long j = 0; j < L; ++j) cells[j * tot + m] = static_cast<Symbol>(col[j]);
      sols.emplace_back(robinson_alphabet(), Rect{0, 0, tot, L}, std::move(cells));
      return;
    }
    for (int t : cand[y]) {
      if (y > 0 && !edges_match(tile_by_id(col[y - 1]).edges[N], tile_by_id(t).edges[S]))
        continue;
      col.push_back(t);
      self(self, y + 1);
      col.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(sols.begin(), sols.end());
  return sols;
}

std::vector<std::array<unsigned char, 3>> robinson_palette() {
  std::vector<std::array<unsigned char, 3>> pal;
  const std::array<std::array<unsigned char, 3>, 4> cross = {
      {{220, 40, 40}, {240, 140, 30}, {200, 40, 200}, {40, 160, 220}}};
  int n = static_cast<int>(tileset().size());
  for (int i = 0; i < n; ++i) {
    if (i < 4) {
      pal.push_back(cross[i]);
    } else {
      unsigned char g = static_cast<unsigned char>(60 + (195 * (i - 4)) / std::max(1, n - 5));
      pal.push_back({g, g, g});
    }
  }
  return pal;
}

}  // namespace dyncube::robinson
