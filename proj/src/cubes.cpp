#include "dyncube/cubes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dyncube {

namespace {

// content-deduplicated grid of window placements
struct WindowGrid {
  Rect win;
  long long bx0 = 0, by0 = 0;  // smallest valid base offsets
  long long nbx = 0, nby = 0;
  std::vector<int> ids;        // nbx * nby, content id per placement
  std::vector<Pattern> pats;   // by content id, re-anchored

  bool has(long long tx, long long ty) const {
    return tx >= bx0 && ty >= by0 && tx < bx0 + nbx && ty < by0 + nby;
  }
  int id(long long tx, long long ty) const {
    return ids[(ty - by0) * nbx + (tx - bx0)];
  }
  const Pattern& pat(long long tx, long long ty) const { return pats[id(tx, ty)]; }
};

WindowGrid build_grid(const Pattern& patch, const Rect& win) {
  const Rect& s = patch.support();
  WindowGrid g;
  g.win = win;
  g.nbx = s.width - win.width + 1;
  g.nby = s.height - win.height + 1;
  if (g.nbx < 1 || g.nby < 1) {
    std::ostringstream os;
    os << "window " << win.width << "x" << win.height << " does not fit in patch "
       << s.width << "x" << s.height;
    throw ContractError(os.str());
  }
  g.bx0 = s.x0 - win.x0;
  g.by0 = s.y0 - win.y0;
  g.ids.resize(g.nbx * g.nby);
  std::map<std::vector<Symbol>, int> seen;
  for (long long ty = g.by0; ty < g.by0 + g.nby; ++ty)
    for (long long tx = g.bx0; tx < g.bx0 + g.nbx; ++tx) {
      std::vector<Symbol> cells;
      cells.reserve(win.width * win.height);
      for (long long j = 0; j < win.height; ++j)
        for (long long i = 0; i < win.width; ++i)
          cells.push_back(patch.at(win.x0 + tx + i, win.y0 + ty + j));
      auto [it, fresh] = seen.emplace(std::move(cells), static_cast<int>(g.pats.size()));
      if (fresh)
        g.pats.emplace_back(patch.alphabet(), Rect{0, 0, win.width, win.height}, it->first);
      g.ids[(ty - g.by0) * g.nbx + (tx - g.bx0)] = it->second;
    }
  return g;
}

void check_bounds(const WindowSpec& spec) {
  if (spec.nmax < 0 || spec.mmax < 0) throw ContractError("negative shift bound");
  if (spec.window.width < 1 || spec.window.height < 1)
    throw ContractError("empty window");
}

}  // namespace

std::vector<CubeQuadruple> cube_set(const Pattern& patch, const WindowSpec& spec) {
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  std::vector<CubeQuadruple> out;
  for (long long ty = g.by0; ty < g.by0 + g.nby; ++ty)
    for (long long tx = g.bx0; tx < g.bx0 + g.nbx; ++tx)
      for (long long n = -spec.nmax; n <= spec.nmax; ++n) {
        if (!g.has(tx + n, ty)) continue;
        for (long long m = -spec.mmax; m <= spec.mmax; ++m) {
          if (!g.has(tx, ty + m) || !g.has(tx + n, ty + m)) continue;
          out.push_back({{tx, ty}, n, m,
                         {g.pat(tx, ty), g.pat(tx + n, ty), g.pat(tx, ty + m),
                          g.pat(tx + n, ty + m)}});
        }
      }
  return out;
}

std::vector<std::array<Pattern, 3>> k_set(const Pattern& patch, const ShiftVector& anchor,
                                          const WindowSpec& spec) {
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  if (!g.has(anchor.n, anchor.m)) throw ContractError("anchor window does not fit");
  std::set<std::array<Pattern, 3>> out;
  for (long long n = -spec.nmax; n <= spec.nmax; ++n) {
    if (!g.has(anchor.n + n, anchor.m)) continue;
    for (long long m = -spec.mmax; m <= spec.mmax; ++m) {
      if (!g.has(anchor.n, anchor.m + m) || !g.has(anchor.n + n, anchor.m + m)) continue;
      out.insert({g.pat(anchor.n + n, anchor.m), g.pat(anchor.n, anchor.m + m),
                  g.pat(anchor.n + n, anchor.m + m)});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<RelationWitness> relation_pairs(const Pattern& patch, const WindowSpec& spec,
                                            RelationKind kind) {
  if (kind != RelationKind::R_S && kind != RelationKind::R_T)
    throw ContractError("relation_pairs supports R_S and R_T");
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  std::vector<RelationWitness> out;
  std::set<std::pair<int, int>> seen;
  for (long long ty = g.by0; ty < g.by0 + g.nby; ++ty)
    for (long long tx = g.bx0; tx < g.bx0 + g.nbx; ++tx)
      for (long long n = -spec.nmax; n <= spec.nmax; ++n) {
        if (!g.has(tx + n, ty)) continue;
        for (long long m = -spec.mmax; m <= spec.mmax; ++m) {
          if (!g.has(tx, ty + m) || !g.has(tx + n, ty + m)) continue;
          int i0 = g.id(tx, ty), i1 = g.id(tx + n, ty);
          int i2 = g.id(tx, ty + m), i3 = g.id(tx + n, ty + m);
          std::pair<int, int> pr;
          int companion;
          if (kind == RelationKind::R_S) {
            if (i2 != i3) continue;  // shape (p, q, a, a)
            pr = {i0, i1};
            companion = i2;
          } else {
            if (i1 != i3) continue;  // shape (p, b, q, b)
            pr = {i0, i2};
            companion = i1;
          }
          if (!seen.insert(pr).second) continue;
          RelationWitness w;
          w.kind = kind;
          w.pair = {g.pats[pr.first], g.pats[pr.second]};
          w.companion = g.pats[companion];
          w.quadruple = {{tx, ty}, n, m,
                         {g.pats[i0], g.pats[i1], g.pats[i2], g.pats[i3]}};
          out.push_back(std::move(w));
        }
      }
  return out;
}

bool symmetry_closure_check(const CubeQuadruple& q, const Pattern& patch,
                            const WindowSpec& spec) {
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  long long tx = q.base.n, ty = q.base.m, n = q.n, m = q.m;
  auto realized = [&](long long bx, long long by, long long dn, long long dm,
                      const std::array<const Pattern*, 4>& want) {
    long long xs[4] = {bx, bx + dn, bx, bx + dn};
    long long ys[4] = {by, by, by + dm, by + dm};
    for (int i = 0; i < 4; ++i) {
      if (!g.has(xs[i], ys[i])) return false;
      if (!(g.pat(xs[i], ys[i]) == *want[i])) return false;
    }
    return true;
  };
  const Pattern &x0 = q.windows[0], &x1 = q.windows[1], &x2 = q.windows[2],
                &x3 = q.windows[3];
  if (!realized(tx, ty, n, m, {&x0, &x1, &x2, &x3})) return false;      // q itself
  if (!realized(tx, ty + m, n, -m, {&x2, &x3, &x0, &x1})) return false;
  if (!realized(tx + n, ty, -n, m, {&x1, &x0, &x3, &x2})) return false;

  Pattern tp = transpose(patch);
  Rect tw{spec.window.y0, spec.window.x0, spec.window.height, spec.window.width};
  WindowGrid tg = build_grid(tp, tw);
  Pattern w0 = transpose(x0), w1 = transpose(x2), w2 = transpose(x1), w3 = transpose(x3);
  long long xs[4] = {ty, ty + m, ty, ty + m};
  long long ys[4] = {tx, tx, tx + n, tx + n};
  const Pattern* want[4] = {&w0, &w1, &w2, &w3};
  for (int i = 0; i < 4; ++i) {
    if (!tg.has(xs[i], ys[i])) return false;
    if (!(reanchor(tg.pat(xs[i], ys[i])) == reanchor(*want[i]))) return false;
  }
  return true;
}

std::vector<ShiftVector> return_times(const Pattern& patch, const ShiftVector& anchor,
                                      const Rect& window, long long nmax, long long mmax) {
  WindowGrid g = build_grid(patch, window);
  if (!g.has(anchor.n, anchor.m)) throw ContractError("anchor window does not fit");
  int ref = g.id(anchor.n, anchor.m);
  std::vector<ShiftVector> out;
  for (long long m = -mmax; m <= mmax; ++m)
    for (long long n = -nmax; n <= nmax; ++n)
      if (g.has(anchor.n + n, anchor.m + m) && g.id(anchor.n + n, anchor.m + m) == ref)
        out.push_back({n, m});
  return out;
}

CubeQuadruple change_generators(const CubeQuadruple& q, const Pattern& patch,
                                const WindowSpec& spec) {
  WindowGrid g = build_grid(patch, spec.window);
  long long tx = q.base.n, ty = q.base.m, n = q.n, m = q.m;
  long long xs[4] = {tx, tx + n, tx, tx + n};
  long long ys[4] = {ty, ty - n, ty + m, ty + m - n};
  CubeQuadruple out;
  out.base = q.base;
  out.n = n;
  out.m = m;
  for (int i = 0; i < 4; ++i) {
    if (!g.has(xs[i], ys[i]))
      throw ContractError("change_generators: re-indexed window leaves the patch");
    out.windows[i] = g.pat(xs[i], ys[i]);
  }
  return out;
}

bool window_transitivity(const Pattern& patch, const WindowSpec& spec, Direction dir) {
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  long long bound = dir == Direction::S ? spec.nmax : spec.mmax;
  std::set<std::pair<int, int>> realized;
  for (long long ty = g.by0; ty < g.by0 + g.nby; ++ty)
    for (long long tx = g.bx0; tx < g.bx0 + g.nbx; ++tx)
      for (long long k = -bound; k <= bound; ++k) {
        long long ux = dir == Direction::S ? tx + k : tx;
        long long uy = dir == Direction::S ? ty : ty + k;
        if (g.has(ux, uy)) realized.insert({g.id(tx, ty), g.id(ux, uy)});
      }
  size_t np = g.pats.size();
  return realized.size() == np * np;
}

bool window_weak_mixing_proxy(const Pattern& patch, const WindowSpec& spec) {
  check_bounds(spec);
  WindowGrid g = build_grid(patch, spec.window);
  std::set<std::array<int, 4>> realized;
  for (long long ty = g.by0; ty < g.by0 + g.nby; ++ty)
    for (long long tx = g.bx0; tx < g.bx0 + g.nbx; ++tx)
      for (long long n = -spec.mmax; n <= spec.mmax; ++n) {
        if (!g.has(tx, ty + n)) continue;
        for (long long m = -spec.mmax; m <= spec.mmax; ++m) {
          if (!g.has(tx, ty + m) || !g.has(tx, ty + n + m)) continue;
          realized.insert(
              {g.id(tx, ty), g.id(tx, ty + n), g.id(tx, ty + m), g.id(tx, ty + n + m)});
        }
      }
  size_t np = g.pats.size();
  return realized.size() == np * np * np * np;
}

long long complexity_proxy(const Pattern& patch, int n) {
  if (n < 0) throw ContractError("complexity_proxy: negative n");
  const Rect& s = patch.support();
  long long h = n + 1;
  if (h > s.height) throw ContractError("complexity_proxy: patch too short");
  long long best = 0;
  for (long long y = s.y0; y + h <= s.y0 + s.height; ++y) {
    std::set<std::vector<Symbol>> cols;
    for (long long x = s.x0; x < s.x0 + s.width; ++x) {
      std::vector<Symbol> col;
      col.reserve(h);
      for (long long j = 0; j < h; ++j) col.push_back(patch.at(x, y + j));
      cols.insert(std::move(col));
    }
    best = std::max<long long>(best, static_cast<long long>(cols.size()));
  }
  return best;
}

}  // namespace dyncube
