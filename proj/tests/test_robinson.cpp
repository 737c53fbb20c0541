#include <map>
#include <set>

#include "doctest.h"
#include "dyncube/robinson.hpp"

using namespace dyncube;
using namespace dyncube::robinson;

TEST_CASE("tileset has 28 tiles, 4 crosses, and is D4-closed") {
  const auto& ts = tileset();
  REQUIRE(ts.size() == 28);
  int crosses = 0;
  for (const auto& t : ts) crosses += t.is_cross;
  CHECK(crosses == 4);
  for (const auto& t : ts) {
    CHECK(rotate_id(t.id) >= 0);
    CHECK(reflect_id(t.id) >= 0);
    int a = t.id;
    for (int k = 0; k < 4; ++k) a = rotate_id(a);
    CHECK(a == t.id);                                // rot^4 = id
    CHECK(reflect_id(reflect_id(t.id)) == t.id);     // refl^2 = id
  }
  // orbit size multiset {4,4,4,8,8}
  std::set<int> done;
  std::multiset<size_t> sizes;
  for (const auto& t : ts) {
    if (done.count(t.id)) continue;
    std::set<int> orb;
    int a = t.id;
    for (int k = 0; k < 4; ++k) {
      orb.insert(a);
      orb.insert(reflect_id(a));
      a = rotate_id(a);
    }
    done.insert(orb.begin(), orb.end());
    sizes.insert(orb.size());
  }
  CHECK(sizes == std::multiset<size_t>{4, 4, 4, 8, 8});
  // ids 0..3 are the crosses
  for (int k = 0; k < 4; ++k) CHECK(ts[k].is_cross);
  CHECK(orbit_table().size() == 28);
}

TEST_CASE("edge matching pairs heads against tails") {
  EdgeLabel out{EdgeKind::Arm, true, Lateral::Left, true};
  EdgeLabel in{EdgeKind::Arm, false, Lateral::Left, true};
  CHECK(edges_match(out, in));
  CHECK(edges_match(in, out));
  CHECK_FALSE(edges_match(out, out));
  EdgeLabel other = in;
  other.lateral = Lateral::Right;
  CHECK_FALSE(edges_match(out, other));
  other = in;
  other.principal = false;
  CHECK_FALSE(edges_match(out, other));
}

TEST_CASE("supertiles follow the doubling recursion") {
  for (int n = 1; n <= 5; ++n) {
    long long side = (1LL << n) - 1;
    std::set<Pattern> distinct;
    for (int k = 0; k < 4; ++k) {
      Pattern p = supertile(n, k);
      REQUIRE(p.support() == Rect{0, 0, side, side});
      CHECK(is_valid(p).ok);
      CHECK(tileset()[p.at(side / 2, side / 2)].is_cross);
      distinct.insert(p);
    }
    CHECK(distinct.size() == 4);
  }
  CHECK(supertile(1, 2).cells()[0] == 2);
  CHECK_THROWS_AS(supertile(3, 4), ContractError);
}

TEST_CASE("supertile corners are the four rotations of the previous order") {
  for (int n = 3; n <= 5; ++n) {
    Pattern big = supertile(n, 0);
    long long s = (1LL << (n - 1)) - 1;
    auto corner = [&](long long ox, long long oy) {
      return reanchor(subpattern(big, {ox, oy, s, s}));
    };
    CHECK(corner(0, 0) == supertile(n - 1, 0));          // SW
    CHECK(corner(s + 1, 0) == supertile(n - 1, 1));      // SE
    CHECK(corner(0, s + 1) == supertile(n - 1, 3));      // NW
    CHECK(corner(s + 1, s + 1) == supertile(n - 1, 2));  // NE
  }
}

TEST_CASE("is_valid reports the first violation") {
  Alphabet a = robinson_alphabet();
  // two copies of the same cross side by side: E arm meets E arm, heads clash
  Pattern bad(a, {0, 0, 2, 1}, {0, 0});
  auto r1 = is_valid(bad);
  CHECK_FALSE(r1.ok);
  REQUIRE(r1.edge.has_value());
  CHECK(r1.edge->first == std::pair<long long, long long>{0, 0});
  CHECK(r1.edge->second == E);

  // an edge-consistent 2x2 assembly with no cross fails the lattice rule
  const auto& ts = tileset();
  auto match = [&](int x, EdgeDir dx, int y, EdgeDir dy) {
    return edges_match(ts[x].edges[dx], ts[y].edges[dy]);
  };
  bool found = false;
  for (int sw = 0; sw < 28 && !found; ++sw)
    for (int se = 0; se < 28 && !found; ++se) {
      if (ts[sw].is_cross || ts[se].is_cross || !match(sw, E, se, W)) continue;
      for (int nw = 0; nw < 28 && !found; ++nw) {
        if (ts[nw].is_cross || !match(sw, N, nw, S)) continue;
        for (int ne = 0; ne < 28 && !found; ++ne) {
          if (ts[ne].is_cross || !match(se, N, ne, S) || !match(nw, E, ne, W)) continue;
          Pattern q(robinson_alphabet(), {0, 0, 2, 2},
                    {Symbol(sw), Symbol(se), Symbol(nw), Symbol(ne)});
          auto r2 = is_valid(q);
          CHECK_FALSE(r2.ok);
          CHECK(r2.reason == "no 2-lattice of crosses");
          found = true;
        }
      }
    }
  CHECK(found);

  Pattern wrong(Alphabet::binary(), {0, 0, 1, 1}, {0});
  CHECK_THROWS_AS(is_valid(wrong), ContractError);
}

TEST_CASE("fault lines are the lines missed by the maximal supertile grid") {
  auto none = fault_lines(supertile(4, 0));
  CHECK_FALSE(none.horizontal.has_value());
  CHECK_FALSE(none.vertical.has_value());
  CHECK(none.decomposition_order == 4);

  auto two = fault_lines(two_fault_completions(3).front());
  REQUIRE(two.vertical.has_value());
  REQUIRE(two.horizontal.has_value());
  CHECK(*two.vertical == 7);
  CHECK(*two.horizontal == 7);
  CHECK(two.decomposition_order == 3);
  CHECK(two.vertical_crosses <= 1);
  CHECK(two.horizontal_crosses <= 1);

  auto one = fault_lines(one_fault_completions(3).front());
  REQUIRE(one.vertical.has_value());
  CHECK(*one.vertical == 7);
  CHECK_FALSE(one.horizontal.has_value());
}

TEST_CASE("two-fault fibers have exactly 28 completions agreeing off the lines") {
  auto sols = two_fault_completions(3);
  REQUIRE(sols.size() == 28);
  std::set<int> centers;
  for (const auto& p : sols) {
    CHECK(is_valid(p).ok);
    centers.insert(p.at(7, 7));
    for (long long y = 0; y < 15; ++y)
      for (long long x = 0; x < 15; ++x)
        if (x != 7 && y != 7) CHECK(p.at(x, y) == sols.front().at(x, y));
  }
  CHECK(centers.size() == 28);  // the intersection tile determines the completion
}

TEST_CASE("one-fault fibers have 6 completions under this encoding") {
  auto sols = one_fault_completions(3);
  REQUIRE(sols.size() == 6);
  for (const auto& p : sols) {
    CHECK(is_valid(p).ok);
    for (long long y = 0; y < 7; ++y)
      for (long long x = 0; x < 15; ++x)
        if (x != 7) CHECK(p.at(x, y) == sols.front().at(x, y));
  }
}

TEST_CASE("the reference configuration generates the tiles and ids deterministically") {
  CHECK(configuration_tile(0, 0) == 0);
  CHECK(tileset()[configuration_tile(7, 7)].is_cross);
  std::set<int> seen;
  for (long long x = 0; x < 64; ++x)
    for (long long y = 0; y < 64; ++y) seen.insert(configuration_tile(x, y));
  CHECK(seen.size() == 28);
  CHECK(robinson_alphabet().labels.front() == "R00");
  CHECK(robinson_alphabet().labels.back() == "R27");
  CHECK(robinson_palette().size() == 28);
}
