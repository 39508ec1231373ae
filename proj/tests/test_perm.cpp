#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "stsrank/gf2.hpp"
#include "stsrank/perm.hpp"
#include "stsrank/sts.hpp"

using namespace stsrank;

namespace {

LinearCode tail_dual() { return dual_small(make_code(7, incidence_rows(tail_default()))); }

BitVec mask7(unsigned m) { return BitVec::from_u64(m, 7); }

}  // namespace

TEST_CASE("action convention: basis vectors move forward") {
  // the 3-cycle 0 -> 1 -> 2 -> 0
  Perm c = Perm::from_images({1, 2, 0});
  BitVec e0(3);
  e0.set(0);
  BitVec e1(3);
  e1.set(1);
  CHECK(c.map(e0) == e1);  // pi(e_s) = e_{pi(s)}
  CHECK(c(0) == 1);
  // coordinate form: pi(x)_i = x_{pi^-1(i)}
  BitVec x = BitVec::from_u64(0b011, 3);  // coords 0,1
  BitVec y = c.map(x);
  for (int i = 0; i < 3; ++i) CHECK(y.get(i) == x.get(c.inverse()(i)));

  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_images({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(9), std::invalid_argument);
  CHECK_THROWS_AS((void)c.map(BitVec(4)), std::invalid_argument);
}

TEST_CASE("composition and inverse") {
  Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    Perm a = random_perm(7, rng), b = random_perm(7, rng);
    Perm ab = a.after(b);
    for (int i = 0; i < 7; ++i) CHECK(ab(i) == a(b(i)));
    BitVec x(7);
    for (int i = 0; i < 7; ++i) x.set(i, rng.coin());
    CHECK(ab.map(x) == a.map(b.map(x)));
    CHECK(a.after(a.inverse()) == Perm(7));
    CHECK(a.inverse().after(a) == Perm(7));
    // mask action agrees with the vector action
    std::uint8_t m = static_cast<std::uint8_t>(rng.next());
    m &= 0x7F;
    CHECK(a.map_mask8(m) == static_cast<std::uint8_t>(a.map(BitVec::from_u64(m, 7)).slice64(0, 7)));
  }
  CHECK_THROWS_AS(Perm(7).after(Perm(6)), std::invalid_argument);
}

TEST_CASE("full iteration visits every permutation once") {
  std::set<std::vector<int>> seen;
  int count = 0;
  for_each_perm(7, [&](const Perm& p) {
    ++count;
    std::vector<int> img;
    for (int i = 0; i < 7; ++i) img.push_back(p(i));
    seen.insert(img);
  });
  CHECK(count == 5040);
  CHECK(seen.size() == 5040);
}

TEST_CASE("stabilizer of the tail-system dual") {
  auto dual = tail_dual();
  std::vector<BitVec> words;
  for (const auto& w : span_all(dual))
    if (!w.zero()) words.push_back(w);
  REQUIRE(words.size() == 7);
  auto stab = stabilizer_of_set(7, words);
  CHECK(stab.size() == 168);
  // closed under composition and inversion (sanity: it is a group)
  std::set<Perm> sset(stab.begin(), stab.end());
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Perm& a = rng.choice(stab);
    const Perm& b = rng.choice(stab);
    CHECK(sset.count(a.after(b)) == 1);
    CHECK(sset.count(a.inverse()) == 1);
  }
}

TEST_CASE("two-dimensional subspaces: stabilizers of order 48, transitive action") {
  auto dual = tail_dual();
  auto stab168 = stabilizer_of_set(7, [&] {
    std::vector<BitVec> words;
    for (const auto& w : span_all(dual))
      if (!w.zero()) words.push_back(w);
    return words;
  }());
  auto subs = two_dim_subspaces(dual);
  REQUIRE(subs.size() == 7);
  std::vector<std::vector<BitVec>> objects;
  for (const auto& s : subs) {
    std::vector<BitVec> nz;
    for (const auto& w : span_all(s))
      if (!w.zero()) nz.push_back(w);
    REQUIRE(nz.size() == 3);
    // full stabilizer over S7
    CHECK(stabilizer_of_set(7, nz).size() == 48);
    // inside the 168-element group: orbit-stabilizer forces 168 / 7
    int inside = 0;
    std::vector<BitVec> key = nz;
    std::sort(key.begin(), key.end());
    for (const auto& g : stab168) {
      std::vector<BitVec> img;
      for (const auto& w : nz) img.push_back(g.map(w));
      std::sort(img.begin(), img.end());
      if (img == key) ++inside;
    }
    CHECK(inside == 24);
    objects.push_back(nz);
  }
  CHECK(orbit_is_transitive(stab168, objects));
  // the subspaces are NOT all equivalent under the trivial group
  CHECK_FALSE(orbit_is_transitive({Perm(7)}, objects));
}

TEST_CASE("pointwise pair stabilizer has order 8") {
  auto dual = tail_dual();
  std::vector<BitVec> nz;
  for (const auto& w : span_all(dual))
    if (!w.zero()) nz.push_back(w);
  std::sort(nz.begin(), nz.end());
  int pairs = 0;
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = 0; j < nz.size(); ++j) {
      if (i == j) continue;
      auto fix = coset_solve(7, {{nz[i], nz[i]}, {nz[j], nz[j]}});
      CHECK(fix.size() == 8);
      ++pairs;
    }
  CHECK(pairs == 42);
}

TEST_CASE("stabilizer of a single weight-4 vector") {
  CHECK(stabilizer_of_set(7, {mask7(0b0001111)}).size() == 144);  // 4! * 3!
  CHECK(stabilizer_of_set(7, {mask7(0b1111111)}).size() == 5040);
}

TEST_CASE("coset solutions form a coset of the pointwise stabilizer") {
  // both pairs: weight 4, intersection 2, so a solution exists
  BitVec s1 = mask7(0b0001111), s2 = mask7(0b0110011);
  BitVec d1 = mask7(0b1111000), d2 = mask7(0b0110110);
  REQUIRE((s1 ^ s2).weight() == (d1 ^ d2).weight());
  auto sols = coset_solve(7, {{s1, d1}, {s2, d2}});
  REQUIRE(!sols.empty());
  auto fix = coset_solve(7, {{s1, s1}, {s2, s2}});
  CHECK(sols.size() == fix.size());
  std::set<Perm> sset(sols.begin(), sols.end());
  const Perm& sigma0 = sols.front();
  for (const auto& h : fix) CHECK(sset.count(sigma0.after(h)) == 1);

  // impossible constraints give the empty set
  CHECK(coset_solve(7, {{mask7(0b0000011), mask7(0b0000111)}}).empty());
  CHECK(coset_solve(7, {{s1, d1}, {s1, d2}}).empty());
}

TEST_CASE("seeded permutation draws are reproducible") {
  Rng a(42), b(42), c(43);
  Perm pa = random_perm(8, a), pb = random_perm(8, b), pc = random_perm(8, c);
  CHECK(pa == pb);
  CHECK(pa != pc);  // overwhelmingly likely and pinned by the fixed seeds
}
