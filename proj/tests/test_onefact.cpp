#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "stsrank/gf2.hpp"
#include "stsrank/onefact.hpp"
#include "stsrank/rng.hpp"
#include "stsrank/sts.hpp"

using namespace stsrank;

namespace {

constexpr std::array<std::uint32_t, 6> kOrbitSizes = {630, 420, 2520, 30, 1680, 960};
constexpr std::array<std::size_t, 6> kXSizes = {6, 2, 2, 14, 0, 0};

// parity of every class computed straight from the definition
std::uint8_t parity_ref(std::uint8_t x, const Factorization& f) {
  std::uint8_t out = 0;
  for (int j = 0; j < 7; ++j) {
    int p = std::popcount(unsigned(x & f.classes[std::size_t(j)].words[0])) & 1;
    for (auto w : f.classes[std::size_t(j)].words)
      REQUIRE((std::popcount(unsigned(x & w)) & 1) == p);
    out |= std::uint8_t(p << j);
  }
  return out;
}

}  // namespace

TEST_CASE("hex notation is most-significant-coordinate-first") {
  CHECK(parse_word_hex("90") == 0b00001001);  // coordinates 0 and 3
  CHECK(parse_word_hex("05") == 0b10100000);  // coordinates 5 and 7
  CHECK(parse_word_hex("C0") == 0b00000011);
  CHECK(format_word_hex(0b00001001) == "90");
  for (unsigned w = 0; w < 256; ++w)
    CHECK(parse_word_hex(format_word_hex(std::uint8_t(w))) == w);
  CHECK_THROWS_AS(parse_word_hex("9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_hex("9G"), std::invalid_argument);
}

TEST_CASE("representative table round-trips bit-exactly") {
  const char* row0 = "81422418 82412814 84482211 88442112 90600A05 A0500906 C0300C03";
  CHECK(format_factorization_hex(representatives()[0]) == row0);
  for (const auto& f : representatives()) {
    require_factorization(f);
    CHECK(parse_factorization_hex(format_factorization_hex(f)) == f);
  }
  // representatives are pairwise inequivalent
  std::set<std::array<std::uint32_t, 7>> canon;
  for (const auto& f : representatives()) canon.insert(canonical_form(f));
  CHECK(canon.size() == 6);
}

TEST_CASE("factorization text errors") {
  CHECK_THROWS_AS(parse_factorization_hex("81422418"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factorization_hex("81422418 82412814 84482211 88442112 90600A05 A0500906 C0300C0"),
                  std::invalid_argument);
  const char* extra = "81422418 82412814 84482211 88442112 90600A05 A0500906 C0300C03 FF";
  CHECK_THROWS_AS(parse_factorization_hex(extra), std::invalid_argument);
  // word repeated across classes
  const char* dup = "81422418 81422418 84482211 88442112 90600A05 A0500906 C0300C03";
  CHECK_THROWS_AS(parse_factorization_hex(dup), std::invalid_argument);
  // a class that is not a matching (overlapping words)
  const char* overlap = "81812418 82412814 84482211 88442112 90600A05 A0500906 C0300C03";
  CHECK_THROWS_AS(parse_factorization_hex(overlap), std::invalid_argument);
}

TEST_CASE("enumeration finds all 6240, unique and valid") {
  auto all = enumerate_factorizations();
  REQUIRE(all.size() == 6240);
  std::set<std::array<std::uint32_t, 7>> keys;
  for (const auto& f : all) {
    require_factorization(f);
    keys.insert(fact_key(f));
  }
  CHECK(keys.size() == 6240);
  // each representative appears (as its canonically sorted copy)
  for (const auto& r : representatives()) CHECK(keys.count(fact_key(r)) == 1);
}

TEST_CASE("orbit classification") {
  auto all = enumerate_factorizations();
  auto cls = classify_orbits(all);
  CHECK(cls.orbit_sizes == kOrbitSizes);
  std::uint32_t total = 0;
  for (auto s : cls.orbit_sizes) total += s;
  CHECK(total == 6240);
  // each representative's enumeration copy lands in its own orbit
  std::map<std::array<std::uint32_t, 7>, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[fact_key(all[i])] = i;
  for (int r = 0; r < 6; ++r) {
    auto it = index.find(fact_key(representatives()[std::size_t(r)]));
    REQUIRE(it != index.end());
    CHECK(cls.orbit_of[it->second] == r);
  }
  // canonical form is constant on orbits: spot-check with random relabelings
  Rng rng(31);
  for (int r = 0; r < 6; ++r) {
    auto base = canonical_form(representatives()[std::size_t(r)]);
    for (int t = 0; t < 10; ++t)
      CHECK(canonical_form(apply_perm_fact(random_perm(8, rng), representatives()[std::size_t(r)])) == base);
  }
  // error paths: non-closed input, duplicates
  CHECK_THROWS_AS(classify_orbits({all[0]}), std::invalid_argument);
  CHECK_THROWS_AS(classify_orbits({all[0], all[0]}), std::invalid_argument);
}

TEST_CASE("pure-word sets per representative") {
  for (int r = 0; r < 6; ++r) {
    auto xs = xset(representatives()[std::size_t(r)]);
    CHECK(xs.size() == kXSizes[std::size_t(r)]);
    for (auto x : xs) {
      CHECK(std::popcount(unsigned(x)) == 4);
      (void)parity_mask(x, representatives()[std::size_t(r)]);  // must not throw
    }
    // closure: x, x' pure implies x ^ x' is 0, all-ones, or again pure of weight 4
    for (auto x : xs)
      for (auto y : xs) {
        std::uint8_t s = x ^ y;
        if (s == 0 || s == 0xFF) continue;
        CHECK(std::popcount(unsigned(s)) == 4);
        CHECK(std::count(xs.begin(), xs.end(), s) == 1);
      }
  }
}

TEST_CASE("span and block-quotient dimensions of the pure sets") {
  // dim of <X union {0, all-ones}> and of its psi image, per representative
  constexpr std::array<int, 4> kSpanDims = {3, 2, 2, 4};
  constexpr std::array<int, 4> kPsiDims = {2, 1, 1, 3};
  for (int r = 0; r < 4; ++r) {
    auto xs = xset(representatives()[std::size_t(r)]);
    std::vector<BitVec> vecs{BitVec::from_u64(0xFF, 8)};
    std::vector<BitVec> psis;
    for (auto x : xs) {
      vecs.push_back(BitVec::from_u64(x, 8));
      psis.push_back(BitVec::from_u64(psi_word(x), 8));
    }
    CHECK(rank_of(vecs) == kSpanDims[std::size_t(r)]);
    CHECK(rank_of(psis) == kPsiDims[std::size_t(r)]);
  }
}

TEST_CASE("parity vectors land in the tail-system dual") {
  auto dual = dual_small(make_code(7, incidence_rows(tail_default())));
  std::set<std::uint8_t> dual_nz;
  for (const auto& w : span_all(dual))
    if (!w.zero()) dual_nz.insert(std::uint8_t(w.slice64(0, 7)));
  REQUIRE(dual_nz.size() == 7);

  // fourth representative: all 14 parities cover the dual's nonzero words,
  // each hit twice (complementary pure words share a parity)
  {
    auto xs = xset(representatives()[3]);
    REQUIRE(xs.size() == 14);
    std::map<std::uint8_t, int> hits;
    for (auto x : xs) hits[parity_mask(x, representatives()[3])]++;
    CHECK(hits.size() == 7);
    for (auto& [p, n] : hits) {
      CHECK(dual_nz.count(p) == 1);
      CHECK(n == 2);
    }
  }
  // first representative: three parities, pinned exactly
  {
    auto xs = xset(representatives()[0]);
    REQUIRE(xs.size() == 6);
    std::set<std::uint8_t> ps;
    for (auto x : xs) ps.insert(parity_mask(x, representatives()[0]));
    CHECK(ps == std::set<std::uint8_t>{0b0001111, 0b0110011, 0b0111100});
    for (auto p : ps) CHECK(dual_nz.count(p) == 1);
  }
  // second and third: a single parity each
  for (int r : {1, 2}) {
    std::set<std::uint8_t> ps;
    for (auto x : xset(representatives()[std::size_t(r)]))
      ps.insert(parity_mask(x, representatives()[std::size_t(r)]));
    CHECK(ps.size() == 1);
    CHECK(dual_nz.count(*ps.begin()) == 1);
  }
}

TEST_CASE("parity is additive and matches the reference") {
  for (int r = 0; r < 4; ++r) {
    const auto& f = representatives()[std::size_t(r)];
    auto xs = xset(f);
    for (auto x : xs) {
      CHECK(parity_mask(x, f) == parity_ref(x, f));
      CHECK(parity(BitVec::from_u64(x, 8), f) == BitVec::from_u64(parity_mask(x, f), 7));
      for (auto y : xs)
        CHECK(std::uint8_t(parity_mask(x, f) ^ parity_mask(y, f)) == parity_mask(std::uint8_t(x ^ y), f));
    }
    CHECK(parity_mask(0, f) == 0);
    CHECK(parity_mask(0xFF, f) == 0);  // every word meets a pair evenly
  }
  // impure case throws
  CHECK_THROWS_AS(parity_mask(0b00000001, representatives()[0]), std::invalid_argument);
  CHECK_THROWS_AS(parity(BitVec(7), representatives()[0]), std::invalid_argument);
}

TEST_CASE("parity transformation laws") {
  Rng rng(97);
  for (int r = 0; r < 4; ++r) {
    const auto& f = representatives()[std::size_t(r)];
    auto xs = xset(f);
    // relabeling law: parity(pi(x), pi(V)) = parity(x, V)
    for (int t = 0; t < 100; ++t) {
      Perm pi = random_perm(8, rng);
      Factorization g = apply_perm_fact(pi, f);
      for (auto x : xs) CHECK(parity_mask(pi.map_mask8(x), g) == parity_mask(x, f));
    }
    // class reassignment law: parity(x, reorder(tau, V)) = tau^-1(parity(x, V))
    for (int t = 0; t < 100; ++t) {
      Perm tau = random_perm(7, rng);
      Factorization g = reorder(tau, f);
      for (auto x : xs)
        CHECK(parity_mask(x, g) == tau.inverse().map_mask8(parity_mask(x, f)));
    }
  }
}

TEST_CASE("relabeling and reordering keep factorizations valid") {
  Rng rng(55);
  const auto& f = representatives()[4];
  for (int t = 0; t < 20; ++t) {
    require_factorization(apply_perm_fact(random_perm(8, rng), f));
    require_factorization(reorder(random_perm(7, rng), f));
  }
  // reorder moves classes by position: class j of the result is class tau(j)
  Perm tau = Perm::from_images({3, 0, 1, 2, 4, 6, 5});
  Factorization g = reorder(tau, f);
  for (int j = 0; j < 7; ++j) CHECK(g.classes[std::size_t(j)] == f.classes[std::size_t(tau(j))]);
  CHECK_THROWS_AS(reorder(Perm(8), f), std::invalid_argument);
  CHECK_THROWS_AS(apply_perm_fact(Perm(7), f), std::invalid_argument);
}

TEST_CASE("block-complement canonicalization of words") {
  for (unsigned x = 0; x < 256; ++x) {
    std::uint8_t c = psi_word(std::uint8_t(x));
    CHECK((c & 1u) == 0);
    CHECK((c == x || c == (x ^ 0xFFu)));
    CHECK(psi_word(c) == c);
  }
}

TEST_CASE("orthogonality of (word | tail) vectors equals the parity criterion") {
  // exhaustive over all weight-4 words and all 7-bit tails
  for (int r : {0, 3}) {
    const auto& f = representatives()[std::size_t(r)];
    for (unsigned x = 0; x < 256; ++x) {
      if (std::popcount(x) != 4) continue;
      for (unsigned c = 0; c < 128; ++c)
        CHECK(pair_blocks_orthogonal(std::uint8_t(x), std::uint8_t(c), f) ==
              parity_matches(std::uint8_t(x), std::uint8_t(c), f));
    }
  }
}
