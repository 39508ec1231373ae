#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "stsrank/rng.hpp"
#include "stsrank/sts.hpp"

using namespace stsrank;

TEST_CASE("ambient parameters") {
  auto p5 = sts_params(5);
  CHECK(p5.v == 31);
  CHECK(p5.u == 3);
  CHECK(p5.k == 1);
  CHECK(p5.e == 1);
  auto p6 = sts_params(6);
  CHECK(p6.v == 63);
  CHECK(p6.u == 7);
  CHECK(p6.k == 7);
  CHECK(p6.e == 4);
  auto p7 = sts_params(7);
  CHECK(p7.v == 127);
  CHECK(p7.u == 15);
  CHECK(p7.k == 35);
  CHECK(p7.e == 11);
  auto p8 = sts_params(8);
  CHECK(p8.v == 255);
  CHECK(p8.u == 31);
  CHECK(p8.k == 155);
  CHECK(p8.e == 26);
  CHECK_THROWS_AS(sts_params(4), std::invalid_argument);
  CHECK_THROWS_AS(sts_params(9), std::invalid_argument);
  CHECK(block_label(5, 0) == 3);
  CHECK(block_label(5, 2) == 1);
  CHECK(block_label(6, 0) == 7);
  CHECK_THROWS_AS(block_label(5, 3), std::invalid_argument);
}

TEST_CASE("the 30 systems on 7 points") {
  auto all = enumerate_sts7();
  REQUIRE(all.size() == 30);
  std::set<std::vector<std::array<std::uint16_t, 3>>> uniq;
  for (const auto& ts : all) {
    CHECK(ts.v == 7);
    CHECK(ts.blocks.size() == 7);
    require_triple_system(ts);
    CHECK(is_steiner(ts));
    uniq.insert(ts.blocks);
  }
  CHECK(uniq.size() == 30);
  CHECK(std::count(all.begin(), all.end(), tail_default()) == 1);
}

TEST_CASE("steiner detection") {
  auto ts = tail_default();
  CHECK(is_steiner(ts));
  TripleSystem missing{7, ts.blocks};
  missing.blocks.pop_back();
  CHECK_FALSE(is_steiner(missing));
  TripleSystem doubled{7, ts.blocks};
  doubled.blocks.push_back(ts.blocks[0]);
  CHECK_FALSE(is_steiner(doubled));
}

TEST_CASE("boolean systems on block positions") {
  auto b5 = boolean_system(5);
  CHECK(b5.v == 3);
  REQUIRE(b5.blocks.size() == 1);
  CHECK(b5.blocks[0] == std::array<std::uint16_t, 3>{0, 1, 2});
  for (int m : {6, 7, 8}) {
    auto bs = boolean_system(m);
    auto P = sts_params(m);
    CHECK(bs.v == P.u);
    CHECK(static_cast<int>(bs.blocks.size()) == P.k);
    CHECK(is_steiner(bs));
    for (const auto& t : bs.blocks)
      CHECK((block_label(m, t[0]) ^ block_label(m, t[1]) ^ block_label(m, t[2])) == 0);
  }
}

TEST_CASE("equidistant subcode and block-ones space") {
  for (int m : {5, 6, 7, 8}) {
    auto P = sts_params(m);
    auto A = equidistant_subcode(m);
    auto E = block_ones_space(m);
    CHECK(A.dim() == m - 3);
    CHECK(E.dim() == P.u);
    for (const auto& w : span_all(A)) {
      if (w.zero()) continue;
      CHECK(w.weight() == (1 << (m - 1)));
      // block-constant with a zero tail
      for (int p = 0; p < P.u; ++p) {
        auto s = w.slice64(8 * p, 8);
        CHECK((s == 0 || s == 0xFF));
      }
      CHECK(w.slice64(8 * P.u, 7) == 0);
      CHECK(span_contains(E, w));
    }
  }
}

TEST_CASE("assembly: counts, coverage, block shapes") {
  auto spec = recipe(5, 0, 2024);
  auto sys = assemble(spec);
  CHECK(sys.v == 31);
  CHECK(sys.blocks.size() == 155);
  CHECK(is_steiner(sys));
  // block shapes: 7 tail triples, 84 pair-plus-tail, 64 across three blocks
  int tail3 = 0, pair1 = 0, spread = 0;
  for (const auto& b : sys.blocks) {
    int intail = (b[0] >= 24) + (b[1] >= 24) + (b[2] >= 24);
    if (intail == 3)
      ++tail3;
    else if (intail == 1) {
      CHECK(b[0] / 8 == b[1] / 8);
      ++pair1;
    } else {
      CHECK(intail == 0);
      CHECK(b[0] / 8 != b[1] / 8);
      CHECK(b[1] / 8 != b[2] / 8);
      ++spread;
    }
  }
  CHECK(tail3 == 7);
  CHECK(pair1 == 84);
  CHECK(spread == 64);
}

TEST_CASE("assembly rejects broken components") {
  auto spec = recipe(5, 0, 99);
  {
    auto bad = spec;
    bad.parts[0].classes[0].words[0] = bad.parts[0].classes[1].words[0];
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
  {
    auto bad = spec;
    std::swap(bad.squares[0].at(0, 0), bad.squares[0].at(0, 1));
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
  {
    auto bad = spec;
    bad.tail.blocks[0] = bad.tail.blocks[1];
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
  {
    auto bad = spec;
    bad.orderings[0] = Perm(8);
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
  {
    auto bad = spec;
    bad.parts.pop_back();
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
  {
    auto bad = spec;
    bad.m = 6;
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  }
}

TEST_CASE("rank classification across all deficits") {
  for (int m : {5, 6}) {
    auto P = sts_params(m);
    for (int d = 0; d <= 3; ++d) {
      auto sys = assemble(recipe(m, d, 1000 + static_cast<std::uint64_t>(10 * m + d)));
      auto rep = rank_class(sys, m);
      CHECK(rep.rank == P.v - m + 3 - d);
      CHECK(rep.deficit == d);
      CHECK(rep.dual_dim == P.v - rep.rank);
      REQUIRE(rep.extra_classes.size() == (std::size_t(1) << d) - 1);
      CHECK(std::is_sorted(rep.extra_classes.begin(), rep.extra_classes.end()));
      for (const auto& c : rep.extra_classes) {
        CHECK(psi_vec(c, m) == c);
        CHECK(c.weight() == 4 * P.u + 4);
      }
      // the classes together with zero are closed under xor-then-canonicalize
      std::set<BitVec> cls(rep.extra_classes.begin(), rep.extra_classes.end());
      for (const auto& a : rep.extra_classes)
        for (const auto& b : rep.extra_classes) {
          BitVec s = psi_vec(a ^ b, m);
          CHECK((s.zero() || cls.count(s) == 1));
        }
    }
  }
}

TEST_CASE("rank classification rejects bad input") {
  auto sys = assemble(recipe(5, 0, 7));
  CHECK_THROWS_AS(rank_class(sys, 6), std::invalid_argument);
  {
    auto bad = sys;
    bad.blocks.pop_back();
    CHECK_THROWS_AS(rank_class(bad, 5), std::invalid_argument);  // not Steiner
  }
  {
    // swapping two points from blocks with different labels is a relabeling
    // (still Steiner) but destroys orthogonality to the equidistant subcode
    auto bad = sys;
    for (auto& b : bad.blocks)
      for (auto& p : b) {
        if (p == 0)
          p = 8;
        else if (p == 8)
          p = 0;
      }
    normalize_system(bad);
    CHECK(is_steiner(bad));
    CHECK_THROWS_AS(rank_class(bad, 5), std::runtime_error);
  }
}

TEST_CASE("construction recipes are seed-deterministic") {
  for (int d = 0; d <= 3; ++d) {
    auto a = recipe(5, d, 321);
    auto b = recipe(5, d, 321);
    CHECK(spec_to_text(a) == spec_to_text(b));
    CHECK(system_to_text(assemble(a)) == system_to_text(assemble(b)));
    auto c = recipe(5, d, 322);
    CHECK(spec_to_text(a) != spec_to_text(c));
  }
  CHECK_THROWS_AS(recipe(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(recipe(5, 4, 1), std::invalid_argument);
}

TEST_CASE("deficit-one alignment survives ordering changes that fix the target") {
  // extract the dual class of a deficit-1 system, then recompute the parity
  // alignment per block and perturb each ordering by stabilizer elements
  auto spec = recipe(5, 1, 77);
  auto sys = assemble(spec);
  auto rep = rank_class(sys, 5);
  REQUIRE(rep.deficit == 1);
  REQUIRE(rep.extra_classes.size() == 1);
  const BitVec& cls = rep.extra_classes[0];
  std::uint8_t xt = static_cast<std::uint8_t>(cls.slice64(24, 7));
  BitVec xtv = BitVec::from_u64(xt, 7);
  auto fixers = coset_solve(7, {{xtv, xtv}});
  REQUIRE(fixers.size() == 144);  // stabilizer of a weight-4 vector

  Rng rng(5150);
  auto modified = spec;
  for (int i = 0; i < 3; ++i) {
    std::uint8_t xi = static_cast<std::uint8_t>(cls.slice64(8 * i, 8));
    auto ordered = reorder(spec.orderings[static_cast<std::size_t>(i)], spec.parts[static_cast<std::size_t>(i)]);
    REQUIRE(parity_mask(xi, ordered) == xt);
    for (int t = 0; t < 20; ++t) {
      const Perm& h = fixers[rng.below(fixers.size())];
      Perm sigma = spec.orderings[static_cast<std::size_t>(i)].after(h);
      CHECK(parity_mask(xi, reorder(sigma, spec.parts[static_cast<std::size_t>(i)])) == xt);
    }
    modified.orderings[static_cast<std::size_t>(i)] =
        spec.orderings[static_cast<std::size_t>(i)].after(fixers[rng.below(fixers.size())]);
  }
  // the modified spec still assembles and keeps the same dual class
  auto sys2 = assemble(modified);
  for (const auto& row : incidence_rows(sys2)) CHECK(cls.dot(row) == 0);
  auto rep2 = rank_class(sys2, 5);
  CHECK(rep2.deficit >= 1);
  CHECK(std::count(rep2.extra_classes.begin(), rep2.extra_classes.end(), cls) == 1);
}

TEST_CASE("two-target ordering constraints are always solvable, solutions a coset") {
  // all ordered pairs of distinct nonzero dual words of the default tail,
  // against one fixed pair of independent parity vectors
  auto dualmasks = [&] {
    std::vector<std::uint8_t> out;
    for (unsigned mask = 1; mask < 128; ++mask) {
      BitVec w = BitVec::from_u64(mask, 7);
      bool orth = true;
      for (const auto& r : incidence_rows(tail_default()))
        if (w.dot(r)) {
          orth = false;
          break;
        }
      if (orth) out.push_back(static_cast<std::uint8_t>(mask));
    }
    return out;
  }();
  REQUIRE(dualmasks.size() == 7);
  const BitVec p1 = BitVec::from_u64(0b0001111, 7), p2 = BitVec::from_u64(0b0110011, 7);
  for (auto t1 : dualmasks)
    for (auto t2 : dualmasks) {
      if (t1 == t2) continue;
      auto sols = coset_solve(7, {{BitVec::from_u64(t1, 7), p1}, {BitVec::from_u64(t2, 7), p2}});
      CHECK(sols.size() == 8);  // pointwise pair stabilizer order
      // coset: composing with any pointwise fixer of the sources stays inside
      std::set<Perm> sset(sols.begin(), sols.end());
      auto fix = coset_solve(7, {{BitVec::from_u64(t1, 7), BitVec::from_u64(t1, 7)},
                                 {BitVec::from_u64(t2, 7), BitVec::from_u64(t2, 7)}});
      for (const auto& h : fix) CHECK(sset.count(sols.front().after(h)) == 1);
    }
}

TEST_CASE("system text round trip") {
  auto sys = assemble(recipe(5, 3, 8));
  auto text = system_to_text(sys);
  CHECK(system_from_text(text) == sys);
  CHECK(system_to_text(system_from_text(text)) == text);
  CHECK_THROWS_AS(system_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(system_from_text("v 7\nblocks 2\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(system_from_text("v 7\nblocks 1\n0 1 9\n"), std::invalid_argument);
  CHECK_THROWS_AS(system_from_text("v 7\nblocks 1\n0 1 2\nextra"), std::invalid_argument);
  CHECK_THROWS_AS(system_from_text("v 7\nblocks 2\n0 1 2\n0 1 2\n"), std::invalid_argument);
  // unsorted input is normalized
  auto loose = system_from_text("v 7\nblocks 7\n4 2 0\n1 3 4\n1 2 5\n0 3 5\n0 1 6\n2 3 6\n4 5 6\n");
  CHECK(loose == tail_default());
}

TEST_CASE("construction text round trip") {
  for (int d : {0, 2}) {
    auto spec = recipe(6, d, 17);
    auto text = spec_to_text(spec);
    auto back = spec_from_text(text);
    CHECK(back == spec);
    CHECK(spec_to_text(back) == text);
  }
  auto text = spec_to_text(recipe(5, 1, 3));
  CHECK_THROWS_AS(spec_from_text("m 9\n"), std::invalid_argument);
  CHECK_THROWS_AS(spec_from_text("m 5\ntail 6\n"), std::invalid_argument);
  CHECK_THROWS_AS(spec_from_text(text + "extra"), std::invalid_argument);
  {
    // square header must match the boolean system
    auto broken = text;
    auto pos = broken.find("squares 1\n");
    REQUIRE(pos != std::string::npos);
    auto hdr = broken.find("0 1 2", pos);
    REQUIRE(hdr != std::string::npos);
    broken.replace(hdr, 5, "0 2 1");
    CHECK_THROWS_AS(spec_from_text(broken), std::invalid_argument);
  }
  {
    auto truncated = text.substr(0, text.find("orderings"));
    CHECK_THROWS_AS(spec_from_text(truncated), std::invalid_argument);
  }
}
