#ifndef STSRANK_STS_HPP
#define STSRANK_STS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stsrank/gf2.hpp"
#include "stsrank/latin.hpp"
#include "stsrank/onefact.hpp"
#include "stsrank/perm.hpp"

namespace stsrank {

// Point set {0..v-1}; blocks are sorted triples, the list sorted and
// duplicate-free after normalize_system.
struct TripleSystem {
  int v = 0;
  std::vector<std::array<std::uint16_t, 3>> blocks;

  bool operator==(const TripleSystem&) const = default;
};

void normalize_system(TripleSystem& ts);
void require_triple_system(const TripleSystem& ts);

// every pair of points covered exactly once
bool is_steiner(const TripleSystem& ts);

std::vector<BitVec> incidence_rows(const TripleSystem& ts);

// all 30 systems on 7 points, deterministic order
std::vector<TripleSystem> enumerate_sts7();

// the default tail system: rows of a fixed parity-check-like matrix on 7
// points; its dual is 3-dimensional with nonzero words the complements of
// its blocks
TripleSystem tail_default();

// --- the ambient structure for v = 2^m - 1 = 8u + 7 -------------------------
struct MParams {
  int m, v, u, k, e;  // u = 2^(m-3)-1, k = u(u-1)/6 boolean triples, e = u-m+3
};
MParams sts_params(int m);  // m in 5..8

// label of block position p is u - p; tail carries label 0
int block_label(int m, int p);

// [v, m-3] code: generator for label bit t is all-ones on every block whose
// label has bit t set, zero on the tail; every nonzero word has weight 2^(m-1)
LinearCode equidistant_subcode(int m);

// [v, u] space spanned by the per-block all-ones vectors
LinearCode block_ones_space(int m);

// STS(u) on block positions: {p,q,r} is a block iff the labels xor to zero
TripleSystem boolean_system(int m);

// --- construction -----------------------------------------------------------
struct ConstructionSpec {
  int m = 0;
  TripleSystem tail;                   // STS(7) on the tail points
  std::vector<Factorization> parts;    // one per block, in block order
  std::vector<Perm> orderings;         // degree-7 class reassignments, per block
  std::vector<LatinSquare> squares;    // one per boolean-system triple, in block order

  bool operator==(const ConstructionSpec&) const = default;
};

void require_spec(const ConstructionSpec& spec);

// Assembles the 7 + 28u + 64k blocks:
//   tail triples on the 7 tail points;
//   within-block pairs joined to tail point j via class j of
//     reorder(ordering_i, part_i);
//   one point in each of three blocks i1,i2,i3 per Latin cell (r, c, L(r,c)).
// Runs the full pair-coverage audit and the equidistant-code orthogonality
// audit; throws on any failure.
TripleSystem assemble(const ConstructionSpec& spec);

// --- rank analysis -----------------------------------------------------------
struct RankReport {
  int rank = 0;
  int deficit = 0;                    // (v - m + 3) - rank, in 0..3
  int dual_dim = 0;                   // v - rank
  std::vector<BitVec> extra_classes;  // psi-canonical nonzero dual classes, sorted
};

// Measures the GF(2) rank of the incidence matrix, verifies the equidistant
// code lies in the dual and meets the block-constant space exactly in it,
// then enumerates the dual and counts its psi-classes; their number must be
// 2^deficit - 1 and every class representative must have weight-4 blocks and
// a weight-4 tail. Violations throw.
RankReport rank_class(const TripleSystem& ts, int m);

// Seeded deterministic generator hitting rank exactly v - m + 3 - deficit.
// All free choices (tail system, orbit members, orderings, squares, coset
// elements, block-complement translations) are drawn from one Rng stream.
ConstructionSpec recipe(int m, int deficit, std::uint64_t seed);

// --- serialization -----------------------------------------------------------
std::string system_to_text(const TripleSystem& ts);
TripleSystem system_from_text(const std::string& text);
std::string spec_to_text(const ConstructionSpec& spec);
ConstructionSpec spec_from_text(const std::string& text);

}  // namespace stsrank

#endif
