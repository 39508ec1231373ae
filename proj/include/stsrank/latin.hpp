#ifndef STSRANK_LATIN_HPP
#define STSRANK_LATIN_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsrank/bitvec.hpp"
#include "stsrank/rng.hpp"

namespace stsrank {

// Row-major Latin square of order 4 or 8; only order*order cells are used.
struct LatinSquare {
  int order = 0;
  std::array<std::uint8_t, 64> cells{};

  std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r * order + c)]; }
  std::uint8_t& at(int r, int c) { return cells[static_cast<std::size_t>(r * order + c)]; }

  auto operator<=>(const LatinSquare&) const = default;
};

bool is_latin(const LatinSquare& sq);
void require_latin(const LatinSquare& sq);  // throws with the failed property

// all 576 order-4 squares, row-major lexicographic
const std::vector<LatinSquare>& enumerate_latin4();

LatinSquare random_latin8(Rng& rng);

// cell (r, c) holding symbol s becomes the weight-3 word with coordinates
// r, 8+c, 16+s set; an order-8 square yields 64 such words of length 24
std::vector<BitVec> phi_embed(const LatinSquare& sq);

// every embedded cell word meets x in an even number of coordinates
bool is_orthogonal_code(const LatinSquare& sq, const BitVec& x24);

// --- constrained families -------------------------------------------------
// The family of order-8 squares whose embedded code is orthogonal to x and
// to every extra constraint supplied. Constraint vectors are length 24 with
// all three length-8 blocks of weight 4, and pairwise block sums of weight 4.
// Sizes: one constraint 576^4, two 16^4, three 1.

// throws std::invalid_argument naming the violated clause
void require_family_constraints(const BitVec& x, const std::optional<BitVec>& y,
                                const std::optional<BitVec>& z);

std::uint64_t family_count(const BitVec& x, const std::optional<BitVec>& y = std::nullopt,
                           const std::optional<BitVec>& z = std::nullopt);

// materializes the family when its size is at most 2^20
std::vector<LatinSquare> family_enumerate(const BitVec& x,
                                          const std::optional<BitVec>& y = std::nullopt,
                                          const std::optional<BitVec>& z = std::nullopt);

LatinSquare family_sample(const BitVec& x, const std::optional<BitVec>& y,
                          const std::optional<BitVec>& z, Rng& rng);

// the two-constraint family depends only on the span: {x,y}, {x,x+y}, {x+y,y}
// all generate the same set of squares
bool family_pair_identity(const BitVec& x, const BitVec& y);

std::string latin_to_text(const LatinSquare& sq);
LatinSquare latin_from_text(const std::string& text);

}  // namespace stsrank

#endif
