#ifndef STSRANK_ONEFACT_HPP
#define STSRANK_ONEFACT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsrank/bitvec.hpp"
#include "stsrank/perm.hpp"

namespace stsrank {

// Words are 8-coordinate masks, coordinate i = bit i. The hex notation used
// by the table and the text format is most-significant-bit-first (coordinate
// 0 is the top bit of the byte), so "90" denotes {0,3} and "05" denotes {5,7}.

// A perfect matching of K8: four disjoint weight-2 words covering all 8
// coordinates. Word order is preserved as given (the text format round-trips
// bit-exactly); canonical sorting happens only in key computations.
struct ParallelClass {
  std::array<std::uint8_t, 4> words{};
  auto operator<=>(const ParallelClass&) const = default;
};

// A one-factorization of K8: seven parallel classes partitioning all 28
// weight-2 words. Class positions are meaningful (class j attaches to tail
// point j), so no implicit reordering happens anywhere.
struct Factorization {
  std::array<ParallelClass, 7> classes{};
  auto operator<=>(const Factorization&) const = default;
};

bool is_parallel_class(const ParallelClass& pc);
void require_factorization(const Factorization& f);  // throws naming the defect

// --- text format ------------------------------------------------------------
// one line, seven 8-hex-digit groups separated by single spaces
std::uint8_t parse_word_hex(const std::string& two_digits);
std::string format_word_hex(std::uint8_t word);
Factorization parse_factorization_hex(const std::string& line);
std::string format_factorization_hex(const Factorization& f);

// the six orbit representatives, in table order
const std::array<Factorization, 6>& representatives();

// --- enumeration and orbits -------------------------------------------------
// all 6240 one-factorizations, canonically ordered and duplicate-free
std::vector<Factorization> enumerate_factorizations();

// relabels points by p and re-sorts words inside each class; class positions
// are unchanged
Factorization apply_perm_fact(const Perm& p, const Factorization& f);

// class reassignment: reorder(tau, f).classes[j] = f.classes[tau(j)]
Factorization reorder(const Perm& tau, const Factorization& f);

// class-position-insensitive canonical key (words sorted, classes sorted)
std::array<std::uint32_t, 7> fact_key(const Factorization& f);

// minimum of fact_key over all relabelings: constant on S8-orbits
std::array<std::uint32_t, 7> canonical_form(const Factorization& f);

struct OrbitClassification {
  std::array<std::uint32_t, 6> orbit_sizes{};  // indexed by representative
  std::vector<int> orbit_of;                   // input index -> representative index 0..5
};

// partitions the input (which must be closed under relabeling, e.g. the full
// enumeration) into orbits and matches each to a representative by canonical
// form
OrbitClassification classify_orbits(const std::vector<Factorization>& all);

// --- purity and parity ------------------------------------------------------
// 0/1 when every word of the class meets x with the same parity, nullopt
// when the class is impure
std::optional<int> class_parity(std::uint8_t x, const ParallelClass& pc);

// weight-4 words making every class pure (always 4 odd and 3 even classes)
std::vector<std::uint8_t> xset(const Factorization& f);

// bit j = parity of class j; requires every class pure
std::uint8_t parity_mask(std::uint8_t x, const Factorization& f);
BitVec parity(const BitVec& x, const Factorization& f);

// block-complement canonical form of an 8-bit word (clears coordinate 0)
std::uint8_t psi_word(std::uint8_t x);

// --- the tail-point orthogonality criterion ---------------------------------
// Consider the 28 length-15 vectors (w | e_j), w a word of class j. The
// concatenated vector (x | c) is orthogonal to all of them iff every class is
// pure for x with parity vector exactly c. Both sides are exposed so tests
// can confirm the equivalence exhaustively.
bool pair_blocks_orthogonal(std::uint8_t x, std::uint8_t c7, const Factorization& f);
bool parity_matches(std::uint8_t x, std::uint8_t c7, const Factorization& f);

}  // namespace stsrank

#endif
