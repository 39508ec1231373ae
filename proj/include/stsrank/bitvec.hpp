#ifndef STSRANK_BITVEC_HPP
#define STSRANK_BITVEC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stsrank {

// GF(2) vector of fixed length (<= a few thousand coordinates).
// Coordinate i lives in word i/64, bit i%64. All arithmetic is xor.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int length);

  // low `length` bits of `bits`, coordinate 0 = least significant bit
  static BitVec from_u64(std::uint64_t bits, int length);

  int length() const { return len_; }
  bool get(int i) const;
  void set(int i, bool v = true);
  void flip(int i);

  int weight() const;
  bool zero() const;
  // index of the lowest set coordinate, -1 if zero
  int lowest_set() const;

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  // GF(2) scalar product
  int dot(const BitVec& o) const;

  // copies coordinates [from, from+count) into the low bits of a word
  std::uint64_t slice64(int from, int count) const;
  // xors a word into coordinates [from, from+count)
  void xor_slice64(int from, int count, std::uint64_t bits);

  bool operator==(const BitVec& o) const = default;
  // deterministic total order (length-major, then low words first);
  // used only for canonical sorting, not a mathematical ordering
  std::strong_ordering operator<=>(const BitVec& o) const;

  // "0110..." with coordinate 0 first
  std::string to_string01() const;
  static BitVec from_string01(const std::string& s);

 private:
  int len_ = 0;
  std::vector<std::uint64_t> w_;
};

// Block-quotient canonical form for vectors of length 2^m - 1 = 8u + 7:
// each of the u length-8 blocks is replaced by the lexicographically smaller
// of block and complement (coordinate order, earliest coordinate most
// significant), which is the one whose leading coordinate is 0; the length-7
// tail is untouched. Idempotent; psi(x) - x lies in the span of the
// block-ones vectors.
BitVec psi_vec(const BitVec& x, int m);

}  // namespace stsrank

#endif
