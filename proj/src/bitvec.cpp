#include "stsrank/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace stsrank {

BitVec::BitVec(int length) : len_(length), w_((length + 63) / 64, 0) {
  if (length < 0) throw std::invalid_argument("BitVec: negative length");
}

BitVec BitVec::from_u64(std::uint64_t bits, int length) {
  if (length < 0 || length > 64) throw std::invalid_argument("BitVec::from_u64: length must be 0..64");
  BitVec v(length);
  if (length > 0) {
    std::uint64_t mask = (length == 64) ? ~0ull : ((1ull << length) - 1);
    v.w_[0] = bits & mask;
  }
  return v;
}

bool BitVec::get(int i) const {
  if (i < 0 || i >= len_) throw std::out_of_range("BitVec::get");
  return (w_[i >> 6] >> (i & 63)) & 1u;
}

void BitVec::set(int i, bool v) {
  if (i < 0 || i >= len_) throw std::out_of_range("BitVec::set");
  if (v)
    w_[i >> 6] |= (1ull << (i & 63));
  else
    w_[i >> 6] &= ~(1ull << (i & 63));
}

void BitVec::flip(int i) {
  if (i < 0 || i >= len_) throw std::out_of_range("BitVec::flip");
  w_[i >> 6] ^= (1ull << (i & 63));
}

int BitVec::weight() const {
  int t = 0;
  for (auto x : w_) t += std::popcount(x);
  return t;
}

bool BitVec::zero() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

int BitVec::lowest_set() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return static_cast<int>(k) * 64 + std::countr_zero(w_[k]);
  return -1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch in xor");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

int BitVec::dot(const BitVec& o) const {
  if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch in dot");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= (w_[k] & o.w_[k]);
  return std::popcount(acc) & 1;
}

std::uint64_t BitVec::slice64(int from, int count) const {
  if (count < 0 || count > 64 || from < 0 || from + count > len_)
    throw std::out_of_range("BitVec::slice64");
  std::uint64_t out = 0;
  for (int i = 0; i < count; ++i)
    if (get(from + i)) out |= (1ull << i);
  return out;
}

void BitVec::xor_slice64(int from, int count, std::uint64_t bits) {
  if (count < 0 || count > 64 || from < 0 || from + count > len_)
    throw std::out_of_range("BitVec::xor_slice64");
  for (int i = 0; i < count; ++i)
    if ((bits >> i) & 1u) flip(from + i);
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
  if (auto c = len_ <=> o.len_; c != 0) return c;
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (auto c = w_[k] <=> o.w_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string BitVec::to_string01() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVec BitVec::from_string01(const std::string& s) {
  BitVec v(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(static_cast<int>(i));
    else if (s[i] != '0')
      throw std::invalid_argument("BitVec::from_string01: expected 0/1");
  }
  return v;
}

BitVec psi_vec(const BitVec& x, int m) {
  if (m < 4) throw std::invalid_argument("psi_vec: m must be >= 4");
  int v = (1 << m) - 1;
  if (x.length() != v) throw std::invalid_argument("psi_vec: length is not 2^m - 1 for the given m");
  int u = (v - 7) / 8;
  BitVec out = x;
  for (int b = 0; b < u; ++b)
    if (out.get(8 * b)) out.xor_slice64(8 * b, 8, 0xFFu);
  return out;
}

}  // namespace stsrank
