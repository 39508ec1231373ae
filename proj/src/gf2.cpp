#include "stsrank/gf2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stsrank {

namespace {

// reduce v against rows keyed by pivot coordinate; returns the residue
BitVec reduce(BitVec v, const std::map<int, BitVec>& piv) {
  while (!v.zero()) {
    int p = v.lowest_set();
    auto it = piv.find(p);
    if (it == piv.end()) break;
    v ^= it->second;
  }
  return v;
}

std::map<int, BitVec> eliminate(const std::vector<BitVec>& vectors, int length) {
  std::map<int, BitVec> piv;
  for (const auto& row : vectors) {
    if (row.length() != length) throw std::invalid_argument("gf2: mixed vector lengths");
    BitVec r = reduce(row, piv);
    if (!r.zero()) piv.emplace(r.lowest_set(), r);
  }
  return piv;
}

}  // namespace

LinearCode make_code(int length, const std::vector<BitVec>& generators) {
  auto piv = eliminate(generators, length);
  LinearCode c;
  c.length = length;
  for (auto& [p, row] : piv) c.basis.push_back(row);
  return c;
}

int rank_of(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return 0;
  return static_cast<int>(eliminate(vectors, vectors.front().length()).size());
}

bool span_contains(const LinearCode& code, const BitVec& v) {
  if (v.length() != code.length) throw std::invalid_argument("span_contains: length mismatch");
  std::map<int, BitVec> piv;
  for (const auto& b : code.basis) piv.emplace(b.lowest_set(), b);
  return reduce(v, piv).zero();
}

std::vector<BitVec> span_all(const LinearCode& code) {
  if (code.dim() > 20) throw std::invalid_argument("span_all: dimension too large");
  std::vector<BitVec> out;
  out.reserve(std::size_t(1) << code.dim());
  out.push_back(BitVec(code.length));
  for (const auto& b : code.basis) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

std::vector<BitVec> complement_basis(const LinearCode& sub, const LinearCode& super) {
  if (sub.length != super.length) throw std::invalid_argument("complement_basis: length mismatch");
  for (const auto& b : sub.basis)
    if (!span_contains(super, b))
      throw std::invalid_argument("complement_basis: sub is not contained in super");
  std::map<int, BitVec> piv;
  for (const auto& b : sub.basis) piv.emplace(b.lowest_set(), b);
  std::vector<BitVec> out;
  for (const auto& b : super.basis) {
    BitVec r = reduce(b, piv);
    if (!r.zero()) {
      piv.emplace(r.lowest_set(), r);
      out.push_back(b);  // report the original generator, not the residue
    }
  }
  if (static_cast<int>(piv.size()) != super.dim())
    throw std::logic_error("complement_basis: span mismatch");
  return out;
}

LinearCode dual_small(const LinearCode& code) {
  if (code.length > 20) throw std::invalid_argument("dual_small: length too large for exhaustive scan");
  std::vector<BitVec> orth;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << code.length); ++bits) {
    BitVec v = BitVec::from_u64(bits, code.length);
    bool ok = true;
    for (const auto& b : code.basis)
      if (v.dot(b)) {
        ok = false;
        break;
      }
    if (ok) orth.push_back(v);
  }
  LinearCode d = make_code(code.length, orth);
  if (d.dim() != code.length - code.dim()) throw std::logic_error("dual_small: dimension mismatch");
  return d;
}

std::vector<LinearCode> two_dim_subspaces(const LinearCode& code) {
  if (code.dim() != 3) throw std::invalid_argument("two_dim_subspaces: code must have dimension 3");
  std::vector<BitVec> words = span_all(code);
  std::vector<BitVec> nz;
  for (auto& w : words)
    if (!w.zero()) nz.push_back(w);
  std::sort(nz.begin(), nz.end());
  std::vector<std::vector<BitVec>> keys;
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      std::vector<BitVec> tri{nz[i], nz[j], nz[i] ^ nz[j]};
      std::sort(tri.begin(), tri.end());
      keys.push_back(tri);
    }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<LinearCode> out;
  for (auto& tri : keys) out.push_back(make_code(code.length, {tri[0], tri[1]}));
  return out;
}

std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, int length) {
  auto piv = eliminate(rows, length);
  // full reduction so each pivot column appears in exactly one row
  for (auto it = piv.begin(); it != piv.end(); ++it)
    for (auto jt = piv.begin(); jt != piv.end(); ++jt)
      if (jt != it && jt->second.get(it->first)) jt->second ^= it->second;
  std::vector<BitVec> kernel;
  for (int c = 0; c < length; ++c) {
    if (piv.count(c)) continue;
    BitVec v(length);
    v.set(c);
    for (auto& [p, row] : piv)
      if (row.get(c)) v.set(p);
    kernel.push_back(v);
  }
  return kernel;
}

}  // namespace stsrank
