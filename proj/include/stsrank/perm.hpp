#ifndef STSRANK_PERM_HPP
#define STSRANK_PERM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "stsrank/bitvec.hpp"
#include "stsrank/rng.hpp"

namespace stsrank {

// Permutation of {0..degree-1}, degree <= 8. Vectors transform by
// pi(x)_i = x_{pi^-1(i)}, so basis vectors move forward: pi(e_s) = e_{pi(s)}.
class Perm {
 public:
  Perm() : Perm(1) {}
  explicit Perm(int degree);  // identity
  static Perm from_images(const std::vector<int>& images);

  int degree() const { return deg_; }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  // (*this) after g: apply g first, then this
  Perm after(const Perm& g) const;
  Perm inverse() const;

  // coordinate-permuted copy of a degree-length vector
  BitVec map(const BitVec& x) const;
  // same action on an 8-bit coordinate mask (degree <= 8)
  std::uint8_t map_mask8(std::uint8_t m) const;

  auto operator<=>(const Perm&) const = default;

 private:
  int deg_;
  std::array<std::uint8_t, 8> img_{};
};

// visits all degree! permutations in lexicographic image order
void for_each_perm(int degree, const std::function<void(const Perm&)>& fn);

// all permutations fixing the given set of vectors setwise (exhaustive scan)
std::vector<Perm> stabilizer_of_set(int degree, const std::vector<BitVec>& set);

// all permutations sending src_i to dst_i for every constraint; empty when no
// solution exists. The result is a coset of the pointwise stabilizer of the
// sources.
std::vector<Perm> coset_solve(int degree,
                              const std::vector<std::pair<BitVec, BitVec>>& constraints);

// do the given permutations act transitively on the objects? Each object is a
// set of vectors; the action permutes coordinates of every member.
bool orbit_is_transitive(const std::vector<Perm>& group,
                         const std::vector<std::vector<BitVec>>& objects);

Perm random_perm(int degree, Rng& rng);

}  // namespace stsrank

#endif
