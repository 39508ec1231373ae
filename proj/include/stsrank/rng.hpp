#ifndef STSRANK_RNG_HPP
#define STSRANK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace stsrank {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard,
// but uniform_int_distribution and std::shuffle are not, so all draws go
// through below() and the hand-rolled Fisher-Yates here. Identical seeds
// must give identical construction output on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform-ish draw in [0, n); modulo bias is irrelevant for our n (< 2^13)
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  bool coin() { return (next() & 1u) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  template <class T>
  const T& choice(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stsrank

#endif
