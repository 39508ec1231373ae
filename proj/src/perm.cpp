#include "stsrank/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stsrank {

Perm::Perm(int degree) : deg_(degree) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("Perm: degree must be 1..8");
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::uint16_t seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= p.deg_ || (seen >> v) & 1)
      throw std::invalid_argument("Perm::from_images: not a permutation");
    seen |= static_cast<std::uint16_t>(1 << v);
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::after(const Perm& g) const {
  if (deg_ != g.deg_) throw std::invalid_argument("Perm::after: degree mismatch");
  Perm r(deg_);
  for (int i = 0; i < deg_; ++i) r.img_[static_cast<std::size_t>(i)] = img_[g.img_[static_cast<std::size_t>(i)]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(deg_);
  for (int i = 0; i < deg_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

BitVec Perm::map(const BitVec& x) const {
  if (x.length() != deg_) throw std::invalid_argument("Perm::map: length mismatch");
  BitVec out(deg_);
  for (int i = 0; i < deg_; ++i)
    if (x.get(i)) out.set(img_[static_cast<std::size_t>(i)]);
  return out;
}

std::uint8_t Perm::map_mask8(std::uint8_t m) const {
  std::uint8_t out = 0;
  for (int i = 0; i < deg_; ++i)
    if ((m >> i) & 1u) out |= static_cast<std::uint8_t>(1u << img_[static_cast<std::size_t>(i)]);
  return out;
}

void for_each_perm(int degree, const std::function<void(const Perm&)>& fn) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  do {
    fn(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<Perm> stabilizer_of_set(int degree, const std::vector<BitVec>& set) {
  std::vector<BitVec> key = set;
  std::sort(key.begin(), key.end());
  std::vector<Perm> out;
  for_each_perm(degree, [&](const Perm& p) {
    std::vector<BitVec> img;
    img.reserve(set.size());
    for (const auto& v : set) img.push_back(p.map(v));
    std::sort(img.begin(), img.end());
    if (img == key) out.push_back(p);
  });
  return out;
}

std::vector<Perm> coset_solve(int degree,
                              const std::vector<std::pair<BitVec, BitVec>>& constraints) {
  std::vector<Perm> out;
  for_each_perm(degree, [&](const Perm& p) {
    for (const auto& [src, dst] : constraints)
      if (p.map(src) != dst) return;
    out.push_back(p);
  });
  return out;
}

bool orbit_is_transitive(const std::vector<Perm>& group,
                         const std::vector<std::vector<BitVec>>& objects) {
  if (objects.empty()) return true;
  auto key_of = [](std::vector<BitVec> obj) {
    std::sort(obj.begin(), obj.end());
    return obj;
  };
  std::vector<std::vector<BitVec>> keys;
  for (const auto& o : objects) keys.push_back(key_of(o));
  std::sort(keys.begin(), keys.end());
  std::vector<std::vector<BitVec>> seen{keys.front()};
  std::vector<std::vector<BitVec>> frontier{objects.front()};
  while (!frontier.empty()) {
    auto obj = frontier.back();
    frontier.pop_back();
    for (const auto& g : group) {
      std::vector<BitVec> img;
      img.reserve(obj.size());
      for (const auto& v : obj) img.push_back(g.map(v));
      auto k = key_of(img);
      if (!std::binary_search(keys.begin(), keys.end(), k))
        return false;  // action leaves the object list: not even invariant
      if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
        seen.push_back(k);
        frontier.push_back(img);
      }
    }
  }
  return seen.size() == keys.size();
}

Perm random_perm(int degree, Rng& rng) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  rng.shuffle(img);
  return Perm::from_images(img);
}

}  // namespace stsrank
