#include "stsrank/onefact.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stsrank {

namespace {

constexpr int kWordCount = 28;

std::vector<std::uint8_t> all_pair_words() {
  std::vector<std::uint8_t> out;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) out.push_back(static_cast<std::uint8_t>((1u << a) | (1u << b)));
  std::sort(out.begin(), out.end());
  return out;
}

// the 105 perfect matchings of K8, words sorted ascending, table sorted
const std::vector<std::array<std::uint8_t, 4>>& all_matchings() {
  static const std::vector<std::array<std::uint8_t, 4>> table = [] {
    std::vector<std::array<std::uint8_t, 4>> out;
    std::array<std::uint8_t, 4> acc{};
    auto rec = [&](auto&& self, std::uint8_t covered, int depth) -> void {
      if (depth == 4) {
        auto sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(sorted);
        return;
      }
      int a = std::countr_zero(static_cast<unsigned>(~covered & 0xFFu));
      for (int b = a + 1; b < 8; ++b) {
        if ((covered >> b) & 1u) continue;
        acc[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>((1u << a) | (1u << b));
        self(self, static_cast<std::uint8_t>(covered | (1u << a) | (1u << b)), depth + 1);
      }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return table;
}

std::uint32_t class_key(ParallelClass pc) {
  std::sort(pc.words.begin(), pc.words.end());
  return (std::uint32_t(pc.words[0]) << 24) | (std::uint32_t(pc.words[1]) << 16) |
         (std::uint32_t(pc.words[2]) << 8) | std::uint32_t(pc.words[3]);
}

}  // namespace

bool is_parallel_class(const ParallelClass& pc) {
  unsigned covered = 0;
  for (auto w : pc.words) {
    if (std::popcount(w) != 2) return false;
    if (covered & w) return false;
    covered |= w;
  }
  return covered == 0xFFu;
}

void require_factorization(const Factorization& f) {
  std::array<bool, 256> seen{};
  for (const auto& pc : f.classes) {
    if (!is_parallel_class(pc)) throw std::invalid_argument("factorization: class is not a perfect matching");
    for (auto w : pc.words) {
      if (seen[w]) throw std::invalid_argument("factorization: repeated word across classes");
      seen[w] = true;
    }
  }
}

std::uint8_t parse_word_hex(const std::string& two_digits) {
  if (two_digits.size() != 2) throw std::invalid_argument("hex word: expected two digits");
  auto digit = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw std::invalid_argument("hex word: invalid digit");
  };
  unsigned byte = digit(two_digits[0]) * 16 + digit(two_digits[1]);
  std::uint8_t mask = 0;
  for (int c = 0; c < 8; ++c)
    if ((byte >> (7 - c)) & 1u) mask |= static_cast<std::uint8_t>(1u << c);
  return mask;
}

std::string format_word_hex(std::uint8_t word) {
  unsigned byte = 0;
  for (int c = 0; c < 8; ++c)
    if ((word >> c) & 1u) byte |= 1u << (7 - c);
  static const char* hex = "0123456789ABCDEF";
  return std::string{hex[byte >> 4], hex[byte & 0xF]};
}

Factorization parse_factorization_hex(const std::string& line) {
  std::istringstream is(line);
  Factorization f;
  std::string grp;
  for (int j = 0; j < 7; ++j) {
    if (!(is >> grp)) throw std::invalid_argument("factorization text: expected 7 groups");
    if (grp.size() != 8) throw std::invalid_argument("factorization text: group must have 8 hex digits");
    for (int t = 0; t < 4; ++t)
      f.classes[static_cast<std::size_t>(j)].words[static_cast<std::size_t>(t)] =
          parse_word_hex(grp.substr(static_cast<std::size_t>(2 * t), 2));
  }
  if (is >> grp) throw std::invalid_argument("factorization text: trailing input");
  require_factorization(f);
  return f;
}

std::string format_factorization_hex(const Factorization& f) {
  std::string out;
  for (int j = 0; j < 7; ++j) {
    if (j) out += ' ';
    for (auto w : f.classes[static_cast<std::size_t>(j)].words) out += format_word_hex(w);
  }
  return out;
}

const std::array<Factorization, 6>& representatives() {
  static const std::array<Factorization, 6> table = [] {
    const char* rows[6] = {
        "81422418 82412814 84482211 88442112 90600A05 A0500906 C0300C03",
        "81442218 82482114 84412812 88422411 90600A05 A0500906 C0300C03",
        "81442812 82482114 84412218 88422411 90600906 A0500A05 C0300C03",
        "81422814 82412418 84482211 88442112 90600A05 A0500906 C0300C03",
        "81442218 82601409 8450210A 88422411 90412806 A0481205 C0300C03",
        "81601806 82443009 84412812 88502205 9042210C A0481403 C024110A",
    };
    std::array<Factorization, 6> out;
    for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(i)] = parse_factorization_hex(rows[i]);
    return out;
  }();
  return table;
}

std::vector<Factorization> enumerate_factorizations() {
  // backtracking over whole classes: the next class is always the one
  // containing the smallest uncovered word, so each factorization is emitted
  // exactly once with classes already in canonical order
  auto words = all_pair_words();
  const auto& matchings = all_matchings();
  std::vector<Factorization> out;
  std::array<bool, 256> used{};
  Factorization acc;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 7) {
      out.push_back(acc);
      return;
    }
    std::uint8_t lead = 0;
    for (auto w : words)
      if (!used[w]) {
        lead = w;
        break;
      }
    for (const auto& mt : matchings) {
      if (mt[0] != lead) continue;  // the class that covers the smallest unused word
      if (used[mt[1]] || used[mt[2]] || used[mt[3]]) continue;
      for (auto w : mt) used[w] = true;
      acc.classes[static_cast<std::size_t>(depth)].words = mt;
      self(self, depth + 1);
      for (auto w : mt) used[w] = false;
    }
  };
  rec(rec, 0);
  return out;
}

Factorization apply_perm_fact(const Perm& p, const Factorization& f) {
  if (p.degree() != 8) throw std::invalid_argument("apply_perm_fact: degree must be 8");
  Factorization out;
  for (int j = 0; j < 7; ++j) {
    auto& c = out.classes[static_cast<std::size_t>(j)];
    for (int t = 0; t < 4; ++t)
      c.words[static_cast<std::size_t>(t)] = p.map_mask8(f.classes[static_cast<std::size_t>(j)].words[static_cast<std::size_t>(t)]);
    std::sort(c.words.begin(), c.words.end());
  }
  return out;
}

Factorization reorder(const Perm& tau, const Factorization& f) {
  if (tau.degree() != 7) throw std::invalid_argument("reorder: degree must be 7");
  Factorization out;
  for (int j = 0; j < 7; ++j) out.classes[static_cast<std::size_t>(j)] = f.classes[static_cast<std::size_t>(tau(j))];
  return out;
}

std::array<std::uint32_t, 7> fact_key(const Factorization& f) {
  std::array<std::uint32_t, 7> key{};
  for (int j = 0; j < 7; ++j) key[static_cast<std::size_t>(j)] = class_key(f.classes[static_cast<std::size_t>(j)]);
  std::sort(key.begin(), key.end());
  return key;
}

std::array<std::uint32_t, 7> canonical_form(const Factorization& f) {
  std::array<std::uint32_t, 7> best = fact_key(f);
  for_each_perm(8, [&](const Perm& p) {
    auto k = fact_key(apply_perm_fact(p, f));
    if (k < best) best = k;
  });
  return best;
}

OrbitClassification classify_orbits(const std::vector<Factorization>& all) {
  std::map<std::array<std::uint32_t, 7>, int> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    require_factorization(all[i]);
    if (!index.emplace(fact_key(all[i]), static_cast<int>(i)).second)
      throw std::invalid_argument("classify_orbits: duplicate factorization in input");
  }

  // orbit partition: closure under two generators of S8
  std::vector<int> parent(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  const Perm swap01 = Perm::from_images({1, 0, 2, 3, 4, 5, 6, 7});
  const Perm cycle8 = Perm::from_images({1, 2, 3, 4, 5, 6, 7, 0});
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Perm* g : {&swap01, &cycle8}) {
      auto it = index.find(fact_key(apply_perm_fact(*g, all[i])));
      if (it == index.end())
        throw std::invalid_argument("classify_orbits: input is not closed under relabeling");
      unite(static_cast<int>(i), it->second);
    }
  }

  // match components to representatives via canonical forms
  std::map<std::array<std::uint32_t, 7>, int> rep_of_canon;
  for (int r = 0; r < 6; ++r) rep_of_canon[canonical_form(representatives()[static_cast<std::size_t>(r)])] = r;
  std::map<int, int> rep_of_root;
  OrbitClassification out;
  out.orbit_of.resize(all.size(), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto it = rep_of_root.find(root);
    if (it == rep_of_root.end()) {
      auto canon = canonical_form(all[static_cast<std::size_t>(root)]);
      auto rit = rep_of_canon.find(canon);
      if (rit == rep_of_canon.end())
        throw std::invalid_argument("classify_orbits: orbit matches no representative");
      it = rep_of_root.emplace(root, rit->second).first;
    }
    out.orbit_of[i] = it->second;
    out.orbit_sizes[static_cast<std::size_t>(it->second)]++;
  }
  return out;
}

std::optional<int> class_parity(std::uint8_t x, const ParallelClass& pc) {
  int first = std::popcount(static_cast<unsigned>(x & pc.words[0])) & 1;
  for (int t = 1; t < 4; ++t)
    if ((std::popcount(static_cast<unsigned>(x & pc.words[static_cast<std::size_t>(t)])) & 1) != first)
      return std::nullopt;
  return first;
}

std::vector<std::uint8_t> xset(const Factorization& f) {
  require_factorization(f);
  std::vector<std::uint8_t> out;
  for (unsigned x = 0; x < 256; ++x) {
    if (std::popcount(x) != 4) continue;
    bool pure = true;
    for (const auto& pc : f.classes)
      if (!class_parity(static_cast<std::uint8_t>(x), pc)) {
        pure = false;
        break;
      }
    if (pure) out.push_back(static_cast<std::uint8_t>(x));
  }
  return out;
}

std::uint8_t parity_mask(std::uint8_t x, const Factorization& f) {
  std::uint8_t out = 0;
  for (int j = 0; j < 7; ++j) {
    auto p = class_parity(x, f.classes[static_cast<std::size_t>(j)]);
    if (!p) throw std::invalid_argument("parity: class is impure for the given word");
    if (*p) out |= static_cast<std::uint8_t>(1u << j);
  }
  return out;
}

BitVec parity(const BitVec& x, const Factorization& f) {
  if (x.length() != 8) throw std::invalid_argument("parity: word length must be 8");
  return BitVec::from_u64(parity_mask(static_cast<std::uint8_t>(x.slice64(0, 8)), f), 7);
}

std::uint8_t psi_word(std::uint8_t x) { return (x & 1u) ? static_cast<std::uint8_t>(x ^ 0xFFu) : x; }

bool pair_blocks_orthogonal(std::uint8_t x, std::uint8_t c7, const Factorization& f) {
  for (int j = 0; j < 7; ++j)
    for (auto w : f.classes[static_cast<std::size_t>(j)].words) {
      int par = (std::popcount(static_cast<unsigned>(x & w)) + ((c7 >> j) & 1)) & 1;
      if (par) return false;
    }
  return true;
}

bool parity_matches(std::uint8_t x, std::uint8_t c7, const Factorization& f) {
  for (int j = 0; j < 7; ++j) {
    auto p = class_parity(x, f.classes[static_cast<std::size_t>(j)]);
    if (!p || *p != ((c7 >> j) & 1)) return false;
  }
  return true;
}

}  // namespace stsrank
