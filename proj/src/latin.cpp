#include "stsrank/latin.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "stsrank/perm.hpp"

namespace stsrank {

bool is_latin(const LatinSquare& sq) {
  int n = sq.order;
  if (n != 4 && n != 8) return false;
  for (int r = 0; r < n; ++r) {
    unsigned row = 0, col = 0;
    for (int c = 0; c < n; ++c) {
      if (sq.at(r, c) >= n || sq.at(c, r) >= n) return false;
      row |= 1u << sq.at(r, c);
      col |= 1u << sq.at(c, r);
    }
    if (row != (1u << n) - 1 || col != (1u << n) - 1) return false;
  }
  return true;
}

void require_latin(const LatinSquare& sq) {
  if (sq.order != 4 && sq.order != 8) throw std::invalid_argument("latin: order must be 4 or 8");
  int n = sq.order;
  for (int r = 0; r < n; ++r) {
    unsigned row = 0, col = 0;
    for (int c = 0; c < n; ++c) {
      if (sq.at(r, c) >= n) throw std::invalid_argument("latin: symbol out of range");
      row |= 1u << sq.at(r, c);
      col |= 1u << sq.at(c, r);
    }
    if (row != (1u << n) - 1) throw std::invalid_argument("latin: repeated symbol in a row");
    if (col != (1u << n) - 1) throw std::invalid_argument("latin: repeated symbol in a column");
  }
}

const std::vector<LatinSquare>& enumerate_latin4() {
  static const std::vector<LatinSquare> table = [] {
    std::vector<LatinSquare> out;
    LatinSquare sq;
    sq.order = 4;
    std::array<unsigned, 4> rowUsed{}, colUsed{};
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == 16) {
        out.push_back(sq);
        return;
      }
      int r = pos / 4, c = pos % 4;
      for (std::uint8_t s = 0; s < 4; ++s) {
        unsigned bit = 1u << s;
        if ((rowUsed[static_cast<std::size_t>(r)] | colUsed[static_cast<std::size_t>(c)]) & bit) continue;
        rowUsed[static_cast<std::size_t>(r)] |= bit;
        colUsed[static_cast<std::size_t>(c)] |= bit;
        sq.at(r, c) = s;
        self(self, pos + 1);
        rowUsed[static_cast<std::size_t>(r)] &= ~bit;
        colUsed[static_cast<std::size_t>(c)] &= ~bit;
      }
    };
    rec(rec, 0);
    return out;
  }();
  return table;
}

LatinSquare random_latin8(Rng& rng) {
  // randomized cell-by-cell backtracking; symbol order is shuffled per cell,
  // so the result is fully determined by the rng state
  LatinSquare sq;
  sq.order = 8;
  std::array<unsigned, 8> rowUsed{}, colUsed{};
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == 64) return true;
    int r = pos / 8, c = pos % 8;
    std::vector<std::uint8_t> syms{0, 1, 2, 3, 4, 5, 6, 7};
    rng.shuffle(syms);
    for (std::uint8_t s : syms) {
      unsigned bit = 1u << s;
      if ((rowUsed[static_cast<std::size_t>(r)] | colUsed[static_cast<std::size_t>(c)]) & bit) continue;
      rowUsed[static_cast<std::size_t>(r)] |= bit;
      colUsed[static_cast<std::size_t>(c)] |= bit;
      sq.at(r, c) = s;
      if (self(self, pos + 1)) return true;
      rowUsed[static_cast<std::size_t>(r)] &= ~bit;
      colUsed[static_cast<std::size_t>(c)] &= ~bit;
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::logic_error("random_latin8: backtracking failed");
  return sq;
}

std::vector<BitVec> phi_embed(const LatinSquare& sq) {
  if (sq.order != 8) throw std::invalid_argument("phi_embed: order must be 8");
  require_latin(sq);
  std::vector<BitVec> out;
  out.reserve(64);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      BitVec w(24);
      w.set(r);
      w.set(8 + c);
      w.set(16 + sq.at(r, c));
      out.push_back(w);
    }
  return out;
}

bool is_orthogonal_code(const LatinSquare& sq, const BitVec& x24) {
  if (sq.order != 8) throw std::invalid_argument("is_orthogonal_code: order must be 8");
  if (x24.length() != 24) throw std::invalid_argument("is_orthogonal_code: constraint length must be 24");
  std::uint64_t xr = x24.slice64(0, 8), xc = x24.slice64(8, 8), xs = x24.slice64(16, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      int par = static_cast<int>((xr >> r) & 1) ^ static_cast<int>((xc >> c) & 1) ^
                static_cast<int>((xs >> sq.at(r, c)) & 1);
      if (par) return false;
    }
  return true;
}

namespace {

struct Blocks {
  std::uint8_t r, c, s;  // the three length-8 blocks of a 24-coordinate vector
};

Blocks split24(const BitVec& v) {
  return Blocks{static_cast<std::uint8_t>(v.slice64(0, 8)), static_cast<std::uint8_t>(v.slice64(8, 8)),
                static_cast<std::uint8_t>(v.slice64(16, 8))};
}

// permutation sending the 4-element support to {0,1,2,3} (ascending) and the
// complement to {4,5,6,7} (ascending)
Perm normalizer(std::uint8_t mask) {
  std::vector<int> img(8);
  int lo = 0, hi = 4;
  for (int i = 0; i < 8; ++i)
    img[static_cast<std::size_t>(i)] = ((mask >> i) & 1u) ? lo++ : hi++;
  return Perm::from_images(img);
}

struct Quadrant {
  std::array<int, 4> rows, cols, syms;
};

constexpr std::array<Quadrant, 4> kQuadrants = {{
    {{0, 1, 2, 3}, {0, 1, 2, 3}, {4, 5, 6, 7}},
    {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 2, 3}},
    {{4, 5, 6, 7}, {0, 1, 2, 3}, {0, 1, 2, 3}},
    {{4, 5, 6, 7}, {4, 5, 6, 7}, {4, 5, 6, 7}},
}};

struct Frame {
  Perm pr, pc, ps;               // per-block normalizers taken from x
  std::vector<Blocks> extras;    // y, z transformed into the normalized frame
};

Frame make_frame(const BitVec& x, const std::optional<BitVec>& y, const std::optional<BitVec>& z) {
  auto xb = split24(x);
  Frame f{normalizer(xb.r), normalizer(xb.c), normalizer(xb.s), {}};
  for (const auto* v : {&y, &z})
    if (v->has_value()) {
      auto b = split24(**v);
      f.extras.push_back(Blocks{f.pr.map_mask8(b.r), f.pc.map_mask8(b.c), f.ps.map_mask8(b.s)});
    }
  return f;
}

// order-4 squares that keep every cell of the given quadrant orthogonal to
// each extra constraint
std::vector<const LatinSquare*> quad_survivors(const Quadrant& q, const std::vector<Blocks>& extras) {
  std::vector<const LatinSquare*> out;
  for (const auto& sq : enumerate_latin4()) {
    bool ok = true;
    for (int r = 0; r < 4 && ok; ++r)
      for (int c = 0; c < 4 && ok; ++c) {
        int s = q.syms[sq.at(r, c)];
        for (const auto& e : extras) {
          int par = static_cast<int>((e.r >> q.rows[static_cast<std::size_t>(r)]) & 1) ^
                    static_cast<int>((e.c >> q.cols[static_cast<std::size_t>(c)]) & 1) ^
                    static_cast<int>((e.s >> s) & 1);
          if (par) {
            ok = false;
            break;
          }
        }
      }
    if (ok) out.push_back(&sq);
  }
  return out;
}

// assemble a normalized-frame square from one order-4 square per quadrant,
// then undo the normalization
LatinSquare assemble(const Frame& f, const std::array<const LatinSquare*, 4>& picks) {
  LatinSquare normd;
  normd.order = 8;
  for (std::size_t qi = 0; qi < 4; ++qi) {
    const Quadrant& q = kQuadrants[qi];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        normd.at(q.rows[static_cast<std::size_t>(r)], q.cols[static_cast<std::size_t>(c)]) =
            static_cast<std::uint8_t>(q.syms[picks[qi]->at(r, c)]);
  }
  Perm isym = f.ps.inverse();
  LatinSquare out;
  out.order = 8;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out.at(r, c) = static_cast<std::uint8_t>(isym(normd.at(f.pr(r), f.pc(c))));
  return out;
}

}  // namespace

void require_family_constraints(const BitVec& x, const std::optional<BitVec>& y,
                                const std::optional<BitVec>& z) {
  std::vector<const BitVec*> vs{&x};
  if (y) vs.push_back(&*y);
  if (z) vs.push_back(&*z);
  for (const auto* v : vs) {
    if (v->length() != 24) throw std::invalid_argument("family constraint violated: length-24");
    for (int b = 0; b < 3; ++b)
      if (std::popcount(v->slice64(8 * b, 8)) != 4)
        throw std::invalid_argument("family constraint violated: block-weight-4");
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i]->dot(*vs[j]) != 0)
        throw std::invalid_argument("family constraint violated: pairwise-orthogonal");
      for (int b = 0; b < 3; ++b)
        if (std::popcount(vs[i]->slice64(8 * b, 8) ^ vs[j]->slice64(8 * b, 8)) != 4)
          throw std::invalid_argument("family constraint violated: block-sum-weight-4");
    }
}

std::uint64_t family_count(const BitVec& x, const std::optional<BitVec>& y,
                           const std::optional<BitVec>& z) {
  require_family_constraints(x, y, z);
  Frame f = make_frame(x, y, z);
  std::uint64_t total = 1;
  for (const auto& q : kQuadrants) total *= quad_survivors(q, f.extras).size();
  return total;
}

std::vector<LatinSquare> family_enumerate(const BitVec& x, const std::optional<BitVec>& y,
                                          const std::optional<BitVec>& z) {
  require_family_constraints(x, y, z);
  Frame f = make_frame(x, y, z);
  std::array<std::vector<const LatinSquare*>, 4> sv;
  std::uint64_t total = 1;
  for (std::size_t qi = 0; qi < 4; ++qi) {
    sv[qi] = quad_survivors(kQuadrants[qi], f.extras);
    total *= sv[qi].size();
  }
  if (total > (1u << 20)) throw std::invalid_argument("family_enumerate: family too large to materialize");
  std::vector<LatinSquare> out;
  out.reserve(total);
  for (const auto* a : sv[0])
    for (const auto* b : sv[1])
      for (const auto* c : sv[2])
        for (const auto* d : sv[3]) out.push_back(assemble(f, {a, b, c, d}));
  std::sort(out.begin(), out.end());
  return out;
}

LatinSquare family_sample(const BitVec& x, const std::optional<BitVec>& y,
                          const std::optional<BitVec>& z, Rng& rng) {
  require_family_constraints(x, y, z);
  Frame f = make_frame(x, y, z);
  std::array<const LatinSquare*, 4> picks{};
  for (std::size_t qi = 0; qi < 4; ++qi) {
    auto sv = quad_survivors(kQuadrants[qi], f.extras);
    if (sv.empty()) throw std::logic_error("family_sample: empty quadrant family");
    picks[qi] = sv[rng.below(sv.size())];
  }
  return assemble(f, picks);
}

bool family_pair_identity(const BitVec& x, const BitVec& y) {
  BitVec s = x ^ y;
  auto a = family_enumerate(x, y, std::nullopt);
  auto b = family_enumerate(x, s, std::nullopt);
  auto c = family_enumerate(s, y, std::nullopt);
  return a == b && b == c;
}

std::string latin_to_text(const LatinSquare& sq) {
  require_latin(sq);
  std::ostringstream os;
  os << sq.order << "\n";
  for (int r = 0; r < sq.order; ++r) {
    for (int c = 0; c < sq.order; ++c) os << (c ? " " : "") << int(sq.at(r, c));
    os << "\n";
  }
  return os.str();
}

LatinSquare latin_from_text(const std::string& text) {
  std::istringstream is(text);
  LatinSquare sq;
  if (!(is >> sq.order)) throw std::invalid_argument("latin text: missing order");
  if (sq.order != 4 && sq.order != 8) throw std::invalid_argument("latin text: order must be 4 or 8");
  for (int r = 0; r < sq.order; ++r)
    for (int c = 0; c < sq.order; ++c) {
      int v;
      if (!(is >> v)) throw std::invalid_argument("latin text: truncated grid");
      if (v < 0 || v >= sq.order) throw std::invalid_argument("latin text: symbol out of range");
      sq.at(r, c) = static_cast<std::uint8_t>(v);
    }
  require_latin(sq);
  return sq;
}

}  // namespace stsrank
