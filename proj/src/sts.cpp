#include "stsrank/sts.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stsrank/rng.hpp"

namespace stsrank {

void normalize_system(TripleSystem& ts) {
  for (auto& b : ts.blocks) std::sort(b.begin(), b.end());
  std::sort(ts.blocks.begin(), ts.blocks.end());
}

void require_triple_system(const TripleSystem& ts) {
  if (ts.v < 3) throw std::invalid_argument("triple system: v must be at least 3");
  for (const auto& b : ts.blocks) {
    if (!(b[0] < b[1] && b[1] < b[2])) throw std::invalid_argument("triple system: block not strictly increasing");
    if (b[2] >= ts.v) throw std::invalid_argument("triple system: point out of range");
  }
  for (std::size_t i = 1; i < ts.blocks.size(); ++i)
    if (ts.blocks[i] == ts.blocks[i - 1]) throw std::invalid_argument("triple system: duplicate block");
}

bool is_steiner(const TripleSystem& ts) {
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(ts.v) * static_cast<std::size_t>(ts.v), 0);
  for (const auto& b : ts.blocks) {
    const int pairs[3][2] = {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
    for (auto& pr : pairs) {
      auto& slot = covered[static_cast<std::size_t>(pr[0]) * static_cast<std::size_t>(ts.v) + static_cast<std::size_t>(pr[1])];
      if (slot) return false;
      slot = 1;
    }
  }
  return 3 * ts.blocks.size() == static_cast<std::size_t>(ts.v) * static_cast<std::size_t>(ts.v - 1) / 2;
}

std::vector<BitVec> incidence_rows(const TripleSystem& ts) {
  std::vector<BitVec> rows;
  rows.reserve(ts.blocks.size());
  for (const auto& b : ts.blocks) {
    BitVec r(ts.v);
    for (auto p : b) r.set(p);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TripleSystem> enumerate_sts7() {
  std::vector<TripleSystem> out;
  std::array<std::array<bool, 7>, 7> covered{};
  std::vector<std::array<std::uint16_t, 3>> acc;
  auto rec = [&](auto&& self) -> void {
    int a = -1, b = -1;
    for (int i = 0; i < 7 && a < 0; ++i)
      for (int j = i + 1; j < 7; ++j)
        if (!covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          a = i;
          b = j;
          break;
        }
    if (a < 0) {
      TripleSystem ts{7, acc};
      normalize_system(ts);
      out.push_back(ts);
      return;
    }
    for (int c = b + 1; c < 7; ++c) {
      // third point above b keeps (a,b) the lexicographically least new pair
      if (covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] ||
          covered[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
        continue;
      covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = true;
      covered[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = true;
      acc.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)});
      self(self);
      acc.pop_back();
      covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = false;
      covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = false;
      covered[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), [](const TripleSystem& x, const TripleSystem& y) { return x.blocks < y.blocks; });
  return out;
}

TripleSystem tail_default() {
  TripleSystem ts{7, {{0, 2, 4}, {1, 3, 4}, {1, 2, 5}, {0, 3, 5}, {0, 1, 6}, {2, 3, 6}, {4, 5, 6}}};
  normalize_system(ts);
  return ts;
}

MParams sts_params(int m) {
  if (m < 5 || m > 8) throw std::invalid_argument("sts_params: m must be in 5..8");
  MParams p;
  p.m = m;
  p.v = (1 << m) - 1;
  p.u = (1 << (m - 3)) - 1;
  p.k = p.u * (p.u - 1) / 6;
  p.e = p.u - m + 3;
  return p;
}

int block_label(int m, int p) {
  auto P = sts_params(m);
  if (p < 0 || p >= P.u) throw std::invalid_argument("block_label: position out of range");
  return P.u - p;
}

LinearCode equidistant_subcode(int m) {
  auto P = sts_params(m);
  std::vector<BitVec> gen;
  for (int t = m - 4; t >= 0; --t) {
    BitVec row(P.v);
    for (int p = 0; p < P.u; ++p)
      if ((block_label(m, p) >> t) & 1) row.xor_slice64(8 * p, 8, 0xFFu);
    gen.push_back(std::move(row));
  }
  return make_code(P.v, gen);
}

LinearCode block_ones_space(int m) {
  auto P = sts_params(m);
  std::vector<BitVec> gen;
  for (int p = 0; p < P.u; ++p) {
    BitVec row(P.v);
    row.xor_slice64(8 * p, 8, 0xFFu);
    gen.push_back(std::move(row));
  }
  return make_code(P.v, gen);
}

TripleSystem boolean_system(int m) {
  auto P = sts_params(m);
  TripleSystem ts;
  ts.v = P.u;
  for (int p = 0; p < P.u; ++p)
    for (int q = p + 1; q < P.u; ++q)
      for (int r = q + 1; r < P.u; ++r)
        if ((block_label(m, p) ^ block_label(m, q) ^ block_label(m, r)) == 0)
          ts.blocks.push_back({static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(q), static_cast<std::uint16_t>(r)});
  normalize_system(ts);
  if (static_cast<int>(ts.blocks.size()) != P.k) throw std::logic_error("boolean_system: block count mismatch");
  return ts;
}

void require_spec(const ConstructionSpec& spec) {
  auto P = sts_params(spec.m);
  if (spec.tail.v != 7 || !is_steiner(spec.tail)) throw std::invalid_argument("spec: tail is not an STS(7)");
  require_triple_system(spec.tail);
  if (static_cast<int>(spec.parts.size()) != P.u) throw std::invalid_argument("spec: expected one factorization per block");
  for (const auto& f : spec.parts) require_factorization(f);
  if (static_cast<int>(spec.orderings.size()) != P.u) throw std::invalid_argument("spec: expected one ordering per block");
  for (const auto& t : spec.orderings)
    if (t.degree() != 7) throw std::invalid_argument("spec: orderings must have degree 7");
  if (static_cast<int>(spec.squares.size()) != P.k) throw std::invalid_argument("spec: expected one square per boolean triple");
  for (const auto& sq : spec.squares) {
    if (sq.order != 8) throw std::invalid_argument("spec: squares must have order 8");
    require_latin(sq);
  }
}

TripleSystem assemble(const ConstructionSpec& spec) {
  require_spec(spec);
  auto P = sts_params(spec.m);
  TripleSystem ts;
  ts.v = P.v;
  const int tail0 = 8 * P.u;

  for (const auto& b : spec.tail.blocks)
    ts.blocks.push_back({static_cast<std::uint16_t>(tail0 + b[0]), static_cast<std::uint16_t>(tail0 + b[1]),
                         static_cast<std::uint16_t>(tail0 + b[2])});

  for (int i = 0; i < P.u; ++i) {
    Factorization ordered = reorder(spec.orderings[static_cast<std::size_t>(i)], spec.parts[static_cast<std::size_t>(i)]);
    for (int j = 0; j < 7; ++j)
      for (auto w : ordered.classes[static_cast<std::size_t>(j)].words) {
        int a = std::countr_zero(static_cast<unsigned>(w));
        int b = 31 - std::countl_zero(static_cast<unsigned>(w));
        ts.blocks.push_back({static_cast<std::uint16_t>(8 * i + a), static_cast<std::uint16_t>(8 * i + b),
                             static_cast<std::uint16_t>(tail0 + j)});
      }
  }

  auto btriples = boolean_system(spec.m).blocks;
  for (std::size_t bi = 0; bi < btriples.size(); ++bi) {
    const auto& t = btriples[bi];
    const LatinSquare& sq = spec.squares[bi];
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        ts.blocks.push_back({static_cast<std::uint16_t>(8 * t[0] + r), static_cast<std::uint16_t>(8 * t[1] + c),
                             static_cast<std::uint16_t>(8 * t[2] + sq.at(r, c))});
  }

  normalize_system(ts);
  if (static_cast<int>(ts.blocks.size()) != 7 + 28 * P.u + 64 * P.k)
    throw std::runtime_error("assemble: block count mismatch");
  if (!is_steiner(ts)) throw std::runtime_error("assemble: pair coverage audit failed");

  auto A = equidistant_subcode(spec.m);
  auto rows = incidence_rows(ts);
  for (const auto& a : A.basis)
    for (const auto& r : rows)
      if (a.dot(r)) throw std::runtime_error("assemble: not orthogonal to the equidistant subcode");
  return ts;
}

RankReport rank_class(const TripleSystem& ts, int m) {
  auto P = sts_params(m);
  if (ts.v != P.v) throw std::invalid_argument("rank_class: system size is not 2^m - 1 for the given m");
  require_triple_system(ts);
  if (!is_steiner(ts)) throw std::invalid_argument("rank_class: input is not a Steiner triple system");

  auto rows = incidence_rows(ts);
  RankReport rep;
  rep.rank = rank_of(rows);
  rep.deficit = P.v - m + 3 - rep.rank;
  rep.dual_dim = P.v - rep.rank;
  if (rep.dual_dim > 16) throw std::runtime_error("rank_class: dual space too large to enumerate");

  LinearCode dual = make_code(P.v, nullspace(rows, P.v));
  auto A = equidistant_subcode(m);
  for (const auto& a : A.basis)
    if (!span_contains(dual, a))
      throw std::runtime_error("rank_class: equidistant subcode is not orthogonal to the system");

  std::set<BitVec> classes;
  for (const auto& w : span_all(dual)) {
    BitVec c = psi_vec(w, m);
    if (!c.zero()) classes.insert(std::move(c));
  }
  rep.extra_classes.assign(classes.begin(), classes.end());

  if (rep.deficit < 0 || rep.deficit > 3 ||
      rep.extra_classes.size() != (std::size_t(1) << rep.deficit) - 1)
    throw std::runtime_error("rank_class: extra class count does not equal 2^deficit - 1");
  for (const auto& c : rep.extra_classes) {
    for (int b = 0; b < P.u; ++b)
      if (std::popcount(c.slice64(8 * b, 8)) != 4)
        throw std::runtime_error("rank_class: extra dual class with a block of weight != 4");
    if (std::popcount(c.slice64(8 * P.u, 7)) != 4)
      throw std::runtime_error("rank_class: extra dual class with a tail of weight != 4");
  }
  return rep;
}

namespace {

struct XEntry {
  std::uint8_t x;
  std::uint8_t par;
};

std::vector<XEntry> xset_with_parity(const Factorization& f) {
  std::vector<XEntry> out;
  for (auto x : xset(f)) out.push_back({x, parity_mask(x, f)});
  return out;
}

// nonzero words of the tail system's dual as 7-bit masks, sorted
std::vector<std::uint8_t> dual_nonzero_masks(const TripleSystem& tail) {
  LinearCode code = make_code(7, incidence_rows(tail));
  LinearCode dual = dual_small(code);
  std::vector<std::uint8_t> out;
  for (const auto& w : span_all(dual))
    if (!w.zero()) out.push_back(static_cast<std::uint8_t>(w.slice64(0, 7)));
  std::sort(out.begin(), out.end());
  return out;
}

int spandim_masks(const std::vector<std::uint8_t>& vs) {
  std::vector<std::uint8_t> basis;
  for (auto v : vs) {
    for (auto b : basis) v = std::min<std::uint8_t>(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

// complement of the collapsed equidistant code inside the full block space,
// as single-block generators (u-bit masks)
std::vector<std::uint64_t> translation_basis(int m) {
  auto P = sts_params(m);
  std::vector<std::uint64_t> basis;
  auto reduce_add = [&](std::uint64_t v) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      return true;
    }
    return false;
  };
  for (int t = m - 4; t >= 0; --t) {
    std::uint64_t row = 0;
    for (int p = 0; p < P.u; ++p)
      if ((block_label(m, p) >> t) & 1) row |= std::uint64_t(1) << p;
    reduce_add(row);
  }
  std::vector<std::uint64_t> out;
  for (int p = 0; p < P.u; ++p)
    if (reduce_add(std::uint64_t(1) << p)) out.push_back(std::uint64_t(1) << p);
  if (static_cast<int>(out.size()) != P.e) throw std::logic_error("translation_basis: dimension mismatch");
  return out;
}

BitVec concat_blocks24(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
  BitVec v(24);
  v.xor_slice64(0, 8, a);
  v.xor_slice64(8, 8, b);
  v.xor_slice64(16, 8, c);
  return v;
}

// ordered tuples of `want` independent nonzero masks drawn from `pool`
std::vector<std::vector<std::uint8_t>> independent_tuples(const std::vector<std::uint8_t>& pool, int want) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> acc;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(acc.size()) == want) {
      out.push_back(acc);
      return;
    }
    for (auto v : pool) {
      acc.push_back(v);
      if (spandim_masks(acc) == static_cast<int>(acc.size()))
        self(self);
      acc.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

ConstructionSpec recipe(int m, int deficit, std::uint64_t seed) {
  auto P = sts_params(m);
  if (deficit < 0 || deficit > 3) throw std::invalid_argument("recipe: deficit must be 0..3");
  Rng rng(seed);

  ConstructionSpec spec;
  spec.m = m;
  {
    auto sts7 = enumerate_sts7();
    spec.tail = sts7[rng.below(sts7.size())];
  }
  const auto duals = dual_nonzero_masks(spec.tail);
  const auto btriples = boolean_system(m).blocks;
  const auto& reps = representatives();

  // representative pattern per block; the deficit caps depend on which psi
  // dimensions are available: reps 4,5 have empty xset (kills all extra dual
  // vectors), reps 1,2 have psi-dimension 1 (caps at one extra class), rep 0
  // has psi-dimension 2 (caps at three), rep 3 has psi-dimension 3
  std::vector<int> repIdx(static_cast<std::size_t>(P.u));
  const std::size_t forced = rng.below(static_cast<std::size_t>(P.u));
  for (std::size_t i = 0; i < repIdx.size(); ++i) {
    switch (deficit) {
      case 0:
        repIdx[i] = (i == forced) ? 4 + static_cast<int>(rng.below(2)) : static_cast<int>(rng.below(6));
        break;
      case 1:
        repIdx[i] = (i == forced) ? 1 + static_cast<int>(rng.below(2)) : static_cast<int>(rng.below(4));
        break;
      case 2:
        repIdx[i] = (i == forced) ? 0 : (rng.coin() ? 0 : 3);
        break;
      case 3:
        repIdx[i] = 3;
        break;
    }
  }
  for (std::size_t i = 0; i < repIdx.size(); ++i)
    spec.parts.push_back(apply_perm_fact(random_perm(8, rng), reps[static_cast<std::size_t>(repIdx[i])]));

  if (deficit == 0) {
    for (int i = 0; i < P.u; ++i) spec.orderings.push_back(random_perm(7, rng));
    for (int b = 0; b < P.k; ++b) spec.squares.push_back(random_latin8(rng));
    return spec;
  }

  // tail targets: an ordered independent tuple from the tail system's dual
  auto target_tuples = independent_tuples(duals, deficit);
  const auto targets = target_tuples[rng.below(target_tuples.size())];

  // per block: an ordered psi-independent tuple from the xset whose parities
  // are carried onto the targets by some ordering
  std::vector<std::vector<std::uint8_t>> xrows(static_cast<std::size_t>(deficit),
                                               std::vector<std::uint8_t>(static_cast<std::size_t>(P.u)));
  for (int i = 0; i < P.u; ++i) {
    auto xe = xset_with_parity(spec.parts[static_cast<std::size_t>(i)]);
    std::vector<std::size_t> order(xe.size());
    for (std::size_t t = 0; t < xe.size(); ++t) order[t] = t;
    // pick an ordered tuple with pairwise-independent psi classes
    std::vector<std::size_t> pick;
    auto choose = [&](auto&& self) -> bool {
      if (static_cast<int>(pick.size()) == deficit) return true;
      std::vector<std::size_t> cand;
      for (std::size_t t = 0; t < xe.size(); ++t) {
        std::vector<std::uint8_t> ps;
        for (auto q : pick) ps.push_back(psi_word(xe[q].x));
        ps.push_back(psi_word(xe[t].x));
        if (spandim_masks(ps) == static_cast<int>(ps.size())) cand.push_back(t);
      }
      if (cand.empty()) return false;
      // rotate deterministically through candidates so backtracking stays seeded
      std::size_t start = rng.below(cand.size());
      for (std::size_t off = 0; off < cand.size(); ++off) {
        pick.push_back(cand[(start + off) % cand.size()]);
        if (self(self)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (!choose(choose)) throw std::logic_error("recipe: no psi-independent tuple in xset");

    std::vector<std::pair<BitVec, BitVec>> constraints;
    for (int t = 0; t < deficit; ++t)
      constraints.emplace_back(BitVec::from_u64(targets[static_cast<std::size_t>(t)], 7),
                               BitVec::from_u64(xe[pick[static_cast<std::size_t>(t)]].par, 7));
    auto sols = coset_solve(7, constraints);
    if (sols.empty()) throw std::logic_error("recipe: ordering constraint unsatisfiable");
    spec.orderings.push_back(sols[rng.below(sols.size())]);
    for (int t = 0; t < deficit; ++t)
      xrows[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = xe[pick[static_cast<std::size_t>(t)]].x;
  }

  // block-complement translations: adding a block-ones vector from the
  // complement space flips whole blocks and preserves parities and classes
  auto tbasis = translation_basis(m);
  for (int t = 0; t < deficit; ++t) {
    std::uint64_t flips = 0;
    for (auto b : tbasis)
      if (rng.coin()) flips ^= b;
    for (int i = 0; i < P.u; ++i)
      if ((flips >> i) & 1u)
        xrows[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] ^= 0xFFu;
  }

  for (const auto& tri : btriples) {
    auto w = [&](int t) {
      return concat_blocks24(xrows[static_cast<std::size_t>(t)][tri[0]], xrows[static_cast<std::size_t>(t)][tri[1]],
                             xrows[static_cast<std::size_t>(t)][tri[2]]);
    };
    std::optional<BitVec> w1 = (deficit >= 2) ? std::optional<BitVec>(w(1)) : std::nullopt;
    std::optional<BitVec> w2 = (deficit >= 3) ? std::optional<BitVec>(w(2)) : std::nullopt;
    spec.squares.push_back(family_sample(w(0), w1, w2, rng));
  }
  return spec;
}

std::string system_to_text(const TripleSystem& ts) {
  require_triple_system(ts);
  std::ostringstream os;
  os << "v " << ts.v << "\n";
  os << "blocks " << ts.blocks.size() << "\n";
  for (const auto& b : ts.blocks) os << b[0] << " " << b[1] << " " << b[2] << "\n";
  return os.str();
}

TripleSystem system_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string kw;
  TripleSystem ts;
  std::size_t n = 0;
  if (!(is >> kw >> ts.v) || kw != "v") throw std::invalid_argument("system text: expected 'v <count>'");
  if (!(is >> kw >> n) || kw != "blocks") throw std::invalid_argument("system text: expected 'blocks <count>'");
  for (std::size_t i = 0; i < n; ++i) {
    int a, b, c;
    if (!(is >> a >> b >> c)) throw std::invalid_argument("system text: truncated block list");
    if (a < 0 || b < 0 || c < 0 || c >= ts.v)
      throw std::invalid_argument("system text: point out of range");
    ts.blocks.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)});
  }
  if (is >> kw) throw std::invalid_argument("system text: trailing input");
  normalize_system(ts);
  require_triple_system(ts);
  return ts;
}

std::string spec_to_text(const ConstructionSpec& spec) {
  require_spec(spec);
  auto P = sts_params(spec.m);
  std::ostringstream os;
  os << "m " << spec.m << "\n";
  os << "tail 7\n";
  for (const auto& b : spec.tail.blocks) os << b[0] << " " << b[1] << " " << b[2] << "\n";
  os << "partitions " << P.u << "\n";
  for (const auto& f : spec.parts) os << format_factorization_hex(f) << "\n";
  os << "orderings " << P.u << "\n";
  for (const auto& t : spec.orderings) {
    for (int j = 0; j < 7; ++j) os << (j ? " " : "") << t(j);
    os << "\n";
  }
  auto btriples = boolean_system(spec.m).blocks;
  os << "squares " << P.k << "\n";
  for (std::size_t bi = 0; bi < btriples.size(); ++bi) {
    os << btriples[bi][0] << " " << btriples[bi][1] << " " << btriples[bi][2] << "\n";
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) os << (c ? " " : "") << int(spec.squares[bi].at(r, c));
      os << "\n";
    }
  }
  return os.str();
}

ConstructionSpec spec_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string kw;
  ConstructionSpec spec;
  int n;
  if (!(is >> kw >> spec.m) || kw != "m") throw std::invalid_argument("spec text: expected 'm <value>'");
  auto P = sts_params(spec.m);
  if (!(is >> kw >> n) || kw != "tail" || n != 7) throw std::invalid_argument("spec text: expected 'tail 7'");
  spec.tail.v = 7;
  for (int i = 0; i < 7; ++i) {
    int a, b, c;
    if (!(is >> a >> b >> c)) throw std::invalid_argument("spec text: truncated tail");
    spec.tail.blocks.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)});
  }
  normalize_system(spec.tail);
  if (!(is >> kw >> n) || kw != "partitions" || n != P.u)
    throw std::invalid_argument("spec text: expected 'partitions <u>'");
  is >> std::ws;
  for (int i = 0; i < P.u; ++i) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("spec text: truncated partitions");
    spec.parts.push_back(parse_factorization_hex(line));
  }
  if (!(is >> kw >> n) || kw != "orderings" || n != P.u)
    throw std::invalid_argument("spec text: expected 'orderings <u>'");
  for (int i = 0; i < P.u; ++i) {
    std::vector<int> img(7);
    for (auto& x : img)
      if (!(is >> x)) throw std::invalid_argument("spec text: truncated orderings");
    spec.orderings.push_back(Perm::from_images(img));
  }
  if (!(is >> kw >> n) || kw != "squares" || n != P.k)
    throw std::invalid_argument("spec text: expected 'squares <k>'");
  auto btriples = boolean_system(spec.m).blocks;
  for (int bi = 0; bi < P.k; ++bi) {
    int a, b, c;
    if (!(is >> a >> b >> c)) throw std::invalid_argument("spec text: truncated square header");
    if (a != btriples[static_cast<std::size_t>(bi)][0] || b != btriples[static_cast<std::size_t>(bi)][1] ||
        c != btriples[static_cast<std::size_t>(bi)][2])
      throw std::invalid_argument("spec text: square header does not match the boolean system");
    LatinSquare sq;
    sq.order = 8;
    for (int r = 0; r < 8; ++r)
      for (int cc = 0; cc < 8; ++cc) {
        int s;
        if (!(is >> s)) throw std::invalid_argument("spec text: truncated square grid");
        if (s < 0 || s >= 8) throw std::invalid_argument("spec text: symbol out of range");
        sq.at(r, cc) = static_cast<std::uint8_t>(s);
      }
    spec.squares.push_back(sq);
  }
  if (is >> kw) throw std::invalid_argument("spec text: trailing input");
  require_spec(spec);
  return spec;
}

}  // namespace stsrank
