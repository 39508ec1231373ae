#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stsrank/census.hpp"
#include "stsrank/gf2.hpp"
#include "stsrank/latin.hpp"
#include "stsrank/onefact.hpp"
#include "stsrank/perm.hpp"
#include "stsrank/rng.hpp"
#include "stsrank/sts.hpp"

using nlohmann::ordered_json;
using namespace stsrank;

namespace {

// One named verification block: ordered facts plus an overall flag. The same
// structure renders as indented text or as one JSON object, and every fact is
// computed (never timed or dated) so repeated runs are byte-identical.
struct Check {
  std::string name;
  bool pass = true;
  ordered_json facts = ordered_json::object();

  void note(const std::string& label, const ordered_json& value) { facts[label] = value; }

  template <class T>
  void expect(const std::string& label, const T& got, const T& want) {
    if (got == want) {
      note(label, got);
    } else {
      std::ostringstream os;
      os << got << " (expected " << want << ")";
      note(label, os.str());
      pass = false;
    }
  }
};

void render_text(std::ostream& os, const Check& c) {
  os << "check " << c.name << "\n";
  for (const auto& [k, v] : c.facts.items()) {
    if (v.is_array()) {
      os << "  " << k << ":\n";
      for (const auto& item : v)
        os << "    " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
    } else if (v.is_string()) {
      os << "  " << k << ": " << v.get<std::string>() << "\n";
    } else {
      os << "  " << k << ": " << v.dump() << "\n";
    }
  }
  os << "  result: " << (c.pass ? "pass" : "FAIL") << "\n";
}

void emit(const std::string& command, const std::vector<Check>& checks, bool structured) {
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (structured) {
    ordered_json doc;
    doc["command"] = command;
    doc["checks"] = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json jc;
      jc["check"] = c.name;
      jc["facts"] = c.facts;
      jc["pass"] = c.pass;
      doc["checks"].push_back(jc);
    }
    doc["pass"] = all;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : checks) render_text(std::cout, c);
    int failed = 0;
    for (const auto& c : checks) failed += !c.pass;
    if (failed)
      std::cout << "summary: " << failed << " of " << checks.size() << " checks FAILED\n";
    else
      std::cout << "summary: all " << checks.size() << " checks passed\n";
  }
}

std::string mask7_str(std::uint8_t m) { return BitVec::from_u64(m, 7).to_string01(); }

std::string join_u64(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// verify targets

Check verify_dim2() {
  Check c{"dim2"};
  auto tail = tail_default();
  auto code = make_code(7, incidence_rows(tail));
  auto dual = dual_small(code);
  c.expect("tail-code-dimension", code.dim(), 4);
  c.expect("dual-dimension", dual.dim(), 3);
  // nonzero dual words are exactly the complemented blocks of the tail system
  std::set<BitVec> want;
  for (const auto& r : incidence_rows(tail)) {
    BitVec w = r;
    for (int i = 0; i < 7; ++i) w.flip(i);
    want.insert(w);
  }
  std::set<BitVec> got;
  for (const auto& w : span_all(dual))
    if (!w.zero()) got.insert(w);
  c.expect("dual-words-are-complemented-blocks", got == want, true);
  c.expect("two-dimensional-subspaces", static_cast<int>(two_dim_subspaces(dual).size()), 7);
  return c;
}

BitVec blocks24(std::uint8_t a, std::uint8_t b, std::uint8_t s) {
  BitVec v(24);
  v.xor_slice64(0, 8, a);
  v.xor_slice64(8, 8, b);
  v.xor_slice64(16, 8, s);
  return v;
}

Check verify_latin_filter() {
  Check c{"latin-filter"};
  const BitVec x = blocks24(0x0F, 0x0F, 0x0F);
  const BitVec y = blocks24(0x33, 0x33, 0x33);
  const BitVec z = blocks24(0x55, 0x55, 0x55);
  c.expect<std::uint64_t>("one-constraint-count", family_count(x), 576ull * 576 * 576 * 576);
  c.expect<std::uint64_t>("two-constraint-count", family_count(x, y), 65536);
  auto fam = family_enumerate(x, y);
  c.expect("two-constraint-materialized", fam.size(), std::size_t(65536));
  std::size_t orthogonal = 0;
  for (const auto& sq : fam)
    orthogonal += is_latin(sq) && is_orthogonal_code(sq, x) && is_orthogonal_code(sq, y);
  c.expect("two-constraint-all-orthogonal", orthogonal, std::size_t(65536));
  c.expect<std::uint64_t>("three-constraint-count", family_count(x, y, z), 1);
  c.expect("pair-family-span-identity", family_pair_identity(x, y), true);
  return c;
}

Check verify_xset_sizes() {
  Check c{"xset-sizes"};
  std::vector<std::uint64_t> sizes;
  for (const auto& f : representatives()) sizes.push_back(xset(f).size());
  c.expect<std::string>("pure-word-set-sizes", join_u64(sizes), "6 2 2 14 0 0");
  std::vector<std::uint64_t> span_dims, psi_dims;
  for (int r = 0; r < 4; ++r) {
    auto xs = xset(representatives()[std::size_t(r)]);
    std::vector<BitVec> vecs{BitVec::from_u64(0xFF, 8)};
    std::vector<BitVec> psis;
    for (auto w : xs) {
      vecs.push_back(BitVec::from_u64(w, 8));
      psis.push_back(BitVec::from_u64(psi_word(w), 8));
    }
    span_dims.push_back(static_cast<std::uint64_t>(rank_of(vecs)));
    psi_dims.push_back(static_cast<std::uint64_t>(rank_of(psis)));
  }
  c.expect<std::string>("span-dimensions-with-ones", join_u64(span_dims), "3 2 2 4");
  c.expect<std::string>("block-quotient-dimensions", join_u64(psi_dims), "2 1 1 3");
  return c;
}

Check verify_stab() {
  Check c{"stab"};
  auto dual = dual_small(make_code(7, incidence_rows(tail_default())));
  std::vector<BitVec> nz;
  for (const auto& w : span_all(dual))
    if (!w.zero()) nz.push_back(w);
  std::sort(nz.begin(), nz.end());
  auto group = stabilizer_of_set(7, nz);
  c.expect("dual-stabilizer-order", group.size(), std::size_t(168));

  auto subs = two_dim_subspaces(dual);
  std::vector<std::uint64_t> full_orders, inside_orders;
  std::vector<std::vector<BitVec>> objects;
  for (const auto& s : subs) {
    std::vector<BitVec> words;
    for (const auto& w : span_all(s))
      if (!w.zero()) words.push_back(w);
    full_orders.push_back(stabilizer_of_set(7, words).size());
    std::vector<BitVec> key = words;
    std::sort(key.begin(), key.end());
    std::uint64_t inside = 0;
    for (const auto& g : group) {
      std::vector<BitVec> img;
      for (const auto& w : words) img.push_back(g.map(w));
      std::sort(img.begin(), img.end());
      inside += (img == key);
    }
    inside_orders.push_back(inside);
    objects.push_back(words);
  }
  c.expect<std::string>("subspace-stabilizer-orders", join_u64(full_orders), "48 48 48 48 48 48 48");
  c.expect<std::string>("subspace-stabilizers-inside-group", join_u64(inside_orders),
                        "24 24 24 24 24 24 24");
  c.expect("transitive-on-subspaces", orbit_is_transitive(group, objects), true);

  bool all8 = true;
  int pairs = 0;
  for (const auto& a : nz)
    for (const auto& b : nz) {
      if (a == b) continue;
      all8 = all8 && coset_solve(7, {{a, a}, {b, b}}).size() == 8;
      ++pairs;
    }
  c.expect("ordered-pairs-checked", pairs, 42);
  c.expect("pointwise-pair-stabilizers-order-8", all8, true);
  return c;
}

Check verify_parity_vectors() {
  Check c{"parity-vectors"};
  auto dual = dual_small(make_code(7, incidence_rows(tail_default())));
  std::set<std::uint8_t> dual_nz;
  for (const auto& w : span_all(dual))
    if (!w.zero()) dual_nz.insert(static_cast<std::uint8_t>(w.slice64(0, 7)));

  // fourth representative: every nonzero dual word appears, each twice
  std::map<std::uint8_t, int> hits;
  for (auto x : xset(representatives()[3])) hits[parity_mask(x, representatives()[3])]++;
  bool cover = hits.size() == 7;
  for (const auto& [p, n] : hits) cover = cover && dual_nz.count(p) == 1 && n == 2;
  c.expect("fourth-representative-covers-dual-twice", cover, true);
  {
    ordered_json arr = ordered_json::array();
    for (const auto& [p, n] : hits) arr.push_back(mask7_str(p));
    c.note("fourth-representative-parities", arr);
  }

  // first representative: three parities forming a two-dimensional trace
  std::set<std::uint8_t> ps;
  for (auto x : xset(representatives()[0])) ps.insert(parity_mask(x, representatives()[0]));
  ordered_json arr = ordered_json::array();
  for (auto p : ps) arr.push_back(mask7_str(p));
  c.note("first-representative-parities", arr);
  c.expect("first-representative-parity-count", ps.size(), std::size_t(3));
  bool indual = true;
  for (auto p : ps) indual = indual && dual_nz.count(p) == 1;
  c.expect("first-representative-parities-in-dual", indual, true);
  c.expect("contains-1111000-support", ps.count(0b0001111) == 1, true);
  c.expect("contains-1100110-support", ps.count(0b0110011) == 1, true);
  c.expect("third-is-sum-of-the-two", ps.count(0b0001111 ^ 0b0110011) == 1, true);
  return c;
}

Check verify_parity_laws() {
  Check c{"parity-laws"};
  Rng rng(12021);
  int additivity = 0, relabel = 0, reorder_law = 0, violations = 0;
  for (int r = 0; r < 4; ++r) {
    const auto& f = representatives()[std::size_t(r)];
    auto xs = xset(f);
    for (auto x : xs)
      for (auto y : xs) {
        ++additivity;
        if (static_cast<std::uint8_t>(parity_mask(x, f) ^ parity_mask(y, f)) !=
            parity_mask(static_cast<std::uint8_t>(x ^ y), f))
          ++violations;
      }
    for (int t = 0; t < 100; ++t) {
      Perm pi = random_perm(8, rng);
      Factorization g = apply_perm_fact(pi, f);
      for (auto x : xs) {
        ++relabel;
        if (parity_mask(pi.map_mask8(x), g) != parity_mask(x, f)) ++violations;
      }
    }
    for (int t = 0; t < 100; ++t) {
      Perm tau = random_perm(7, rng);
      Factorization g = reorder(tau, f);
      for (auto x : xs) {
        ++reorder_law;
        if (parity_mask(x, g) != tau.inverse().map_mask8(parity_mask(x, f))) ++violations;
      }
    }
  }
  c.note("additivity-checks", additivity);
  c.note("relabeling-law-checks", relabel);
  c.note("class-reassignment-law-checks", reorder_law);
  c.expect("violations", violations, 0);
  return c;
}

Check verify_orthogonality() {
  Check c{"orthogonality"};
  int agree = 0, total = 0;
  for (const auto& f : representatives())
    for (unsigned x = 0; x < 256; ++x) {
      if (std::popcount(x) != 4) continue;
      for (unsigned t = 0; t < 128; ++t) {
        ++total;
        agree += pair_blocks_orthogonal(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(t), f) ==
                 parity_matches(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(t), f);
      }
    }
  c.expect("cases", total, 6 * 70 * 128);
  c.expect("criterion-agreements", agree, total);
  return c;
}

Check make_verify(const std::string& which) {
  if (which == "dim2") return verify_dim2();
  if (which == "latin-filter") return verify_latin_filter();
  if (which == "xset-sizes") return verify_xset_sizes();
  if (which == "stab") return verify_stab();
  if (which == "parity-vectors") return verify_parity_vectors();
  if (which == "parity-laws") return verify_parity_laws();
  if (which == "orthogonality") return verify_orthogonality();
  throw CLI::ValidationError("verify", "unknown check: " + which);
}

// ---------------------------------------------------------------------------
// other commands

Check enumerate_fact_check(bool classify) {
  Check c{"enumerate-factorizations"};
  auto all = enumerate_factorizations();
  c.expect("count", all.size(), std::size_t(6240));
  if (classify) {
    auto cls = classify_orbits(all);
    std::vector<std::uint64_t> sizes(cls.orbit_sizes.begin(), cls.orbit_sizes.end());
    c.expect<std::string>("orbit-sizes", join_u64(sizes), "630 420 2520 30 1680 960");
    ordered_json reps = ordered_json::array();
    for (const auto& f : representatives()) reps.push_back(format_factorization_hex(f));
    c.note("representatives", reps);
  }
  return c;
}

Check enumerate_sts7_check() {
  Check c{"enumerate-sts7"};
  auto all = enumerate_sts7();
  c.expect("count", all.size(), std::size_t(30));
  bool has_default = std::count(all.begin(), all.end(), tail_default()) == 1;
  c.expect("contains-default-tail", has_default, true);
  ordered_json arr = ordered_json::array();
  for (const auto& ts : all) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ts.blocks.size(); ++i)
      os << (i ? "  " : "") << ts.blocks[i][0] << " " << ts.blocks[i][1] << " " << ts.blocks[i][2];
    arr.push_back(os.str());
  }
  c.note("systems", arr);
  return c;
}

Check construct_check(int m, int deficit, std::uint64_t seed, const std::string& out) {
  Check c{"construct"};
  auto P = sts_params(m);
  c.note("m", m);
  c.note("points", P.v);
  c.note("seed", seed);
  c.note("requested-deficit", deficit);
  auto spec = recipe(m, deficit, seed);
  auto sys = assemble(spec);
  c.note("blocks", static_cast<std::uint64_t>(sys.blocks.size()));
  auto rep = rank_class(sys, m);
  c.expect("rank", rep.rank, P.v - m + 3 - deficit);
  c.expect("deficit", rep.deficit, deficit);
  c.expect("extra-dual-classes", rep.extra_classes.size(), (std::size_t(1) << deficit) - 1);
  ordered_json classes = ordered_json::array();
  for (const auto& cl : rep.extra_classes) classes.push_back(cl.to_string01());
  if (!classes.empty()) c.note("class-representatives", classes);
  if (!out.empty()) {
    std::ofstream fs(out);
    fs << system_to_text(sys);
    if (!fs) {
      c.note("write-error", out);
      c.pass = false;
      return c;
    }
    std::ofstream fspec(out + ".spec");
    fspec << spec_to_text(spec);
    if (!fspec) {
      c.note("write-error", out + ".spec");
      c.pass = false;
      return c;
    }
    c.note("system-file", out);
    c.note("spec-file", out + ".spec");
  }
  return c;
}

Check rank_check(const std::string& path) {
  Check c{"rank"};
  std::ifstream fs(path);
  if (!fs) throw CLI::ValidationError("rank", "cannot open " + path);
  std::stringstream buf;
  buf << fs.rdbuf();
  auto sys = system_from_text(buf.str());
  static const std::map<int, int> m_of_v{{31, 5}, {63, 6}, {127, 7}, {255, 8}};
  auto it = m_of_v.find(sys.v);
  if (it == m_of_v.end())
    throw std::invalid_argument("rank: point count must be 2^m - 1 for m in 5..8");
  int m = it->second;
  c.note("file", path);
  c.note("m", m);
  c.note("points", sys.v);
  c.note("blocks", static_cast<std::uint64_t>(sys.blocks.size()));
  auto rep = rank_class(sys, m);
  c.note("rank", rep.rank);
  c.note("deficit", rep.deficit);
  c.note("dual-dimension", rep.dual_dim);
  c.note("extra-dual-classes", static_cast<std::uint64_t>(rep.extra_classes.size()));
  ordered_json classes = ordered_json::array();
  for (const auto& cl : rep.extra_classes) classes.push_back(cl.to_string01());
  if (!classes.empty()) c.note("class-representatives", classes);
  return c;
}

Check count_check(int m) {
  Check c{"census"};
  c.note("m", m);
  c.note("gamma-latin", gamma_latin().str());
  c.note("gamma-factorizations", gamma_factorizations().str());
  c.note("total", m_total(m).str());
  for (int d = 0; d <= 3; ++d) c.note("rank-deficit-" + std::to_string(d), m_rank(m, d).str());
  bool positive = m_total(m) > 0;
  for (int d = 0; d <= 3; ++d) positive = positive && m_rank(m, d) > 0;
  c.expect("all-values-positive", positive, true);
  auto suite = identity_suite(m);
  int passed = 0;
  ordered_json ids = ordered_json::array();
  for (const auto& idc : suite) {
    passed += idc.pass;
    ordered_json j;
    j["name"] = idc.name;
    j["pass"] = idc.pass;
    if (!idc.pass) {
      j["lhs"] = idc.lhs;
      j["rhs"] = idc.rhs;
    }
    ids.push_back(j);
  }
  c.note("identities", ids);
  c.expect("identities-passed", passed, static_cast<int>(suite.size()));
  for (auto interp :
       {DistinctInterpretation::SuccFactorialHalf, DistinctInterpretation::FallingToHalf}) {
    auto dc = m_distinct(m, interp);
    ordered_json j;
    j["interpretation"] = interpretation_token(interp);
    j["integral"] = dc.integral;
    j["quotient"] = dc.quotient.str();
    if (!dc.integral) j["remainder"] = dc.remainder.str();
    c.note("distinct-" + interpretation_token(interp), j);
    if (!dc.integral) c.pass = false;
  }
  return c;
}

std::vector<Check> check_all() {
  std::vector<Check> out;
  out.push_back(verify_dim2());
  out.push_back(verify_latin_filter());
  out.push_back(verify_xset_sizes());
  out.push_back(verify_stab());
  out.push_back(verify_parity_vectors());
  out.push_back(verify_parity_laws());
  out.push_back(verify_orthogonality());
  out.push_back(enumerate_fact_check(true));
  out.push_back(enumerate_sts7_check());
  int seed = 101;
  for (int d = 0; d <= 3; ++d) {
    auto c = construct_check(5, d, static_cast<std::uint64_t>(seed++), "");
    c.name = "construct-m5-deficit-" + std::to_string(d);
    out.push_back(std::move(c));
  }
  for (int d : {0, 3}) {
    auto c = construct_check(6, d, static_cast<std::uint64_t>(seed++), "");
    c.name = "construct-m6-deficit-" + std::to_string(d);
    out.push_back(std::move(c));
  }
  for (int m = 5; m <= 8; ++m) {
    auto c = count_check(m);
    c.name = "census-m" + std::to_string(m);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and 2-rank census of Steiner triple systems on 2^m - 1 points"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string verify_target;
  auto* cmd_verify = app.add_subcommand("verify", "run one exhaustive structural verification");
  cmd_verify
      ->add_option("check", verify_target, "one of dim2, latin-filter, xset-sizes, stab, parity-vectors, parity-laws, orthogonality")
      ->required()
      ->check(CLI::IsMember({"dim2", "latin-filter", "xset-sizes", "stab", "parity-vectors",
                             "parity-laws", "orthogonality"}));

  std::string enum_what;
  bool classify = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate factorizations or the 7-point systems");
  cmd_enum->add_option("what", enum_what, "factorizations or sts7")
      ->required()
      ->check(CLI::IsMember({"factorizations", "sts7"}));
  cmd_enum->add_flag("--classify", classify, "also classify factorizations into orbits");

  int m = 5, deficit = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* cmd_construct = app.add_subcommand("construct", "build a system with a prescribed rank deficit");
  cmd_construct->add_option("--m", m, "ambient parameter (points = 2^m - 1)")
      ->required()
      ->check(CLI::Range(5, 8));
  cmd_construct->add_option("--deficit", deficit, "rank deficit below 2^m - m + 2")
      ->required()
      ->check(CLI::Range(0, 3));
  cmd_construct->add_option("--seed", seed, "generator seed")->capture_default_str();
  cmd_construct->add_option("--out", out_path, "write the system here and its recipe to <out>.spec");

  std::string rank_path;
  auto* cmd_rank = app.add_subcommand("rank", "measure the 2-rank of a system from a file");
  cmd_rank->add_option("file", rank_path, "system text file")->required();

  int count_m = 0;
  bool count_all = false;
  auto* cmd_count = app.add_subcommand("count", "evaluate the exact census formulas");
  cmd_count->add_option("--m", count_m, "ambient parameter")->check(CLI::Range(5, 8));
  cmd_count->add_flag("--all", count_all, "all m in 5..8");

  auto* cmd_check_all = app.add_subcommand("check-all", "run every verification deterministically");

  CLI11_PARSE(app, argc, argv);
  const bool structured = format == "structured";

  try {
    std::vector<Check> checks;
    std::string command;
    if (*cmd_verify) {
      command = "verify";
      checks.push_back(make_verify(verify_target));
    } else if (*cmd_enum) {
      command = "enumerate";
      checks.push_back(enum_what == "factorizations" ? enumerate_fact_check(classify)
                                                     : enumerate_sts7_check());
    } else if (*cmd_construct) {
      command = "construct";
      checks.push_back(construct_check(m, deficit, seed, out_path));
    } else if (*cmd_rank) {
      command = "rank";
      checks.push_back(rank_check(rank_path));
    } else if (*cmd_count) {
      command = "count";
      if (!count_all && count_m == 0)
        throw CLI::ValidationError("count", "pass --m M or --all");
      if (count_all)
        for (int mm = 5; mm <= 8; ++mm) {
          auto c = count_check(mm);
          c.name = "census-m" + std::to_string(mm);
          checks.push_back(std::move(c));
        }
      else
        checks.push_back(count_check(count_m));
    } else if (*cmd_check_all) {
      command = "check-all";
      checks = check_all();
    }
    emit(command, checks, structured);
    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    return all ? 0 : 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
