#include "stsrank/census.hpp"

#include <stdexcept>

#include "stsrank/sts.hpp"

namespace stsrank {

namespace {

BigCount bpow(const BigCount& base, int exp) {
  BigCount r = 1, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

BigCount factorial(int n) {
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

std::string dec(const BigCount& x) { return x.str(); }

}  // namespace

BigCount gamma_latin() { return BigCount("108776032459082956800"); }

BigCount gamma_factorizations() { return BigCount(5040) * 6240; }

BigCount m_total(int m) {
  auto P = sts_params(m);
  return 30 * bpow(gamma_latin(), P.k) * bpow(gamma_factorizations(), P.u);
}

BigCount m_rank(int m, int d) {
  auto P = sts_params(m);
  const int u = P.u, k = P.k, e = P.e;
  switch (d) {
    case 0:
      return bpow(30, u + 1) * bpow(168, u) * bpow(2, 3 * e);
    case 1:
      return 210 * bpow(6, u) * bpow(840, u) *
             (bpow(8, u) * bpow(16, 4 * k) - bpow(7, u) * bpow(2, e)) * bpow(2, 2 * e);
    case 2:
      return 210 * (bpow(24 * 6, u) * bpow(5040, u) * bpow(2, e) * bpow(576, 4 * k) -
                    bpow(48, u) * bpow(2100, u) * bpow(2, 2 * e) * bpow(16, 4 * k));
    case 3:
      return 30 * bpow(gamma_factorizations(), u) * bpow(gamma_latin(), k) -
             210 * bpow(24 * 6, u) * bpow(5040, u) * bpow(576, 4 * k) * bpow(2, e) +
             210 * bpow(48, u) * bpow(2100, u) * bpow(16, 4 * k) * bpow(2, 2 * e);
    default:
      throw std::invalid_argument("m_rank: d must be 0..3");
  }
}

std::vector<IdentityCheck> identity_suite(int m) {
  auto P = sts_params(m);
  const int u = P.u, k = P.k, e = P.e;
  std::vector<IdentityCheck> out;
  auto add = [&](const std::string& name, const BigCount& lhs, const BigCount& rhs) {
    out.push_back({name, dec(lhs), dec(rhs), lhs == rhs});
  };

  // orbit sizes: three orbits of 630-type count plus the others fill S7
  add("orbit-sum-5040", BigCount(3) * 630 + 420 + 2520 + BigCount(7) * 30, BigCount(5040));
  add("orbit-sum-2100", BigCount(3) * 630 + BigCount(7) * 30, BigCount(2100));
  {
    BigCount lhs = 0;
    for (int j = 0; j <= u; ++j) lhs += binom(u, j) * bpow(3 * 630, j) * bpow(7 * 30, u - j);
    add("binomial-collapse", lhs, bpow(2100, u));
  }
  add("factor-identity-210-168", BigCount(210) * 168, BigCount(840) * 42);
  add("factorization-orderings", factorial(7) * 6240, BigCount(31449600));
  add("orbit-630-plus-7x30", BigCount(630) + BigCount(7) * 30, BigCount(840));
  add("rank1-expanded-vs-factored",
      210 * bpow(48, u) * bpow(2, 2 * e) * bpow(840, u) * bpow(16, 4 * k) -
          210 * bpow(210, u) * bpow(168, u) * bpow(2, 3 * e),
      m_rank(m, 1));
  {
    BigCount a = 210 * bpow(144, u) * bpow(5040, u) * bpow(2, e) * bpow(576, 4 * k);
    BigCount b = 210 * (bpow(48, u) * bpow(2100, u) * bpow(2, 2 * e) * bpow(16, 4 * k) -
                        bpow(210, u) * bpow(168, u) * bpow(2, 3 * e));
    BigCount c = 210 * bpow(210, u) * bpow(168, u) * bpow(2, 3 * e);
    add("rank2-chain", a - b - c, m_rank(m, 2));
  }
  add("rank3-reconstruction",
      m_rank(m, 3) + 210 * bpow(144, u) * bpow(5040, u) * bpow(576, 4 * k) * bpow(2, e) -
          210 * bpow(48, u) * bpow(2100, u) * bpow(16, 4 * k) * bpow(2, 2 * e),
      30 * bpow(31449600, u) * bpow(gamma_latin(), k));
  add("total-minus-rank3", m_total(m) - m_rank(m, 3), m_rank(m, 2));
  return out;
}

DistinctInterpretation parse_interpretation(const std::string& token) {
  if (token == "succ-factorial-half") return DistinctInterpretation::SuccFactorialHalf;
  if (token == "falling-to-half") return DistinctInterpretation::FallingToHalf;
  throw std::invalid_argument("unknown interpretation token (expected succ-factorial-half or falling-to-half)");
}

std::string interpretation_token(DistinctInterpretation interp) {
  switch (interp) {
    case DistinctInterpretation::SuccFactorialHalf:
      return "succ-factorial-half";
    case DistinctInterpretation::FallingToHalf:
      return "falling-to-half";
  }
  throw std::logic_error("interpretation_token: bad value");
}

DistinctCount m_distinct(int m, DistinctInterpretation interp) {
  auto P = sts_params(m);
  BigCount head;
  switch (interp) {
    case DistinctInterpretation::SuccFactorialHalf:
      head = factorial(P.u + 1) / 2;
      break;
    case DistinctInterpretation::FallingToHalf: {
      head = 1;
      for (int t = P.u; t >= (P.u + 1) / 2; --t) head *= t;
      break;
    }
  }
  BigCount denom = head * bpow(factorial(8), P.u) * 168;
  BigCount num = factorial(P.v) * m_rank(m, 3);
  DistinctCount out;
  out.quotient = num / denom;
  out.remainder = num % denom;
  out.integral = (out.remainder == 0);
  return out;
}

}  // namespace stsrank
