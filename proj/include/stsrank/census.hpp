#ifndef STSRANK_CENSUS_HPP
#define STSRANK_CENSUS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace stsrank {

// exact nonnegative integers of unbounded size
using BigCount = boost::multiprecision::cpp_int;

// ordered-family sizes entering the closed forms: the number of ordered
// Latin-square triples per boolean block, and of class-ordered
// one-factorizations per block
BigCount gamma_latin();           // 108776032459082956800
BigCount gamma_factorizations();  // 7! * 6240 = 31449600

// total number of construction tuples for v = 2^m - 1
BigCount m_total(int m);

// number of construction tuples reaching rank exactly v - m + 3 - d,
// d in 0..3
BigCount m_rank(int m, int d);

struct IdentityCheck {
  std::string name;
  std::string lhs, rhs;  // exact decimal strings
  bool pass = false;
};

// machine checks of every displayed algebraic identity behind the closed
// forms, evaluated exactly at the given m
std::vector<IdentityCheck> identity_suite(int m);

// The distinct-system normalization divides v! * m_rank(m, 3) by an
// expression whose printed form is ambiguous; both candidate readings are
// exposed and neither is endorsed.
enum class DistinctInterpretation {
  SuccFactorialHalf,  // (u+1)!/2
  FallingToHalf,      // u * (u-1) * ... * ((u+1)/2), descending inclusive
};
DistinctInterpretation parse_interpretation(const std::string& token);
std::string interpretation_token(DistinctInterpretation interp);

struct DistinctCount {
  BigCount quotient;
  BigCount remainder;
  bool integral = false;
};
DistinctCount m_distinct(int m, DistinctInterpretation interp);

}  // namespace stsrank

#endif
