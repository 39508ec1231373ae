#ifndef STSRANK_GF2_HPP
#define STSRANK_GF2_HPP

#include <vector>

#include "stsrank/bitvec.hpp"

namespace stsrank {

// A binary linear code given by a basis. make_code() reduces the input to an
// independent basis with distinct pivot coordinates; dim == basis.size().
struct LinearCode {
  int length = 0;
  std::vector<BitVec> basis;  // independent, pivot-reduced

  int dim() const { return static_cast<int>(basis.size()); }
};

LinearCode make_code(int length, const std::vector<BitVec>& generators);

// rank of the span; all vectors must share one length
int rank_of(const std::vector<BitVec>& vectors);

bool span_contains(const LinearCode& code, const BitVec& v);

// all 2^dim codewords; refuses dim > 20
std::vector<BitVec> span_all(const LinearCode& code);

// basis vectors D drawn greedily from super's basis (declaration order) with
// span(sub) + span(D) = span(super); requires sub <= super
std::vector<BitVec> complement_basis(const LinearCode& sub, const LinearCode& super);

// dual code by exhaustive scan; length must be <= 20
LinearCode dual_small(const LinearCode& code);

// the seven 2-dimensional subspaces of a 3-dimensional code, each returned
// with a reduced 2-element basis, deterministically ordered
std::vector<LinearCode> two_dim_subspaces(const LinearCode& code);

// kernel basis of the row space (vectors x with Mx = 0 for every row of M)
std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, int length);

}  // namespace stsrank

#endif
