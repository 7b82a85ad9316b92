#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "indideal/bigint.hpp"
#include "indideal/ideal.hpp"
#include "indideal/monomial.hpp"

namespace indideal {

// Brute-force verification engines, kept independent of the formula-based
// modules they validate. Everything here is exponential and capped.

// Small simplicial complex on at most 16 vertices, stored as the full list
// of faces (downward closed), each face a bitmask over local vertex ids.
// The void complex has no faces at all; a nonvoid complex contains the
// empty face (mask 0).
struct SimplicialComplexSmall {
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> faces;  // sorted, duplicate-free

  bool is_void() const { return faces.empty(); }
};

// The complex at squarefree multidegree `a`: local vertices are supp(a)
// listed s-variables ascending then t-variables ascending, and W is a face
// exactly when monomial(a - W) lies in the ideal. Void when a itself is
// outside the ideal.
SimplicialComplexSmall upper_koszul_complex(const MonomialIdeal& ideal,
                                            const SquarefreeMonomial& a);

// dim_GF(2) of reduced homology in the given dimension (-1 allowed), via
// Gaussian elimination on bit-packed boundary matrices. The one-point-empty
// complex {0} has homology 1 in dimension -1; the void complex is zero
// everywhere.
std::size_t reduced_homology_gf2(const SimplicialComplexSmall& complex, int dim);

// Multigraded Betti numbers, finitely supported.
struct BettiTable {
  std::map<std::pair<std::size_t, std::size_t>, BigInt> entries;  // (i, j) -> beta_{i,j}

  std::vector<BigInt> totals() const;  // beta_i = sum_j beta_{i,j}
};

struct BettiOracleOptions {
  std::size_t max_support_variables = 12;
  unsigned threads = 1;
};

// beta_{i,j} summed from reduced homology of upper-Koszul complexes over all
// squarefree multidegrees inside the generator support. Throws SizeError
// above the variable cap.
BettiTable betti_table_oracle(const MonomialIdeal& ideal,
                              const BettiOracleOptions& opts = {});

// Minimal generators of A intersect B via pairwise lcms.
MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b);

// Definitional membership: w in (I : m) iff w*m lies in I.
bool colon_membership_check(const MonomialIdeal& ideal, const SquarefreeMonomial& m,
                            const SquarefreeMonomial& w);

}  // namespace indideal
