#pragma once

#include <cstddef>
#include <string>

#include "indideal/bitset.hpp"

namespace indideal {

// Squarefree monomial in the 2n-variable ring K[s_1..s_n, t_1..t_n], stored
// as a pair of vertex-indexed exponent masks. Generators of the independence
// ideal have s_mask and t_mask disjoint with union the full vertex set;
// general monomials (colon results, duals, multidegrees) carry any masks.
struct SquarefreeMonomial {
  Bitset s_mask;
  Bitset t_mask;

  SquarefreeMonomial() = default;
  SquarefreeMonomial(Bitset s, Bitset t) : s_mask(std::move(s)), t_mask(std::move(t)) {}

  static SquarefreeMonomial one(std::size_t n) {
    return SquarefreeMonomial(Bitset(n), Bitset(n));
  }

  std::size_t vertex_capacity() const { return s_mask.size(); }
  std::size_t deg_s() const { return s_mask.count(); }
  std::size_t deg_t() const { return t_mask.count(); }
  std::size_t degree() const { return deg_s() + deg_t(); }
  bool is_one() const { return s_mask.none() && t_mask.none(); }

  bool divides(const SquarefreeMonomial& m) const {
    return s_mask.is_subset_of(m.s_mask) && t_mask.is_subset_of(m.t_mask);
  }

  SquarefreeMonomial gcd(const SquarefreeMonomial& m) const {
    return {s_mask & m.s_mask, t_mask & m.t_mask};
  }
  SquarefreeMonomial lcm(const SquarefreeMonomial& m) const {
    return {s_mask | m.s_mask, t_mask | m.t_mask};
  }

  // this / gcd(this, m): the colon quotient used everywhere.
  SquarefreeMonomial quotient_by(const SquarefreeMonomial& m) const {
    return {s_mask.minus(m.s_mask), t_mask.minus(m.t_mask)};
  }

  // Squarefree product (masks united); sound for the membership oracle.
  SquarefreeMonomial squarefree_product(const SquarefreeMonomial& m) const {
    return {s_mask | m.s_mask, t_mask | m.t_mask};
  }

  friend bool operator==(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return a.s_mask == b.s_mask && a.t_mask == b.t_mask;
  }
  friend bool operator!=(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return !(a == b);
  }

  // "s1*s3*t2": s-variables ascending, then t-variables ascending; "1" for
  // the unit monomial. This rendering is the CLI/golden-file contract.
  std::string render() const {
    if (is_one()) return "1";
    std::string out;
    s_mask.for_each_bit([&](std::size_t i) {
      if (!out.empty()) out += '*';
      out += 's' + std::to_string(i + 1);
    });
    t_mask.for_each_bit([&](std::size_t i) {
      if (!out.empty()) out += '*';
      out += 't' + std::to_string(i + 1);
    });
    return out;
  }
};

// Lexicographic comparison with x_1 > x_2 > ... > x_n on one mask: the set
// holding the lowest differing index is the larger monomial.
inline bool lex_greater(const Bitset& a, const Bitset& b) {
  std::size_t d = Bitset::lowest_differing_bit(a, b);
  return d != Bitset::npos && a.test(d);
}

// The generator order on monomials of the independence ideal, descending:
// m precedes m' when deg_s(m) < deg_s(m'), or on equal s-degrees when the
// s-part of m is lex-greater. Distinct generators never tie (their s-parts
// are the distinct independent sets).
inline bool generator_order_precedes(const SquarefreeMonomial& a,
                                     const SquarefreeMonomial& b) {
  if (a.deg_s() != b.deg_s()) return a.deg_s() < b.deg_s();
  return lex_greater(a.s_mask, b.s_mask);
}

// Deterministic storage order for minimalized generator lists: total degree
// ascending, then s-degree descending, then lex on s- and t-parts.
inline bool canonical_less(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.deg_s() != b.deg_s()) return a.deg_s() > b.deg_s();
  if (a.s_mask != b.s_mask) return lex_greater(a.s_mask, b.s_mask);
  if (a.t_mask != b.t_mask) return lex_greater(a.t_mask, b.t_mask);
  return false;
}

struct SquarefreeMonomialHash {
  std::size_t operator()(const SquarefreeMonomial& m) const {
    return m.s_mask.hash() * 0x9e3779b97f4a7c15ULL + m.t_mask.hash();
  }
};

}  // namespace indideal
