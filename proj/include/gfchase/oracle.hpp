#pragma once

// Slow reference implementations for tests.

#include "gfchase/tree.hpp"

#include <cstdint>

namespace gfchase::oracle {

inline constexpr std::uint32_t max_field_size = 16;
inline constexpr int max_degree_cap = 6;
// Upper bound on q^(2(cap+1)) for the literal enumeration.
inline constexpr std::uint64_t max_enumeration = std::uint64_t{1} << 24;

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The <_{-1}-minimal nonzero (u, v) with deg u, deg v <= deg_cap such that
// u = S v mod X^{2t}, and for every pattern entry (alpha, beta):
// v(alpha^{-1}) = 0 and beta a v'(alpha^{-1}) = -alpha u(alpha^{-1}).
// Normalized so the coefficient of the leading monomial is 1. Solved by
// elimination over the coefficient space, columns in increasing monomial
// order. Throws OracleError when q > 16, deg_cap > 6 or nothing is found.
PolyPair brute_min_module_element(const GrsCode& code, const Syndrome& s, const TestPattern& pattern,
                                  int deg_cap);

// Same answer by trying every pair of polynomials; for tiny caps only.
PolyPair enumerate_min_module_element(const GrsCode& code, const Syndrome& s, const TestPattern& pattern,
                                      int deg_cap);

// Bounded-distance decoding from scratch: the error of weight <= t with the
// given syndrome, if any.
std::optional<ErrorEstimate> hd_decode(const GrsCode& code, std::span<const Elem> y);

// Every weight <= r_max pattern is subtracted from y and decoded. The empty
// pattern contributes its HD result; a pattern P of weight w contributes
// e' + P when HD(y - P) = e' has weight exactly t and avoids P's support.
CandidateList naive_chase(const GrsCode& code, std::span<const Elem> y, const ChaseInput& input, unsigned r_max);

// (S v mod X^{2t})(beta) by full product, truncation and Horner.
Elem naive_truncated_eval(const FieldCtx& f, std::span<const Elem> S, const Poly& v, Elem beta, unsigned two_t);

} // namespace gfchase::oracle
