#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gorconf/betti.hpp"
#include "gorconf/monomials.hpp"
#include "gorconf/simplicial.hpp"

namespace gorconf::oracle {

inline constexpr std::size_t kMaxKoszulVariables = 10;
inline constexpr int kMaxKoszulDegree = 12;
inline constexpr int kMaxReisnerVertices = 16;

/// dims[d] = number of degree-d monomials outside I, for 0 <= d <= cutoff.
std::vector<std::int64_t> standard_monomials(const MonomialIdeal& ideal, int cutoff);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, std::size_t var);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// (x_{v_1}, ..., x_{v_k}) in nvars variables.
MonomialIdeal prime_ideal(std::size_t nvars, const std::vector<int>& vars);
/// Intersection of variable-generated primes; the unit ideal when `primes` is empty.
MonomialIdeal intersect_primes(std::size_t nvars, const std::vector<std::vector<int>>& primes);

/// Graded Betti numbers of R/I from multigraded Koszul homology over Q.
/// Internal degrees up to `cutoff` (default: degree of the lcm of the generators).
BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> cutoff = std::nullopt);

/// Rank over Q of an integer matrix.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Reisner's criterion over Q.
bool reisner_cm(const SimplicialComplex& delta);

}  // namespace gorconf::oracle
