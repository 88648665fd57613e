#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gorconf/sequences.hpp"

namespace gorconf {

/// Sparse graded Betti table of a quotient ring: (i, j) -> rank, ranks > 0 only.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index, internal degree)

  BettiTable() = default;

  /// Adds `rank` to entry (i, j); entries that reach zero are erased.
  void add(int i, int j, std::int64_t rank);
  std::int64_t operator()(int i, int j) const;
  const std::map<Key, std::int64_t>& entries() const noexcept { return ranks_; }
  bool empty() const noexcept { return ranks_.empty(); }

  /// Largest homological index with a nonzero entry (-1 if empty).
  int length() const;
  /// max(j - i) over entries (-1 if empty).
  int max_row() const;
  std::vector<std::int64_t> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::int64_t> ranks_;
};

/// Betti table of T/J for the lex-segment ideal J of h in c variables.
BettiTable lex_betti(const HVector& h, int c);

/// Table of R/(I_X + I_Y) from the table of X (codimension c) and r = reg(X u Y).
BettiTable sum_linked_betti(const BettiTable& x, int c, int r);

BettiTable gorenstein_max_betti(const HVector& h);

BettiTable closed_form_max_resolution(int c, int s, int t);

/// Entrywise bound used by the Gorenstein-mode check.
BettiTable gorenstein_bound_table(const HVector& h);

/// table <= lex_betti(h, c) everywhere, or, in Gorenstein mode, table <= the three-zone bound
/// built from g = si_params(h).g in c - 1 variables.
bool betti_upper_bound_check(const BettiTable& table, const HVector& h, int c, bool gorenstein_mode = false);

/// sum_i (-1)^i table(i, j) z^j
std::vector<std::int64_t> betti_numerator(const BettiTable& table);

/// The Macaulay-style diagram: "total:" line, dash line, then one line per row j - i.
std::string macaulay_diagram(const BettiTable& table);

}  // namespace gorconf
