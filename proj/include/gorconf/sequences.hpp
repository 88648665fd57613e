#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gorconf/error.hpp"

namespace gorconf {

/// Finite integer sequence indexed by degree, starting at degree 0.
///
/// Values are stored with trailing zeros trimmed, so (1,2,0) and (1,2)
/// compare equal. The zero vector is represented by the single entry (0).
/// Entries may be negative: first differences of h-vectors live here too.
class HVector {
 public:
  using value_type = std::int64_t;

  HVector() : entries_{0} {}
  HVector(std::initializer_list<value_type> values);
  explicit HVector(std::vector<value_type> values);

  static HVector zero() { return HVector(); }

  /// Entry in degree `i`; zero outside the stored range (including i < 0).
  value_type operator[](std::int64_t i) const noexcept;

  /// Number of stored entries (last nonzero index + 1; 1 for the zero vector).
  std::size_t size() const noexcept { return entries_.size(); }

  /// Index of the last nonzero entry, or -1 for the zero vector.
  std::int64_t last_index() const noexcept;

  bool is_zero() const noexcept { return entries_.size() == 1 && entries_[0] == 0; }
  bool is_symmetric() const noexcept;
  bool is_nonnegative() const noexcept;

  const std::vector<value_type>& entries() const noexcept { return entries_; }

  HVector reversed() const;

  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  void normalize();

  std::vector<value_type> entries_;
};

/// Parse "1,4,10,14,10,4,1" (whitespace tolerated around entries).
HVector parse_hvector(std::string_view text);

/// Largest admissible h_{degree+1} given h_degree = value (Macaulay's bound).
std::int64_t macaulay_bound(std::int64_t value, std::int64_t degree);

/// The degree-indexed binomial expansion value = C(k_d,d) + C(k_{d-1},d-1) + ...
/// with k_d > k_{d-1} > ... >= j >= 1. Returned as pairs (k_i, i), top first.
std::vector<std::pair<std::int64_t, std::int64_t>> macaulay_representation(
    std::int64_t value, std::int64_t degree);

bool is_o_sequence(const HVector& h);
bool is_si_sequence(const HVector& h);

/// Human-readable reason why `h` is not an SI-sequence; empty if it is one.
std::string si_failure_reason(const HVector& h);

HVector difference(const HVector& h);
HVector integrate(const HVector& d);

struct SIParams {
  std::int64_t c = 0;  // codimension, h_1 unless overridden
  std::int64_t s = 0;  // socle degree
  std::int64_t t = 0;  // min { i : h_i >= h_{i+1} }
  HVector g;           // (1, h_1 - 1, ..., h_t - h_{t-1})
};

SIParams si_params(const HVector& h);

/// Maximal O-sequence (1, c, C(c+1,2), ..., C(c-1+t,t)).
HVector maximal_o_sequence(std::int64_t c, std::int64_t t);

/// Flat-topped maximal SI-sequence of codimension c, socle degree s, flat from t.
HVector maximal_si_sequence(std::int64_t c, std::int64_t s, std::int64_t t);

/// Binomial coefficient with checked 64-bit arithmetic; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace gorconf
