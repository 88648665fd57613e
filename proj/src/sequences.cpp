#include "gorconf/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gorconf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotOSequence: return "NotOSequence";
    case ErrorCode::NotSISequence: return "NotSISequence";
    case ErrorCode::CodimTooSmall: return "CodimTooSmall";
    case ErrorCode::NotLexSegment: return "NotLexSegment";
    case ErrorCode::DegreeExceedsT: return "DegreeExceedsT";
    case ErrorCode::SocleTooSmall: return "SocleTooSmall";
    case ErrorCode::SocleParity: return "SocleParity";
    case ErrorCode::NotSubconfiguration: return "NotSubconfiguration";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::NegativeResidual: return "NegativeResidual";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::RegularityHypothesisViolated: return "RegularityHypothesisViolated";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

HVector::HVector(std::initializer_list<value_type> values) : entries_(values) {
  normalize();
}

HVector::HVector(std::vector<value_type> values) : entries_(std::move(values)) {
  normalize();
}

void HVector::normalize() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  if (entries_.empty()) entries_.push_back(0);
}

HVector::value_type HVector::operator[](std::int64_t i) const noexcept {
  if (i < 0 || i >= static_cast<std::int64_t>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(i)];
}

std::int64_t HVector::last_index() const noexcept {
  return is_zero() ? -1 : static_cast<std::int64_t>(entries_.size()) - 1;
}

bool HVector::is_symmetric() const noexcept {
  return std::equal(entries_.begin(), entries_.end(), entries_.rbegin());
}

bool HVector::is_nonnegative() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v >= 0; });
}

HVector HVector::reversed() const {
  return HVector(std::vector<value_type>(entries_.rbegin(), entries_.rend()));
}

std::string HVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  return out.str();
}

HVector parse_hvector(std::string_view text) {
  std::vector<HVector::value_type> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    if (field.empty())
      throw Error(ErrorCode::InvalidArgument, "malformed h-vector '" + std::string(text) + "': empty entry");
    HVector::value_type v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw Error(ErrorCode::InvalidArgument,
                  "malformed h-vector '" + std::string(text) + "': bad entry '" + std::string(field) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return HVector(std::move(values));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    std::int64_t num = 0;
    if (__builtin_mul_overflow(r, n - k + i, &num))
      throw Error(ErrorCode::Overflow, "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
    r = num / i;
  }
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> macaulay_representation(std::int64_t value,
                                                                           std::int64_t degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "Macaulay representation needs degree >= 1");
  if (value < 0) throw Error(ErrorCode::InvalidArgument, "Macaulay representation needs value >= 0");
  std::vector<std::pair<std::int64_t, std::int64_t>> rep;
  std::int64_t rest = value;
  for (std::int64_t i = degree; i >= 1 && rest > 0; --i) {
    // largest k with C(k, i) <= rest
    std::int64_t k = i;
    while (binomial(k + 1, i) <= rest) ++k;
    rep.emplace_back(k, i);
    rest -= binomial(k, i);
  }
  return rep;
}

std::int64_t macaulay_bound(std::int64_t value, std::int64_t degree) {
  std::int64_t bound = 0;
  for (auto [k, i] : macaulay_representation(value, degree)) {
    if (__builtin_add_overflow(bound, binomial(k + 1, i + 1), &bound))
      throw Error(ErrorCode::Overflow, "Macaulay bound overflows");
  }
  return bound;
}

bool is_o_sequence(const HVector& h) {
  if (h.is_zero()) return true;
  if (h[0] != 1 || !h.is_nonnegative()) return false;
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(h.size()); ++i) {
    if (h[i + 1] > macaulay_bound(h[i], i)) return false;
  }
  return true;
}

std::string si_failure_reason(const HVector& h) {
  if (h.is_zero() || h[0] != 1) return "h_0 must be 1";
  if (!h.is_nonnegative()) return "entries must be nonnegative";
  if (!h.is_symmetric()) return "not symmetric";
  const std::int64_t s = h.last_index();
  std::vector<HVector::value_type> diff;
  for (std::int64_t i = 0; i <= s / 2; ++i) diff.push_back(h[i] - h[i - 1]);
  HVector d(std::move(diff));
  if (!d.is_nonnegative() || !is_o_sequence(d)) return "first-half differentiability fails";
  return {};
}

bool is_si_sequence(const HVector& h) { return si_failure_reason(h).empty(); }

HVector difference(const HVector& h) {
  std::vector<HVector::value_type> d;
  const auto n = static_cast<std::int64_t>(h.size());
  d.reserve(h.size() + 1);
  for (std::int64_t i = 0; i <= n; ++i) d.push_back(h[i] - h[i - 1]);
  return HVector(std::move(d));
}

HVector integrate(const HVector& d) {
  std::vector<HVector::value_type> sums;
  HVector::value_type acc = 0;
  for (auto v : d.entries()) {
    acc += v;
    sums.push_back(acc);
  }
  return HVector(std::move(sums));
}

SIParams si_params(const HVector& h) {
  if (auto why = si_failure_reason(h); !why.empty())
    throw Error(ErrorCode::NotSISequence, "not an SI-sequence: " + why + " (h = " + h.to_string() + ")");
  SIParams p;
  p.c = h[1];
  p.s = h.last_index();
  while (h[p.t] < h[p.t + 1]) ++p.t;
  std::vector<HVector::value_type> g;
  for (std::int64_t i = 0; i <= p.t; ++i) g.push_back(h[i] - h[i - 1]);
  p.g = HVector(std::move(g));
  return p;
}

HVector maximal_o_sequence(std::int64_t c, std::int64_t t) {
  std::vector<HVector::value_type> h;
  for (std::int64_t i = 0; i <= t; ++i) h.push_back(binomial(c - 1 + i, i));
  return HVector(std::move(h));
}

HVector maximal_si_sequence(std::int64_t c, std::int64_t s, std::int64_t t) {
  if (s < 2 * t) throw Error(ErrorCode::SocleTooSmall, "maximal SI-sequence needs s >= 2t");
  std::vector<HVector::value_type> h;
  for (std::int64_t i = 0; i <= s; ++i) {
    std::int64_t k = std::min({i, t, s - i});
    h.push_back(binomial(c - 1 + k, c - 1));
  }
  return HVector(std::move(h));
}

}  // namespace gorconf
