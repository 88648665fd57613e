#include "gorconf/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "gorconf/monomials.hpp"

namespace gorconf {

void BettiTable::add(int i, int j, std::int64_t rank) {
  if (rank == 0) return;
  auto& r = ranks_[{i, j}];
  r += rank;
  if (r == 0) ranks_.erase({i, j});
}

std::int64_t BettiTable::operator()(int i, int j) const {
  auto it = ranks_.find({i, j});
  return it == ranks_.end() ? 0 : it->second;
}

int BettiTable::length() const {
  int n = -1;
  for (const auto& [key, r] : ranks_) n = std::max(n, key.first);
  return n;
}

int BettiTable::max_row() const {
  int n = -1;
  for (const auto& [key, r] : ranks_) n = std::max(n, key.second - key.first);
  return n;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(length() + 1), 0);
  for (const auto& [key, r] : ranks_) out[static_cast<std::size_t>(key.first)] += r;
  return out;
}

namespace {

// Betti table of the ideal J itself (index i counts i-th syzygies of the generators).
BettiTable lex_ideal_betti(const MonomialIdeal& j) {
  BettiTable out;
  if (j.is_zero()) return out;
  if (j.is_unit()) {
    out.add(0, 0, 1);
    return out;
  }
  const std::size_t c = j.nvars();
  if (c == 1) {
    out.add(0, j.generators().front().exps[0], 1);
    return out;
  }
  // Tor(J) = Tor(J : z1)(-1) + Tor over T of (I_0 + z1 T)/z1 T
  const MonomialIdeal colon = [&] {
    std::vector<Monomial> gens = j.generators();
    for (auto& g : gens)
      if (g.exps[0] > 0) --g.exps[0];
    return MonomialIdeal(c, std::move(gens));
  }();
  const BettiTable shifted = lex_ideal_betti(colon);
  for (const auto& [key, r] : shifted.entries()) out.add(key.first, key.second + 1, r);

  std::vector<Monomial> rest;
  for (const auto& g : j.generators())
    if (g.exps[0] == 0) rest.emplace_back(std::vector<int>(g.exps.begin() + 1, g.exps.end()));
  const MonomialIdeal i0(c - 1, std::move(rest));
  // over T the quotient by z1 adds a Koszul factor on z1
  const BettiTable base = lex_ideal_betti(i0);
  for (const auto& [key, r] : base.entries()) {
    out.add(key.first, key.second, r);
    out.add(key.first + 1, key.second + 1, r);
  }
  return out;
}

int lex_regularity(const BettiTable& quotient) { return quotient.max_row() + 1; }

}  // namespace

BettiTable lex_betti(const HVector& h, int c) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "variable count must be >= 1");
  const MonomialIdeal j = lex_segment_ideal(h, static_cast<std::size_t>(c));
  BettiTable out;
  out.add(0, 0, 1);
  const BettiTable ideal = lex_ideal_betti(j);
  for (const auto& [key, r] : ideal.entries()) out.add(key.first + 1, key.second, r);
  return out;
}

BettiTable sum_linked_betti(const BettiTable& x, int c, int r) {
  const int reg = lex_regularity(x);
  if (r < 2 * reg)
    throw Error(ErrorCode::RegularityHypothesisViolated,
                "need reg(X u Y) >= 2 reg(X) = " + std::to_string(2 * reg) + ", got " + std::to_string(r));
  BettiTable out;
  for (const auto& [key, rank] : x.entries()) {
    out.add(key.first, key.second, rank);
    out.add(c + 1 - key.first, r + c - 1 - key.second, rank);
  }
  return out;
}

BettiTable gorenstein_max_betti(const HVector& h) {
  const SIParams p = si_params(h);
  const int c = static_cast<int>(std::max<std::int64_t>(p.c, 2));
  const int s = static_cast<int>(p.s);
  const BettiTable b = lex_betti(p.g, c - 1);
  BettiTable out;
  for (const auto& [key, rank] : b.entries()) {
    out.add(key.first, key.second, rank);
    out.add(c - key.first, s + c - key.second, rank);
  }
  return out;
}

BettiTable closed_form_max_resolution(int c, int s, int t) {
  if (c < 1 || t < 0) throw Error(ErrorCode::InvalidArgument, "need c >= 1 and t >= 0");
  if (s < 2 * t) throw Error(ErrorCode::SocleTooSmall, "closed form needs s >= 2t");
  if (s == 2 * t + 1) throw Error(ErrorCode::SocleParity, "closed form does not cover s = 2t + 1");
  auto alpha = [&](int i) { return binomial(c + t - 1, i + t) * binomial(t - 1 + i, t); };
  BettiTable out;
  out.add(0, 0, 1);
  out.add(c, s + c, 1);
  for (int i = 1; i <= c - 1; ++i) {
    out.add(i, t + i, alpha(i));
    out.add(i, s - t + i, alpha(c - i));
  }
  return out;
}

BettiTable gorenstein_bound_table(const HVector& h) {
  const SIParams p = si_params(h);
  const int c = static_cast<int>(std::max<std::int64_t>(p.c, 2));
  const int s = static_cast<int>(p.s), t = static_cast<int>(p.t);
  const BettiTable b = lex_betti(p.g, c - 1);
  BettiTable out;
  for (int i = 0; i <= c; ++i) {
    for (int j = 0; j <= s + c; ++j) {
      std::int64_t v = 0;
      if (j <= t + i) v += b(i, j);
      if (j >= s - t + i) v += b(c - i, s + c - j);
      out.add(i, j, v);
    }
  }
  return out;
}

bool betti_upper_bound_check(const BettiTable& table, const HVector& h, int c, bool gorenstein_mode) {
  const BettiTable bound = gorenstein_mode ? gorenstein_bound_table(h) : lex_betti(h, c);
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [&](const auto& e) { return e.second <= bound(e.first.first, e.first.second); });
}

std::vector<std::int64_t> betti_numerator(const BettiTable& table) {
  std::vector<std::int64_t> out;
  for (const auto& [key, r] : table.entries()) {
    if (key.second < 0) throw Error(ErrorCode::InvalidArgument, "negative internal degree");
    const auto j = static_cast<std::size_t>(key.second);
    if (out.size() <= j) out.resize(j + 1, 0);
    out[j] += (key.first % 2 == 0 ? r : -r);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string macaulay_diagram(const BettiTable& table) {
  const int ncols = table.length() + 1;
  const int nrows = table.max_row() + 1;
  std::ostringstream out;
  auto cell = [&](const std::string& v) { out << std::setw(6) << v; };
  out << "; " << std::setw(6) << "total:" << ' ';
  for (auto v : table.totals()) cell(std::to_string(v));
  out << " \n; " << std::string(static_cast<std::size_t>(6 * ncols + 8), '-') << '\n';
  for (int row = 0; row < nrows; ++row) {
    out << "; " << std::setw(6) << (std::to_string(row) + ":") << ' ';
    for (int i = 0; i < ncols; ++i) {
      const auto v = table(i, row + i);
      cell(v == 0 ? "-" : std::to_string(v));
    }
    out << " \n";
  }
  return out.str();
}

}  // namespace gorconf
