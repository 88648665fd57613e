#include "gorconf/monomials.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace gorconf {

int Monomial::degree() const noexcept { return std::accumulate(exps.begin(), exps.end(), 0); }

Monomial variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps.at(index) = 1;
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
  return r;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  return false;
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.exps.size(); i-- > 0;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

namespace {

void fill_monomials(std::size_t pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == cur.exps.size()) {
    cur.exps[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exps[pos] = e;
    fill_monomials(pos + 1, remaining - e, cur, out);
  }
  cur.exps[pos] = 0;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    return da != db ? da < db : lex_greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars);
  fill_monomials(0, degree, cur, out);
  return out;
}

std::string render(const Monomial& m, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << var << (i + 1);
    if (m.exps[i] > 1) out << '^' << m.exps[i];
  }
  if (first) out << '1';
  return out.str();
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.nvars() != nvars_) throw Error(ErrorCode::ContextMismatch, "generator has wrong variable count");
  minimalize(gens_);
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_unit() const noexcept { return !gens_.empty() && gens_.front().degree() == 0; }

int MonomialIdeal::initial_degree() const noexcept { return gens_.empty() ? -1 : gens_.front().degree(); }

int MonomialIdeal::max_generator_degree() const noexcept {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::is_artinian() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    bool has_power = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
      return g.degree() == g.exps[i];
    });
    if (!has_power) return false;
  }
  return true;
}

std::string render(const MonomialIdeal& ideal, char var) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out << ", ";
    out << render(ideal.generators()[i], var);
  }
  out << ')';
  return out.str();
}

HVector artinian_hvector(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw Error(ErrorCode::InvalidArgument, "ideal is not Artinian");
  std::vector<HVector::value_type> h;
  for (int d = 0;; ++d) {
    auto mons = monomials_of_degree(ideal.nvars(), d);
    auto count = std::count_if(mons.begin(), mons.end(), [&](const Monomial& m) { return !ideal.contains(m); });
    if (count == 0) break;
    h.push_back(count);
  }
  return HVector(std::move(h));
}

bool is_lex_segment(const MonomialIdeal& ideal) {
  const int top = ideal.max_generator_degree() + 1;
  for (int d = 0; d <= top; ++d) {
    bool outside_seen = false;
    for (const auto& m : monomials_of_degree(ideal.nvars(), d)) {
      const bool in = ideal.contains(m);
      if (in && outside_seen) return false;
      if (!in) outside_seen = true;
    }
  }
  return true;
}

MonomialIdeal lex_segment_ideal(const HVector& h, std::size_t c) {
  if (h.is_zero() || !is_o_sequence(h))
    throw Error(ErrorCode::NotOSequence, "not an O-sequence: " + h.to_string());
  if (h[1] > static_cast<std::int64_t>(c))
    throw Error(ErrorCode::CodimTooSmall,
                "h_1 = " + std::to_string(h[1]) + " exceeds variable count " + std::to_string(c));
  const std::int64_t v = h.last_index();
  std::set<Monomial> previous;  // J in degree d-1
  std::vector<Monomial> gens;
  for (std::int64_t d = 1; d <= v + 1; ++d) {
    auto mons = monomials_of_degree(c, static_cast<int>(d));
    if (h[d] > static_cast<std::int64_t>(mons.size()))
      throw Error(ErrorCode::CodimTooSmall, "h_" + std::to_string(d) + " exceeds the number of monomials");
    const std::size_t in_count = mons.size() - static_cast<std::size_t>(h[d]);
    std::set<Monomial> current(mons.begin(), mons.begin() + static_cast<std::ptrdiff_t>(in_count));
    for (const auto& m : previous) {
      for (std::size_t k = 0; k < c; ++k) {
        Monomial up = m;
        ++up.exps[k];
        if (!current.count(up))
          throw Error(ErrorCode::NotOSequence, "lex segments fail to form an ideal for " + h.to_string());
      }
    }
    for (const auto& m : current) {
      bool multiple = false;
      for (std::size_t k = 0; k < c && !multiple; ++k) {
        if (m.exps[k] == 0) continue;
        Monomial down = m;
        --down.exps[k];
        multiple = previous.count(down) > 0;
      }
      if (!multiple) gens.push_back(m);
    }
    previous = std::move(current);
  }
  return MonomialIdeal(c, std::move(gens));
}

Decomposition decompose(const MonomialIdeal& lex_ideal) {
  if (lex_ideal.nvars() == 0 || !lex_ideal.is_artinian() || !is_lex_segment(lex_ideal))
    throw Error(ErrorCode::NotLexSegment, "decompose needs an Artinian lex-segment ideal, got " + render(lex_ideal));
  const std::size_t c = lex_ideal.nvars();
  Decomposition d;
  d.alpha = lex_ideal.initial_degree();
  for (int j = 0; j < d.alpha; ++j) {
    std::vector<Monomial> gens;
    for (const auto& g : lex_ideal.generators()) {
      if (g.exps[0] > j) continue;
      gens.emplace_back(std::vector<int>(g.exps.begin() + 1, g.exps.end()));
    }
    MonomialIdeal part(c - 1, std::move(gens));
    if (!is_lex_segment(part))
      throw Error(ErrorCode::NotLexSegment, "part I_" + std::to_string(j) + " is not a lex-segment ideal");
    d.hparts.push_back(artinian_hvector(part));
    d.parts.push_back(std::move(part));
  }
  return d;
}

bool decomposition_hvector_check(const HVector& h, const Decomposition& d) {
  std::int64_t top = h.last_index();
  for (std::size_t j = 0; j < d.hparts.size(); ++j)
    top = std::max<std::int64_t>(top, d.hparts[j].last_index() + static_cast<std::int64_t>(j));
  for (std::int64_t s = 0; s <= top; ++s) {
    HVector::value_type sum = 0;
    for (std::size_t j = 0; j < d.hparts.size(); ++j) sum += d.hparts[j][s - static_cast<std::int64_t>(j)];
    if (sum != h[s]) return false;
  }
  return true;
}

bool decomposition_invariants_hold(const HVector& h, const Decomposition& d) {
  const std::int64_t v = h.last_index();
  const auto n = d.parts.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (const auto& g : d.parts[j].generators())
      if (!d.parts[j + 1].contains(g)) return false;
    // a(I_j) > reg(I_{j+1}); reg of an Artinian ideal is its socle degree + 1
    const std::int64_t a = d.parts[j].is_zero() ? std::numeric_limits<std::int64_t>::max()
                                                : d.parts[j].initial_degree();
    const std::int64_t reg = d.hparts[j + 1].last_index() + 1;
    if (a <= reg) return false;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (d.hparts[j].last_index() > v - static_cast<std::int64_t>(j)) return false;
  return true;
}

Monomial phi(const Monomial& m) { return Monomial(std::vector<int>(m.exps.rbegin(), m.exps.rend())); }

std::vector<Monomial> loim(const HVector& h, std::size_t c) {
  if (h.is_zero() || !is_o_sequence(h))
    throw Error(ErrorCode::NotOSequence, "not an O-sequence: " + h.to_string());
  if (h[1] > static_cast<std::int64_t>(c))
    throw Error(ErrorCode::CodimTooSmall,
                "h_1 = " + std::to_string(h[1]) + " exceeds variable count " + std::to_string(c));
  std::vector<Monomial> out;
  for (std::int64_t d = 0; d <= h.last_index(); ++d) {
    auto mons = monomials_of_degree(c, static_cast<int>(d));
    std::sort(mons.begin(), mons.end(), revlex_less);
    if (h[d] > static_cast<std::int64_t>(mons.size()))
      throw Error(ErrorCode::CodimTooSmall, "h_" + std::to_string(d) + " exceeds the number of monomials");
    out.insert(out.end(), mons.begin(), mons.begin() + static_cast<std::ptrdiff_t>(h[d]));
  }
  std::sort(out.begin(), out.end(), revlex_less);
  return out;
}

}  // namespace gorconf
