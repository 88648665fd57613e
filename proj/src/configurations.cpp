#include "gorconf/configurations.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gorconf {

namespace {

int floordiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Slot {
  LabelKind kind;
  int lo;
  int hi;
};

std::vector<Slot> alternating(LabelKind first, int count, int hi) {
  std::vector<Slot> slots;
  LabelKind k = first;
  for (int i = 0; i < count; ++i) {
    slots.push_back({k, 0, hi});
    k = (k == LabelKind::M) ? LabelKind::L : LabelKind::M;
  }
  return slots;
}

// Consecutive indices: M_i followed by L_j needs j >= i; every other step needs a strict increase.
void enumerate_pattern(const std::vector<Slot>& slots, std::size_t pos, std::vector<Label>& cur,
                       std::vector<PrimeComponent>& out) {
  if (pos == slots.size()) {
    out.push_back(cur);
    return;
  }
  const Slot& slot = slots[pos];
  int lo = slot.lo;
  if (pos > 0) {
    const Label& prev = cur.back();
    const bool weak = prev.kind == LabelKind::M && slot.kind == LabelKind::L;
    lo = std::max(lo, weak ? prev.index : prev.index + 1);
  }
  for (int i = lo; i <= slot.hi; ++i) {
    cur.push_back({slot.kind, i});
    enumerate_pattern(slots, pos + 1, cur, out);
    cur.pop_back();
  }
}

void add_pattern(const std::vector<Slot>& slots, std::vector<PrimeComponent>& out) {
  std::vector<Label> cur;
  enumerate_pattern(slots, 0, cur, out);
}

void check_ct(int c, int t) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "codimension c must be >= 1");
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "t must be >= 0");
}

}  // namespace

std::string Label::to_string() const {
  return (kind == LabelKind::M ? "M" : "L") + std::to_string(index);
}

Label Label::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'M' && text[0] != 'L') ||
      !std::all_of(text.begin() + 1, text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorCode::InvalidArgument, "malformed label '" + text + "'");
  return {text[0] == 'M' ? LabelKind::M : LabelKind::L, std::stoi(text.substr(1))};
}

Label Label::from_u(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "u-index must be >= 1");
  return k % 2 == 1 ? Label{LabelKind::M, (k - 1) / 2} : Label{LabelKind::L, (k - 2) / 2};
}

std::vector<Label> Universe::labels() const {
  std::vector<Label> out;
  for (int i = 0; i < m_count; ++i) out.push_back({LabelKind::M, i});
  for (int i = 0; i < l_count; ++i) out.push_back({LabelKind::L, i});
  std::sort(out.begin(), out.end());
  return out;
}

Universe acm_universe(int c, int t) {
  return {std::max(0, t + floordiv(c - 1, 2) + 1), std::max(0, t + floordiv(c - 2, 2) + 1)};
}

Universe gorenstein_universe(int c, int s, int t) {
  return {std::max(0, t + floordiv(c - 1, 2) + 1), std::max(0, s - t + floordiv(c - 2, 2) + 1)};
}

PrimeComponent make_component(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(ErrorCode::InvalidArgument, "component has a repeated label");
  return labels;
}

std::string to_string(const PrimeComponent& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].to_string();
  }
  return out + ")";
}

Configuration::Configuration(ConfigParams params, Universe universe, std::vector<PrimeComponent> components)
    : params_(params), universe_(universe) {
  for (auto& p : components) {
    p = make_component(std::move(p));
    for (const auto& x : p)
      if (!universe_.contains(x))
        throw Error(ErrorCode::ContextMismatch, "label " + x.to_string() + " is outside the universe");
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  for (const auto& p : components)
    if (p.size() != components.front().size())
      throw Error(ErrorCode::InvalidArgument, "components must share one codimension");
  components_ = std::move(components);
}

int Configuration::codim() const noexcept {
  return components_.empty() ? 0 : static_cast<int>(components_.front().size());
}

bool Configuration::contains(const PrimeComponent& p) const {
  return std::binary_search(components_.begin(), components_.end(), p);
}

std::vector<int> beta_bar(const Monomial& m, int c, int t) {
  check_ct(c, t);
  for (std::size_t v = static_cast<std::size_t>(c); v < m.nvars(); ++v)
    if (m.exps[v] != 0) throw Error(ErrorCode::InvalidArgument, "monomial uses a variable beyond y_c");
  const int k = m.degree();
  if (k > t)
    throw Error(ErrorCode::DegreeExceedsT,
                "monomial degree " + std::to_string(k) + " exceeds t = " + std::to_string(t));
  std::vector<int> e;
  for (std::size_t v = 0; v < m.nvars(); ++v)
    for (int r = 0; r < m.exps[v]; ++r) e.push_back(static_cast<int>(v) + 1);
  std::vector<int> out;
  for (int i = 1; i <= 2 * (t - k); ++i) out.push_back(i);
  for (int j = 1; j <= k; ++j) {
    const int base = e[j - 1] + 2 * (j + t - k);
    out.push_back(base - 1);
    out.push_back(base);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeComponent prime_component(const Monomial& m, int c, int t) {
  const auto bb = beta_bar(m, c, t);
  std::vector<Label> labels;
  for (int k = 1; k <= c + 2 * t; ++k)
    if (!std::binary_search(bb.begin(), bb.end(), k)) labels.push_back(Label::from_u(k));
  return make_component(std::move(labels));
}

Configuration build_z(const HVector& h, int c, int t) {
  check_ct(c, t);
  if (h.last_index() > t)
    throw Error(ErrorCode::DegreeExceedsT, "h has entries beyond degree t = " + std::to_string(t));
  std::vector<PrimeComponent> comps;
  for (const auto& m : loim(h, static_cast<std::size_t>(c))) comps.push_back(prime_component(m, c, t));
  return Configuration({c, std::nullopt, t}, acm_universe(c, t), std::move(comps));
}

Configuration build_z_max(int c, int t) {
  check_ct(c, t);
  std::vector<PrimeComponent> comps;
  add_pattern(alternating(LabelKind::M, c, t + floordiv(c - 1, 2)), comps);
  return Configuration({c, std::nullopt, t}, acm_universe(c, t), std::move(comps));
}

Configuration build_g_max(int c, int s, int t) {
  check_ct(c, t);
  if (s < 2 * t)
    throw Error(ErrorCode::SocleTooSmall, "need s >= 2t, got s = " + std::to_string(s) + ", t = " + std::to_string(t));
  std::vector<PrimeComponent> comps;
  if (c % 2 == 0) {
    const int hi = t + (c - 2) / 2;
    add_pattern(alternating(LabelKind::M, c, hi), comps);
    add_pattern(alternating(LabelKind::L, c, hi), comps);
    auto slots = alternating(LabelKind::M, c - 1, hi);
    slots.push_back({LabelKind::L, t + c / 2, s - t + (c - 2) / 2});
    add_pattern(slots, comps);
  } else {
    add_pattern(alternating(LabelKind::M, c, t + (c - 1) / 2), comps);
    add_pattern(alternating(LabelKind::L, c, t + (c - 3) / 2), comps);
    auto slots = alternating(LabelKind::M, c - 1, t + (c - 3) / 2);
    slots.push_back({LabelKind::L, t + (c - 1) / 2, s - t + (c - 3) / 2});
    add_pattern(slots, comps);
  }
  return Configuration({c, s, t}, gorenstein_universe(c, s, t), std::move(comps));
}

Configuration relabel_g_max(int c, int s, int t) {
  Configuration g = build_g_max(c, s, t);
  if (c % 2 == 0) return g;
  const Label from{LabelKind::M, t + (c - 1) / 2};
  const Label to{LabelKind::L, s - t + (c - 1) / 2};
  std::vector<PrimeComponent> comps = g.components();
  for (auto& p : comps)
    for (auto& x : p)
      if (x == from) x = to;
  return Configuration({c, s, t}, gorenstein_universe(c - 1, s + 1, t), std::move(comps));
}

Configuration build_gorenstein(const HVector& h) {
  const SIParams p = si_params(h);
  const int c = static_cast<int>(std::max<std::int64_t>(p.c, 2));
  const int s = static_cast<int>(p.s);
  const int t = static_cast<int>(p.t);
  const Configuration z = build_z(p.g, c - 1, t);
  const Universe universe = gorenstein_universe(c - 1, s + 1, t);
  const auto labels = universe.labels();

  std::set<PrimeComponent> found;
  for (const auto& p1 : z.components()) {
    for (const auto& extra : labels) {
      if (std::binary_search(p1.begin(), p1.end(), extra)) continue;
      PrimeComponent cand = p1;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), extra), extra);
      // Z-components inside cand are exactly the (c-1)-subsets of cand that lie in Z.
      int inside = 0;
      for (std::size_t drop = 0; drop < cand.size(); ++drop) {
        PrimeComponent sub = cand;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        if (z.contains(sub)) ++inside;
      }
      if (inside == 1) found.insert(std::move(cand));
    }
  }
  return Configuration({c, s, t}, universe, std::vector<PrimeComponent>(found.begin(), found.end()));
}

Configuration residual(const Configuration& g, const Configuration& z) {
  std::vector<PrimeComponent> rest;
  for (const auto& p : z.components())
    if (!g.contains(p))
      throw Error(ErrorCode::NotSubconfiguration, "component " + to_string(p) + " is not a component of G");
  for (const auto& p : g.components())
    if (!z.contains(p)) rest.push_back(p);
  return Configuration(g.params(), g.universe(), std::move(rest));
}

bool is_generalized_stick_figure(const Configuration& x) {
  // Three components span only codim+1 labels iff some (codim+1)-set contains three of them.
  std::set<Label> all;
  for (const auto& p : x.components()) all.insert(p.begin(), p.end());
  std::map<PrimeComponent, int> hits;
  for (const auto& p : x.components()) {
    for (const auto& extra : all) {
      if (std::binary_search(p.begin(), p.end(), extra)) continue;
      PrimeComponent cand = p;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), extra), extra);
      if (++hits[cand] >= 3) return false;
    }
  }
  return true;
}

Configuration colon_by_label(const Configuration& x, const Label& label) {
  std::vector<PrimeComponent> kept;
  for (const auto& p : x.components())
    if (!std::binary_search(p.begin(), p.end(), label)) kept.push_back(p);
  return Configuration(x.params(), x.universe(), std::move(kept));
}

Configuration tau(const Configuration& x) {
  auto shift = [](Label l) {
    return l.kind == LabelKind::M ? Label{LabelKind::L, l.index} : Label{LabelKind::M, l.index + 1};
  };
  std::vector<PrimeComponent> comps;
  for (const auto& p : x.components()) {
    PrimeComponent q;
    for (const auto& l : p) q.push_back(shift(l));
    comps.push_back(std::move(q));
  }
  Universe u{x.universe().l_count + 1, x.universe().m_count};
  return Configuration(x.params(), u, std::move(comps));
}

std::vector<std::vector<int>> component_variables(const Configuration& x) {
  const auto labels = x.universe().labels();
  std::vector<std::vector<int>> out;
  for (const auto& p : x.components()) {
    std::vector<int> vars;
    for (const auto& l : p)
      vars.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
    out.push_back(std::move(vars));
  }
  return out;
}

}  // namespace gorconf
