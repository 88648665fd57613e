#pragma once

// Shared enumerators and brute-force checks used by the module tests and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "gorconf/configurations.hpp"
#include "gorconf/sequences.hpp"

namespace testing_support {

using gorconf::HVector;

// Symmetric sequences (1, h_1, ..., h_1, 1) with h_1 <= max_h1, socle degree 1..max_s,
// entries <= max_entry, kept when is_si_sequence accepts them.
inline std::vector<HVector> si_sweep(int max_h1, int max_s, int max_entry) {
  std::vector<HVector> out;
  for (int s = 1; s <= max_s; ++s) {
    const int half = s / 2;
    std::vector<std::int64_t> first(static_cast<std::size_t>(half + 1), 0);
    first[0] = 1;
    std::function<void(int)> rec = [&](int i) {
      if (i > half) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(s + 1));
        for (int k = 0; k <= s; ++k) e[static_cast<std::size_t>(k)] = first[static_cast<std::size_t>(std::min(k, s - k))];
        HVector h(e);
        if (h.last_index() == s && h[1] <= max_h1 && gorconf::is_si_sequence(h)) out.push_back(h);
        return;
      }
      const int cap = i == 1 ? max_h1 : max_entry;
      for (int v = 1; v <= cap; ++v) {
        first[static_cast<std::size_t>(i)] = v;
        rec(i + 1);
      }
    };
    if (half == 0) {
      out.push_back(HVector{1, 1});
    } else {
      rec(1);
    }
  }
  return out;
}

// All O-sequences with h_1 <= c, last index <= support, positive entries up to the last.
inline std::vector<HVector> o_sequences(int c, int support) {
  std::vector<HVector> out;
  std::vector<std::int64_t> cur{1};
  std::function<void()> rec = [&] {
    HVector h(cur);
    if (!gorconf::is_o_sequence(h)) return;
    out.push_back(h);
    const auto d = static_cast<int>(cur.size()) - 1;
    if (d >= support) return;
    const std::int64_t cap = d == 0 ? c : gorconf::binomial(c - 1 + d + 1, d + 1);
    for (std::int64_t v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

inline std::set<gorconf::PrimeComponent> component_set(const gorconf::Configuration& x) {
  return {x.components().begin(), x.components().end()};
}

// Definition-level stick-figure test: every triple of distinct components has a union of
// size other than codim + 1.
inline bool stick_figure_by_triples(const gorconf::Configuration& x) {
  const auto& comps = x.components();
  const std::size_t c = static_cast<std::size_t>(x.codim());
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b)
      for (std::size_t d = b + 1; d < comps.size(); ++d) {
        std::set<gorconf::Label> u(comps[a].begin(), comps[a].end());
        u.insert(comps[b].begin(), comps[b].end());
        u.insert(comps[d].begin(), comps[d].end());
        if (u.size() == c + 1) return false;
      }
  return true;
}

}  // namespace testing_support
