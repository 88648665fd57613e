// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "gorconf/betti.hpp"
#include "gorconf/cli.hpp"
#include "gorconf/configurations.hpp"
#include "gorconf/hilbert.hpp"
#include "gorconf/oracle.hpp"
#include "gorconf/serialize.hpp"
#include "gorconf/simplicial.hpp"
#include "support.hpp"

using namespace gorconf;
using testing_support::component_set;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "gorconf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = rc;
  return out.str();
}

std::set<std::string> component_names(const Configuration& x) {
  std::set<std::string> out;
  for (const auto& p : x.components()) out.insert(to_string(p));
  return out;
}

MonomialIdeal realize(const Configuration& x) {
  return oracle::intersect_primes(x.universe().size(), component_variables(x));
}

int codim_of(const HVector& h) { return static_cast<int>(std::max<std::int64_t>(si_params(h).c, 2)); }

const std::vector<HVector>& sweep() {
  static const auto s = testing_support::si_sweep(4, 6, 20);
  return s;
}

Outcome golden_components() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::string>, std::set<std::string>>> cases = {
      {{"build", "z", "1,2", "-c", "2", "-t", "1"}, {"(M0,L0)", "(M0,L1)", "(M1,L1)"}},
      {{"build", "z", "1,2", "-c", "2", "-t", "2"}, {"(M1,L1)", "(M1,L2)", "(M2,L2)"}},
      {{"build", "z", "1,2,2", "-c", "2", "-t", "2"}, {"(M0,L1)", "(M1,L1)", "(M0,L2)", "(M1,L2)", "(M2,L2)"}},
  };
  for (const auto& [args, expected] : cases) {
    const auto x = configuration_from_json(json::parse(cli_out(args)));
    if (component_names(x) != expected || x.components().size() != expected.size()) o.fail("component list differs");
  }
  if (o.ok) o.detail = "3 component lists match";
  return o;
}

Outcome golden_gorenstein() {
  Outcome o;
  const std::set<std::string> expected = {"(M0,L0,M1,L1)", "(M0,L0,M1,L2)", "(M0,L0,M2,L2)", "(M0,L1,M2,L2)",
                                          "(M1,L1,M2,L2)", "(L0,M1,L1,M2)", "(M0,L0,M1,L3)", "(M0,L0,M2,L3)",
                                          "(M0,L1,M2,L3)", "(M1,L1,M2,L3)"};
  // the reference listing is (L0,M1,L1,M2); canonical order puts L0 after M0's slot, so compare as label sets
  std::set<std::set<std::string>> want;
  for (const auto& name : expected) {
    std::set<std::string> labels;
    std::string inner = name.substr(1, name.size() - 2);
    std::stringstream ss(inner);
    for (std::string l; std::getline(ss, l, ',');) labels.insert(l);
    want.insert(labels);
  }
  const auto x = configuration_from_json(json::parse(cli_out({"build", "gmax", "-c", "4", "-s", "3", "-t", "1"})));
  std::set<std::set<std::string>> got;
  for (const auto& p : x.components()) {
    std::set<std::string> labels;
    for (const auto& l : p) labels.insert(l.to_string());
    got.insert(labels);
  }
  if (got != want || x.components().size() != 10) o.fail("component set differs");
  if (hvector_of(x) != HVector{1, 4, 4, 1}) o.fail("oracle h-vector is " + hvector_of(x).to_string());
  if (o.ok) o.detail = "10 components, h = (1,4,4,1)";
  return o;
}

Outcome construction_sweep() {
  Outcome o;
  std::size_t conjecture_violations = 0;
  for (const auto& h : sweep()) {
    const auto p = si_params(h);
    const int c = codim_of(h), s = static_cast<int>(p.s), t = static_cast<int>(p.t);
    const auto j = build_gorenstein(h);
    const auto hv = hvector_of(j);
    if (hv != h) o.fail("h-vector mismatch for " + h.to_string());
    if (!hv.is_symmetric()) o.fail("asymmetric h-vector for " + h.to_string());
    if (!is_generalized_stick_figure(build_z(p.g, c - 1, t))) o.fail("Z not a stick figure for " + h.to_string());
    if (!is_generalized_stick_figure(build_g_max(c - 1, s + 1, t))) o.fail("G_max not a stick figure for " + h.to_string());
    if (!is_generalized_stick_figure(j)) ++conjecture_violations;
  }
  if (o.ok)
    o.detail = std::to_string(sweep().size()) + " SI-sequences; constructed configurations failing the stick-figure test: " +
               std::to_string(conjecture_violations);
  return o;
}

Outcome counterexample() {
  Outcome o;
  const auto p = make_component({Label::parse("L0"), Label::parse("M0"), Label::parse("L1")});
  if (!build_gorenstein(HVector{1, 3, 5, 3, 1}).contains(p)) o.fail("(L0,M0,L1) missing from the construction");
  if (relabel_g_max(3, 4, 2).contains(p)) o.fail("(L0,M0,L1) present in the renamed maximal configuration");
  if (o.ok) o.detail = "(L0,M0,L1) separates the two configurations";
  return o;
}

Outcome betti_diagrams() {
  Outcome o;
  const std::string expected_diagram =
      "; total:      1    16    30    16     1 \n"
      "; --------------------------------------\n"
      ";     0:      1     -     -     -     - \n"
      ";     1:      -     -     -     -     - \n"
      ";     2:      -    10    15     6     - \n"
      ";     3:      -     6    15    10     - \n"
      ";     4:      -     -     -     -     - \n"
      ";     5:      -     -     -     -     1 \n";
  if (cli_out({"betti", "gorenstein", "1,4,10,10,4,1"}) != expected_diagram) o.fail("diagram differs from the expected one");
  BettiTable boij;
  for (auto [i, j, r] : std::vector<std::tuple<int, int, int>>{{0, 0, 1}, {1, 3, 10}, {2, 4, 9}, {2, 5, 9}, {3, 6, 10}, {4, 9, 1}})
    boij.add(i, j, r);
  const HVector h{1, 4, 10, 10, 4, 1};
  const auto bound = gorenstein_bound_table(h);
  bool strictly_below = false;
  for (const auto& [key, rank] : bound.entries()) strictly_below = strictly_below || boij(key.first, key.second) < rank;
  if (boij.totals() != std::vector<std::int64_t>{1, 10, 18, 10, 1}) o.fail("Boij totals wrong");
  if (!betti_upper_bound_check(boij, h, 4, true)) o.fail("Boij's table exceeds the bound");
  if (!strictly_below) o.fail("Boij's table is not strictly below the bound");
  if (o.ok) o.detail = "diagram byte-exact; Boij's table strictly below";
  return o;
}

Outcome closed_form() {
  Outcome o;
  int checked = 0;
  for (int c = 2; c <= 5; ++c)
    for (int t = 1; t <= 3; ++t) {
      for (int s : {2 * t, 2 * t + 2, 2 * t + 3}) {
        if (closed_form_max_resolution(c, s, t) != gorenstein_max_betti(maximal_si_sequence(c, s, t)))
          o.fail("mismatch at c=" + std::to_string(c) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
        ++checked;
      }
      try {
        closed_form_max_resolution(c, 2 * t + 1, t);
        o.fail("closed form accepted s = 2t+1");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SocleParity) o.fail("wrong error for s = 2t+1");
      }
    }
  if (o.ok) o.detail = std::to_string(checked) + " parameter triples agree; s = 2t+1 refused";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int acm = 0, gor = 0;
  for (int c = 1; c <= 3; ++c)
    for (const auto& h : testing_support::o_sequences(c, 3)) {
      const int t = static_cast<int>(h.last_index());
      if (oracle::koszul_betti(realize(build_z(h, c, t))) != lex_betti(h, c)) o.fail("ACM mismatch for " + h.to_string());
      ++acm;
    }
  for (const auto& h : testing_support::si_sweep(8, 8, 20)) {
    const auto p = si_params(h);
    const int c = codim_of(h);
    if (gorenstein_universe(c - 1, static_cast<int>(p.s) + 1, static_cast<int>(p.t)).size() > 8) continue;
    if (oracle::koszul_betti(realize(build_gorenstein(h))) != gorenstein_max_betti(h))
      o.fail("Gorenstein mismatch for " + h.to_string());
    ++gor;
  }
  if (o.ok) o.detail = std::to_string(acm) + " ACM and " + std::to_string(gor) + " Gorenstein tables agree";
  return o;
}

Outcome liaison() {
  Outcome o;
  if (sum_linked_hvector(HVector{1, 2, 1}, HVector{1, 2}) != HVector{1, 1}) o.fail("two-quadric example");
  const auto cvec = ci_hvector({3, 3, 4});
  if (cvec != HVector{1, 3, 6, 8, 8, 6, 3, 1}) o.fail("complete intersection h-vector");
  std::set<std::int64_t> reached;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= a; ++b) {
      const auto sum = sum_linked_hvector(cvec, HVector{1, 3, 6, a, b});
      if (sum[3] - 10 != a - b) o.fail("identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b));
      // only g = (1,3,6,a,b) that is an O-sequence is realizable
      if (is_o_sequence(HVector{1, 3, 6, a, b}) && is_si_sequence(sum)) reached.insert(sum[3]);
    }
  for (std::int64_t n = 14; n <= 18; ++n)
    if (!reached.count(n)) o.fail("n = " + std::to_string(n) + " not reached");
  for (std::int64_t n : {19, 20})
    if (reached.count(n)) o.fail("n = " + std::to_string(n) + " reached");
  if (o.ok) o.detail = "n in 14..18 reached, 19 and 20 not";
  return o;
}

Outcome polytope_pipeline() {
  Outcome o;
  int checked = 0;
  for (const auto& h : testing_support::si_sweep(4, 5, 20)) {
    const auto p = si_params(h);
    const int c = static_cast<int>(p.c), s = static_cast<int>(p.s), t = static_cast<int>(p.t);
    const auto ball = billera_lee_polytope_ball(h);
    const auto sphere = boundary_complex(ball.complex);
    if (!is_shelling(ball.complex, ball.order)) o.fail("not a shelling for " + h.to_string());
    const auto hs = f_to_h(faces(sphere));
    if (!hs.is_symmetric() || hs != h) o.fail("boundary h-vector " + hs.to_string() + " for " + h.to_string());
    std::set<std::vector<int>> primes;
    for (auto q : sr_primes(sphere)) primes.insert(q);
    std::set<std::vector<int>> expected;
    if (c == 1) {
      // codimension one: the boundary of a simplex, whose minimal primes are the single vertices
      for (int v = 0; v <= s; ++v) expected.insert({v});
    } else {
      const auto j = build_gorenstein(h);
      for (const auto& comp : j.components()) {
        std::vector<int> vs;
        for (const auto& x : comp) vs.push_back(polytope_vertex(x, c, s, t));
        std::sort(vs.begin(), vs.end());
        expected.insert(vs);
      }
    }
    if (primes != expected) o.fail("minimal primes differ for " + h.to_string());
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " SI-sequences";
  return o;
}

Outcome subspace() {
  Outcome o;
  int identities = 0;
  for (int c = 2; c <= 4; ++c)
    for (int t = 0; t <= 3; ++t)
      for (int s = 2 * t; s <= 6; ++s) {
        const Label g{LabelKind::L, s - t + (c - 1) / 2};
        const auto big = build_g_max(c - 1, s + 1, t);
        if (component_set(colon_by_label(big, g)) != component_set(build_g_max(c - 1, s, t)))
          o.fail("colon identity fails at c=" + std::to_string(c) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
        ++identities;
      }
  for (const auto& h : sweep()) {
    const auto r = check_subspace_property(h);
    if (!r.passed()) o.fail("subspace property fails for " + h.to_string());
  }
  if (o.ok) o.detail = std::to_string(identities) + " colon identities; " + std::to_string(sweep().size()) + " sweep checks";
  return o;
}

Outcome hilbert_consistency() {
  Outcome o;
  int configs = 0, ideals = 0;
  auto check = [&](const Configuration& x, const std::string& what) {
    try {
      hvector_of(x);
    } catch (const Error& e) {
      o.fail(what + ": " + e.what());
    }
    ++configs;
  };
  for (const auto& h : sweep()) {
    const auto p = si_params(h);
    const int c = codim_of(h), s = static_cast<int>(p.s), t = static_cast<int>(p.t);
    check(build_gorenstein(h), "construction " + h.to_string());
    check(build_z(p.g, c - 1, t), "ACM part of " + h.to_string());
    check(build_g_max(c - 1, s + 1, t), "maximal configuration for " + h.to_string());
  }
  std::vector<std::pair<HVector, int>> lex_inputs;
  for (const auto& h : sweep()) {
    const auto p = si_params(h);
    lex_inputs.emplace_back(p.g, codim_of(h) - 1);
  }
  for (int c = 1; c <= 4; ++c)
    for (const auto& h : testing_support::o_sequences(c, c <= 2 ? 6 : 3)) lex_inputs.emplace_back(h, c);
  for (const auto& [h, c] : lex_inputs) {
    const auto d = decompose(lex_segment_ideal(h, static_cast<std::size_t>(c)));
    if (!decomposition_hvector_check(h, d)) o.fail("decomposition check fails for " + h.to_string());
    ++ideals;
  }
  if (o.ok) o.detail = std::to_string(configs) + " configurations, " + std::to_string(ideals) + " lex-segment ideals";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria = {
      {1, "golden ACM components", 1, golden_components},
      {2, "golden maximal Gorenstein configuration", 1, golden_gorenstein},
      {3, "construction correctness sweep", 60, construction_sweep},
      {4, "counterexample fidelity", 1, counterexample},
      {5, "Betti diagrams", 1, betti_diagrams},
      {6, "closed-form agreement", 5, closed_form},
      {7, "oracle equivalence", 300, oracle_equivalence},
      {8, "liaison arithmetic", 1, liaison},
      {9, "polytope pipeline", 120, polytope_pipeline},
      {10, "subspace property", 30, subspace},
      {11, "Hilbert self-consistency", 30, hilbert_consistency},
  };
  int failures = 0;
  for (const auto& [id, name, limit, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << ", " << secs << " s): " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
