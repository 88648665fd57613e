#include "gorconf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gorconf/betti.hpp"
#include "gorconf/configurations.hpp"
#include "gorconf/hilbert.hpp"
#include "gorconf/monomials.hpp"
#include "gorconf/oracle.hpp"
#include "gorconf/sequences.hpp"
#include "gorconf/serialize.hpp"
#include "gorconf/simplicial.hpp"

namespace gorconf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HVector hvector_arg(const std::string& text) {
  try {
    return parse_hvector(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> degrees_arg(const std::string& text) {
  const HVector h = hvector_arg(text);
  std::vector<int> out;
  for (auto v : h.entries()) out.push_back(static_cast<int>(v));
  return out;
}

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

bool is_complex_json(const json& j) { return j.is_object() && j.contains("facets"); }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json hvector_json(const HVector& h) { return to_json(h); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced arithmetically Gorenstein configurations: builders and verifiers", "gorconf"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string h_text, file, ci_text;
  int c = 0, s = 0, t = 0;
  bool as_json = false;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    return sub;
  };
  auto need_h = [&](CLI::App* sub) { sub->add_option("H", h_text, "h-vector, e.g. 1,4,10,14,10,4,1")->required(); };
  auto need_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "JSON file ('-' for stdin)")->required(); };

  // si
  auto* si = app.add_subcommand("si", "SI-sequence checks")->require_subcommand(1);
  auto* si_validate = leaf(si, "validate", "check the SI-sequence condition");
  need_h(si_validate);
  si_validate->callback([&] {
    action = [&] {
      const HVector h = hvector_arg(h_text);
      const auto why = si_failure_reason(h);
      if (!why.empty()) {
        err << "not an SI-sequence: " << why << '\n';
        return kExitDomainError;
      }
      out << "SI-sequence: " << h.to_string() << '\n';
      return kExitOk;
    };
  });
  auto* si_params_cmd = leaf(si, "params", "print c, s, t and g");
  need_h(si_params_cmd);
  si_params_cmd->callback([&] {
    action = [&] {
      const SIParams p = si_params(hvector_arg(h_text));
      print_json(out, json{{"c", p.c}, {"s", p.s}, {"t", p.t}, {"g", hvector_json(p.g)}});
      return kExitOk;
    };
  });

  // lex
  auto* lex = app.add_subcommand("lex", "lex-segment ideals")->require_subcommand(1);
  auto* lex_ideal = leaf(lex, "ideal", "minimal generators of the lex-segment ideal");
  need_h(lex_ideal);
  lex_ideal->add_option("-c", c, "number of variables")->required();
  lex_ideal->callback([&] {
    action = [&] {
      out << render(lex_segment_ideal(hvector_arg(h_text), static_cast<std::size_t>(c))) << '\n';
      return kExitOk;
    };
  });
  auto* lex_decompose = leaf(lex, "decompose", "split J as sum z1^j I_j");
  need_h(lex_decompose);
  lex_decompose->add_option("-c", c, "number of variables")->required();
  lex_decompose->callback([&] {
    action = [&] {
      const HVector h = hvector_arg(h_text);
      const Decomposition d = decompose(lex_segment_ideal(h, static_cast<std::size_t>(c)));
      json parts = json::array();
      for (std::size_t j = 0; j < d.parts.size(); ++j) {
        // the parts live in z2..zc; render them with shifted indices
        std::vector<Monomial> gens;
        for (const auto& g : d.parts[j].generators()) {
          std::vector<int> e{0};
          e.insert(e.end(), g.exps.begin(), g.exps.end());
          gens.emplace_back(std::move(e));
        }
        parts.push_back({{"ideal", render(MonomialIdeal(static_cast<std::size_t>(c), std::move(gens)))},
                         {"h", hvector_json(d.hparts[j])}});
      }
      print_json(out, json{{"alpha", d.alpha},
                           {"parts", parts},
                           {"hvector_check", decomposition_hvector_check(h, d)},
                           {"invariants", decomposition_invariants_hold(h, d)}});
      return kExitOk;
    };
  });

  // loim
  auto* loim_cmd = app.add_subcommand("loim", "lexicographic order ideal of monomials");
  need_h(loim_cmd);
  loim_cmd->add_option("-c", c, "number of variables")->required();
  loim_cmd->callback([&] {
    action = [&] {
      print_json(out, to_json(loim(hvector_arg(h_text), static_cast<std::size_t>(c))));
      return kExitOk;
    };
  });

  // build
  auto* build = app.add_subcommand("build", "build configurations")->require_subcommand(1);
  auto* build_z_cmd = leaf(build, "z", "ACM configuration of an O-sequence");
  need_h(build_z_cmd);
  build_z_cmd->add_option("-c", c, "codimension")->required();
  build_z_cmd->add_option("-t", t, "parameter t")->required();
  build_z_cmd->callback([&] {
    action = [&] {
      print_json(out, to_json(build_z(hvector_arg(h_text), c, t)));
      return kExitOk;
    };
  });
  auto* build_zmax = leaf(build, "zmax", "maximal ACM configuration");
  build_zmax->add_option("-c", c, "codimension")->required();
  build_zmax->add_option("-t", t, "parameter t")->required();
  build_zmax->callback([&] {
    action = [&] {
      print_json(out, to_json(build_z_max(c, t)));
      return kExitOk;
    };
  });
  auto* build_gmax = leaf(build, "gmax", "maximal Gorenstein configuration");
  build_gmax->add_option("-c", c, "codimension")->required();
  build_gmax->add_option("-s", s, "socle degree")->required();
  build_gmax->add_option("-t", t, "parameter t")->required();
  build_gmax->callback([&] {
    action = [&] {
      print_json(out, to_json(build_g_max(c, s, t)));
      return kExitOk;
    };
  });
  auto* build_gprime = leaf(build, "gprime", "maximal Gorenstein configuration with the odd-c renaming");
  build_gprime->add_option("-c", c, "codimension")->required();
  build_gprime->add_option("-s", s, "socle degree")->required();
  build_gprime->add_option("-t", t, "parameter t")->required();
  build_gprime->callback([&] {
    action = [&] {
      print_json(out, to_json(relabel_g_max(c, s, t)));
      return kExitOk;
    };
  });
  auto* build_gor = leaf(build, "gorenstein", "Gorenstein configuration with h-vector H");
  need_h(build_gor);
  build_gor->callback([&] {
    action = [&] {
      print_json(out, to_json(build_gorenstein(hvector_arg(h_text))));
      return kExitOk;
    };
  });
  auto* build_poly = leaf(build, "polytope", "shellable ball and its boundary sphere for an SI-sequence");
  need_h(build_poly);
  build_poly->callback([&] {
    action = [&] {
      const Ball ball = billera_lee_polytope_ball(hvector_arg(h_text));
      const SimplicialComplex boundary = boundary_complex(ball.complex);
      json order = json::array();
      for (auto f : ball.order) order.push_back(vertices_of(f));
      json j = to_json(boundary);
      j["f_vector"] = faces(boundary);
      j["h_vector"] = hvector_json(f_to_h(faces(boundary)));
      j["ball"] = {{"n", ball.complex.vertex_count()}, {"facets", order}};
      print_json(out, j);
      return kExitOk;
    };
  });

  // hvector
  auto* hvec = app.add_subcommand("hvector", "h-vector of a configuration or complex file");
  need_file(hvec);
  hvec->callback([&] {
    action = [&] {
      const json j = read_json(file);
      const HVector h = is_complex_json(j) ? f_to_h(faces(complex_from_json(j))) : hvector_of(configuration_from_json(j));
      out << h.to_string() << '\n';
      return kExitOk;
    };
  });

  // liaison
  auto* liaison = app.add_subcommand("liaison", "h-vector table of a link inside a complete intersection");
  std::string g_text;
  liaison->add_option("--ci", ci_text, "complete-intersection degrees, e.g. 3,3,4")->required();
  liaison->add_option("--g", g_text, "h-vector of one side of the link")->required();
  liaison->callback([&] {
    action = [&] {
      out << liaison_table(degrees_arg(ci_text), hvector_arg(g_text));
      return kExitOk;
    };
  });

  // betti
  auto* betti = app.add_subcommand("betti", "graded Betti tables")->require_subcommand(1);
  betti->add_flag("--json", as_json, "print JSON instead of a diagram");
  auto emit = [&](const BettiTable& b) {
    if (as_json)
      print_json(out, to_json(b));
    else
      out << macaulay_diagram(b);
    return kExitOk;
  };
  auto* betti_lex = leaf(betti, "lex", "lex-segment ideal Betti table");
  need_h(betti_lex);
  betti_lex->add_option("-c", c, "number of variables")->required();
  betti_lex->add_flag("--json", as_json, "print JSON instead of a diagram");
  betti_lex->callback([&] { action = [&] { return emit(lex_betti(hvector_arg(h_text), c)); }; });
  auto* betti_gor = leaf(betti, "gorenstein", "maximal Betti table for an SI-sequence");
  need_h(betti_gor);
  betti_gor->add_flag("--json", as_json, "print JSON instead of a diagram");
  betti_gor->callback([&] { action = [&] { return emit(gorenstein_max_betti(hvector_arg(h_text))); }; });
  auto* betti_closed = leaf(betti, "closed", "closed-form maximal resolution");
  betti_closed->add_option("-c", c, "codimension")->required();
  betti_closed->add_option("-s", s, "socle degree")->required();
  betti_closed->add_option("-t", t, "parameter t")->required();
  betti_closed->add_flag("--json", as_json, "print JSON instead of a diagram");
  betti_closed->callback([&] { action = [&] { return emit(closed_form_max_resolution(c, s, t)); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "independent checks")->require_subcommand(1);
  auto* v_stick = leaf(verify, "stickfigure", "generalized stick figure test");
  need_file(v_stick);
  v_stick->callback([&] {
    action = [&] {
      const bool ok = is_generalized_stick_figure(configuration_from_json(read_json(file)));
      out << "generalized stick figure: " << (ok ? "yes" : "no") << '\n';
      return ok ? kExitOk : kExitDomainError;
    };
  });
  auto* v_oracle = leaf(verify, "oracle", "recompute h-vector and Betti table by brute force");
  need_file(v_oracle);
  v_oracle->callback([&] {
    action = [&] {
      const Configuration x = configuration_from_json(read_json(file));
      const HVector by_monomials = hvector_by_standard_monomials(x);
      const HVector by_faces = hvector_by_faces(x);
      const auto n = x.universe().size();
      const MonomialIdeal ideal = oracle::intersect_primes(n, component_variables(x));
      const bool sr_match = x.empty() || oracle::equals(ideal, stanley_reisner_ideal(complex_of(x)));
      json report{{"hvector_standard_monomials", hvector_json(by_monomials)},
                  {"hvector_faces", hvector_json(by_faces)},
                  {"agree", by_monomials == by_faces},
                  {"stanley_reisner_match", sr_match},
                  {"betti", nullptr}};
      if (n <= oracle::kMaxKoszulVariables) report["betti"] = to_json(oracle::koszul_betti(ideal));
      print_json(out, report);
      return (by_monomials == by_faces && sr_match) ? kExitOk : kExitDomainError;
    };
  });
  auto* v_sub = leaf(verify, "subspace", "subspace property of the Gorenstein configuration of H");
  need_h(v_sub);
  v_sub->callback([&] {
    action = [&] {
      const SubspaceReport r = check_subspace_property(hvector_arg(h_text));
      print_json(out, json{{"c", r.c},
                           {"s", r.s},
                           {"t", r.t},
                           {"g", r.g_label.to_string()},
                           {"colon_identity", r.colon_identity},
                           {"initial_degree", r.initial_degree},
                           {"regularity", r.regularity},
                           {"bound_holds", r.bound_holds},
                           {"equals_s_minus_t", r.matches_s_minus_t},
                           {"passed", r.passed()}});
      return r.passed() ? kExitOk : kExitDomainError;
    };
  });
  auto* v_shell = leaf(verify, "shelling", "check that the facet order of a complex file is a shelling");
  need_file(v_shell);
  v_shell->callback([&] {
    action = [&] {
      json j = read_json(file);
      if (j.is_object() && j.contains("ball")) j = j["ball"];
      std::vector<VertexSet> order;
      for (const auto& f : j.at("facets")) order.push_back(vertex_set(f.get<std::vector<int>>()));
      const SimplicialComplex delta = complex_from_json(j);
      if (delta.facets().size() != order.size())
        throw Error(ErrorCode::InvalidArgument, "facet list has repeated or non-maximal faces");
      const bool ok = is_shelling(delta, order);
      out << "shelling: " << (ok ? "yes" : "no") << '\n';
      return ok ? kExitOk : kExitDomainError;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "export files")->require_subcommand(1);
  auto* exp_m2 = leaf(exp, "m2", "computer-algebra text for a configuration file");
  need_file(exp_m2);
  exp_m2->callback([&] {
    action = [&] {
      out << export_m2(configuration_from_json(read_json(file)));
      return kExitOk;
    };
  });
  auto* exp_json = leaf(exp, "json", "canonical JSON for a configuration or complex file");
  need_file(exp_json);
  exp_json->callback([&] {
    action = [&] {
      const json j = read_json(file);
      print_json(out, is_complex_json(j) ? to_json(complex_from_json(j)) : to_json(configuration_from_json(j)));
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    return action ? action() : kExitUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const json::exception& e) {
    err << "usage error: malformed input: " << e.what() << '\n';
    return kExitUsageError;
  }
}

}  // namespace gorconf::cli
