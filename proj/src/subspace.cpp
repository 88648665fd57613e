#include <algorithm>

#include "gorconf/configurations.hpp"
#include "gorconf/oracle.hpp"

namespace gorconf {

SubspaceReport check_subspace_property(const HVector& h) {
  const SIParams p = si_params(h);
  SubspaceReport r;
  r.c = static_cast<int>(std::max<std::int64_t>(p.c, 2));
  r.s = static_cast<int>(p.s);
  r.t = static_cast<int>(p.t);
  const int c = r.c, s = r.s, t = r.t;
  // (c-1)/2 rounded down; c >= 2 here
  r.g_label = Label{LabelKind::L, s - t + (c - 1) / 2};

  r.colon_identity =
      colon_by_label(build_g_max(c - 1, s + 1, t), r.g_label).components() == build_g_max(c - 1, s, t).components();

  const Configuration j = build_gorenstein(h);
  const auto labels = j.universe().labels();
  const auto nvars = labels.size();
  const auto gvar = static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), r.g_label) - labels.begin());
  const MonomialIdeal ij = oracle::intersect_primes(nvars, component_variables(j));
  const MonomialIdeal icolon = oracle::colon(ij, gvar);

  r.regularity = s + 1;
  const int cutoff = s + 1;
  const auto hf_j = oracle::standard_monomials(ij, cutoff);
  const auto hf_colon = oracle::standard_monomials(icolon, cutoff);
  for (int d = 0; d <= cutoff; ++d) {
    if (hf_j[static_cast<std::size_t>(d)] != hf_colon[static_cast<std::size_t>(d)]) {
      r.initial_degree = d;
      break;
    }
  }
  r.bound_holds = r.initial_degree >= 0 && 2 * r.initial_degree >= r.regularity - 1;
  r.matches_s_minus_t = r.initial_degree == s - t;
  return r;
}

}  // namespace gorconf
