#include "gorconf/hilbert.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "gorconf/oracle.hpp"
#include "gorconf/simplicial.hpp"

namespace gorconf {

LinkData link_data(const HVector& cvec, const HVector& gvec) {
  if (!cvec.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "linking h-vector must be symmetric");
  if (!gvec.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "h-vector entries must be nonnegative");
  const std::int64_t s = cvec.last_index();
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(gvec.size()); ++i)
    if (gvec[i] > cvec[i])
      throw Error(ErrorCode::NotDominated, "g_" + std::to_string(i) + " = " + std::to_string(gvec[i]) +
                                               " exceeds c_" + std::to_string(i) + " = " + std::to_string(cvec[i]));
  std::vector<HVector::value_type> gp;
  for (std::int64_t i = 0; i <= s; ++i) {
    const auto v = cvec[s - i] - gvec[s - i];
    if (v < 0) throw Error(ErrorCode::NegativeResidual, "residual entry in degree " + std::to_string(i) + " is negative");
    gp.push_back(v);
  }
  LinkData d{cvec, gvec, HVector(std::move(gp)), HVector()};
  std::vector<HVector::value_type> diff;
  for (std::int64_t i = 0; i <= std::max<std::int64_t>(s, static_cast<std::int64_t>(gvec.size())); ++i)
    diff.push_back(gvec[i] + d.gprime[i] - cvec[i]);
  d.dvec = HVector(std::move(diff));
  return d;
}

HVector linked_hvector(const HVector& cvec, const HVector& gvec) { return link_data(cvec, gvec).gprime; }

HVector sum_linked_hvector(const HVector& cvec, const HVector& gvec) { return integrate(link_data(cvec, gvec).dvec); }

HVector basic_double_link_hvector(const HVector& hi, const HVector& hj, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree d must be positive");
  const auto len = std::max<std::int64_t>(static_cast<std::int64_t>(hi.size()), static_cast<std::int64_t>(hj.size()) + d);
  std::vector<HVector::value_type> out;
  for (std::int64_t t = 0; t < len; ++t) out.push_back(hi[t] - hi[t - d] + hj[t - d]);
  return HVector(std::move(out));
}

HVector ci_hvector(const std::vector<int>& degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one degree");
  std::vector<HVector::value_type> poly{1};
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "complete-intersection degrees must be positive");
    std::vector<HVector::value_type> next(poly.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += poly[i];
    poly = std::move(next);
  }
  return HVector(std::move(poly));
}

HVector hvector_by_standard_monomials(const Configuration& x) {
  if (x.empty()) return HVector::zero();
  const auto n = x.universe().size();
  const MonomialIdeal ideal = oracle::intersect_primes(n, component_variables(x));
  const int dim = static_cast<int>(n) - x.codim();
  const auto hf = oracle::standard_monomials(ideal, dim);
  // h(z) = HF(z) (1 - z)^dim, truncated at degree dim
  std::vector<HVector::value_type> h(hf.begin(), hf.end());
  for (int r = 0; r < dim; ++r)
    for (std::size_t i = h.size(); i-- > 1;) h[i] -= h[i - 1];
  return HVector(std::move(h));
}

HVector hvector_by_faces(const Configuration& x) {
  if (x.empty()) return HVector::zero();
  return f_to_h(faces(complex_of(x)));
}

HVector hvector_of(const Configuration& x) {
  const HVector a = hvector_by_standard_monomials(x);
  const HVector b = hvector_by_faces(x);
  if (!(a == b))
    throw Error(ErrorCode::OracleDisagreement,
                "standard-monomial h-vector (" + a.to_string() + ") differs from face-count h-vector (" + b.to_string() + ")");
  return a;
}

std::string liaison_table(const std::vector<int>& degrees, const HVector& gvec) {
  const HVector cvec = ci_hvector(degrees);
  const LinkData d = link_data(cvec, gvec);
  const HVector g_next = integrate(d.dvec);
  const int c = static_cast<int>(degrees.size());
  const std::int64_t last = cvec.last_index() + 1;

  std::vector<std::pair<std::string, const HVector*>> rows = {
      {"G" + std::to_string(c), &cvec},        {"Z" + std::to_string(c), &gvec},
      {"Y" + std::to_string(c), &d.gprime},    {"ΔG" + std::to_string(c + 1), &d.dvec},
      {"G" + std::to_string(c + 1), &g_next},
  };
  std::ostringstream out;
  out << std::setw(8) << std::left << "degree:" << std::right;
  for (std::int64_t i = 0; i <= last; ++i) out << std::setw(5) << i;
  out << '\n';
  for (const auto& [name, vec] : rows) {
    // the delta in "ΔG" is two bytes but one column
    const int pad = name.rfind("Δ", 0) == 0 ? 9 : 8;
    out << std::setw(pad) << std::left << (name + ":") << std::right;
    for (std::int64_t i = 0; i <= last; ++i) out << std::setw(5) << (*vec)[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace gorconf
