#pragma once

#include <string>
#include <vector>

#include "gorconf/configurations.hpp"
#include "gorconf/sequences.hpp"

namespace gorconf {

struct LinkData {
  HVector cvec;    // Gorenstein link
  HVector gvec;    // one side of the link
  HVector gprime;  // the residual
  HVector dvec;    // first difference of the sum of the linked ideals
};

/// g'_i = c_{s-i} - g_{s-i}, s the socle degree of cvec.
HVector linked_hvector(const HVector& cvec, const HVector& gvec);
HVector sum_linked_hvector(const HVector& cvec, const HVector& gvec);
LinkData link_data(const HVector& cvec, const HVector& gvec);

/// t -> hI(t) - hI(t-d) + hJ(t-d), over t = 0 .. max(len hI, len hJ + d) - 1.
HVector basic_double_link_hvector(const HVector& hi, const HVector& hj, int d);

/// Coefficients of prod (1 + z + ... + z^{d-1}).
HVector ci_hvector(const std::vector<int>& degrees);

/// h-vector of the realized configuration, by standard-monomial counting.
HVector hvector_by_standard_monomials(const Configuration& x);
/// h-vector of the realized configuration, from the f-vector of its Stanley-Reisner complex.
HVector hvector_by_faces(const Configuration& x);
/// Both routes; throws OracleDisagreement when they differ. (0) for the empty configuration.
HVector hvector_of(const Configuration& x);

/// Rows G, Z, Y, dG, G' of the link of gvec inside the complete intersection of `degrees`.
std::string liaison_table(const std::vector<int>& degrees, const HVector& gvec);

}  // namespace gorconf
