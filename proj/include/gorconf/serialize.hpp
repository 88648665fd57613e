#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gorconf/betti.hpp"
#include "gorconf/configurations.hpp"
#include "gorconf/monomials.hpp"
#include "gorconf/simplicial.hpp"

namespace gorconf {

using json = nlohmann::ordered_json;

json to_json(const Configuration& x);
Configuration configuration_from_json(const json& j);

json to_json(const SimplicialComplex& delta);
SimplicialComplex complex_from_json(const json& j);

json to_json(const BettiTable& table);
BettiTable betti_from_json(const json& j);

json to_json(const std::vector<Monomial>& monomials);
json to_json(const HVector& h);

/// `R = QQ[x0..xN]; I = intersect(ideal(..),..);` with M_i -> x_{2i}, L_i -> x_{2i+1}.
std::string export_m2(const Configuration& x);

}  // namespace gorconf
