#pragma once

#include "rforge/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace rforge {

// Wire form shared by every module and the CLI:
//   [ {"c": "num/den", "m": {"a_1_0": 1, "x": 2}}, ... ]
// Terms are emitted largest first under the ring's natural degrevlex order.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const RingPtr& ring);

nlohmann::json to_json(const std::vector<Polynomial>& ps);
std::vector<Polynomial> polynomials_from_json(const nlohmann::json& j, const RingPtr& ring);

}  // namespace rforge
