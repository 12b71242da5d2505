#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "origami/closed_system.hpp"
#include "origami/codes.hpp"
#include "origami/orbit.hpp"
#include "origami/surface.hpp"

namespace origami {

// "H(2)", "H(1,1)"; the torus stratum prints as "H(0)".
std::string stratum_string(const std::vector<int>& stratum);

// "[2,1]"
std::string list_string(const std::vector<int>& values);

nlohmann::json cycles_json(const std::vector<std::vector<int>>& cycles);

// {"slope":"2/5","cylinders":[{"cycle":[1,2],"area":2},{"cycle":[3],"area":1}]}
nlohmann::json to_json(const CylinderDecomposition& d);

// {"center":"(1,3,2,4)","vertices":["(1,3,4)", ...]}
nlohmann::json to_json(const RingDiagram& b);

// {"diagrams":[...]}
nlohmann::json to_json(const ClosedSystem& s);

// {"theta":..., "cone_points":[{"cycle":[..],"angle":k}], "stratum":[..], "genus":[..]}
nlohmann::json to_json(const ConeData& c);

// {"matrix":"1,2;0,1","in_veech":true,"witness":"id"}; witness is null when
// the matrix is outside SL2+(Z) or not in the Veech group.
nlohmann::json veech_verdict_json(const IntMatrix& m, bool in_veech,
                                  const std::optional<Permutation>& witness);

// {"sigma":..., "tau":..., "matrix":..., "stratum":[..]}
nlohmann::json to_json(const OrbitState& s);

}  // namespace origami
