#include "origami/text_io.hpp"

namespace origami {

std::string list_string(const std::vector<int>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s + "]";
}

std::string stratum_string(const std::vector<int>& stratum) {
  if (stratum.empty()) return "H(0)";
  const std::string inner = list_string(stratum);
  return "H(" + inner.substr(1, inner.size() - 2) + ")";
}

nlohmann::json cycles_json(const std::vector<std::vector<int>>& cycles) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cycles) j.push_back(c);
  return j;
}

nlohmann::json to_json(const CylinderDecomposition& d) {
  nlohmann::json cyl = nlohmann::json::array();
  for (const auto& c : d.cylinders) cyl.push_back({{"cycle", c.cycle}, {"area", c.area}});
  return {{"slope", d.slope.to_string()}, {"cylinders", cyl}};
}

nlohmann::json to_json(const RingDiagram& b) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : b.vertices()) vertices.push_back(v.to_string());
  return {{"center", b.center().to_string()}, {"vertices", vertices}};
}

nlohmann::json to_json(const ClosedSystem& s) {
  nlohmann::json diagrams = nlohmann::json::array();
  for (const auto& b : s.diagrams) diagrams.push_back(to_json(b));
  return {{"diagrams", diagrams}};
}

nlohmann::json to_json(const ConeData& c) {
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& p : c.cone_points) cones.push_back({{"cycle", p.cycle}, {"angle", p.angle}});
  return {{"theta", c.theta.to_string()},
          {"cone_points", cones},
          {"stratum", c.stratum},
          {"genus", c.genus}};
}

nlohmann::json veech_verdict_json(const IntMatrix& m, bool in_veech,
                                  const std::optional<Permutation>& witness) {
  return {{"matrix", m.to_string()},
          {"in_veech", in_veech},
          {"witness", witness ? nlohmann::json(witness->to_string()) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const OrbitState& s) {
  const Surface y(s.surface_class.first, s.surface_class.second);
  return {{"sigma", y.sigma().to_string()},
          {"tau", y.tau().to_string()},
          {"matrix", s.representative_matrix.to_string()},
          {"stratum", cone_data(y).stratum}};
}

}  // namespace origami
