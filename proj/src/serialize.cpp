#include "permdyn/serialize.hpp"

#include <algorithm>
#include <map>

namespace permdyn {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  const long rows = static_cast<long>(j.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      const auto& entry = j.at(r).at(c);
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

json poly_to_json(const OperatorPolynomial& poly) {
  json coefficients = json::array();
  for (const auto& c : poly.c) coefficients.push_back({c.real(), c.imag()});
  return {{"S", poly.S}, {"T", poly.T}, {"coefficients", coefficients}};
}

OperatorPolynomial poly_from_json(const json& j) {
  OperatorPolynomial poly;
  poly.S = j.at("S").get<int>();
  poly.T = j.at("T").get<double>();
  for (const auto& entry : j.at("coefficients")) {
    poly.c.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  if (static_cast<int>(poly.c.size()) != poly.S) {
    throw std::invalid_argument("operator polynomial needs S coefficients");
  }
  return poly;
}

json amplitudes_to_json(const QuantumState& psi, int top_k) {
  std::vector<std::pair<SpinConfig, Complex>> entries(psi.amplitudes().begin(),
                                                      psi.amplitudes().end());
  if (top_k > 0 && static_cast<int>(entries.size()) > top_k) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) {
                       return std::norm(a.second) > std::norm(b.second);
                     });
    entries.erase(entries.begin() + top_k, entries.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  json out = json::array();
  for (const auto& [state, a] : entries) {
    out.push_back({{"state", state.str()}, {"re", a.real()}, {"im", a.imag()}});
  }
  return out;
}

QuantumState state_from_json(const json& j, int spins) {
  QuantumState psi(spins);
  for (const auto& entry : j) {
    psi.add(SpinConfig::from_string(entry.at("state").get<std::string>()),
            Complex(entry.at("re").get<double>(), entry.at("im").get<double>()));
  }
  return psi;
}

json orbit_report(const std::vector<OrbitRecord>& orbits, int spins) {
  std::map<long, std::pair<long, const SpinConfig*>> by_length;
  for (const auto& orbit : orbits) {
    auto [it, inserted] =
        by_length.try_emplace(orbit.length, 1, &orbit.representative);
    if (!inserted) {
      it->second.first += 1;
      if (orbit.representative < *it->second.second) {
        it->second.second = &orbit.representative;
      }
    }
  }
  json entries = json::array();
  for (const auto& [length, info] : by_length) {
    entries.push_back({{"rep", info.second->str()},
                       {"length", length},
                       {"count", info.first}});
  }
  return {{"spins", spins},
          {"orbits", entries},
          {"total_states", 1ull << spins}};
}

}  // namespace permdyn
