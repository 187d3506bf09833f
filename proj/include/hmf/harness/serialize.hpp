#pragma once

// JSON records for points and group elements.
//
// Points: {"kind": "hermitian", "z11": [re, im], "z12": ..., "z21": ..., "z22": ...}
//     or  {"kind": "quaternionic", "z0": [re, im], "z2": ..., "z10": ..., ..., "z13": ...}.
// Group elements: {"kind": "unitary-eisenstein" | "unitary-gauss" | "quaternionic",
//     "entries": 4x4 array of coefficient tuples}; tuples are [a, b] for a + b*eta
//     and [x0, x1, x2, x3] for quaternions, rationals written as "p/q" strings.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hmf/groups.hpp"
#include "hmf/halfplane.hpp"

namespace hmf::harness {

using nlohmann::json;

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json point_to_json(const HermitianPoint& p) {
  const auto& names = hermitian_coordinate_names();
  json j{{"kind", "hermitian"}};
  for (int k = 0; k < 4; ++k) j[names[static_cast<std::size_t>(k)]] = complex_to_json(p.z(k / 2, k % 2));
  return j;
}

inline json point_to_json(const QuaternionicPoint& p) {
  const auto& names = quaternionic_coordinate_names();
  json j{{"kind", "quaternionic"}};
  for (std::size_t k = 0; k < 6; ++k) j[names[k]] = complex_to_json(p.coords[k]);
  return j;
}

inline HermitianPoint hermitian_point_from_json(const json& j) {
  if (j.value("kind", "hermitian") != "hermitian") throw std::invalid_argument("point is not hermitian");
  const auto& names = hermitian_coordinate_names();
  Mat2 z;
  for (int k = 0; k < 4; ++k) {
    const auto& name = names[static_cast<std::size_t>(k)];
    if (!j.contains(name)) throw std::invalid_argument("point is missing coordinate " + name);
    z(k / 2, k % 2) = complex_from_json(j.at(name));
  }
  return HermitianPoint(z);
}

inline QuaternionicPoint quaternionic_point_from_json(const json& j) {
  if (j.value("kind", "quaternionic") != "quaternionic") throw std::invalid_argument("point is not quaternionic");
  const auto& names = quaternionic_coordinate_names();
  QuaternionicPoint p;
  for (std::size_t k = 0; k < 6; ++k) {
    if (!j.contains(names[k])) throw std::invalid_argument("point is missing coordinate " + names[k]);
    p.coords[k] = complex_from_json(j.at(names[k]));
  }
  return p;
}

namespace detail {

template <class Ring>
json entry_to_json(const QuadInt<Ring>& x) {
  return json::array({x.a(), x.b()});
}
inline json entry_to_json(const RationalQuaternion& q) {
  return json::array({q[0].str(), q[1].str(), q[2].str(), q[3].str()});
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a \"p/q\" string");
}

template <class Entry>
Entry entry_from_json(const json& j) {
  if constexpr (std::is_same_v<Entry, RationalQuaternion>) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion entry must have 4 coefficients");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
  } else {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("ring entry must be [a, b]");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  }
}

}  // namespace detail

template <class Entry>
json element_to_json(const GroupElement<Entry>& g) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(detail::entry_to_json(g.entries()(i, k)));
    rows.push_back(row);
  }
  return {{"kind", to_string(GroupElement<Entry>::kind())}, {"entries", rows}};
}

/// Parses and validates; a kind mismatch or a failed symplectic relation throws.
template <class Entry>
GroupElement<Entry> element_from_json(const json& j) {
  if (j.at("kind").get<std::string>() != to_string(GroupElement<Entry>::kind()))
    throw std::invalid_argument("group element kind '" + j.at("kind").get<std::string>() + "' does not match '" +
                                to_string(GroupElement<Entry>::kind()) + "'");
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != 4) throw std::invalid_argument("entries must be a 4x4 array");
  Matrix4x4<Entry> m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw std::invalid_argument("entries must be a 4x4 array");
    for (int k = 0; k < 4; ++k) m(i, k) = detail::entry_from_json<Entry>(row[static_cast<std::size_t>(k)]);
  }
  return validate_element(m);
}

}  // namespace hmf::harness
