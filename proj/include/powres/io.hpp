// Copyright 2026 The powres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON formats:
//   point set     {"q": int, "n": int, "points": [[int, ...], ...]}
//   integer set   {"q": int, "elements": [int, ...]}
//   witness       {"verdict": "verified"|"counterexample", "bound": int,
//                  "counterexample": int|null, "checked": int}
//   matrix        [[int, ...], ...] row-major
// Integers too large for 64 bits are written as decimal strings and are
// accepted in that form on input.

#ifndef POWRES_IO_HPP_
#define POWRES_IO_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "powres/bridge.hpp"
#include "powres/equivalence.hpp"
#include "powres/geometry.hpp"
#include "powres/linalg.hpp"
#include "powres/oracle.hpp"

namespace powres {

using Json = nlohmann::json;

/// Parses a decimal integer with optional sign.
inline BigInt parse_integer(std::string_view text) {
  std::string s(text);
  s.erase(0, s.find_first_not_of(" \t\n\r"));
  s.erase(s.find_last_not_of(" \t\n\r") + 1);
  std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits ||
      s.find_first_not_of("0123456789", digits) != std::string::npos) {
    throw Error("not an integer: '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

/// Comma-separated integers, e.g. "2,3,-8".
inline std::vector<BigInt> parse_integer_list(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_integer(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Json integer_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  if (v > 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

inline BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

inline Json to_json(const PointSet& ps) {
  Json points = Json::array();
  for (const auto& p : ps) points.push_back(p.coords());
  return {{"q", ps.field().order()}, {"n", ps.ambient_dim()}, {"points", points}};
}

/// Reads a point set; coordinates may be any integers and need not be
/// normalized.
inline PointSet point_set_from_json(const Json& j) {
  try {
    const PrimeField f(j.at("q").get<std::uint64_t>());
    const std::size_t n = j.at("n").get<std::size_t>();
    PointSet ps(f, n);
    for (const auto& row : j.at("points")) {
      if (row.size() != n) throw Error("point " + row.dump() + " does not have " + std::to_string(n) + " coordinates");
      Vector v;
      for (const auto& x : row) v.push_back(f.reduce(x.get<std::int64_t>()));
      ps.insert_vector(std::move(v));
    }
    return ps;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed point set JSON: ") + e.what());
  }
}

struct IntegerSetInput {
  std::uint64_t q = 3;
  std::vector<BigInt> elements;
};

inline IntegerSetInput integer_set_from_json(const Json& j) {
  try {
    IntegerSetInput in;
    in.q = j.at("q").get<std::uint64_t>();
    for (const auto& x : j.at("elements")) in.elements.push_back(integer_from_json(x));
    return in;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed integer set JSON: ") + e.what());
  }
}

inline Json to_json(const QFreeInteger& r) {
  Json factors = Json::array();
  for (const auto& f : r.factorization()) factors.push_back({f.prime, f.exponent});
  return {{"value", integer_to_json(r.value())}, {"factors", factors}};
}

/// Report for an integer set: support, reduced elements, Delta, and the
/// point set when it is defined.
inline Json to_json(const ResidueSet& rs) {
  Json elements = Json::array();
  for (const auto& s : rs.raw_elements) elements.push_back(integer_to_json(s));
  Json reduced = Json::array();
  for (const auto& r : rs.reduced) reduced.push_back(to_json(r));
  Json out = {{"q", rs.q},
              {"elements", elements},
              {"reduced", reduced},
              {"support", rs.support},
              {"delta", integer_to_json(rs.delta)},
              {"contains_perfect_power", rs.contains_perfect_power}};
  out["points"] = rs.contains_perfect_power || rs.reduced.empty() ? Json(nullptr) : to_json(pi_q(rs));
  return out;
}

inline Json to_json(const FqMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(Vector(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline Json to_json(const WitnessReport& r) {
  return {{"verdict", r.verified() ? "verified" : "counterexample"},
          {"bound", r.bound},
          {"counterexample", r.counterexample ? Json(r.counterexample->value) : Json(nullptr)},
          {"checked", r.checked}};
}

inline Json to_json(const FactoredModulus& n) {
  Json factors = Json::array();
  for (const auto& f : n.factors) factors.push_back({f.prime, f.exponent});
  return {{"value", n.value}, {"factors", factors}, {"omega", n.omega()}};
}

inline Json to_json(const Decision& d) {
  Json out = {{"verdict", to_string(d.verdict)}, {"k", d.k}, {"reason", d.reason}};
  out["points"] = d.points ? to_json(*d.points) : Json(nullptr);
  out["unblocked_subspace"] = d.unblocked ? to_json(d.unblocked->basis()) : Json(nullptr);
  return out;
}

inline Json to_json(const ProjectiveMap& m) { return to_json(m.matrix()); }

}  // namespace powres

#endif  // POWRES_IO_HPP_
