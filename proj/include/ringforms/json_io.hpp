#ifndef RINGFORMS_JSON_IO_HPP_
#define RINGFORMS_JSON_IO_HPP_

/* JSON serialization for the public value types.  A pair becomes
 *
 *   { "lattice": "L" | "Lhat",
 *     "x1": [x11, x12, x13, x22, x23, x33],
 *     "x2": [ ... ] }
 *
 * and an Lhat pair additionally carries its two integer symmetric matrices
 * under "A" and "B" (rows of three integers each).  Deserialization goes
 * through the checked constructor, so the evenness invariant is enforced.
 *
 * Coefficients are stored as JSON integers; the census data this library
 * produces stays far below 2^63, and serialization refuses larger values
 * instead of silently losing precision.
 */

#include "ringforms/binary_cubic.hpp"
#include "ringforms/integers.hpp"
#include "ringforms/quartic.hpp"
#include "ringforms/ternary.hpp"

#include <json.hpp>

#include <string>

namespace ringforms {

inline long long json_int(const bigint &v) {
  throw_if(!v.fits_slong_p(), "coefficient too large for JSON serialization");
  return v.get_si();
}

inline nlohmann::json to_json(const ternary_form &x) {
  nlohmann::json a = nlohmann::json::array();
  for (const bigint &c : x.coeffs())
    a.push_back(json_int(c));
  return a;
}

inline ternary_form ternary_form_from_json(const nlohmann::json &j) {
  throw_if(!j.is_array() || j.size() != 6,
           "ternary form JSON must be an array of six integers");
  std::array<bigint, 6> c;
  for (size_t i = 0; i < 6; i++)
    c[i] = bigint(j[i].get<long>());
  return form_from_coeffs(c);
}

inline nlohmann::json to_json(const mat3 &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; i++) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; j++)
      row.push_back(json_int(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const ternary_pair &p) {
  nlohmann::json j;
  j["lattice"] = p.tag == lattice_tag::L ? "L" : "Lhat";
  j["x1"] = to_json(p.x1);
  j["x2"] = to_json(p.x2);
  if (p.tag == lattice_tag::Lhat) {
    j["A"] = to_json(integer_gram(p.x1));
    j["B"] = to_json(integer_gram(p.x2));
  }
  return j;
}

inline ternary_pair ternary_pair_from_json(const nlohmann::json &j) {
  std::string lat = j.at("lattice").get<std::string>();
  throw_if(lat != "L" && lat != "Lhat", "unknown lattice tag");
  return make_ternary_pair(lat == "L" ? lattice_tag::L : lattice_tag::Lhat,
                           ternary_form_from_json(j.at("x1")),
                           ternary_form_from_json(j.at("x2")));
}

inline nlohmann::json to_json(const binary_cubic &f) {
  return nlohmann::json::array(
      {json_int(f.a), json_int(f.b), json_int(f.c), json_int(f.d)});
}

/* A quartic ring serializes as its structure-constant table plus the pair
 * it came from: "cijk" holds four rows (k = 0..3) of six entries in the
 * coefficient-slot order 11, 12, 13, 22, 23, 33. */
inline nlohmann::json to_json(const quartic_ring &q) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= 3; k++) {
    nlohmann::json row = nlohmann::json::array();
    for (int s = 0; s < 6; s++)
      row.push_back(json_int(q.cst[static_cast<size_t>(k * 6 + s)]));
    rows.push_back(row);
  }
  return nlohmann::json{{"cijk", rows}, {"pair", to_json(q.pair)}};
}

} /* namespace ringforms */

#endif /* RINGFORMS_JSON_IO_HPP_ */
