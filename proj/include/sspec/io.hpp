#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "sspec/bitset.hpp"
#include "sspec/errors.hpp"
#include "sspec/ideal.hpp"
#include "sspec/ring.hpp"
#include "sspec/spectrum.hpp"

namespace sspec {

using json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& what) {
  if (!obj.is_object()) throw input_error(what + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw input_error(what + ": unknown key \"" + it.key() + "\"");
  }
  for (const char* k : allowed) {
    if (!obj.contains(k)) throw input_error(what + ": missing key \"" + std::string(k) + "\"");
  }
}

inline int get_int(const json& obj, const char* key, const std::string& what) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw input_error(what + ": \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

inline std::vector<int> get_int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw input_error(what + " must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw input_error(what + " must contain only integers");
    out.push_back(e.get<int>());
  }
  return out;
}

inline std::vector<std::vector<int>> get_table(const json& v, const std::string& what) {
  if (!v.is_array()) throw input_error(what + " must be an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(get_int_list(row, what + " row"));
  return out;
}

}  // namespace detail

/**
 * Builds a ring from its JSON description.  Recognized kinds:
 *   {"kind":"zn","n":12}
 *   {"kind":"product","factors":[<ring>,...]}
 *   {"kind":"poly_quotient","modulus":2,"poly":[0,0,1]}
 *   {"kind":"table","n":4,"one":1,"add":[[...],...],"mul":[[...],...]}
 * Unknown keys are rejected.
 */
inline FiniteRing ring_from_json(const json& desc, int size_cap = kDefaultSizeCap) {
  if (!desc.is_object() || !desc.contains("kind") || !desc.at("kind").is_string()) {
    throw input_error("ring description must be an object with a \"kind\" string");
  }
  const std::string kind = desc.at("kind").get<std::string>();
  auto capped = [&](FiniteRing ring) {
    if (ring.size > size_cap) {
      throw capacity_error("ring has " + std::to_string(ring.size) +
                           " elements, cap is " + std::to_string(size_cap));
    }
    return ring;
  };
  if (kind == "zn") {
    detail::require_keys(desc, {"kind", "n"}, "zn ring");
    const int n = detail::get_int(desc, "n", "zn ring");
    if (n > size_cap) {
      throw capacity_error("ring has " + std::to_string(n) + " elements, cap is " +
                           std::to_string(size_cap));
    }
    return make_zn(n);
  }
  if (kind == "product") {
    detail::require_keys(desc, {"kind", "factors"}, "product ring");
    const auto& factors = desc.at("factors");
    if (!factors.is_array() || factors.empty()) {
      throw input_error("product ring: \"factors\" must be a nonempty array");
    }
    std::vector<FiniteRing> parts;
    parts.reserve(factors.size());
    for (const auto& f : factors) parts.push_back(ring_from_json(f, size_cap));
    return make_product(parts, size_cap);
  }
  if (kind == "poly_quotient") {
    detail::require_keys(desc, {"kind", "modulus", "poly"}, "poly_quotient ring");
    return make_poly_quotient(detail::get_int(desc, "modulus", "poly_quotient ring"),
                              detail::get_int_list(desc.at("poly"), "poly_quotient poly"),
                              size_cap);
  }
  if (kind == "table") {
    detail::require_keys(desc, {"kind", "n", "one", "add", "mul"}, "table ring");
    return capped(make_table(detail::get_int(desc, "n", "table ring"),
                             detail::get_table(desc.at("add"), "table ring add"),
                             detail::get_table(desc.at("mul"), "table ring mul"),
                             detail::get_int(desc, "one", "table ring")));
  }
  throw input_error("unknown ring kind \"" + kind + "\"");
}

/// Parses "4,6" style comma-separated generator lists; "" is the empty list.
inline std::vector<int> parse_generator_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  if (text.empty()) return out;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok.empty()) throw input_error("empty entry in generator list \"" + text + "\"");
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw input_error("bad generator \"" + tok + "\" in list \"" + text + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline json members_json(const Bitset& set) {
  json out = json::array();
  for (int i : set.to_indices()) out.push_back(i);
  return out;
}

inline json point_set_json(const Bitset& set) { return members_json(set); }

/// JSON view of a spectrum used by `spec --format json`; embeds enough to
/// reconstruct the space (ring description plus multiplicative generators).
inline json spectrum_to_json(const SpectrumSpace& space, const json& ring_desc,
                             const std::vector<int>& mult_gens) {
  json doc;
  doc["ring"] = ring_desc;
  doc["ring_name"] = space.ring->name;
  doc["mults"] = {{"generators", mult_gens}, {"members", members_json(space.mults.members)}};
  json pts = json::array();
  for (const auto& p : space.points) {
    json jp;
    jp["members"] = members_json(p.ideal.members);
    jp["witnesses"] = p.witnesses;
    jp["is_prime"] = p.prime;
    jp["colon_prime"] = p.colon_prime ? members_json(p.colon_prime->members) : json();
    pts.push_back(std::move(jp));
  }
  doc["points"] = std::move(pts);
  return doc;
}

}  // namespace sspec
