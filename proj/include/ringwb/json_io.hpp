#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringwb/common.hpp"
#include "ringwb/conditions.hpp"
#include "ringwb/involution.hpp"
#include "ringwb/maps.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

// Insertion order is preserved so that documents serialize canonically:
// parse -> serialize is the identity on canonicalized documents.
using json = nlohmann::ordered_json;

inline std::string canonical_dump(const json& j) { return j.dump(); }

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string content_hash(const json& j) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_dump(j))));
  return buf;
}

namespace detail {

inline void require_keys(const json& j, std::initializer_list<const char*> keys,
                         const char* what) {
  if (!j.is_object())
    throw invalid_input(std::string(what) + ": expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw invalid_input(std::string(what) + ": missing key \"" + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known)
      throw invalid_input(std::string(what) + ": unknown key \"" + it.key() +
                          "\"");
  }
}

inline long long require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw invalid_input(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

inline std::vector<elem_t> int_array(const json& j, std::size_t size,
                                     const char* what) {
  if (!j.is_array() || j.size() != size)
    throw invalid_input(std::string(what) + ": expected an array of length " +
                        std::to_string(size));
  std::vector<elem_t> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    long long v = require_int(j[i], what);
    if (v < 0 || static_cast<std::size_t>(v) >= size)
      throw invalid_input(std::string(what) + ": entry " + std::to_string(v) +
                          " out of range");
    out[i] = static_cast<elem_t>(v);
  }
  return out;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Ring documents: {"size", "add", "mul", "zero", "unity", "labels"}.
// --------------------------------------------------------------------------

inline json ring_to_json(const FiniteRing& r) {
  const std::size_t n = r.size();
  json add = json::array(), mul = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json arow = json::array(), mrow = json::array();
    for (std::size_t y = 0; y < n; ++y) {
      arow.push_back(r.add_table()[x * n + y]);
      mrow.push_back(r.mul_table()[x * n + y]);
    }
    add.push_back(std::move(arow));
    mul.push_back(std::move(mrow));
  }
  json j;
  j["size"] = n;
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  j["zero"] = r.zero();
  if (r.unity())
    j["unity"] = *r.unity();
  else
    j["unity"] = nullptr;
  if (r.labels().empty())
    j["labels"] = nullptr;
  else
    j["labels"] = r.labels();
  return j;
}

inline RawRing ring_from_json(const json& j) {
  detail::require_keys(j, {"size", "add", "mul", "zero", "unity", "labels"},
                       "ring");
  RawRing raw;
  long long n = detail::require_int(j["size"], "ring.size");
  if (n < 1 || n > 0xFFFF) throw invalid_input("ring.size out of range");
  raw.size = static_cast<std::size_t>(n);
  auto read_table = [&](const json& t, const char* what) {
    if (!t.is_array() || t.size() != raw.size)
      throw invalid_input(std::string(what) + ": expected " +
                          std::to_string(raw.size) + " rows");
    std::vector<elem_t> flat;
    flat.reserve(raw.size * raw.size);
    for (const json& row : t) {
      std::vector<elem_t> r = detail::int_array(row, raw.size, what);
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
  };
  raw.add = read_table(j["add"], "ring.add");
  raw.mul = read_table(j["mul"], "ring.mul");
  long long z = detail::require_int(j["zero"], "ring.zero");
  if (z < 0 || static_cast<std::size_t>(z) >= raw.size)
    throw invalid_input("ring.zero out of range");
  raw.zero = static_cast<elem_t>(z);
  if (!j["unity"].is_null()) {
    long long u = detail::require_int(j["unity"], "ring.unity");
    if (u < 0 || static_cast<std::size_t>(u) >= raw.size)
      throw invalid_input("ring.unity out of range");
    raw.unity = static_cast<elem_t>(u);
  }
  if (!j["labels"].is_null()) {
    const json& ls = j["labels"];
    if (!ls.is_array() || ls.size() != raw.size)
      throw invalid_input("ring.labels: expected one label per element");
    for (const json& l : ls) {
      if (!l.is_string())
        throw invalid_input("ring.labels: expected strings");
      raw.labels.push_back(l.get<std::string>());
    }
  }
  return raw;
}

inline std::string ring_id(const FiniteRing& r) {
  return content_hash(ring_to_json(r));
}

// --------------------------------------------------------------------------
// Involution documents: {"map", "involution"}.
// --------------------------------------------------------------------------

inline json involution_to_json(const AntiAutomorphism& s) {
  json j;
  j["map"] = s.perm;
  j["involution"] = s.is_involution;
  return j;
}

// Parses and re-validates against the ring; the stored involution flag must
// agree with the recomputed one.
inline AntiAutomorphism involution_from_json(const FiniteRing& ring,
                                             const json& j, int jobs = 1) {
  detail::require_keys(j, {"map", "involution"}, "involution");
  std::vector<elem_t> perm =
      detail::int_array(j["map"], ring.size(), "involution.map");
  if (!j["involution"].is_boolean())
    throw invalid_input("involution.involution: expected a boolean");
  AntiAutomorphism s = validate_antiautomorphism(ring, std::move(perm), false, jobs);
  if (s.is_involution != j["involution"].get<bool>())
    throw invalid_input("involution flag does not match the validated map");
  return s;
}

inline std::string involution_id(const AntiAutomorphism& s) {
  return content_hash(involution_to_json(s));
}

// --------------------------------------------------------------------------
// Map documents: {"image"}.
// --------------------------------------------------------------------------

inline json map_to_json(const RingMap& m) {
  json j;
  j["image"] = m.image;
  return j;
}

inline RingMap map_from_json(const FiniteRing& ring, const json& j) {
  detail::require_keys(j, {"image"}, "map");
  return make_map(ring, detail::int_array(j["image"], ring.size(), "map.image"));
}

// --------------------------------------------------------------------------
// Condition results.
// --------------------------------------------------------------------------

inline json condition_to_json(const ConditionResult& c) {
  json j;
  j["pass"] = c.pass;
  if (c.witness)
    j["witness"] = *c.witness;
  else
    j["witness"] = nullptr;
  return j;
}

inline json primality_to_json(const PrimalityResult& p) {
  json j;
  j["pass"] = p.pass;
  if (p.witness)
    j["witness"] = json::array({p.witness->first, p.witness->second});
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace ringwb
