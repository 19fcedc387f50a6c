#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringwb {

// Element of a finite ring, as an index into its operation tables.
using elem_t = std::uint16_t;

// Rings larger than this are rejected unless the caller raises the cap
// (CLI: WORKBENCH_MAX_RING_SIZE). Keeps the O(size^3) validation desk-scale.
inline constexpr std::size_t kDefaultMaxRingSize = 4096;

// Malformed or mismatched input: bad shape, out-of-range index, objects
// bound to different rings, violated precondition.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A required algebraic law failed; the message names the law and a witness.
class axiom_violation : public std::runtime_error {
 public:
  explicit axiom_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringwb
