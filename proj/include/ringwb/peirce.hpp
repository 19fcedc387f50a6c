#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/involution.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

// An idempotent e together with the decomposition machinery around it.
// 1-e never materializes: all projections are written with e alone, so
// non-unital rings are fully supported.
struct PeirceFrame {
  const FiniteRing* ring = nullptr;
  elem_t e = 0;
  std::optional<AntiAutomorphism> involution;
};

// Validates e as a nontrivial idempotent (and a symmetric one when an
// involution is supplied) and returns the frame.
inline PeirceFrame make_frame(const FiniteRing& ring, elem_t e,
                              std::optional<AntiAutomorphism> inv = {}) {
  if (e >= ring.size()) throw invalid_input("idempotent index out of range");
  if (ring.mul(e, e) != e)
    throw invalid_input("element " + ring.label(e) + " is not idempotent");
  if (e == ring.zero())
    throw invalid_input("idempotent must be nontrivial: got the zero element");
  if (ring.unity() && e == *ring.unity())
    throw invalid_input("idempotent must be nontrivial: got the unity");
  if (inv) {
    if (!bound_to(*inv, ring))
      throw invalid_input("involution is bound to a different ring");
    if ((*inv)(e) != e)
      throw invalid_input("idempotent " + ring.label(e) +
                          " is not symmetric under the involution");
  }
  return PeirceFrame{&ring, e, std::move(inv)};
}

// The four components of x relative to e:
//   x11 = exe, x12 = ex - exe, x21 = xe - exe, x22 = x - ex - xe + exe.
// They always sum back to x.
struct PeirceSplit {
  elem_t x11, x12, x21, x22;
};

inline PeirceSplit peirce_project(const PeirceFrame& f, elem_t x) {
  const FiniteRing& r = *f.ring;
  const elem_t e = f.e;
  const elem_t ex = r.mul(e, x);
  const elem_t xe = r.mul(x, e);
  const elem_t exe = r.mul(ex, e);
  return PeirceSplit{exe, r.sub(ex, exe), r.sub(xe, exe),
                     r.add(r.sub(r.sub(x, ex), xe), exe)};
}

inline elem_t peirce_component(const PeirceFrame& f, elem_t x, int i, int j) {
  PeirceSplit s = peirce_project(f, x);
  if (i == 1) return j == 1 ? s.x11 : s.x12;
  return j == 1 ? s.x21 : s.x22;
}

// Membership flags: x lies in R_ij iff pi_ij(x) = x and the other three
// projections of x vanish.
struct ComponentFlags {
  bool r11, r12, r21, r22;
};

inline ComponentFlags component_of(const PeirceFrame& f, elem_t x) {
  const elem_t z = f.ring->zero();
  PeirceSplit s = peirce_project(f, x);
  return ComponentFlags{
      s.x11 == x && s.x12 == z && s.x21 == z && s.x22 == z,
      s.x12 == x && s.x11 == z && s.x21 == z && s.x22 == z,
      s.x21 == x && s.x11 == z && s.x12 == z && s.x22 == z,
      s.x22 == x && s.x11 == z && s.x12 == z && s.x21 == z,
  };
}

inline bool in_component(const PeirceFrame& f, elem_t x, int i, int j) {
  ComponentFlags c = component_of(f, x);
  if (i == 1) return j == 1 ? c.r11 : c.r12;
  return j == 1 ? c.r21 : c.r22;
}

// Elements of R_ij in ascending index order (zero always belongs to all
// four). Component id: 0 -> R11, 1 -> R12, 2 -> R21, 3 -> R22.
inline std::vector<elem_t> component_members(const PeirceFrame& f, int i,
                                             int j) {
  std::vector<elem_t> out;
  for (std::size_t x = 0; x < f.ring->size(); ++x)
    if (in_component(f, static_cast<elem_t>(x), i, j))
      out.push_back(static_cast<elem_t>(x));
  return out;
}

inline std::array<std::vector<elem_t>, 4> all_components(const PeirceFrame& f) {
  std::array<std::vector<elem_t>, 4> comps;
  for (std::size_t x = 0; x < f.ring->size(); ++x) {
    ComponentFlags c = component_of(f, static_cast<elem_t>(x));
    if (c.r11) comps[0].push_back(static_cast<elem_t>(x));
    if (c.r12) comps[1].push_back(static_cast<elem_t>(x));
    if (c.r21) comps[2].push_back(static_cast<elem_t>(x));
    if (c.r22) comps[3].push_back(static_cast<elem_t>(x));
  }
  return comps;
}

}  // namespace ringwb
