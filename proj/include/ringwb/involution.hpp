#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/parallel.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

// A validated anti-automorphism sigma of a ring: additive bijection with
// sigma(xy) = sigma(y)sigma(x). is_involution marks sigma o sigma = id.
struct AntiAutomorphism {
  const FiniteRing* ring = nullptr;
  std::vector<elem_t> perm;
  bool is_involution = false;

  elem_t operator()(elem_t x) const { return perm[x]; }
};

inline bool bound_to(const AntiAutomorphism& s, const FiniteRing& r) {
  return s.ring == &r || (s.ring && s.ring->same_tables(r));
}

// Verifies a permutation as an anti-automorphism of the ring, exhaustively.
// Throws invalid_input for shape problems, axiom_violation with a witness
// pair for the first violated law. With require_involution, a valid
// anti-automorphism that is not self-inverse is rejected as well.
inline AntiAutomorphism validate_antiautomorphism(const FiniteRing& ring,
                                                  std::vector<elem_t> perm,
                                                  bool require_involution = false,
                                                  int jobs = 1) {
  const std::size_t n = ring.size();
  if (perm.size() != n)
    throw invalid_input("permutation length " + std::to_string(perm.size()) +
                        " does not match ring size " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (elem_t v : perm) {
    if (v >= n || seen[v]) throw invalid_input("map is not a bijection");
    seen[v] = true;
  }
  auto bad = find_first(std::uint64_t{n} * n, jobs, [&](std::uint64_t k) {
    elem_t x = static_cast<elem_t>(k / n), y = static_cast<elem_t>(k % n);
    return perm[ring.add(x, y)] != ring.add(perm[x], perm[y]);
  });
  if (bad) {
    elem_t x = static_cast<elem_t>(*bad / n), y = static_cast<elem_t>(*bad % n);
    throw axiom_violation("additivity violated: sigma(x+y) != sigma(x)+sigma(y) at x=" +
                          ring.label(x) + ", y=" + ring.label(y));
  }
  bad = find_first(std::uint64_t{n} * n, jobs, [&](std::uint64_t k) {
    elem_t x = static_cast<elem_t>(k / n), y = static_cast<elem_t>(k % n);
    return perm[ring.mul(x, y)] != ring.mul(perm[y], perm[x]);
  });
  if (bad) {
    elem_t x = static_cast<elem_t>(*bad / n), y = static_cast<elem_t>(*bad % n);
    throw axiom_violation(
        "anti-multiplicativity violated: sigma(xy) != sigma(y)sigma(x) at x=" +
        ring.label(x) + ", y=" + ring.label(y));
  }
  std::optional<std::size_t> non_fixed;
  for (std::size_t x = 0; x < n && !non_fixed; ++x)
    if (perm[perm[x]] != x) non_fixed = x;
  if (require_involution && non_fixed)
    throw axiom_violation("not an involution: sigma(sigma(x)) != x at x=" +
                          ring.label(static_cast<elem_t>(*non_fixed)));
  return AntiAutomorphism{&ring, std::move(perm), !non_fixed};
}

enum class InvolutionFamily { adjugate_m2, transpose_m2, neg_b_dual, identity };

inline const char* to_string(InvolutionFamily f) {
  switch (f) {
    case InvolutionFamily::adjugate_m2: return "adjugate_m2";
    case InvolutionFamily::transpose_m2: return "transpose_m2";
    case InvolutionFamily::neg_b_dual: return "neg_b_dual";
    default: return "identity";
  }
}

namespace detail {

inline std::size_t root_of(std::size_t size, int degree) {
  std::size_t n = 1;
  while (true) {
    std::size_t p = 1;
    for (int i = 0; i < degree; ++i) p *= n;
    if (p == size) return n;
    if (p > size) return 0;
    ++n;
  }
}

}  // namespace detail

// Emits the permutation of a builtin involution family for a matching
// constructor ring; the caller validates it. The ring must be table-equal to
// the family's constructor output, otherwise invalid_input.
inline std::vector<elem_t> builtin_involution(const FiniteRing& ring,
                                              InvolutionFamily family) {
  const std::size_t sz = ring.size();
  std::vector<elem_t> perm(sz);
  switch (family) {
    case InvolutionFamily::identity:
      for (std::size_t i = 0; i < sz; ++i) perm[i] = static_cast<elem_t>(i);
      return perm;
    case InvolutionFamily::adjugate_m2:
    case InvolutionFamily::transpose_m2: {
      std::size_t n = detail::root_of(sz, 4);
      if (n < 2 || !ring.same_tables(make_m2(n, sz)))
        throw invalid_input(std::string(to_string(family)) +
                            " requires a make_m2 ring");
      for (std::size_t x = 0; x < sz; ++x) {
        M2Entries p = m2_entries(n, static_cast<elem_t>(x));
        if (family == InvolutionFamily::transpose_m2)
          perm[x] = m2_index(n, p.a, p.c, p.b, p.d);
        else
          perm[x] = m2_index(n, p.d, (n - p.b) % n, (n - p.c) % n, p.a);
      }
      return perm;
    }
    case InvolutionFamily::neg_b_dual: {
      std::size_t n = detail::root_of(sz, 2);
      if (n < 2 || !ring.same_tables(make_dual(n, sz)))
        throw invalid_input("neg_b_dual requires a make_dual ring");
      for (std::size_t x = 0; x < sz; ++x) {
        auto [a, b] = dual_entries(n, static_cast<elem_t>(x));
        perm[x] = dual_index(n, a, (n - b) % n);
      }
      return perm;
    }
  }
  throw invalid_input("unknown involution family");
}

// All nontrivial idempotents of the ring (e*e = e, e != 0, and e != 1 when a
// unity exists), ascending by index. With symmetric_only, keeps only fixed
// points of the involution.
inline std::vector<elem_t> find_idempotents(const FiniteRing& ring,
                                            bool symmetric_only = false,
                                            const AntiAutomorphism* inv = nullptr) {
  if (symmetric_only) {
    if (!inv) throw invalid_input("symmetric_only requires an involution");
    if (!bound_to(*inv, ring))
      throw invalid_input("involution is bound to a different ring");
  }
  std::vector<elem_t> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    elem_t e = static_cast<elem_t>(i);
    if (ring.mul(e, e) != e) continue;
    if (e == ring.zero()) continue;
    if (ring.unity() && e == *ring.unity()) continue;
    if (symmetric_only && (*inv)(e) != e) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace ringwb
