#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/involution.hpp"
#include "ringwb/parallel.hpp"
#include "ringwb/peirce.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

// An arbitrary total self-map of the carrier, stored as a dense image table.
// No additivity or any other law is assumed.
struct RingMap {
  const FiniteRing* ring = nullptr;
  std::vector<elem_t> image;

  elem_t operator()(elem_t x) const { return image[x]; }
};

inline RingMap make_map(const FiniteRing& r, std::vector<elem_t> image) {
  if (image.size() != r.size())
    throw invalid_input("map image length does not match ring size");
  for (elem_t v : image)
    if (v >= r.size()) throw invalid_input("map image entry out of range");
  return RingMap{&r, std::move(image)};
}

inline RingMap zero_map(const FiniteRing& r) {
  return RingMap{&r, std::vector<elem_t>(r.size(), r.zero())};
}

inline bool maps_equal(const RingMap& a, const RingMap& b) {
  return a.image == b.image;
}

enum class IdentityKind {
  additive,            // f(a+b) = f(a) + f(b)
  derivation,          // f(ab) = f(a)b + a f(b)
  reverse_derivation,  // f(ab) = f(b)a + b f(a)
  star_reverse,        // f(ab) = f(b)a* + b* f(a), * an involution
  sigma_reverse,       // f(ab) = f(b)s(a) + s(b) f(a), s an anti-automorphism
};

inline const char* to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::additive: return "additive";
    case IdentityKind::derivation: return "derivation";
    case IdentityKind::reverse_derivation: return "reverse_derivation";
    case IdentityKind::star_reverse: return "star_reverse";
    default: return "sigma_reverse";
  }
}

inline std::optional<IdentityKind> identity_kind_from(const std::string& s) {
  if (s == "additive") return IdentityKind::additive;
  if (s == "derivation") return IdentityKind::derivation;
  if (s == "reverse_derivation") return IdentityKind::reverse_derivation;
  if (s == "star_reverse") return IdentityKind::star_reverse;
  if (s == "sigma_reverse") return IdentityKind::sigma_reverse;
  return std::nullopt;
}

struct PairWitness {
  elem_t a, b;
};

struct IdentityResult {
  bool pass = true;
  std::optional<PairWitness> witness;  // lexicographically first violation
};

// Decides one of the functional identities for all pairs (a,b), in
// lexicographic index order, stopping at the first violation.
inline IdentityResult check_identity(const RingMap& f, IdentityKind kind,
                                     const AntiAutomorphism* sigma = nullptr,
                                     int jobs = 1) {
  const FiniteRing& r = *f.ring;
  const std::size_t n = r.size();
  const bool twisted =
      kind == IdentityKind::star_reverse || kind == IdentityKind::sigma_reverse;
  if (twisted) {
    if (!sigma)
      throw invalid_input(std::string(to_string(kind)) +
                          " requires an anti-automorphism");
    if (!bound_to(*sigma, r))
      throw invalid_input("anti-automorphism is bound to a different ring");
    if (kind == IdentityKind::star_reverse && !sigma->is_involution)
      throw invalid_input("star_reverse requires an involution");
  }
  auto holds = [&](elem_t a, elem_t b) {
    switch (kind) {
      case IdentityKind::additive:
        return f(r.add(a, b)) == r.add(f(a), f(b));
      case IdentityKind::derivation:
        return f(r.mul(a, b)) == r.add(r.mul(f(a), b), r.mul(a, f(b)));
      case IdentityKind::reverse_derivation:
        return f(r.mul(a, b)) == r.add(r.mul(f(b), a), r.mul(b, f(a)));
      default: {
        const AntiAutomorphism& s = *sigma;
        return f(r.mul(a, b)) == r.add(r.mul(f(b), s(a)), r.mul(s(b), f(a)));
      }
    }
  };
  auto w = find_first(std::uint64_t{n} * n, jobs, [&](std::uint64_t k) {
    return !holds(static_cast<elem_t>(k / n), static_cast<elem_t>(k % n));
  });
  if (!w) return {};
  return {false, PairWitness{static_cast<elem_t>(*w / n),
                             static_cast<elem_t>(*w % n)}};
}

// delta([[a,b],[c,d]]) = [[-b, 2b], [a-2c-d, b]] entrywise mod n, on a ring
// table-equal to make_m2(n).
inline RingMap make_example1_map(const FiniteRing& ring) {
  std::size_t n = detail::root_of(ring.size(), 4);
  if (n < 2 || !ring.same_tables(make_m2(n, ring.size())))
    throw invalid_input("example1 map requires a make_m2 ring");
  auto md = [&](long long v) {
    long long m = static_cast<long long>(n);
    return static_cast<std::size_t>(((v % m) + m) % m);
  };
  std::vector<elem_t> image(ring.size());
  for (std::size_t x = 0; x < ring.size(); ++x) {
    M2Entries p = m2_entries(n, static_cast<elem_t>(x));
    long long a = static_cast<long long>(p.a), b = static_cast<long long>(p.b);
    long long c = static_cast<long long>(p.c), d = static_cast<long long>(p.d);
    image[x] = m2_index(n, md(-b), md(2 * b), md(a - 2 * c - d), md(b));
  }
  return RingMap{&ring, std::move(image)};
}

// delta((a,b)) = (0,b) on a ring table-equal to make_dual(6); in matrix form
// this is (a b; 0 a) -> (0 b; 0 0), read back into carrier coordinates.
inline RingMap make_example2_map(const FiniteRing& ring) {
  if (ring.size() != 36 || !ring.same_tables(make_dual(6, 36)))
    throw invalid_input("example2 map requires the make_dual(6) ring");
  std::vector<elem_t> image(36);
  for (std::size_t x = 0; x < 36; ++x) {
    auto [a, b] = dual_entries(6, static_cast<elem_t>(x));
    (void)a;
    image[x] = dual_index(6, 0, b);
  }
  return RingMap{&ring, std::move(image)};
}

// The inner map p(x) = [a21 - a12, x*] with a = delta(e) split in the frame.
// For any m the commutator x -> [m, x*] satisfies the *-reverse identity, so
// p is an additive *-reverse derivable map whenever e is symmetric.
inline RingMap build_inner_wp(const PeirceFrame& frame, const RingMap& delta) {
  const FiniteRing& r = *frame.ring;
  if (!frame.involution)
    throw invalid_input("build_inner_wp requires a frame with an involution");
  if (!bound_to(*frame.involution, *delta.ring) || delta.ring != frame.ring)
    throw invalid_input("map is bound to a different ring than the frame");
  const AntiAutomorphism& star = *frame.involution;
  PeirceSplit a = peirce_project(frame, delta(frame.e));
  const elem_t m = r.sub(a.x21, a.x12);
  std::vector<elem_t> image(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    elem_t xs = star(static_cast<elem_t>(x));
    image[x] = r.sub(r.mul(m, xs), r.mul(xs, m));
  }
  return RingMap{&r, std::move(image)};
}

// Delta = delta - p. Requires delta to satisfy the *-reverse identity on the
// frame's involution; the reduction then forces Delta(e) = 0.
inline RingMap reduce_delta(const PeirceFrame& frame, const RingMap& delta) {
  const FiniteRing& r = *frame.ring;
  if (!frame.involution)
    throw invalid_input("reduce_delta requires a frame with an involution");
  auto chk =
      check_identity(delta, IdentityKind::star_reverse, &*frame.involution);
  if (!chk.pass)
    throw invalid_input(
        "reduce_delta: map is not *-reverse derivable (fails at a=" +
        r.label(chk.witness->a) + ", b=" + r.label(chk.witness->b) + ")");
  RingMap wp = build_inner_wp(frame, delta);
  std::vector<elem_t> image(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    image[x] = r.sub(delta(static_cast<elem_t>(x)), wp(static_cast<elem_t>(x)));
  RingMap out{&r, std::move(image)};
  if (out(frame.e) != r.zero())
    throw std::logic_error("reduce_delta postcondition failed: Delta(e) != 0");
  return out;
}

}  // namespace ringwb
