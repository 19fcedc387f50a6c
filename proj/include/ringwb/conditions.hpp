#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/parallel.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

// Outcome of one annihilator condition. On failure the witness is the
// lowest-index element breaking the condition.
struct ConditionResult {
  bool pass = true;
  std::optional<elem_t> witness;
};

struct PrimalityResult {
  bool pass = true;
  std::optional<std::pair<elem_t, elem_t>> witness;  // lexicographically first
};

// M1: xR = 0 implies x = 0. Fails with the first x != 0 killed by every r.
inline ConditionResult check_M1(const FiniteRing& r, int jobs = 1) {
  const std::size_t n = r.size();
  auto w = find_first(n, jobs, [&](std::uint64_t k) {
    elem_t x = static_cast<elem_t>(k);
    if (x == r.zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (r.mul(x, static_cast<elem_t>(i)) != r.zero()) return false;
    return true;
  });
  if (!w) return {};
  return {false, static_cast<elem_t>(*w)};
}

namespace detail {

inline void require_idempotent(const FiniteRing& r, elem_t e) {
  if (e >= r.size()) throw invalid_input("idempotent index out of range");
  if (r.mul(e, e) != e)
    throw invalid_input("element " + r.label(e) + " is not idempotent");
}

}  // namespace detail

// M2: eRx = 0 implies x = 0. Scans the distinct values of eR once.
inline ConditionResult check_M2(const FiniteRing& r, elem_t e, int jobs = 1) {
  detail::require_idempotent(r, e);
  const std::size_t n = r.size();
  std::vector<elem_t> eR;
  {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      elem_t v = r.mul(e, static_cast<elem_t>(i));
      if (!seen[v]) {
        seen[v] = true;
        eR.push_back(v);
      }
    }
  }
  auto w = find_first(n, jobs, [&](std::uint64_t k) {
    elem_t x = static_cast<elem_t>(k);
    if (x == r.zero()) return false;
    for (elem_t v : eR)
      if (r.mul(v, x) != r.zero()) return false;
    return true;
  });
  if (!w) return {};
  return {false, static_cast<elem_t>(*w)};
}

// M3: exeR(1-e) = 0 implies exe = 0, with exeR(1-e) read unity-free as
// {exe*r - exe*r*e : r in R}. The witness is the lowest-index exe != 0 whose
// right multiples are all fixed by e.
inline ConditionResult check_M3(const FiniteRing& r, elem_t e, int jobs = 1) {
  detail::require_idempotent(r, e);
  const std::size_t n = r.size();
  auto w = find_first(n, jobs, [&](std::uint64_t k) {
    elem_t y = static_cast<elem_t>(k);
    if (y == r.zero()) return false;
    if (r.mul(r.mul(e, y), e) != y) return false;  // y must be of the form exe
    for (std::size_t i = 0; i < n; ++i) {
      elem_t t = r.mul(y, static_cast<elem_t>(i));
      if (r.mul(t, e) != t) return false;  // found r with exe*r*(1-e) != 0
    }
    return true;
  });
  if (!w) return {};
  return {false, static_cast<elem_t>(*w)};
}

// Prime ring test: aRb = 0 implies a = 0 or b = 0. Fails with the
// lexicographically first pair (a,b), both nonzero, with aRb = 0.
inline PrimalityResult is_prime(const FiniteRing& r, int jobs = 1) {
  const std::size_t n = r.size();
  auto w = find_first(std::uint64_t{n} * n, jobs, [&](std::uint64_t k) {
    elem_t a = static_cast<elem_t>(k / n), b = static_cast<elem_t>(k % n);
    if (a == r.zero() || b == r.zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (r.mul(r.mul(a, static_cast<elem_t>(i)), b) != r.zero()) return false;
    return true;
  });
  if (!w) return {};
  return {false,
          std::make_pair(static_cast<elem_t>(*w / n), static_cast<elem_t>(*w % n))};
}

}  // namespace ringwb
