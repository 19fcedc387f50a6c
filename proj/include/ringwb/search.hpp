#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/involution.hpp"
#include "ringwb/maps.hpp"
#include "ringwb/ring.hpp"

namespace ringwb {

struct SearchConfig {
  AntiAutomorphism sigma;            // validated, bound to the searched ring
  std::size_t limit = 0;             // max maps to emit, 0 = unlimited
  std::uint64_t node_budget = 10'000'000;
  bool deterministic_order = true;   // fixed variable/value order; the solver
                                     // implements no other strategy
};

struct SearchStats {
  std::size_t count = 0;
  bool exhausted = false;  // true iff the whole space was covered
  std::uint64_t nodes = 0;
};

struct SearchOutcome {
  std::vector<RingMap> maps;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

namespace detail {

// Backtracking enumeration of all maps f with f(ab) = f(b)s(a) + s(b)f(a).
//
// The seed f(0) = 0 is forced by the pair (0,0). Whenever f(a) and f(b) are
// both assigned, f(ab) is forced to the identity's right-hand side; a clash
// with an existing assignment prunes the branch. Branching picks the lowest
// unassigned element and tries candidate values in ascending order, so the
// emission sequence is deterministic.
class ReverseMapSearch {
 public:
  ReverseMapSearch(const FiniteRing& r, const AntiAutomorphism& sigma,
                   std::uint64_t node_budget, std::size_t limit)
      : r_(r),
        sig_(sigma.perm),
        budget_(node_budget),
        limit_(limit),
        img_(r.size(), kUnset) {}

  // visit(const RingMap&) -> bool; returning false stops the search.
  template <class Visitor>
  SearchStats run(Visitor&& visit) {
    assigned_.reserve(r_.size());
    img_[r_.zero()] = r_.zero();
    assigned_.push_back(r_.zero());
    bool ok = propagate(0);
    if (ok) dfs(visit);
    SearchStats s;
    s.count = emitted_;
    s.nodes = nodes_;
    s.exhausted = !stopped_;
    return s;
  }

 private:
  static constexpr elem_t kUnset = 0xFFFF;

  // Applies the constraint of the ordered pair (a,b); both images assigned.
  bool force(elem_t a, elem_t b) {
    const elem_t p = r_.mul(a, b);
    const elem_t v =
        r_.add(r_.mul(img_[b], sig_[a]), r_.mul(sig_[b], img_[a]));
    if (img_[p] == kUnset) {
      img_[p] = v;
      assigned_.push_back(p);
      return true;
    }
    return img_[p] == v;
  }

  // Fixpoint pass over pairs touching elements assigned since `from`.
  bool propagate(std::size_t from) {
    for (std::size_t q = from; q < assigned_.size(); ++q) {
      const elem_t y = assigned_[q];
      for (std::size_t t = 0; t < assigned_.size(); ++t) {
        const elem_t z = assigned_[t];
        if (!force(y, z)) return false;
        if (!force(z, y)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    for (std::size_t i = assigned_.size(); i > mark; --i)
      img_[assigned_[i - 1]] = kUnset;
    assigned_.resize(mark);
  }

  template <class Visitor>
  bool dfs(Visitor& visit) {  // false aborts the whole search
    std::size_t x = 0;
    while (x < img_.size() && img_[x] != kUnset) ++x;
    if (x == img_.size()) {
      ++emitted_;
      RingMap m{&r_, img_};
      if (!visit(static_cast<const RingMap&>(m)) ||
          (limit_ != 0 && emitted_ >= limit_)) {
        stopped_ = true;
        return false;
      }
      return true;
    }
    for (std::size_t v = 0; v < r_.size(); ++v) {
      if (nodes_ >= budget_) {
        stopped_ = true;
        return false;
      }
      ++nodes_;
      const std::size_t mark = assigned_.size();
      img_[x] = static_cast<elem_t>(v);
      assigned_.push_back(static_cast<elem_t>(x));
      const bool consistent = propagate(mark);
      const bool keep_going = !consistent || dfs(visit);
      undo(mark);  // also resets img_[x]; x sits at trail position `mark`
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteRing& r_;
  const std::vector<elem_t>& sig_;
  std::uint64_t budget_;
  std::size_t limit_;
  std::vector<elem_t> img_;
  std::vector<elem_t> assigned_;  // trail, in assignment order
  std::uint64_t nodes_ = 0;
  std::size_t emitted_ = 0;
  bool stopped_ = false;
};

inline void require_sigma_bound(const FiniteRing& r,
                                const AntiAutomorphism& sigma) {
  if (!bound_to(sigma, r))
    throw invalid_input("anti-automorphism is bound to a different ring");
}

}  // namespace detail

// Streams every map satisfying the sigma-twisted reverse identity to the
// visitor, in deterministic search order. visit returns false to stop early.
template <class Visitor>
SearchStats for_each_reverse_map(const FiniteRing& r, const SearchConfig& cfg,
                                 Visitor&& visit) {
  detail::require_sigma_bound(r, cfg.sigma);
  detail::ReverseMapSearch search(r, cfg.sigma, cfg.node_budget, cfg.limit);
  return search.run(visit);
}

// Collects the satisfying maps. When the space was fully covered the list is
// canonicalized (sorted by image table), so concurrent exploration schemes
// could never change the reported set.
inline SearchOutcome enumerate_reverse_maps(const FiniteRing& r,
                                            const SearchConfig& cfg) {
  SearchOutcome out;
  SearchStats st = for_each_reverse_map(r, cfg, [&](const RingMap& m) {
    out.maps.push_back(m);
    return true;
  });
  out.exhausted = st.exhausted;
  out.nodes = st.nodes;
  if (out.exhausted)
    std::sort(out.maps.begin(), out.maps.end(),
              [](const RingMap& a, const RingMap& b) { return a.image < b.image; });
  return out;
}

// Brute-force oracle: enumerates all size^size total maps (with prefix
// feasibility pruning, no propagation) and keeps those passing the identity.
// Complete by construction; capped because the space explodes.
inline std::vector<RingMap> naive_enumerate(const FiniteRing& r,
                                            const AntiAutomorphism& sigma,
                                            std::size_t size_cap = 8) {
  detail::require_sigma_bound(r, sigma);
  if (r.size() > size_cap)
    throw invalid_input("naive_enumerate: ring size " +
                        std::to_string(r.size()) + " exceeds cap " +
                        std::to_string(size_cap));
  const std::size_t n = r.size();
  // pairs_due[i]: pairs (a,b) whose constraint becomes checkable once the
  // image at index i is chosen, i.e. max(a, b, ab) == i.
  std::vector<std::vector<std::pair<elem_t, elem_t>>> pairs_due(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      elem_t p = r.mul(static_cast<elem_t>(a), static_cast<elem_t>(b));
      std::size_t hi = std::max({a, b, static_cast<std::size_t>(p)});
      pairs_due[hi].push_back(
          {static_cast<elem_t>(a), static_cast<elem_t>(b)});
    }
  std::vector<elem_t> img(n, 0);
  std::vector<RingMap> out;
  auto consistent_at = [&](std::size_t i) {
    for (auto [a, b] : pairs_due[i]) {
      elem_t lhs = img[r.mul(a, b)];
      elem_t rhs =
          r.add(r.mul(img[b], sigma(a)), r.mul(sigma(b), img[a]));
      if (lhs != rhs) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(RingMap{&r, img});
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      img[i] = static_cast<elem_t>(v);
      if (consistent_at(i)) self(self, i + 1);
    }
    img[i] = 0;
  };
  rec(rec, 0);
  return out;  // ascending assignment yields image tables in lex order
}

struct WitnessSearch {
  std::optional<RingMap> map;  // passes the twisted identity, fails additivity
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

// Looks for a non-additive solution of the sigma-twisted identity. A nullopt
// with exhausted=true proves absence; with exhausted=false it proves nothing.
inline WitnessSearch find_nonadditive_witness(const FiniteRing& r,
                                              const AntiAutomorphism& sigma,
                                              std::uint64_t node_budget) {
  SearchConfig cfg{sigma, 0, node_budget, true};
  WitnessSearch out;
  SearchStats st = for_each_reverse_map(r, cfg, [&](const RingMap& m) {
    if (!check_identity(m, IdentityKind::additive).pass) {
      out.map = m;
      return false;
    }
    return true;
  });
  out.exhausted = st.exhausted;
  out.nodes = st.nodes;
  return out;
}

}  // namespace ringwb
