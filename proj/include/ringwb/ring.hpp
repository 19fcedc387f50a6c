#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringwb/common.hpp"
#include "ringwb/parallel.hpp"

namespace ringwb {

// Operation tables of a candidate ring, before validation.
struct RawRing {
  std::size_t size = 0;
  std::vector<elem_t> add;  // flat size*size, row-major
  std::vector<elem_t> mul;  // flat size*size, row-major
  elem_t zero = 0;
  std::optional<elem_t> unity;
  std::vector<std::string> labels;  // empty, or one per element
};

// A finite ring given by explicit addition and multiplication tables.
// Immutable once built; every operation is a table read, so instances are
// safe to share across threads.
class FiniteRing {
 public:
  std::size_t size() const { return size_; }
  elem_t add(elem_t x, elem_t y) const { return add_[idx(x, y)]; }
  elem_t mul(elem_t x, elem_t y) const { return mul_[idx(x, y)]; }
  elem_t neg(elem_t x) const { return neg_[x]; }
  elem_t sub(elem_t x, elem_t y) const { return add(x, neg_[y]); }
  elem_t zero() const { return zero_; }
  std::optional<elem_t> unity() const { return unity_; }

  const std::vector<elem_t>& add_table() const { return add_; }
  const std::vector<elem_t>& mul_table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Display label; elements render as decimal indices when no labels are set.
  std::string label(elem_t x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }
  std::optional<elem_t> find_label(std::string_view s) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == s) return static_cast<elem_t>(i);
    return std::nullopt;
  }

  // Structural equality of the operation tables (labels ignored).
  bool same_tables(const FiniteRing& o) const {
    return size_ == o.size_ && zero_ == o.zero_ && unity_ == o.unity_ &&
           add_ == o.add_ && mul_ == o.mul_;
  }

 private:
  FiniteRing() = default;
  std::size_t idx(elem_t x, elem_t y) const {
    return std::size_t{x} * size_ + y;
  }

  std::size_t size_ = 0;
  std::vector<elem_t> add_;
  std::vector<elem_t> mul_;
  std::vector<elem_t> neg_;  // derived: unique additive inverse per element
  elem_t zero_ = 0;
  std::optional<elem_t> unity_;
  std::vector<std::string> labels_;

  friend FiniteRing validate_ring(const RawRing&, int, std::size_t);
  friend FiniteRing detail_from_formula(RawRing&&);
};

inline RawRing to_raw(const FiniteRing& r) {
  return RawRing{r.size(),  r.add_table(), r.mul_table(),
                 r.zero(),  r.unity(),     r.labels()};
}

namespace detail {

inline std::string witness3(const RawRing& raw, elem_t a, elem_t b, elem_t c) {
  auto lbl = [&](elem_t x) {
    return raw.labels.empty() ? std::to_string(x) : raw.labels[x];
  };
  return "a=" + lbl(a) + ", b=" + lbl(b) + ", c=" + lbl(c);
}

}  // namespace detail

// Trusted constructor path: builds the ring from tables known to come from a
// formula, deriving the inverse table but skipping the O(size^3) law scan.
// Tests cross-check every constructor against validate_ring.
inline FiniteRing detail_from_formula(RawRing&& raw) {
  FiniteRing r;
  r.size_ = raw.size;
  r.add_ = std::move(raw.add);
  r.mul_ = std::move(raw.mul);
  r.zero_ = raw.zero;
  r.unity_ = raw.unity;
  r.labels_ = std::move(raw.labels);
  r.neg_.assign(r.size_, 0);
  for (std::size_t x = 0; x < r.size_; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < r.size_; ++y) {
      if (r.add_[x * r.size_ + y] == r.zero_) {
        r.neg_[x] = static_cast<elem_t>(y);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("formula ring is missing an additive inverse");
  }
  return r;
}

// Checks every ring axiom exhaustively and returns the validated ring.
// Throws invalid_input for shape problems and axiom_violation with the first
// violated law and a witness for semantic problems. The law scan is a single
// fused pass over all triples: additive associativity, both distributive
// laws, then multiplicative associativity (in that priority per triple).
inline FiniteRing validate_ring(const RawRing& raw, int jobs = 1,
                                std::size_t max_size = kDefaultMaxRingSize) {
  const std::size_t n = raw.size;
  if (n < 1) throw invalid_input("ring size must be >= 1");
  if (n > 0xFFFF) throw invalid_input("ring size exceeds the index type");
  if (n > max_size)
    throw invalid_input("ring size " + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(max_size) +
                        " (raise WORKBENCH_MAX_RING_SIZE to override)");
  if (raw.add.size() != n * n || raw.mul.size() != n * n)
    throw invalid_input("operation tables must be size x size");
  for (elem_t v : raw.add)
    if (v >= n) throw invalid_input("add table entry out of range");
  for (elem_t v : raw.mul)
    if (v >= n) throw invalid_input("mul table entry out of range");
  if (raw.zero >= n) throw invalid_input("zero index out of range");
  if (raw.unity && *raw.unity >= n)
    throw invalid_input("unity index out of range");
  if (!raw.labels.empty() && raw.labels.size() != n)
    throw invalid_input("labels must be empty or one per element");

  auto lbl = [&](elem_t x) {
    return raw.labels.empty() ? std::to_string(x) : raw.labels[x];
  };
  auto at = [&](const std::vector<elem_t>& t, elem_t x, elem_t y) {
    return t[std::size_t{x} * n + y];
  };

  const elem_t zero = raw.zero;
  for (std::size_t x = 0; x < n; ++x) {
    elem_t xe = static_cast<elem_t>(x);
    if (at(raw.add, zero, xe) != xe || at(raw.add, xe, zero) != xe)
      throw axiom_violation("additive identity violated: 0 + " + lbl(xe) +
                            " != " + lbl(xe));
  }
  // Each add row must be a permutation; with the identity law this gives a
  // unique inverse for every element.
  {
    std::vector<bool> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t y = 0; y < n; ++y) {
        elem_t v = at(raw.add, static_cast<elem_t>(x), static_cast<elem_t>(y));
        if (seen[v])
          throw axiom_violation(
              "additive group violated: row of " + lbl(static_cast<elem_t>(x)) +
              " in the add table repeats " + lbl(v));
        seen[v] = true;
      }
    }
  }
  {
    auto bad = find_first(std::uint64_t{n} * n, jobs, [&](std::uint64_t k) {
      elem_t x = static_cast<elem_t>(k / n), y = static_cast<elem_t>(k % n);
      return at(raw.add, x, y) != at(raw.add, y, x);
    });
    if (bad) {
      elem_t x = static_cast<elem_t>(*bad / n), y = static_cast<elem_t>(*bad % n);
      throw axiom_violation("additive commutativity violated: " + lbl(x) +
                            " + " + lbl(y) + " != " + lbl(y) + " + " + lbl(x));
    }
  }

  // Fused triple scan. Law codes: 0 add-assoc, 1 left dist, 2 right dist,
  // 3 mul-assoc.
  auto law_at = [&](std::uint64_t k) -> int {
    elem_t a = static_cast<elem_t>(k / (n * n));
    elem_t b = static_cast<elem_t>((k / n) % n);
    elem_t c = static_cast<elem_t>(k % n);
    if (at(raw.add, at(raw.add, a, b), c) != at(raw.add, a, at(raw.add, b, c)))
      return 0;
    if (at(raw.mul, a, at(raw.add, b, c)) !=
        at(raw.add, at(raw.mul, a, b), at(raw.mul, a, c)))
      return 1;
    if (at(raw.mul, at(raw.add, a, b), c) !=
        at(raw.add, at(raw.mul, a, c), at(raw.mul, b, c)))
      return 2;
    if (at(raw.mul, at(raw.mul, a, b), c) != at(raw.mul, a, at(raw.mul, b, c)))
      return 3;
    return -1;
  };
  {
    auto bad = find_first(std::uint64_t{n} * n * n, jobs,
                          [&](std::uint64_t k) { return law_at(k) >= 0; });
    if (bad) {
      elem_t a = static_cast<elem_t>(*bad / (n * n));
      elem_t b = static_cast<elem_t>((*bad / n) % n);
      elem_t c = static_cast<elem_t>(*bad % n);
      switch (law_at(*bad)) {
        case 0:
          throw axiom_violation("additive associativity violated at " +
                                detail::witness3(raw, a, b, c));
        case 1:
          throw axiom_violation(
              "distributivity violated (left): a*(b+c) != a*b + a*c at " +
              detail::witness3(raw, a, b, c));
        case 2:
          throw axiom_violation(
              "distributivity violated (right): (a+b)*c != a*c + b*c at " +
              detail::witness3(raw, a, b, c));
        default:
          throw axiom_violation("multiplicative associativity violated at " +
                                detail::witness3(raw, a, b, c));
      }
    }
  }

  if (raw.unity) {
    elem_t u = *raw.unity;
    for (std::size_t x = 0; x < n; ++x) {
      elem_t xe = static_cast<elem_t>(x);
      if (at(raw.mul, u, xe) != xe || at(raw.mul, xe, u) != xe)
        throw axiom_violation("unity violated: 1 * " + lbl(xe) +
                              " != " + lbl(xe));
    }
  }

  RawRing copy = raw;
  return detail_from_formula(std::move(copy));
}

// ---------------------------------------------------------------------------
// Ring constructors. All emit labeled rings directly from formulas; tests
// feed each of them back through validate_ring.
// ---------------------------------------------------------------------------

// Z_n, labels "0".."n-1". The n=1 case is the zero ring and has no unity.
inline FiniteRing make_zmod(std::size_t n,
                            std::size_t max_size = kDefaultMaxRingSize) {
  if (n < 1) throw invalid_input("make_zmod: n must be >= 1");
  if (n > max_size)
    throw invalid_input("make_zmod: size exceeds cap");
  RawRing raw;
  raw.size = n;
  raw.add.resize(n * n);
  raw.mul.resize(n * n);
  raw.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      raw.add[i * n + j] = static_cast<elem_t>((i + j) % n);
      raw.mul[i * n + j] = static_cast<elem_t>((i * j) % n);
    }
  }
  raw.zero = 0;
  if (n > 1) raw.unity = 1;
  return detail_from_formula(std::move(raw));
}

// Index helpers for the M2(Z_n) carrier: [[a,b],[c,d]] <-> ((a*n+b)*n+c)*n+d.
struct M2Entries {
  std::size_t a, b, c, d;
};
inline elem_t m2_index(std::size_t n, std::size_t a, std::size_t b,
                       std::size_t c, std::size_t d) {
  return static_cast<elem_t>(((a * n + b) * n + c) * n + d);
}
inline M2Entries m2_entries(std::size_t n, elem_t x) {
  std::size_t v = x;
  M2Entries e{};
  e.d = v % n;
  v /= n;
  e.c = v % n;
  v /= n;
  e.b = v % n;
  v /= n;
  e.a = v % n;
  return e;
}
inline std::string m2_label(std::size_t a, std::size_t b, std::size_t c,
                            std::size_t d) {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

// Full 2x2 matrix ring over Z_n, size n^4.
inline FiniteRing make_m2(std::size_t n,
                          std::size_t max_size = kDefaultMaxRingSize) {
  if (n < 2) throw invalid_input("make_m2: n must be >= 2");
  const std::size_t sz = n * n * n * n;
  if (sz > max_size) throw invalid_input("make_m2: size exceeds cap");
  RawRing raw;
  raw.size = sz;
  raw.add.resize(sz * sz);
  raw.mul.resize(sz * sz);
  raw.labels.resize(sz);
  for (std::size_t x = 0; x < sz; ++x) {
    M2Entries p = m2_entries(n, static_cast<elem_t>(x));
    raw.labels[x] = m2_label(p.a, p.b, p.c, p.d);
    for (std::size_t y = 0; y < sz; ++y) {
      M2Entries q = m2_entries(n, static_cast<elem_t>(y));
      raw.add[x * sz + y] = m2_index(n, (p.a + q.a) % n, (p.b + q.b) % n,
                                     (p.c + q.c) % n, (p.d + q.d) % n);
      raw.mul[x * sz + y] =
          m2_index(n, (p.a * q.a + p.b * q.c) % n, (p.a * q.b + p.b * q.d) % n,
                   (p.c * q.a + p.d * q.c) % n, (p.c * q.b + p.d * q.d) % n);
    }
  }
  raw.zero = 0;
  raw.unity = m2_index(n, 1, 0, 0, 1);
  return detail_from_formula(std::move(raw));
}

// Index helpers for the dual-number carrier {(a b; 0 a)}: (a,b) <-> a*n+b.
inline elem_t dual_index(std::size_t n, std::size_t a, std::size_t b) {
  return static_cast<elem_t>(a * n + b);
}
inline std::pair<std::size_t, std::size_t> dual_entries(std::size_t n,
                                                        elem_t x) {
  return {x / n, x % n};
}
inline std::string dual_label(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// The n^2-element ring of matrices (a b; 0 a) over Z_n, stored as pairs
// (a,b) with (a,b)*(c,d) = (ac, ad+bc).
inline FiniteRing make_dual(std::size_t n,
                            std::size_t max_size = kDefaultMaxRingSize) {
  if (n < 2) throw invalid_input("make_dual: n must be >= 2");
  const std::size_t sz = n * n;
  if (sz > max_size) throw invalid_input("make_dual: size exceeds cap");
  RawRing raw;
  raw.size = sz;
  raw.add.resize(sz * sz);
  raw.mul.resize(sz * sz);
  raw.labels.resize(sz);
  for (std::size_t x = 0; x < sz; ++x) {
    auto [a, b] = dual_entries(n, static_cast<elem_t>(x));
    raw.labels[x] = dual_label(a, b);
    for (std::size_t y = 0; y < sz; ++y) {
      auto [c, d] = dual_entries(n, static_cast<elem_t>(y));
      raw.add[x * sz + y] = dual_index(n, (a + c) % n, (b + d) % n);
      raw.mul[x * sz + y] = dual_index(n, (a * c) % n, (a * d + b * c) % n);
    }
  }
  raw.zero = 0;
  raw.unity = dual_index(n, 1, 0);
  return detail_from_formula(std::move(raw));
}

// Direct sum of two rings, componentwise operations; index = ia*|B| + ib.
inline FiniteRing make_product(const FiniteRing& A, const FiniteRing& B,
                               std::size_t max_size = kDefaultMaxRingSize) {
  const std::size_t na = A.size(), nb = B.size(), sz = na * nb;
  if (sz > max_size) throw invalid_input("make_product: size exceeds cap");
  RawRing raw;
  raw.size = sz;
  raw.add.resize(sz * sz);
  raw.mul.resize(sz * sz);
  raw.labels.resize(sz);
  for (std::size_t x = 0; x < sz; ++x) {
    elem_t xa = static_cast<elem_t>(x / nb), xb = static_cast<elem_t>(x % nb);
    raw.labels[x] = "(" + A.label(xa) + "," + B.label(xb) + ")";
    for (std::size_t y = 0; y < sz; ++y) {
      elem_t ya = static_cast<elem_t>(y / nb), yb = static_cast<elem_t>(y % nb);
      raw.add[x * sz + y] =
          static_cast<elem_t>(std::size_t{A.add(xa, ya)} * nb + B.add(xb, yb));
      raw.mul[x * sz + y] =
          static_cast<elem_t>(std::size_t{A.mul(xa, ya)} * nb + B.mul(xb, yb));
    }
  }
  raw.zero = static_cast<elem_t>(std::size_t{A.zero()} * nb + B.zero());
  if (A.unity() && B.unity())
    raw.unity = static_cast<elem_t>(std::size_t{*A.unity()} * nb + *B.unity());
  return detail_from_formula(std::move(raw));
}

// Range-checked index conversion for boundary layers (CLI, JSON).
inline elem_t checked_index(const FiniteRing& r, long long v) {
  if (v < 0 || static_cast<std::size_t>(v) >= r.size())
    throw invalid_input("element index " + std::to_string(v) +
                        " out of range for ring of size " +
                        std::to_string(r.size()));
  return static_cast<elem_t>(v);
}

}  // namespace ringwb
