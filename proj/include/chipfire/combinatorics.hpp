#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "chipfire/error.hpp"

namespace chipfire {

// C(n, k), throwing when the value does not fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw InvalidArgument("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

// k-subsets of {0..n-1} as sorted index vectors, in colexicographic order:
// {0..k-1} first, then ordered by largest element, ties broken downwards.
namespace colex {

inline std::uint64_t count(std::size_t n, std::size_t k) { return binomial(n, k); }

inline std::vector<std::size_t> first(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Advances to the next subset; returns false after the last one.
inline bool next(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

inline std::uint64_t rank(const std::vector<std::size_t>& c) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += binomial(c[i], i + 1);
  return r;
}

inline std::vector<std::size_t> unrank(std::uint64_t r, std::size_t n, std::size_t k) {
  detail::require(r < count(n, k), "colex rank out of range");
  std::vector<std::size_t> c(k);
  std::size_t hi = n;
  for (std::size_t i = k; i-- > 0;) {
    std::size_t v = i;
    // Largest v < hi with C(v, i+1) <= r.
    std::size_t lo_v = i, hi_v = hi - 1;
    while (lo_v < hi_v) {
      std::size_t mid = lo_v + (hi_v - lo_v + 1) / 2;
      if (binomial(mid, i + 1) <= r)
        lo_v = mid;
      else
        hi_v = mid - 1;
    }
    v = lo_v;
    c[i] = v;
    r -= binomial(v, i + 1);
    hi = v;
  }
  return c;
}

}  // namespace colex

// Weak compositions of `total` into `parts` non-negative entries, in
// lexicographic order of the entry vector: (0,..,0,total) first,
// (total,0,..,0) last.
namespace compositions {

inline std::uint64_t count(std::uint64_t total, std::size_t parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, parts - 1);
}

inline std::vector<std::int64_t> unrank(std::uint64_t r, std::uint64_t total, std::size_t parts) {
  detail::require(parts > 0 && r < count(total, parts), "composition rank out of range");
  std::vector<std::int64_t> x(parts, 0);
  std::uint64_t left = total;
  for (std::size_t i = 0; i + 1 < parts; ++i) {
    for (std::uint64_t c = 0;; ++c) {
      const std::uint64_t block = count(left - c, parts - i - 1);
      if (r < block) {
        x[i] = static_cast<std::int64_t>(c);
        left -= c;
        break;
      }
      r -= block;
    }
  }
  x[parts - 1] = static_cast<std::int64_t>(left);
  return x;
}

// Returns false after the last composition.
inline bool next(std::vector<std::int64_t>& x) {
  const std::size_t n = x.size();
  if (n < 2) return false;
  std::size_t i;
  std::int64_t tail;
  if (x[n - 1] > 0) {
    i = n - 2;
    tail = x[n - 1];
  } else {
    std::size_t t = n - 1;
    while (t > 0 && x[t] == 0) --t;
    if (t == 0) return false;
    i = t - 1;
    tail = x[t];
    x[t] = 0;
  }
  ++x[i];
  x[n - 1] = tail - 1;
  return true;
}

}  // namespace compositions

}  // namespace chipfire
