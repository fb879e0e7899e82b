#pragma once

// Exact counts of self-complementary split and pseudo-split graphs by
// summation over antimorphism cycle structures. Everything is integer or
// rational arithmetic on arbitrary-precision values; the individual summands
// are non-integral rationals that only clear denominators in total.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace scsplit {

using Count = boost::multiprecision::cpp_int;

// Cycle structure of an antimorphism of an order-4k graph: c_q cycles of
// length 4q, with sum q*c_q = k. Stored as (q, c_q) terms, q ascending,
// c_q >= 1 — i.e. a partition of k.
struct CycleStructure {
  std::vector<std::pair<int, int>> parts;

  int k() const {
    int s = 0;
    for (auto [q, c] : parts) s += q * c;
    return s;
  }
  int order() const { return 4 * k(); }

  bool operator==(const CycleStructure& o) const { return parts == o.parts; }
};

// All cycle structures for order 4k: the partitions of k, enumerated with
// parts ascending (so [1,1,1] before [1,2] before [3]).
inline std::vector<CycleStructure> cycle_structures(int k) {
  if (k < 1) throw std::invalid_argument("cycle_structures: k must be positive");
  std::vector<CycleStructure> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      CycleStructure c;
      for (int q : parts) {
        if (!c.parts.empty() && c.parts.back().first == q)
          ++c.parts.back().second;
        else
          c.parts.emplace_back(q, 1);
      }
      out.push_back(std::move(c));
      return;
    }
    for (int q = min_part; q <= remaining; ++q) {
      parts.push_back(q);
      self(self, remaining - q, q);
      parts.pop_back();
    }
  };
  rec(rec, k, 1);
  return out;
}

// Number of free adjacency choices once an antimorphism of this cycle
// structure is fixed: P = sum_q (q c_q^2 + c_q) + 2 sum_{r<s} c_r c_s gcd(r,s).
inline long exponent_p(const CycleStructure& c) {
  long p = 0;
  for (auto [q, cq] : c.parts) p += static_cast<long>(q) * cq * cq + cq;
  for (std::size_t r = 0; r < c.parts.size(); ++r)
    for (std::size_t s = r + 1; s < c.parts.size(); ++s)
      p += 2L * c.parts[r].second * c.parts[s].second *
           std::gcd(c.parts[r].first, c.parts[s].first);
  return p;
}

namespace detail {

inline Count factorial(int n) {
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// prod_q (4q)^{c_q} * c_q!
inline Count structure_denominator(const CycleStructure& c) {
  Count d = 1;
  for (auto [q, cq] : c.parts) {
    for (int i = 0; i < cq; ++i) d *= 4 * q;
    d *= factorial(cq);
  }
  return d;
}

}  // namespace detail

// Number of self-complementary split graphs of order n up to isomorphism:
// sum over cycle structures of 2^P / (prod (4q)^{c_q} c_q!) at n = 4k, the
// same value at n = 4k+1 (apex extension is a bijection), 0 at other orders,
// and 1 at n = 0 by convention.
inline Count lambda_split(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (n % 4 == 1) return lambda_split(n - 1);
  if (n % 4 != 0) return 0;
  using Rational = boost::multiprecision::cpp_rational;
  Rational total = 0;
  for (const auto& c : cycle_structures(n / 4))
    total += Rational(Count(1) << exponent_p(c), detail::structure_denominator(c));
  if (denominator(total) != 1)
    throw std::logic_error("lambda_split: sum did not reduce to an integer");
  return numerator(total);
}

// Pseudo-split counts: equal to the split count at order 4k; at order 4k+1
// the non-split members correspond to split graphs of order 4k-4 via C5
// removal, giving lambda_{4k} + lambda_{4k-4}.
inline Count lambda_pseudo_split(int n) {
  if (n < 0) return 0;
  if (n % 4 == 0) return lambda_split(n);
  if (n % 4 == 1) return lambda_split(n - 1) + (n >= 5 ? lambda_split(n - 5) : 0);
  return 0;
}

// Number of pairs (sigma, G) where G is a labeled self-complementary split
// graph on 4k vertices and sigma one of its antimorphisms: each cycle
// structure contributes (#permutations of that type) * 2^P. Every summand is
// itself an integer here, and the total equals lambda_split(4k) * (4k)!.
inline Count labeled_count(int k) {
  if (k < 1) throw std::invalid_argument("labeled_count: k must be positive");
  const Count fact = detail::factorial(4 * k);
  Count total = 0;
  for (const auto& c : cycle_structures(k)) {
    const Count den = detail::structure_denominator(c);
    if (fact % den != 0) throw std::logic_error("labeled_count: non-integral term");
    total += (fact / den) << exponent_p(c);
  }
  return total;
}

}  // namespace scsplit
