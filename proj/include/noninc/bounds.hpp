#ifndef NONINC_BOUNDS_HPP
#define NONINC_BOUNDS_HPP

// Exact evaluation of the nonincidence bounds.  Nothing here touches
// floating point: sqrt(q) is removed algebraically, so the integer bound is
// the largest s with s^2 + 2qs <= q^3 + q^2 + q.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "noninc/error.hpp"
#include "noninc/index_set.hpp"
#include "noninc/plane.hpp"

namespace noninc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(std::uint64_t n) {
  const BigInt r = isqrt(BigInt(n));
  return r * r == n;
}

/// Upper bound (q^3 + q^2 + q - qs) / (q + s) on the number of lines
/// disjoint from any s-point set of a plane of order q.
inline Rational external_line_bound(std::uint64_t q, std::uint64_t s) {
  if (q < 2) throw error(errc::bad_parameters, "plane order must be at least 2");
  const BigInt bq(q), bs(s);
  return Rational(bq * bq * bq + bq * bq + bq - bq * bs, bq + bs);
}

/// Largest s with s^2 + 2qs <= q^3 + q^2 + q, i.e. floor(-q + (q+1) sqrt(q)).
inline std::uint64_t stinson_bound(std::uint64_t q) {
  if (q < 2) throw error(errc::bad_parameters, "plane order must be at least 2");
  // (s + q)^2 <= q (q+1)^2
  const BigInt bq(q);
  const BigInt disc = bq * (bq + 1) * (bq + 1);
  return static_cast<std::uint64_t>(isqrt(disc) - bq);
}

/// -q + (q+1) sqrt(q) for a perfect square q; the s where the line bound meets s.
inline std::uint64_t crossing_point(std::uint64_t q) {
  if (q < 1 || !is_perfect_square(q))
    throw error(errc::not_perfect_square, std::to_string(q) + " is not a perfect square");
  const auto r = static_cast<std::uint64_t>(isqrt(BigInt(q)));
  return (q + 1) * r - q;
}

/// Block-count bound r^2 v / (r + lambda (v - 1)) for an (r, lambda) design on v points.
inline Rational mullin_vanstone_bound(std::uint64_t r, std::uint64_t lambda, std::uint64_t v) {
  if (r < 1 || lambda < 1 || v < 1) throw error(errc::bad_parameters, "r, lambda and v must be positive");
  const BigInt br(r), bl(lambda), bv(v);
  return Rational(br * br * bv, br + bl * (bv - 1));
}

/// Nonempty line intersections with a point set Y.
struct BlockProfile {
  std::uint64_t q = 0;
  std::uint64_t s = 0;
  std::uint64_t b = 0;
  std::vector<std::uint32_t> sizes;  ///< one entry per meeting line, in line order

  /// Mean block size through a point of Y: (q + s) / (q + 1).
  Rational beta_bar() const { return Rational(BigInt(q + s), BigInt(q + 1)); }

  std::map<std::uint32_t, std::uint64_t> histogram() const {
    std::map<std::uint32_t, std::uint64_t> h;
    for (auto x : sizes) ++h[x];
    return h;
  }

  BigInt sum_sizes() const {
    BigInt t = 0;
    for (auto x : sizes) t += x;
    return t;
  }
  BigInt sum_pairs() const {
    BigInt t = 0;
    for (auto x : sizes) t += BigInt(x) * (x - 1) / 2;
    return t;
  }
  BigInt sum_squares() const {
    BigInt t = 0;
    for (auto x : sizes) t += BigInt(x) * x;
    return t;
  }

  bool count_identity() const { return sizes.size() == b; }
  bool size_identity() const { return sum_sizes() == BigInt(q + 1) * s; }
  bool pair_identity() const { return sum_pairs() == BigInt(s) * (s == 0 ? 0 : s - 1) / 2; }
  bool square_identity() const { return sum_squares() == BigInt(s) * (q + s); }
  bool identities_hold() const {
    return count_identity() && size_identity() && pair_identity() && square_identity();
  }

  /// (q+1)^2 s / (q+s), the least possible b.
  Rational min_blocks() const { return Rational(BigInt(q + 1) * (q + 1) * s, BigInt(q + s)); }
  bool all_sizes_equal_mean() const {
    const Rational beta = beta_bar();
    for (auto x : sizes)
      if (Rational(x) != beta) return false;
    return true;
  }
};

/// Computes the profile and asserts the four counting identities.
inline BlockProfile block_profile(const Plane& pl, const PointSet& y) {
  if (y.empty()) throw error(errc::bad_parameters, "block profile needs a nonempty point set");
  BlockProfile bp;
  bp.q = pl.order();
  bp.s = y.size();
  for (auto k : pl.intersection_sizes(y))
    if (k > 0) bp.sizes.push_back(k);
  bp.b = bp.sizes.size();
  if (!bp.identities_hold())
    throw error(errc::construction_check_failed, "block profile counting identities violated");
  return bp;
}

}  // namespace noninc

#endif  // NONINC_BOUNDS_HPP
