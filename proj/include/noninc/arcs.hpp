#ifndef NONINC_ARCS_HPP
#define NONINC_ARCS_HPP

// Denniston maximal arcs in PG(2, 2^v).
//
// With x^2 + bx + 1 irreducible over GF(q), the form Q(x,y) = x^2 + bxy + y^2
// vanishes only at the origin, and for an additive subgroup H of order 2^u
// the affine set {(x,y) : Q(x,y) in H} is a maximal (s, 2^u)-arc with
// s = 1 + (q+1)(2^u - 1).
//
// A maximal (s, beta)-arc always has s = 1 + (q+1)(beta - 1).  The form
// (q+1)(beta - 1) - 1 is sometimes quoted for the same statement; it fails
// the counting identities (q = 4, beta = 2 would give 4, not 6).

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "noninc/bounds.hpp"
#include "noninc/certificate.hpp"
#include "noninc/error.hpp"
#include "noninc/gf.hpp"
#include "noninc/index_set.hpp"
#include "noninc/plane.hpp"

namespace noninc {

inline constexpr std::uint32_t default_max_arc_degree = 6;  // q <= 64

struct DennistonParams {
  std::uint32_t v = 0;
  std::uint32_t u = 0;
  std::uint32_t b = 0;                 ///< element index of the form coefficient
  std::vector<std::uint32_t> basis;    ///< element indices spanning H

  std::string describe() const {
    std::ostringstream os;
    os << "denniston v=" << v << " u=" << u << " b=" << b << " H=";
    for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? "," : "") << basis[i];
    return os.str();
  }
};

struct MaximalArc {
  std::string plane_ref;
  PointSet points;
  std::uint32_t beta = 0;
  std::uint64_t s = 0;
  std::optional<DennistonParams> construction;  ///< nullopt for external arcs
};

struct ArcCheck {
  bool is_arc = false;
  std::optional<std::uint32_t> beta;
  std::uint64_t external = 0;
  std::uint64_t secant = 0;
};

/// Scans every line; Y is an arc iff all nonzero intersections share one size.
inline ArcCheck verify_maximal_arc(const Plane& pl, const PointSet& y) {
  if (y.empty()) throw error(errc::bad_parameters, "arc check needs a nonempty point set");
  ArcCheck out;
  std::optional<std::uint32_t> common;
  bool uniform = true;
  for (auto k : pl.intersection_sizes(y)) {
    if (k == 0) {
      ++out.external;
      continue;
    }
    ++out.secant;
    if (!common)
      common = k;
    else if (*common != k)
      uniform = false;
  }
  out.is_arc = uniform;
  if (uniform) {
    out.beta = common;
    const std::uint64_t q = pl.order(), s = y.size();
    if (Rational(out.external) != external_line_bound(q, s))
      throw error(errc::construction_check_failed, "maximal arc with unexpected external line count");
  }
  return out;
}

/// Denniston (s, 2^u)-arc in PG(2, 2^v).  `pl` must be PG(2, 2^v) over the
/// default field.  The least b with x^2 + bx + 1 irreducible is used.
inline MaximalArc denniston_arc(const Plane& pl, std::uint32_t v, std::uint32_t u) {
  if (v < 2 || u < 1 || u >= v)
    throw error(errc::bad_parameters, "need 0 < u < v (got v=" + std::to_string(v) + ", u=" + std::to_string(u) + ")");
  const FieldTable f = FieldTable::build(2, v);
  if (!pl.field() || !(*pl.field() == f.spec()))
    throw error(errc::plane_mismatch, "plane is not PG(2," + std::to_string(f.order()) + ") over the default field");
  const std::uint32_t q = f.order();

  std::uint32_t b = 1;
  while (b < q && !f.quadratic_irreducible(FieldElement{b})) ++b;
  if (b == q) throw error(errc::construction_check_failed, "no irreducible quadratic found");

  // H = span of 1, x, ..., x^(u-1): exactly the element indices below 2^u.
  const std::uint32_t h_size = 1u << u;
  DennistonParams params{v, u, b, {}};
  for (std::uint32_t i = 0; i < u; ++i) params.basis.push_back(1u << i);

  std::vector<std::uint32_t> idx;
  for (std::uint32_t x = 0; x < q; ++x) {
    const FieldElement fx{x}, xx = f.mul(fx, fx), bx = f.mul(FieldElement{b}, fx);
    for (std::uint32_t y = 0; y < q; ++y) {
      const FieldElement fy{y};
      const FieldElement val = f.add(f.add(xx, f.mul(bx, fy)), f.mul(fy, fy));
      // (1, x, y) sits at index 1 + q + xq + y
      if (val.value < h_size) idx.push_back(1 + q + x * q + y);
    }
  }

  MaximalArc arc{pl.reference(), PointSet(std::move(idx)), h_size, 0, params};
  arc.s = arc.points.size();

  const std::uint64_t expected = 1 + std::uint64_t{q + 1} * (h_size - 1);
  const ArcCheck check = verify_maximal_arc(pl, arc.points);
  if (arc.s != expected || !check.is_arc || check.beta != h_size ||
      check.secant * h_size != arc.s * (q + 1))
    throw error(errc::construction_check_failed, "Denniston set failed the maximal arc check");
  return arc;
}

inline MaximalArc denniston_arc(std::uint32_t v, std::uint32_t u,
                                std::uint32_t max_degree = default_max_arc_degree) {
  if (v < 2 || u < 1 || u >= v)
    throw error(errc::bad_parameters, "need 0 < u < v (got v=" + std::to_string(v) + ", u=" + std::to_string(u) + ")");
  if (v > max_degree)
    throw error(errc::bad_parameters, "2^" + std::to_string(v) + " exceeds the configured order cap 2^" +
                                          std::to_string(max_degree));
  return denniston_arc(build_pg2(FieldTable::build(2, v)), v, u);
}

/// Maximal (s, beta)-arc in PG(2, q) by order and intersection size.  Only
/// the Denniston family is available: q must be 2^v and beta = 2^u with
/// 0 < u < v.  Odd q is refused outright, since PG(2,q) has no nontrivial
/// maximal arcs in odd order (Ball, Blokhuis and Mazzocca).
inline MaximalArc maximal_arc(std::uint64_t q, std::uint64_t beta,
                              std::uint32_t max_degree = default_max_arc_degree) {
  if (q % 2 == 1)
    throw error(errc::odd_order_unsupported,
                "there is no nontrivial maximal arc in the desarguesian plane PG(2,q) for odd q");
  const auto v = log2_exact(q);
  const auto u = log2_exact(beta);
  if (!v || !u) throw error(errc::bad_parameters, "order and beta must be powers of two");
  return denniston_arc(*v, *u, max_degree);
}

/// (Y, external_lines(Y)) for an arc with beta^2 = q.
inline NonincidenceCertificate nonincident_from_arc(const Plane& pl, const MaximalArc& arc) {
  if (arc.plane_ref != pl.reference())
    throw error(errc::plane_mismatch, "arc was built in a different plane");
  const LineSet ext = pl.external_lines(arc.points);
  if (std::uint64_t{arc.beta} * arc.beta != pl.order() || ext.size() != arc.points.size())
    throw error(errc::not_extremal, "arc has " + std::to_string(arc.points.size()) + " points but " +
                                        std::to_string(ext.size()) + " external lines");
  NonincidenceCertificate cert{pl.reference(), arc.points, ext, arc.s, Provenance::arc_construction, std::nullopt};
  if (arc.construction) cert.arc = arc.construction->describe();
  return cert;
}

}  // namespace noninc

#endif  // NONINC_ARCS_HPP
