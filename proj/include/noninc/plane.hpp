#ifndef NONINC_PLANE_HPP
#define NONINC_PLANE_HPP

// Projective planes as dense point/line incidence bit-matrices.
//
// Points and lines of PG(2,q) are left-normalized homogeneous triples (the
// first nonzero coordinate is 1) listed in lexicographic order of their
// element indices, so index 0 is always (0,0,1).  Line [a,b,c] contains
// point (x,y,z) iff ax + by + cz = 0.

#include <array>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "noninc/bits.hpp"
#include "noninc/error.hpp"
#include "noninc/gf.hpp"
#include "noninc/index_set.hpp"

namespace noninc {

using Triple = std::array<std::uint32_t, 3>;

/// Largest plane order build_pg2 accepts; the dense matrices are O(q^4) bits.
inline constexpr std::uint32_t max_plane_order = 64;

/// Side n of the plane, or nullopt if n != q^2+q+1 for any q >= 2.
inline std::optional<std::uint32_t> order_from_side(std::size_t n) {
  for (std::uint64_t q = 2; q * q + q + 1 <= n; ++q)
    if (q * q + q + 1 == n) return static_cast<std::uint32_t>(q);
  return std::nullopt;
}

inline void write_incidence(std::ostream& os, const BitMatrix& m) {
  os << "PLANE " << m.rows() << '\n';
  std::string line(m.cols(), '0');
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) line[c] = m.get(r, c) ? '1' : '0';
    os << line << '\n';
  }
}

inline std::string incidence_text(const BitMatrix& m) {
  std::ostringstream os;
  write_incidence(os, m);
  return os.str();
}

/// Parses the `PLANE n` text format.  Rows of the wrong width or a wrong
/// row count are reported as NotSquare; anything else malformed is a
/// ParseError.
inline BitMatrix read_incidence(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  if (text.empty() || text.back() != '\n') throw error(errc::parse_error, "missing trailing newline");

  std::vector<std::string> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  const std::string& header = lines.front();
  if (header.rfind("PLANE ", 0) != 0) throw error(errc::parse_error, "expected 'PLANE n' header");
  std::size_t n = 0;
  {
    const std::string num = header.substr(6);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw error(errc::parse_error, "bad side in header: '" + num + "'");
    n = std::stoul(num);
  }
  if (n == 0) throw error(errc::parse_error, "empty matrix");
  if (lines.size() - 1 != n)
    throw error(errc::not_square, "header declares " + std::to_string(n) + " rows, found " +
                                      std::to_string(lines.size() - 1));
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& row = lines[r + 1];
    if (row.size() != n)
      throw error(errc::not_square, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                        " columns, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] == '1')
        m.set(r, c);
      else if (row[c] != '0')
        throw error(errc::parse_error, "row " + std::to_string(r) + " contains a non-0/1 character");
    }
  }
  return m;
}

/// 64-bit FNV-1a, used to tag imported planes.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

class Plane {
 public:
  /// PG(2,q) over the given field.
  static Plane build_pg2(const FieldTable& f) {
    const std::uint32_t q = f.order();
    if (q > max_plane_order)
      throw error(errc::order_too_large, "plane order " + std::to_string(q) + " exceeds " +
                                             std::to_string(max_plane_order));
    Plane pl;
    pl.q_ = q;
    pl.field_ = f.spec();
    const std::size_t n = std::size_t{q} * q + q + 1;
    pl.points_ = normalized_triples(q);
    pl.lines_ = pl.points_;
    pl.by_point_ = BitMatrix(n, n);

    // Every line is {P1} u {P2 + t P1 : t in GF(q)} for two points P1, P2 on it.
    auto neg = [&](std::uint32_t v) { return f.neg(FieldElement{v}).value; };
    for (std::size_t li = 0; li < n; ++li) {
      const auto [a, b, c] = pl.lines_[li];
      Triple p1, p2;
      if (a == 1) {
        p1 = {neg(b), 1, 0};
        p2 = {neg(c), 0, 1};
      } else if (b == 1) {
        p1 = {1, 0, 0};
        p2 = {0, neg(c), 1};
      } else {
        p1 = {1, 0, 0};
        p2 = {0, 1, 0};
      }
      pl.by_point_.set(pl.point_index(f, p1), li);
      for (std::uint32_t t = 0; t < q; ++t) {
        Triple pt;
        for (int i = 0; i < 3; ++i)
          pt[i] = f.add(FieldElement{p2[i]}, f.mul(FieldElement{t}, FieldElement{p1[i]})).value;
        pl.by_point_.set(pl.point_index(f, pt), li);
      }
    }
    pl.finish();
    pl.check_axioms();
    return pl;
  }

  /// Validates an external incidence matrix (rows = points, columns = lines).
  static Plane from_incidence(BitMatrix m) {
    if (m.rows() != m.cols())
      throw error(errc::not_square, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    const auto q = order_from_side(m.rows());
    if (!q)
      throw error(errc::bad_order, "side " + std::to_string(m.rows()) + " is not q^2+q+1 for any q >= 2");
    Plane pl;
    pl.q_ = *q;
    pl.digest_ = fnv1a64(incidence_text(m));
    pl.by_point_ = std::move(m);
    pl.check_axioms();
    pl.finish();
    return pl;
  }

  std::uint32_t order() const { return q_; }
  std::size_t size() const { return by_point_.rows(); }
  std::size_t num_points() const { return by_point_.rows(); }
  std::size_t num_lines() const { return by_point_.cols(); }

  bool is_constructed() const { return field_.has_value(); }
  const std::optional<FieldSpec>& field() const { return field_; }

  /// Portable identifier written into certificates.
  std::string reference() const {
    std::ostringstream os;
    if (field_) {
      os << "PG2:q=" << q_ << ':' << field_->describe();
    } else {
      os << "import:fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << digest_;
    }
    return os.str();
  }

  const std::vector<Triple>& points() const { return points_; }
  const std::vector<Triple>& lines() const { return lines_; }

  bool incident(std::size_t point, std::size_t line) const {
    if (point >= num_points() || line >= num_lines())
      throw error(errc::index_out_of_range, "incidence query (" + std::to_string(point) + ", " +
                                                std::to_string(line) + ") out of range");
    return by_point_.get(point, line);
  }

  /// Lines through a point, as a bitset over lines.
  std::span<const Word> point_row(std::size_t point) const { return by_point_.row(point); }
  /// Points on a line, as a bitset over points.
  std::span<const Word> line_row(std::size_t line) const { return by_line_.row(line); }
  const std::vector<std::uint32_t>& lines_through(std::size_t point) const { return lines_through_[point]; }
  const std::vector<std::uint32_t>& points_on(std::size_t line) const { return points_on_[line]; }

  const BitMatrix& incidence() const { return by_point_; }

  /// Lines disjoint from Y.
  LineSet external_lines(const PointSet& y) const { return LineSet::from_bits(external_bits(y)); }

  std::vector<Word> external_bits(const PointSet& y) const {
    y.check_range(num_points());
    std::vector<Word> ext = full_bits(num_lines());
    for (auto p : y) {
      const auto row = point_row(p);
      for (std::size_t w = 0; w < ext.size(); ++w) ext[w] &= ~row[w];
    }
    return ext;
  }

  /// Lines meeting Y in at least one point.
  LineSet meeting_lines(const PointSet& y) const {
    std::vector<Word> ext = external_bits(y);
    const auto all = full_bits(num_lines());
    for (std::size_t w = 0; w < ext.size(); ++w) ext[w] = all[w] & ~ext[w];
    return LineSet::from_bits(ext);
  }

  /// |L n Y| for every line L.
  std::vector<std::uint32_t> intersection_sizes(const PointSet& y) const {
    const auto mask = y.to_bits(num_points());
    std::vector<std::uint32_t> out(num_lines());
    for (std::size_t l = 0; l < num_lines(); ++l)
      out[l] = static_cast<std::uint32_t>(popcount_and(line_row(l), mask));
    return out;
  }

 private:
  Plane() = default;

  static std::vector<Triple> normalized_triples(std::uint32_t q) {
    std::vector<Triple> out;
    out.reserve(std::size_t{q} * q + q + 1);
    out.push_back({0, 0, 1});
    for (std::uint32_t z = 0; z < q; ++z) out.push_back({0, 1, z});
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) out.push_back({1, y, z});
    return out;
  }

  // Index of the normalization of a nonzero triple.
  std::size_t point_index(const FieldTable& f, Triple t) const {
    std::size_t lead = 0;
    while (t[lead] == 0) ++lead;
    const FieldElement s = f.inv(FieldElement{t[lead]});
    for (auto& v : t) v = f.mul(s, FieldElement{v}).value;
    if (lead == 2) return 0;
    if (lead == 1) return 1 + t[2];
    return 1 + q_ + std::size_t{t[1]} * q_ + t[2];
  }

  void finish() {
    by_line_ = by_point_.transposed();
    lines_through_.assign(num_points(), {});
    points_on_.assign(num_lines(), {});
    for (std::size_t p = 0; p < num_points(); ++p)
      for_each_bit(by_point_.row(p), [&](std::size_t l) {
        lines_through_[p].push_back(static_cast<std::uint32_t>(l));
        points_on_[l].push_back(static_cast<std::uint32_t>(p));
      });
  }

  void check_axioms() const {
    const std::size_t n = by_point_.rows();
    const std::size_t k = q_ + 1;
    const BitMatrix cols = by_point_.transposed();
    for (std::size_t r = 0; r < n; ++r)
      if (popcount(by_point_.row(r)) != k)
        throw error(errc::axiom_violation,
                    "point " + std::to_string(r) + " lies on " + std::to_string(popcount(by_point_.row(r))) +
                        " lines, expected " + std::to_string(k),
                    r, std::nullopt);
    for (std::size_t c = 0; c < n; ++c)
      if (popcount(cols.row(c)) != k)
        throw error(errc::axiom_violation,
                    "line " + std::to_string(c) + " has " + std::to_string(popcount(cols.row(c))) +
                        " points, expected " + std::to_string(k),
                    std::nullopt, c);
    // With all degrees equal to q+1, it remains to see every pair of points
    // covered by exactly one line, and dually.
    check_pairs(by_point_, cols, "points", "share", true);
    check_pairs(cols, by_point_, "lines", "meet in", false);
  }

  // rows(i) lists the blocks through element i; blocks(j) the elements of
  // block j.  Counts how often each element pair shares a block.
  static void check_pairs(const BitMatrix& rows, const BitMatrix& blocks, const char* what, const char* verb,
                          bool row_witness) {
    const std::size_t n = rows.rows();
    std::vector<std::uint8_t> seen(n * n, 0);
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < blocks.rows(); ++j) {
      members.clear();
      for_each_bit(blocks.row(j), [&](std::size_t i) { members.push_back(i); });
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          auto& c = seen[members[x] * n + members[y]];
          if (c) report_pair(members[x], members[y], what, verb, row_witness);
          c = 1;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (!seen[x * n + y]) report_pair(x, y, what, verb, row_witness);
  }

  [[noreturn]] static void report_pair(std::size_t a, std::size_t b, const char* what, const char* verb,
                                       bool row_witness) {
    const std::string msg = std::string(what) + " " + std::to_string(a) + " and " + std::to_string(b) + " do not " +
                            verb + " exactly one " + (row_witness ? "line" : "point");
    if (row_witness) throw error(errc::axiom_violation, msg, a, std::nullopt);
    throw error(errc::axiom_violation, msg, std::nullopt, a);
  }

  std::uint32_t q_ = 0;
  std::optional<FieldSpec> field_;
  std::uint64_t digest_ = 0;
  std::vector<Triple> points_;
  std::vector<Triple> lines_;
  BitMatrix by_point_;
  BitMatrix by_line_;
  std::vector<std::vector<std::uint32_t>> lines_through_;
  std::vector<std::vector<std::uint32_t>> points_on_;
};

inline Plane build_pg2(const FieldTable& f) { return Plane::build_pg2(f); }

/// PG(2,q) over the default field of order q.
inline Plane build_pg2(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw error(errc::bad_parameters, std::to_string(q) + " is not a prime power");
  return Plane::build_pg2(FieldTable::build(pk->first, pk->second));
}

inline Plane validate_imported(BitMatrix m) { return Plane::from_incidence(std::move(m)); }

}  // namespace noninc

#endif  // NONINC_PLANE_HPP
