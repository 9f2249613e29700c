#ifndef NONINC_CERTIFICATE_HPP
#define NONINC_CERTIFICATE_HPP

#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "noninc/error.hpp"
#include "noninc/index_set.hpp"
#include "noninc/plane.hpp"

namespace noninc {

enum class Provenance { search, arc_construction, manual };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::search: return "search";
    case Provenance::arc_construction: return "arc-construction";
    case Provenance::manual: return "manual";
  }
  return "manual";
}

/// A claimed nonincident pair (Y, M) of s points and s lines.
struct NonincidenceCertificate {
  std::string plane_ref;
  PointSet points;
  LineSet lines;
  std::uint64_t s = 0;
  Provenance provenance = Provenance::manual;
  /// Body of the optional `ARC ...` line (without the keyword).
  std::optional<std::string> arc;

  friend bool operator==(const NonincidenceCertificate&, const NonincidenceCertificate&) = default;
};

/// Certificate for Y using the first |Y| lines of external_lines(Y).
/// Requires at least |Y| external lines.
inline NonincidenceCertificate make_certificate(const Plane& pl, const PointSet& y, Provenance prov) {
  const LineSet ext = pl.external_lines(y);
  if (ext.size() < y.size())
    throw error(errc::bad_parameters, "point set has fewer external lines than points");
  return {pl.reference(), y, ext.prefix(y.size()), y.size(), prov, std::nullopt};
}

/// True iff |Y| = |M| = s and no point of Y lies on a line of M.
/// Throws PlaneMismatch if the certificate names a different plane.
inline bool verify_certificate(const Plane& pl, const NonincidenceCertificate& cert) {
  if (cert.plane_ref != pl.reference())
    throw error(errc::plane_mismatch,
                "certificate is for '" + cert.plane_ref + "', plane is '" + pl.reference() + "'");
  if (cert.points.size() != cert.s || cert.lines.size() != cert.s) return false;
  if (!cert.points.empty() && cert.points.indices().back() >= pl.num_points()) return false;
  if (!cert.lines.empty() && cert.lines.indices().back() >= pl.num_lines()) return false;
  const auto mask = cert.lines.to_bits(pl.num_lines());
  for (auto p : cert.points)
    if (intersects(pl.point_row(p), mask)) return false;
  return true;
}

inline void write_certificate(std::ostream& os, const NonincidenceCertificate& cert) {
  os << "CERT s=" << cert.s << '\n';
  os << "PLANE " << cert.plane_ref << '\n';
  os << 'Y';
  for (auto p : cert.points) os << ' ' << p;
  os << "\nM";
  for (auto l : cert.lines) os << ' ' << l;
  os << '\n';
  if (cert.arc) os << "ARC " << *cert.arc << '\n';
}

inline std::string certificate_text(const NonincidenceCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

namespace detail {

inline std::vector<std::uint32_t> parse_index_line(const std::string& line, char key) {
  if (line.empty() || line[0] != key || (line.size() > 1 && line[1] != ' '))
    throw error(errc::parse_error, std::string("expected '") + key + " ...' line");
  std::vector<std::uint32_t> out;
  std::istringstream is(line.substr(1));
  std::string tok;
  while (is >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw error(errc::parse_error, "bad index '" + tok + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  return out;
}

}  // namespace detail

/// Parses the certificate text format.  Indices are kept as written, so an
/// unsorted or duplicated list is reported as ParseError rather than
/// silently repaired.  Files with an ARC line read back as arc-construction,
/// all others as manual.
inline NonincidenceCertificate read_certificate(std::istream& is) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 4 || lines.size() > 5) throw error(errc::parse_error, "certificate must have 4 or 5 lines");

  NonincidenceCertificate cert;
  const std::string& head = lines[0];
  if (head.rfind("CERT s=", 0) != 0) throw error(errc::parse_error, "expected 'CERT s=<s>'");
  const std::string num = head.substr(7);
  if (num.empty() || num.size() > 9 || num.find_first_not_of("0123456789") != std::string::npos)
    throw error(errc::parse_error, "bad size '" + num + "'");
  cert.s = std::stoull(num);

  if (lines[1].rfind("PLANE ", 0) != 0 || lines[1].size() == 6)
    throw error(errc::parse_error, "expected 'PLANE <ref>'");
  cert.plane_ref = lines[1].substr(6);

  try {
    cert.points = PointSet(detail::parse_index_line(lines[2], 'Y'));
    cert.lines = LineSet(detail::parse_index_line(lines[3], 'M'));
  } catch (const error& e) {
    if (e.code() == errc::bad_parameters) throw error(errc::parse_error, "indices must be strictly increasing");
    throw;
  }

  cert.provenance = Provenance::manual;
  if (lines.size() == 5) {
    if (lines[4].rfind("ARC ", 0) != 0) throw error(errc::parse_error, "expected optional 'ARC ...' line");
    cert.arc = lines[4].substr(4);
    cert.provenance = Provenance::arc_construction;
  }
  return cert;
}

}  // namespace noninc

#endif  // NONINC_CERTIFICATE_HPP
