#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "noninc/bounds.hpp"
#include "noninc/plane.hpp"
#include "oracles.hpp"

using namespace noninc;

namespace {

std::size_t index_of(const std::vector<Triple>& v, Triple t) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), t) - v.begin());
}

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::parse_error;
}

BitMatrix from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == '1') m.set(r, c);
  return m;
}

// Lines {i, i+1, i+3} mod 7: the Fano plane from a difference set.
BitMatrix fano_matrix() {
  BitMatrix m(7, 7);
  for (std::size_t l = 0; l < 7; ++l)
    for (std::size_t d : {0u, 1u, 3u}) m.set((l + d) % 7, l);
  return m;
}

}  // namespace

TEST(Plane, FanoParameters) {
  const Plane pl = build_pg2(2);
  EXPECT_EQ(pl.order(), 2u);
  EXPECT_EQ(pl.num_points(), 7u);
  EXPECT_EQ(pl.num_lines(), 7u);
  for (std::size_t l = 0; l < 7; ++l) EXPECT_EQ(pl.points_on(l).size(), 3u);
  EXPECT_EQ(pl.points().front(), (Triple{0, 0, 1}));
  EXPECT_TRUE(std::is_sorted(pl.points().begin(), pl.points().end()));
}

TEST(Plane, FanoIncidenceExamples) {
  const Plane pl = build_pg2(2);
  const auto& P = pl.points();
  const auto& L = pl.lines();
  EXPECT_FALSE(pl.incident(index_of(P, {1, 0, 0}), index_of(L, {1, 0, 0})));
  EXPECT_TRUE(pl.incident(index_of(P, {0, 1, 0}), index_of(L, {1, 0, 0})));
  EXPECT_TRUE(pl.incident(index_of(P, {1, 1, 1}), index_of(L, {1, 1, 0})));
  EXPECT_EQ(code_of([&] { pl.incident(7, 0); }), errc::index_out_of_range);
  EXPECT_EQ(code_of([&] { pl.incident(0, 7); }), errc::index_out_of_range);
}

TEST(Plane, PrimeOrderIncidenceIsDotProduct) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Plane pl = build_pg2(q);
    for (std::size_t p = 0; p < pl.num_points(); ++p)
      for (std::size_t l = 0; l < pl.num_lines(); ++l)
        ASSERT_EQ(pl.incident(p, l), oracle::prime_dot_zero(pl.points()[p].data(), pl.lines()[l].data(), q));
  }
}

TEST(Plane, BinaryExtensionIncidenceIsDotProduct) {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    const auto f = FieldTable::build(2, k);
    std::uint32_t mod = 0;
    for (std::size_t i = 0; i < f.spec().modulus.size(); ++i) mod |= f.spec().modulus[i] << i;
    const Plane pl = build_pg2(f);
    for (std::size_t p = 0; p < pl.num_points(); ++p)
      for (std::size_t l = 0; l < pl.num_lines(); ++l) {
        const auto& a = pl.points()[p];
        const auto& b = pl.lines()[l];
        const std::uint32_t dot =
            oracle::gf2_mul(a[0], b[0], mod, k) ^ oracle::gf2_mul(a[1], b[1], mod, k) ^ oracle::gf2_mul(a[2], b[2], mod, k);
        ASSERT_EQ(pl.incident(p, l), dot == 0);
      }
  }
}

TEST(Plane, Pg4AxiomsByCounting) {
  const Plane pl = build_pg2(4);
  ASSERT_EQ(pl.num_points(), 21u);
  for (std::size_t l = 0; l < 21; ++l) EXPECT_EQ(pl.points_on(l).size(), 5u);
  for (std::size_t p = 0; p < 21; ++p) EXPECT_EQ(pl.lines_through(p).size(), 5u);
  for (std::size_t a = 0; a < 21; ++a)
    for (std::size_t b = a + 1; b < 21; ++b) {
      int common = 0, meet = 0;
      for (std::size_t l = 0; l < 21; ++l) common += pl.incident(a, l) && pl.incident(b, l);
      for (std::size_t p = 0; p < 21; ++p) meet += pl.incident(p, a) && pl.incident(p, b);
      EXPECT_EQ(common, 1);
      EXPECT_EQ(meet, 1);
    }
}

TEST(Plane, Pg16SampledPairs) {
  const Plane pl = build_pg2(16);
  ASSERT_EQ(pl.num_points(), 273u);
  std::mt19937_64 rng(16);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t a = rng() % 273, b = rng() % 273;
    if (a == b) continue;
    int common = 0;
    for (std::size_t l = 0; l < 273; ++l) common += pl.incident(a, l) && pl.incident(b, l);
    EXPECT_EQ(common, 1);
  }
}

TEST(Plane, DualIsAPlane) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Plane pl = build_pg2(q);
    const Plane dual = validate_imported(pl.incidence().transposed());
    EXPECT_EQ(dual.order(), q);
  }
}

TEST(Plane, OrderCap) {
  EXPECT_EQ(code_of([] { build_pg2(128); }), errc::order_too_large);
  EXPECT_EQ(code_of([] { build_pg2(6); }), errc::bad_parameters);
}

TEST(Import, FanoMatrix) {
  const Plane pl = validate_imported(fano_matrix());
  EXPECT_EQ(pl.order(), 2u);
  EXPECT_FALSE(pl.is_constructed());
  EXPECT_EQ(pl.reference().rfind("import:fnv1a64:", 0), 0u);
}

TEST(Import, AllOnesIsAxiomViolation) {
  BitMatrix m(7, 7);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) m.set(r, c);
  try {
    validate_imported(m);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::axiom_violation);
    EXPECT_EQ(e.row(), 0u);
  }
}

TEST(Import, ShapeErrors) {
  EXPECT_EQ(code_of([] { validate_imported(BitMatrix(7, 8)); }), errc::not_square);
  EXPECT_EQ(code_of([] { validate_imported(BitMatrix(8, 8)); }), errc::bad_order);
  EXPECT_EQ(code_of([] { validate_imported(BitMatrix(3, 3)); }), errc::bad_order);
}

TEST(Import, PairAxiomWitness) {
  // A 2x2 switch (m[a][x]=m[b][y]=1, m[a][y]=m[b][x]=0, flip all four)
  // keeps every row and column sum but breaks the pair axiom.
  BitMatrix m = fano_matrix();
  bool done = false;
  for (std::size_t a = 0; a < 7 && !done; ++a)
    for (std::size_t b = a + 1; b < 7 && !done; ++b)
      for (std::size_t x = 0; x < 7 && !done; ++x)
        for (std::size_t y = 0; y < 7 && !done; ++y)
          if (m.get(a, x) && m.get(b, y) && !m.get(a, y) && !m.get(b, x)) {
            m.set(a, x, false);
            m.set(b, y, false);
            m.set(a, y);
            m.set(b, x);
            done = true;
          }
  ASSERT_TRUE(done);
  try {
    validate_imported(m);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::axiom_violation);
    EXPECT_TRUE(e.row() || e.col());
  }
}

TEST(Import, PermutedRowsStillValid) {
  const Plane pg3 = build_pg2(3);
  BitMatrix m(13, 13);
  for (std::size_t r = 0; r < 13; ++r)
    for (std::size_t c = 0; c < 13; ++c)
      if (pg3.incident(r, c)) m.set((r * 5) % 13, (c * 7 + 2) % 13);
  EXPECT_EQ(validate_imported(m).order(), 3u);
}

TEST(Format, RoundTripIsBitIdentical) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Plane pl = build_pg2(q);
    const std::string text = incidence_text(pl.incidence());
    std::istringstream in(text);
    const Plane back = validate_imported(read_incidence(in));
    EXPECT_EQ(back.incidence(), pl.incidence());
    EXPECT_EQ(incidence_text(back.incidence()), text);
    EXPECT_EQ(back.order(), q);
  }
}

TEST(Format, ExactLayout) {
  const std::string text = incidence_text(from_rows({"110", "011"}));
  EXPECT_EQ(text, "PLANE 2\n110\n011\n");
}

TEST(Format, ParseErrors) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_incidence(in);
  };
  EXPECT_EQ(code_of([&] { parse("PLANE 2\n10\n01"); }), errc::parse_error);  // no trailing newline
  EXPECT_EQ(code_of([&] { parse("PLANE 2\n1x\n01\n"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse("PLAN 2\n10\n01\n"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse("PLANE 2\n10\n"); }), errc::not_square);
  EXPECT_EQ(code_of([&] { parse("PLANE 2\n101\n011\n"); }), errc::not_square);
  EXPECT_EQ(parse("PLANE 2\n10\n01\n"), from_rows({"10", "01"}));
}

TEST(ExternalLines, EmptySetKeepsEveryLine) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Plane pl = build_pg2(q);
    EXPECT_EQ(pl.external_lines({}).size(), std::size_t{q} * q + q + 1);
  }
}

TEST(ExternalLines, FanoTwoPoints) {
  // 7 - (3 + 3 - 1) by inclusion-exclusion, for every pair.
  const Plane pl = build_pg2(2);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = a + 1; b < 7; ++b) EXPECT_EQ(pl.external_lines({a, b}).size(), 2u);
}

TEST(ExternalLines, Pg4Hyperoval) {
  // Conic y^2 = xz plus its nucleus (0,1,0).
  const Plane pl = build_pg2(4);
  const std::uint32_t mod = 0b111;
  std::vector<std::uint32_t> idx{static_cast<std::uint32_t>(index_of(pl.points(), {0, 0, 1})),
                                 static_cast<std::uint32_t>(index_of(pl.points(), {0, 1, 0}))};
  for (std::uint32_t t = 0; t < 4; ++t)
    idx.push_back(static_cast<std::uint32_t>(index_of(pl.points(), {1, t, oracle::gf2_mul(t, t, mod, 2)})));
  const PointSet y = PointSet::from_unsorted(idx);
  ASSERT_EQ(y.size(), 6u);
  // brute-force line scan
  std::size_t brute = 0;
  for (std::size_t l = 0; l < pl.num_lines(); ++l) {
    bool hit = false;
    for (auto p : y) hit = hit || pl.incident(p, l);
    brute += !hit;
  }
  EXPECT_EQ(brute, 6u);
  EXPECT_EQ(pl.external_lines(y).size(), 6u);
}

TEST(ExternalLines, PartitionAndLineBound) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const Plane pl = build_pg2(q);
    const auto n = static_cast<std::uint32_t>(pl.num_points());
    for (int t = 0; t < 100; ++t) {
      const std::uint32_t s = static_cast<std::uint32_t>(rng() % (n + 1));
      const PointSet y(oracle::random_subset(rng, n, s));
      const LineSet ext = pl.external_lines(y);
      const LineSet meet = pl.meeting_lines(y);
      EXPECT_EQ(ext.size() + meet.size(), pl.num_lines());
      for (auto l : ext) EXPECT_FALSE(meet.contains(l));
      EXPECT_LE(Rational(ext.size()), external_line_bound(q, s));
    }
  }
}

TEST(IndexSet, RejectsUnsorted) {
  EXPECT_EQ(code_of([] { PointSet({3, 1}); }), errc::bad_parameters);
  EXPECT_EQ(code_of([] { PointSet({1, 1}); }), errc::bad_parameters);
  EXPECT_EQ(PointSet::from_unsorted({3, 1, 3}), PointSet({1, 3}));
  const Plane pl = build_pg2(2);
  EXPECT_EQ(code_of([&] { pl.external_lines(PointSet({0, 9})); }), errc::index_out_of_range);
}
