#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cgr/layout.hpp"
#include "cgr/search.hpp"
#include "oracles.hpp"
#include "printed.hpp"

using namespace cgr;

namespace {

OffsetVector ov(std::vector<std::uint32_t> v) { return OffsetVector{std::move(v)}; }

std::vector<Cell> parity_row(std::initializer_list<std::pair<VarId, VarId>> pairs) {
  std::vector<Cell> row;
  for (auto [a, b] : pairs) row.push_back(Cell::parity(Edge::of(a, b)));
  return row;
}

}  // namespace

TEST(MapUnshifted, K2C5Rows) {
  const CodeArray a = map_unshifted(build_cgr(CgrParams::from_v1(2)));
  ASSERT_EQ(a.row_count(), 5u);
  EXPECT_EQ(a.rows[2], parity_row({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  EXPECT_EQ(a.rows[4], parity_row({{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}));
  EXPECT_EQ(a.offsets, ov({0, 0, 0, 0, 0}));
  EXPECT_EQ(a.row_kinds[4], RowKind(InterRingRow{0, 1}));
}

TEST(MapUnshifted, K4C7Shape) {
  const CodeArray a = map_unshifted(build_cgr(CgrParams::from_v1(4)));
  EXPECT_EQ(a.row_count(), 14u);
  EXPECT_EQ(a.column_count(), 7u);
  EXPECT_EQ(a.row_kinds[13], RowKind(InterRingRow{2, 3}));
  EXPECT_EQ(a.row_kinds[3], RowKind(VertexRow{3}));
  EXPECT_EQ(a.row_kinds[4], RowKind(RingEdgeRow{0}));
}

TEST(ApplyOffsets, ReproducesK2Pif) {
  const CodeArray a = make_code(CgrParams::from_v1(2), ov({0, 1, 2, 2, 4}));
  EXPECT_EQ(printed::to_grid(a), printed::numeric_grid(printed::kK2Pif));
  EXPECT_EQ(a.rows[1][0], Cell::info(6));
  EXPECT_EQ(a.rows[4][0], Cell::parity(Edge::of(4, 9)));
}

TEST(ApplyOffsets, ReproducesK4Pif) {
  const CodeArray a = make_code(CgrParams::from_v1(4), ov({0, 1, 2, 3, 4, 4, 4, 4, 2, 3, 6, 6, 0, 1}));
  EXPECT_EQ(printed::to_grid(a), printed::numeric_grid(printed::kK4Pif));
  EXPECT_EQ(a.rows[13], parity_row({{15, 22}, {16, 23}, {17, 24}, {18, 25}, {19, 26}, {20, 27}, {14, 21}}));
}

TEST(ApplyOffsets, ZeroIsIdentity) {
  const CodeArray base = map_unshifted(build_cgr(CgrParams::from_v1(4)));
  EXPECT_EQ(apply_offsets(base, ov(std::vector<std::uint32_t>(14, 0))), base);
}

TEST(ApplyOffsets, Errors) {
  const CodeArray base = map_unshifted(build_cgr(CgrParams::from_v1(2)));
  try {
    apply_offsets(base, ov({0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  try {
    apply_offsets(base, ov({0, 1, 2, 2, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOffsetOutOfRange);
  }
}

TEST(ApplyOffsets, MatchesFormulaAndPreservesRowsAndColumnBalance) {
  Lcg rng(3);
  for (std::size_t v1 : {2, 4, 6}) {
    const CgrParams p = CgrParams::from_v1(v1);
    const CodeArray base = map_unshifted(build_cgr(p));
    for (int t = 0; t < 20; ++t) {
      OffsetVector o;
      for (std::size_t r = 0; r < p.rows(); ++r) o.values.push_back(draw_below(rng, std::uint32_t(p.v2())));
      const CodeArray a = apply_offsets(base, o);
      for (std::size_t r = 0; r < p.rows(); ++r) {
        auto sorted = [](std::vector<Cell> row) {
          std::sort(row.begin(), row.end(), [](const Cell& x, const Cell& y) { return x.members < y.members; });
          return row;
        };
        EXPECT_EQ(sorted(a.rows[r]), sorted(base.rows[r]));
        for (std::size_t c = 0; c < p.columns(); ++c) {
          EXPECT_EQ(a.at(r, c).members, oracle::cell(v1, o.values, r, c));
        }
      }
      for (std::size_t c = 0; c < p.columns(); ++c) {
        std::size_t info = 0, ring = 0, inter = 0;
        for (std::size_t r = 0; r < p.rows(); ++r) {
          if (a.at(r, c).is_info()) ++info;
          else if (std::holds_alternative<RingEdgeRow>(a.row_kinds[r])) ++ring;
          else ++inter;
        }
        EXPECT_EQ(info, v1);
        EXPECT_EQ(ring, v1);
        EXPECT_EQ(inter, v1 * (v1 - 1) / 2);
      }
    }
  }
}

TEST(ApplyOffsets, ShiftsCompose) {
  Lcg rng(5);
  const CgrParams p = CgrParams::from_v1(4);
  const CodeArray base = map_unshifted(build_cgr(p));
  for (int t = 0; t < 20; ++t) {
    OffsetVector o1, o2, sum;
    for (std::size_t r = 0; r < p.rows(); ++r) {
      o1.values.push_back(draw_below(rng, 7));
      o2.values.push_back(draw_below(rng, 7));
      sum.values.push_back((o1[r] + o2[r]) % 7);
    }
    EXPECT_EQ(apply_offsets(apply_offsets(base, o1), o2), apply_offsets(base, sum));
  }
}

TEST(DeriveOffsets, OffsetVectorsAAndB) {
  const Factorization f = pif_factorize(4);
  const std::vector<std::uint32_t> pi_a = {1, 3, 0, 2};
  EXPECT_EQ(derive_offsets(f, pi_a), ov({0, 1, 2, 3, 4, 4, 4, 4, 2, 3, 6, 6, 0, 1}));
  EXPECT_EQ(derive_offsets(f, identity_pi(4)), ov({0, 1, 2, 3, 4, 4, 4, 4, 3, 1, 6, 6, 2, 0}));
}

TEST(DeriveOffsets, K2AnyPi) {
  const Factorization f = pif_factorize(2);
  const std::vector<std::uint32_t> swapped = {1, 0};
  EXPECT_EQ(derive_offsets(f, identity_pi(2)), ov({0, 1, 2, 2, 4}));
  EXPECT_EQ(derive_offsets(f, swapped), ov({0, 1, 2, 2, 4}));
}

TEST(DeriveOffsets, RejectsNonBijection) {
  const Factorization f = pif_factorize(4);
  const std::vector<std::uint32_t> dup = {0, 0, 1, 2};
  const std::vector<std::uint32_t> range = {0, 1, 2, 4};
  const std::vector<std::uint32_t> short_pi = {0, 1, 2};
  EXPECT_THROW(derive_offsets(f, dup), Error);
  EXPECT_THROW(derive_offsets(f, range), Error);
  EXPECT_THROW(derive_offsets(f, short_pi), Error);
}

TEST(DeriveOffsets, PrefixAndPosInfCountForAllPi) {
  for (std::size_t v1 : {2, 4, 6}) {
    const Factorization f = pif_factorize(v1);
    std::vector<std::uint32_t> pi = identity_pi(v1);
    do {
      const OffsetVector o = derive_offsets(f, pi);
      ASSERT_EQ(o.size(), v1 * (v1 + 3) / 2);
      EXPECT_TRUE(o.has_canonical_prefix(v1));
      const auto tail = o.inter_ring(v1);
      EXPECT_EQ(std::count(tail.begin(), tail.end(), v1 + 2), std::ptrdiff_t(v1 / 2));
      // Each finite-center factor keeps v1/2 - 1 finite diagonals.
      std::map<std::uint32_t, int> counts;
      for (auto x : tail) ++counts[x];
      for (std::uint32_t k = 0; k < v1; ++k) EXPECT_EQ(counts[k], int(v1 / 2 - 1));
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
}
