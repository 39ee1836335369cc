#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cgr/codec.hpp"
#include "cgr/fixtures.hpp"
#include "cgr/metrics.hpp"
#include "cgr/search.hpp"
#include "oracles.hpp"

using namespace cgr;

namespace {

const OffsetVector kK2Pif{{0, 1, 2, 2, 4}};

CodeArray k2_pif() { return make_code(CgrParams::from_v1(2), kK2Pif); }

CellGrid erase(CellGrid grid, const ErasurePattern& p, std::uint8_t poison = 1) {
  for (auto& row : grid) {
    for (std::size_t c : p.columns()) row[c] = poison;
  }
  return grid;
}

std::vector<ErasurePattern> all_patterns(std::size_t columns, std::size_t max_erased) {
  std::vector<ErasurePattern> out;
  for (std::uint32_t mask = 0; mask < (1U << columns); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < columns; ++c) {
      if (mask >> c & 1U) cols.push_back(c);
    }
    if (cols.size() <= max_erased) out.emplace_back(cols);
  }
  return out;
}

}  // namespace

TEST(Encode, AllZero) {
  const CodeArray a = k2_pif();
  const Codeword w = encode(a, BitVector(10, 0));
  for (const auto& row : w.cell_values) {
    for (auto v : row) EXPECT_EQ(v, 0);
  }
}

TEST(Encode, SingleVertexLightsItsCells) {
  const CodeArray a = k2_pif();
  BitVector bits(10, 0);
  bits[0] = 1;
  const Codeword w = encode(a, bits);
  // Info cell 0 and the three incident edges (0,1), (0,4), (0,5).
  std::map<std::pair<std::size_t, std::size_t>, int> expected = {{{0, 0}, 1}, {{2, 2}, 1}, {{2, 3}, 1}, {{4, 1}, 1}};
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(w.cell_values[r][c], expected.count({r, c}) ? 1 : 0) << r << "," << c;
  }
}

TEST(Encode, BitFlipTouchesDegreePlusOneCells) {
  Lcg rng(9);
  for (std::size_t v1 : {2, 4, 6}) {
    const CodeArray a = make_code(CgrParams::from_v1(v1), published_fixtures()[v1 / 2 == 1 ? 0 : v1 == 4 ? 1 : 5].completed());
    BitVector bits(a.variable_count());
    for (auto& b : bits) b = draw_bit(rng);
    const Codeword base = encode(a, bits);
    for (VarId v = 0; v < bits.size(); ++v) {
      BitVector flipped = bits;
      flipped[v] ^= 1;
      const Codeword w = encode(a, flipped);
      std::size_t changed = 0;
      for (std::size_t r = 0; r < a.row_count(); ++r) {
        for (std::size_t c = 0; c < a.column_count(); ++c) changed += w.cell_values[r][c] != base.cell_values[r][c];
      }
      EXPECT_EQ(changed, v1 + 2);
    }
  }
}

TEST(Encode, RejectsMissingOrExtraVertices) {
  const CodeArray a = k2_pif();
  EXPECT_THROW(encode(a, BitVector(9, 0)), Error);
  std::map<VarId, std::uint8_t> missing;
  for (VarId v = 0; v < 9; ++v) missing[v] = 0;
  EXPECT_THROW(encode(a, missing), Error);
  auto extra = missing;
  extra[9] = 1;
  extra[10] = 0;
  EXPECT_THROW(encode(a, extra), Error);
  extra.erase(10);
  EXPECT_NO_THROW(encode(a, extra));
}

TEST(Decode, K2EraseFirstThreeColumns) {
  const CodeArray a = k2_pif();
  const BitVector data = random_bits(21, 10);
  const Codeword w = encode(a, data);
  const ErasurePattern p({0, 1, 2});
  const CellGrid received = erase(w.cell_values, p);
  const DecodeReport rep = decode(a, received, p);
  EXPECT_EQ(rep.recovered, data);
  EXPECT_TRUE(rep.peeling_sufficed);

  // Brute force over all 2^10 assignments: exactly one matches columns 3 and 4.
  const auto matches = oracle::consistent_assignments(kK2Pif.values, {3, 4}, w.cell_values);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0], data);
}

TEST(Decode, EmptyPatternIsFree) {
  const CodeArray a = k2_pif();
  const BitVector data = random_bits(4, 10);
  const DecodeReport rep = decode(a, encode(a, data).cell_values, ErasurePattern{});
  EXPECT_EQ(rep.recovered, data);
  EXPECT_EQ(rep.xor_count, 0u);
  EXPECT_TRUE(rep.peeling_sufficed);
}

TEST(Decode, TooManyErasuresIsUnrecoverable) {
  const CodeArray a = k2_pif();
  const Codeword w = encode(a, random_bits(4, 10));
  for (const auto& cols : std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}, {1, 2, 3, 4}, {0, 2, 3, 4}}) {
    const ErasurePattern p(cols);
    try {
      decode(a, erase(w.cell_values, p), p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnrecoverable);
    }
  }
}

TEST(Decode, ErasedValuesAreNeverRead) {
  const CodeArray a = make_code(CgrParams::from_v1(4), published_fixture("k4a").completed());
  const BitVector data = random_bits(17, a.variable_count());
  const Codeword w = encode(a, data);
  const ErasurePattern p({1, 2, 4, 6, 0});
  EXPECT_EQ(decode(a, erase(w.cell_values, p, 0), p).recovered, data);
  EXPECT_EQ(decode(a, erase(w.cell_values, p, 1), p).recovered, data);
}

TEST(Decode, RejectsInconsistentSurvivors) {
  const CodeArray a = k2_pif();
  CellGrid cells = encode(a, random_bits(4, 10)).cell_values;
  cells[0][0] ^= 1;
  EXPECT_THROW(decode(a, cells, ErasurePattern{}), Error);
}

TEST(Decode, ReencodeMatchesSurvivorsOnRandomInstances) {
  Lcg rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto& f = published_fixtures()[draw_below(rng, 9)];
    const CodeArray a = make_code(CgrParams::from_v1(f.v1), f.completed());
    BitVector data(a.variable_count());
    for (auto& b : data) b = draw_bit(rng);
    const Codeword w = encode(a, data);
    const auto perm = random_permutation(rng, a.column_count());
    const std::size_t k = draw_below(rng, std::uint32_t(a.column_count() - 1));
    const ErasurePattern p(std::vector<std::size_t>(perm.begin(), perm.begin() + std::ptrdiff_t(k)));
    const DecodeReport rep = decode(a, erase(w.cell_values, p), p);
    const CellGrid again = encode_cells(a, rep.recovered);
    for (std::size_t r = 0; r < a.row_count(); ++r) {
      for (std::size_t c = 0; c < a.column_count(); ++c) {
        if (!p.contains(c)) {
          EXPECT_EQ(again[r][c], w.cell_values[r][c]);
        }
      }
    }
    EXPECT_EQ(rep.recovered, data);
  }
}

TEST(Decode, PeelingAgreesWithEliminationOnEveryPattern) {
  for (const auto& f : {published_fixture("k2"), published_fixture("k4a"), published_fixture("k4d")}) {
    const CodeArray a = make_code(CgrParams::from_v1(f.v1), f.completed());
    const BitVector data = random_bits(f.v1, a.variable_count());
    const Codeword w = encode(a, data);
    for (const auto& p : all_patterns(a.column_count(), a.column_count() - 2)) {
      const CellGrid rx = erase(w.cell_values, p);
      const DecodeReport rep = decode(a, rx, p);
      EXPECT_TRUE(rep.peeling_sufficed);
      const auto elim = decode_by_elimination(a, rx, p);
      ASSERT_TRUE(elim.has_value());
      EXPECT_EQ(rep.recovered, *elim);
    }
  }
}

TEST(Decode, LinearOverXor) {
  const CodeArray a = make_code(CgrParams::from_v1(4), published_fixture("k4b").completed());
  Lcg rng(77);
  for (int t = 0; t < 30; ++t) {
    BitVector x(a.variable_count()), y(a.variable_count()), s(a.variable_count());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = draw_bit(rng);
      y[i] = draw_bit(rng);
      s[i] = x[i] ^ y[i];
    }
    const auto perm = random_permutation(rng, 7);
    const ErasurePattern p(std::vector<std::size_t>(perm.begin(), perm.begin() + 5));
    const CellGrid cx = encode(a, x).cell_values, cy = encode(a, y).cell_values;
    CellGrid cs = cx;
    for (std::size_t r = 0; r < cs.size(); ++r) {
      for (std::size_t c = 0; c < cs[r].size(); ++c) cs[r][c] ^= cy[r][c];
    }
    const BitVector dx = decode(a, cx, p).recovered, dy = decode(a, cy, p).recovered, ds = decode(a, cs, p).recovered;
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(ds[i], dx[i] ^ dy[i]);
  }
}

TEST(Decode, SingleColumnCostsOneXorPerBit) {
  const CodeArray a = k2_pif();
  const Codeword w = encode(a, random_bits(3, 10));
  for (std::size_t c = 0; c < 5; ++c) {
    const ErasurePattern p({c});
    const DecodeReport rep = decode(a, erase(w.cell_values, p), p);
    EXPECT_LE(rep.xor_count, 5u);
    EXPECT_EQ(rep.xor_count, 5u);  // 2 info + 3 parity cells per column
    EXPECT_EQ(rep.info_xor_count, 2u);
    EXPECT_EQ(decode_complexity(rep, a.params, p), Rational(1, 2));
  }
  EXPECT_EQ(decode_complexity(decode(a, w.cell_values, ErasurePattern{}), a.params, ErasurePattern{}), Rational(0));
}

TEST(Decode, RejectsOutOfRangeColumn) {
  const CodeArray a = k2_pif();
  EXPECT_THROW(decode(a, encode(a, BitVector(10, 0)).cell_values, ErasurePattern({5})), Error);
}

TEST(VerifyMds, K2PifIsMds) {
  const MdsVerdict v = verify_mds(k2_pif());
  EXPECT_TRUE(v.mds);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_EQ(v.patterns_checked, 10u);
}

TEST(VerifyMds, ZeroOffsetsFailWithWitness) {
  const CodeArray a = make_code(CgrParams::from_v1(2), OffsetVector{{0, 0, 0, 0, 0}});
  const MdsVerdict v = verify_mds(a);
  EXPECT_FALSE(v.mds);
  ASSERT_TRUE(v.witness.has_value());
  // Survivors 0 and 1 never mention vertices 3, 4, 8, 9.
  EXPECT_EQ(v.witness->columns(), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_FALSE(oracle::survivors_decodable(2, {0, 0, 0, 0, 0}, {0, 1}));
  const Codeword w = encode(a, BitVector(10, 0));
  EXPECT_THROW(decode(a, w.cell_values, *v.witness), Error);
}

TEST(VerifyMds, PublishedVectors) {
  for (const auto& f : published_fixtures()) {
    const OffsetVector o = f.completed();
    EXPECT_EQ(o.size(), f.v1 * (f.v1 + 3) / 2) << f.name;
    EXPECT_TRUE(verify_mds(make_code(CgrParams::from_v1(f.v1), o)).mds) << f.name;
    EXPECT_TRUE(oracle::is_mds(f.v1, o.values)) << f.name;
  }
}

TEST(VerifyMds, AgreesWithOracleOnRandomVectors) {
  Lcg rng(8);
  int hits = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<std::uint32_t> o = canonical_prefix(4);
    for (int k = 0; k < 6; ++k) o.push_back(draw_below(rng, 7));
    const bool mds = verify_mds(make_code(CgrParams::from_v1(4), OffsetVector{o})).mds;
    EXPECT_EQ(mds, oracle::is_mds(4, o));
    hits += mds;
  }
  std::vector<std::uint32_t> mixed;
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint32_t> o;
    for (int k = 0; k < 5; ++k) o.push_back(draw_below(rng, 5));
    const bool mds = verify_mds(make_code(CgrParams::from_v1(2), OffsetVector{o})).mds;
    EXPECT_EQ(mds, oracle::is_mds(2, o));
    hits += mds;
  }
  EXPECT_GT(hits, 0);
}

TEST(VerifyMds, InvariantUnderColumnRotation) {
  Lcg rng(12);
  for (int t = 0; t < 20; ++t) {
    const std::size_t v1 = t % 2 ? 4 : 2;
    const CgrParams p = CgrParams::from_v1(v1);
    OffsetVector o;
    for (std::size_t r = 0; r < p.rows(); ++r) o.values.push_back(draw_below(rng, std::uint32_t(p.v2())));
    const CodeArray a = make_code(p, o);
    const bool base = verify_mds(a).mds;
    for (std::uint32_t s = 1; s < p.v2(); ++s) EXPECT_EQ(verify_mds(rotate_columns(a, s)).mds, base);
  }
}
