#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cgr/codec.hpp"
#include "cgr/error.hpp"
#include "cgr/factorization.hpp"
#include "cgr/gf2.hpp"
#include "cgr/layout.hpp"

namespace cgr {

/// 64-bit LCG with Knuth's MMIX constants, modulus 2^64.
using Lcg = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

/// Uniform-ish draw in [0, n): high 32 bits of the next state, reduced mod n.
inline std::uint32_t draw_below(Lcg& rng, std::uint32_t n) {
  return static_cast<std::uint32_t>((rng() >> 32) % n);
}

/// Top bit of the next state.
inline std::uint8_t draw_bit(Lcg& rng) { return static_cast<std::uint8_t>(rng() >> 63); }

inline std::vector<std::uint8_t> random_bits(std::uint64_t seed, std::size_t n) {
  Lcg rng(seed);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = draw_bit(rng);
  return out;
}

/// Fisher-Yates, swapping position i with draw_below(i + 1) for i = n-1 down to 1.
inline std::vector<std::uint32_t> random_permutation(Lcg& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = n; i-- > 1;) {
    std::swap(p[i], p[draw_below(rng, static_cast<std::uint32_t>(i + 1))]);
  }
  return p;
}

namespace detail {

/// verify_mds(apply_offsets(base, offsets)).mds without materializing the
/// shifted array. Cell (r, c) of the shifted array is base (r, c + offsets[r]).
inline bool is_mds_shifted(const CodeArray& base, std::span<const std::uint32_t> offsets) {
  const std::size_t cols = base.column_count();
  const std::size_t n = base.variable_count();
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = a + 1; b < cols; ++b) {
      Gf2System sys(n);
      for (std::size_t r = 0; r < base.row_count(); ++r) {
        for (std::size_t c : {a, b}) {
          const Cell& cell = base.at(r, (c + offsets[r]) % cols);
          if (!cell.is_empty()) sys.add_equation(std::span<const VarId>(cell.members), 0);
        }
      }
      if (sys.rank() < n) return false;
    }
  }
  return true;
}

/// Runs fn(i) for i in [0, count) over the available hardware threads.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

enum class SearchStrategy { kExhaustive, kRandom };

struct SearchSpec {
  CgrParams params;
  /// Hold entries 0..2v1-1 at the canonical prefix values; only inter-ring rows vary.
  bool fix_prefix = true;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 0;
  /// Maximum vectors to return; 0 returns every hit.
  std::size_t stop_after = 0;
  /// Upper bound on full verifications an exhaustive run may perform.
  std::uint64_t budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t space_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  /// Exact number of MDS vectors in the space; set by exhaustive runs only.
  std::optional<std::uint64_t> exact_valid_count;
};

struct SearchResult {
  std::vector<OffsetVector> vectors;
  SearchStats stats;
};

inline std::vector<std::uint32_t> canonical_prefix(std::size_t v1) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < v1; ++j) out.push_back(j);
  out.insert(out.end(), v1, static_cast<std::uint32_t>(v1));
  return out;
}

/// v2^free, saturating at UINT64_MAX.
inline std::uint64_t search_space_size(const SearchSpec& spec) {
  const std::size_t free = spec.fix_prefix ? spec.params.ring_pair_count() : spec.params.rows();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < free; ++i) {
    if (size > UINT64_MAX / spec.params.v2()) return UINT64_MAX;
    size *= spec.params.v2();
  }
  return size;
}

inline SearchResult search(const SearchSpec& spec) {
  const CgrParams& p = spec.params;
  const CodeArray base = map_unshifted(build_cgr(p));
  const std::vector<std::uint32_t> prefix = spec.fix_prefix ? canonical_prefix(p.v1()) : std::vector<std::uint32_t>{};
  const std::size_t free = p.rows() - prefix.size();
  const auto v2 = static_cast<std::uint32_t>(p.v2());

  SearchResult result;
  result.stats.space_size = search_space_size(spec);

  auto keep = [&](std::vector<std::uint32_t> v) {
    ++result.stats.hits;
    if (spec.stop_after == 0 || result.vectors.size() < spec.stop_after) result.vectors.push_back(OffsetVector{std::move(v)});
  };

  if (spec.strategy == SearchStrategy::kExhaustive) {
    if (result.stats.space_size > spec.budget) {
      throw Error(ErrorCode::kBudgetExceeded, "exhaustive space " + std::to_string(v2) + "^" + std::to_string(free) +
                                                  " exceeds budget " + std::to_string(spec.budget));
    }
    const std::uint64_t total = result.stats.space_size;
    auto vector_at = [&](std::uint64_t index) {
      std::vector<std::uint32_t> v = prefix;
      v.resize(p.rows());
      for (std::size_t k = p.rows(); k-- > prefix.size();) {
        v[k] = static_cast<std::uint32_t>(index % v2);
        index /= v2;
      }
      return v;
    };
    std::vector<std::uint8_t> ok(total, 0);
    detail::parallel_for(total, [&](std::size_t i) { ok[i] = detail::is_mds_shifted(base, vector_at(i)) ? 1 : 0; });
    for (std::uint64_t i = 0; i < total; ++i) {
      if (ok[i]) keep(vector_at(i));
    }
    result.stats.trials = total;
    result.stats.exact_valid_count = result.stats.hits;
    return result;
  }

  // Random: vectors come from one sequential stream; checks run in batches
  // and are consumed in trial order so the outcome does not depend on threads.
  Lcg rng(spec.seed);
  constexpr std::uint64_t kBatch = 256;
  std::uint64_t done = 0;
  while (done < spec.max_trials) {
    const std::uint64_t n = std::min(kBatch, spec.max_trials - done);
    std::vector<std::vector<std::uint32_t>> batch(n);
    for (auto& v : batch) {
      v = prefix;
      for (std::size_t k = 0; k < free; ++k) v.push_back(draw_below(rng, v2));
    }
    std::vector<std::uint8_t> ok(n, 0);
    detail::parallel_for(n, [&](std::size_t i) { ok[i] = detail::is_mds_shifted(base, batch[i]) ? 1 : 0; });
    for (std::uint64_t i = 0; i < n; ++i) {
      ++result.stats.trials;
      if (ok[i]) keep(std::move(batch[i]));
      if (spec.stop_after != 0 && result.stats.hits >= spec.stop_after) return result;
    }
    done += n;
  }
  return result;
}

/// Per-vector MDS verdicts for a list of (v1, offsets) entries.
inline std::vector<MdsVerdict> validate_fixture_set(std::span<const std::pair<std::size_t, OffsetVector>> vectors) {
  std::vector<MdsVerdict> out;
  for (const auto& [v1, offsets] : vectors) out.push_back(verify_mds(make_code(CgrParams::from_v1(v1), offsets)));
  return out;
}

/// Every bijection pi (lexicographic order) whose derived offset vector is MDS.
inline std::vector<std::vector<std::uint32_t>> valid_pi_assignments(std::size_t v1, const std::vector<Label>& placement) {
  const Factorization fact = pif_factorize(v1, placement);
  const CodeArray base = map_unshifted(build_cgr(CgrParams::from_v1(v1)));
  std::vector<std::uint32_t> pi = identity_pi(v1);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    if (detail::is_mds_shifted(base, derive_offsets(fact, pi).values)) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

}  // namespace cgr
