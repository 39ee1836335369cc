#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgr/error.hpp"

namespace cgr {

/// A vertex of K_{v1+2}: one of the finite labels 0..v1-1 or a sentinel.
/// Ordering is NegInf < every finite label < PosInf.
struct Label {
  enum class Kind : std::uint8_t { kNegInf = 0, kFinite = 1, kPosInf = 2 };

  Kind kind = Kind::kFinite;
  std::uint32_t value = 0;

  static constexpr Label neg_inf() { return {Kind::kNegInf, 0}; }
  static constexpr Label pos_inf() { return {Kind::kPosInf, 0}; }
  static constexpr Label finite(std::uint32_t v) { return {Kind::kFinite, v}; }

  bool is_finite() const { return kind == Kind::kFinite; }

  std::string str() const {
    switch (kind) {
      case Kind::kNegInf: return "-inf";
      case Kind::kPosInf: return "+inf";
      case Kind::kFinite: break;
    }
    return std::to_string(value);
  }

  friend auto operator<=>(const Label&, const Label&) = default;
};

struct LabelPair {
  Label a;
  Label b;

  static LabelPair of(Label x, Label y) { return x < y ? LabelPair{x, y} : LabelPair{y, x}; }

  bool touches_sentinel() const { return !a.is_finite() || !b.is_finite(); }

  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

/// One perfect matching of K_{v1+2}. edges[0] is the center-pointing edge
/// (NegInf, center); the rest are the diagonals in order k = 1..v1/2.
struct Factor {
  Label center;
  std::vector<LabelPair> edges;

  std::vector<LabelPair> diagonals() const { return {edges.begin() + 1, edges.end()}; }
};

struct Factorization {
  std::size_t v1 = 0;
  std::vector<Factor> factors;

  std::size_t order() const { return v1 + 2; }
  Label center_of(std::size_t factor) const { return factors.at(factor).center; }

  /// Index of the factor holding the given edge, or nullopt when absent.
  std::optional<std::size_t> factor_of(LabelPair e) const {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      for (const auto& x : factors[f].edges) {
        if (x == e) return f;
      }
    }
    return std::nullopt;
  }
};

/// Cycle positions 0..v1 hold 0, 1, ..., v1-1, PosInf.
inline std::vector<Label> identity_placement(std::size_t v1) {
  std::vector<Label> out;
  for (std::uint32_t i = 0; i < v1; ++i) out.push_back(Label::finite(i));
  out.push_back(Label::pos_inf());
  return out;
}

inline void check_placement(std::size_t v1, const std::vector<Label>& placement) {
  if (placement.size() != v1 + 1) {
    throw Error(ErrorCode::kInvalidPlacement,
                "placement needs " + std::to_string(v1 + 1) + " labels, got " + std::to_string(placement.size()));
  }
  std::vector<bool> seen(v1, false);
  bool pos_inf = false;
  for (const Label& l : placement) {
    if (l.kind == Label::Kind::kNegInf) {
      throw Error(ErrorCode::kInvalidPlacement, "-inf is the wheel center and cannot sit on the cycle");
    }
    if (l.kind == Label::Kind::kPosInf) {
      if (pos_inf) throw Error(ErrorCode::kInvalidPlacement, "+inf placed twice");
      pos_inf = true;
      continue;
    }
    if (l.value >= v1 || seen[l.value]) {
      throw Error(ErrorCode::kInvalidPlacement, "label " + l.str() + " out of range or repeated");
    }
    seen[l.value] = true;
  }
}

/// Wheel ("GK_{2n}") one-factorization of K_{v1+2}: NegInf at the hub, the
/// placement around the rim. Factor p pairs NegInf with the rim label at
/// position p and joins the rim labels at positions p-k and p+k.
inline Factorization pif_factorize(std::size_t v1, const std::vector<Label>& placement) {
  if (v1 < 2 || v1 % 2 != 0) {
    throw Error(ErrorCode::kInvalidParams, "v1 must be even and >= 2, got " + std::to_string(v1));
  }
  check_placement(v1, placement);
  const std::size_t rim = v1 + 1;
  Factorization out;
  out.v1 = v1;
  for (std::size_t p = 0; p < rim; ++p) {
    Factor f;
    f.center = placement[p];
    f.edges.push_back(LabelPair::of(Label::neg_inf(), placement[p]));
    for (std::size_t k = 1; k <= v1 / 2; ++k) {
      f.edges.push_back(LabelPair::of(placement[(p + rim - k) % rim], placement[(p + k) % rim]));
    }
    out.factors.push_back(std::move(f));
  }
  return out;
}

inline Factorization pif_factorize(std::size_t v1) { return pif_factorize(v1, identity_placement(v1)); }

}  // namespace cgr
