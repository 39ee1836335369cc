#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgr/error.hpp"
#include "cgr/layout.hpp"

namespace cgr {

/// A published offset vector. `printed` is the vector as listed; `completed`
/// restores the full canonical prefix where the listing dropped entries.
struct OffsetFixture {
  std::string name;
  std::size_t v1;
  std::vector<std::uint32_t> printed;

  /// Ring-edge offsets repeated v1 times ahead of the inter-ring tail.
  OffsetVector completed() const {
    const std::size_t pairs = v1 * (v1 - 1) / 2;
    const std::size_t expected = v1 * (v1 + 3) / 2;
    if (printed.size() == expected) return OffsetVector{printed};
    OffsetVector out;
    out.values.assign(printed.begin(), printed.begin() + static_cast<std::ptrdiff_t>(v1));
    out.values.insert(out.values.end(), v1, printed.at(v1));
    out.values.insert(out.values.end(), printed.end() - static_cast<std::ptrdiff_t>(pairs), printed.end());
    return out;
  }
};

inline const std::vector<OffsetFixture>& published_fixtures() {
  static const std::vector<OffsetFixture> fixtures = {
      {"k2", 2, {0, 1, 2, 2, 4}},
      {"k4a", 4, {0, 1, 2, 3, 4, 4, 4, 4, 3, 6, 2, 0, 6, 1}},
      {"k4b", 4, {0, 1, 2, 3, 4, 4, 4, 4, 6, 1, 2, 3, 0, 6}},
      {"k4c", 4, {0, 1, 2, 3, 4, 4, 4, 4, 6, 3, 1, 0, 2, 6}},
      {"k4d", 4, {0, 1, 2, 3, 5, 5, 5, 5, 2, 3, 4, 4, 0, 1}},
      {"k6a", 6, {0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 2, 3, 1, 5, 8, 4, 8, 0, 3, 5, 8, 0, 2, 4, 1}},
      {"k6b", 6, {0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 2, 3, 1, 5, 8, 4, 8, 3, 0, 5, 8, 1, 0, 4, 2}},
      {"k6c", 6, {0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 2, 3, 4, 8, 1, 5, 8, 3, 4, 1, 0, 8, 5, 0, 2}},
      {"k8", 8, {0, 1, 2, 3, 4, 5, 6, 7, 8, 8, 8, 8, 8, 8, 2, 3, 4, 1, 6, 7, 10, 10, 5, 3, 7, 0, 4, 6,
                 7, 1, 4, 5, 10, 2, 1, 0, 0, 5, 6, 10, 3, 2}},
  };
  return fixtures;
}

inline const OffsetFixture& published_fixture(std::string_view name) {
  const auto& all = published_fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const OffsetFixture& f) { return f.name == name; });
  if (it == all.end()) throw Error(ErrorCode::kUnknownFixture, "no offset fixture named '" + std::string(name) + "'");
  return *it;
}

}  // namespace cgr
