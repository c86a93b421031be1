#pragma once

#include "gcmforge/classify.hpp"
#include "gcmforge/gcm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcmforge {

/// A matrix displayed in the source text together with the type claimed
/// for it there.
struct Fixture {
  std::string name;
  Gcm matrix;
  TypeLabel expected;
  std::optional<bool> expected_compact;  // only when compactness is claimed
  std::string source;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);  // throws IndexOutOfRange

struct FixtureCheck {
  const Fixture* fixture = nullptr;
  TypeLabel actual;
  bool pass = false;
};

/// Reclassifies one fixture against its stated label.
FixtureCheck check_fixture(const Fixture& f);

}  // namespace gcmforge
