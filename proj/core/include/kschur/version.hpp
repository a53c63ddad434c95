#pragma once

namespace kschur {

/// Bumped whenever an engine change can alter computed values; part of every cache key.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace kschur
