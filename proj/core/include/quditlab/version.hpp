#pragma once

namespace quditlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quditlab
