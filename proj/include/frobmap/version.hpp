#pragma once

namespace frobmap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace frobmap
