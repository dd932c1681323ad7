#pragma once

namespace coverlens {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace coverlens
