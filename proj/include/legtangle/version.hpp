#pragma once

namespace legtangle {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "legtangle/1";

}  // namespace legtangle
