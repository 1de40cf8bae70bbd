#pragma once

#include <string_view>

namespace trn {

inline constexpr std::string_view kVersion = "0.1.0";

// Name of the bit generator used by all randomized constructions. Certificates
// embed it so a stream can be reproduced on any platform.
inline constexpr std::string_view kPrngName = "splitmix64";

}  // namespace trn
