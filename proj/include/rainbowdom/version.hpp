#pragma once

namespace rainbowdom {

inline constexpr const char * kVersion = "0.1.0";

} // namespace rainbowdom
