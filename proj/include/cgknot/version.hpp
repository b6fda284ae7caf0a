#pragma once

namespace cgknot {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cgknot
