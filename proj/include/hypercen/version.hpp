#pragma once

namespace hypercen {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hypercen
