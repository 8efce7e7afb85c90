#pragma once

namespace detspace {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace detspace
