#pragma once

namespace apx {

inline constexpr const char* version_string = "0.2.0";

} // namespace apx
