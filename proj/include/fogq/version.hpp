#pragma once

namespace fogq {

inline constexpr const char* version = "0.1.0";

} // namespace fogq
