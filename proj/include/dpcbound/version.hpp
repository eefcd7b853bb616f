#pragma once

namespace dpc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dpc
