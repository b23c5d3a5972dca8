#pragma once

namespace nsg {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace nsg
