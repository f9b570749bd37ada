#pragma once

namespace cantorsum {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace cantorsum
