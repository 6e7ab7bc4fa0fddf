#pragma once

namespace aim1d {

inline constexpr const char* kToolName = "aim1d";
inline constexpr const char* kVersion = "0.1.0";

// bump on any change to the JSON schema or CSV column layout
inline constexpr int kSchemaVersion = 1;

} // namespace aim1d
