#pragma once

namespace alb {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace alb
