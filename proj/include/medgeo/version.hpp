#pragma once

namespace medgeo {

inline constexpr const char* version = "0.1.0";

} // namespace medgeo
