#pragma once

namespace coupon {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace coupon
