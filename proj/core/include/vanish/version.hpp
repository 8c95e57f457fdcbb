#ifndef VANISH_VERSION_HPP
#define VANISH_VERSION_HPP

namespace vanish {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vanish

#endif  // VANISH_VERSION_HPP
