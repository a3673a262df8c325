#ifndef QVSL_VERSION_HPP
#define QVSL_VERSION_HPP

namespace qvsl {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace qvsl

#endif
