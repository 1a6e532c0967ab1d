#ifndef CREMONA_VERSION_HPP
#define CREMONA_VERSION_HPP

namespace cremona {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cremona

#endif
