#ifndef EXCHAR_VERSION_HPP
#define EXCHAR_VERSION_HPP

namespace exchar {

// Engine version; part of every result-store key, so cached payloads are
// invalidated by a version bump.
inline constexpr char kEngineVersion[] = "1.0.0";

} // namespace exchar

#endif
