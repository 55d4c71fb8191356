#ifndef HOLOCOUNT_BASE_HPP_
#define HOLOCOUNT_BASE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace holocount {

// Element index inside a dense group table. Index 0 is always the identity.
using Elem = int32_t;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

inline uint64_t fnv1a(const void* data, size_t len,
                      uint64_t h = 0xcbf29ce484222325ull) {
  auto p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t hash_mix(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

// Enumeration bounds. These are artifact decisions, not mathematical limits;
// everything is overridable at the call sites that document a bound.
struct Limits {
  static constexpr int kMaxDenseGroup = 5040;      // hard cap on dense tables
  static constexpr int kDefaultDenseGroup = 1000;  // default build refusal
  static constexpr int kSubgroupEnumBound = 64;    // all-subgroup mode
  static constexpr int kNormalEnumBound = 200;     // normal-only mode
  static constexpr int kHolomorphDenseBound = 2048;
};

}  // namespace holocount

#endif  // HOLOCOUNT_BASE_HPP_
