#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "relsens/special.hpp"

namespace relsens {

/// Counter-based random numbers (Philox4x32-10). Every draw is a pure
/// function of (key, index), so parallel loops can index draws by sample
/// and stay bitwise reproducible regardless of thread count.
namespace rng {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

/// Stable substream key from a top-level seed, a stage name and up to two
/// integer indices (level, chain, bootstrap replicate, ...).
std::uint64_t derive_key(std::uint64_t seed, std::string_view stage, std::uint64_t i0 = 0,
                         std::uint64_t i1 = 0);

/// Uniform double strictly inside (0,1) for draw `index` of substream `key`.
double uniform_at(std::uint64_t key, std::uint64_t index);

/// Standard-normal draw for draw `index` of substream `key`.
inline double normal_at(std::uint64_t key, std::uint64_t index) {
  return norm_cdf_inv(uniform_at(key, index));
}

/// Sequential convenience view over a substream.
class Stream {
public:
  explicit Stream(std::uint64_t key) : key_(key) {}
  Stream(std::uint64_t seed, std::string_view stage, std::uint64_t i0 = 0, std::uint64_t i1 = 0)
      : key_(derive_key(seed, stage, i0, i1)) {}

  double uniform() { return uniform_at(key_, next_++); }
  double normal() { return normal_at(key_, next_++); }
  std::uint64_t key() const { return key_; }

private:
  std::uint64_t key_;
  std::uint64_t next_ = 0;
};

}  // namespace rng
}  // namespace relsens
