#pragma once

#include <array>
#include <cstdint>

namespace gammaratio {

/// Philox4x64-10 block function (Salmon et al., Random123): maps a 256-bit
/// counter and a 128-bit key to 256 pseudorandom bits.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;
PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Deterministic random stream keyed by (seed, stream_id).
///
/// Block k of the stream is philox4x64_10({k, 0, 0, 0}, {seed, stream_id});
/// its four words are returned in order. Equal (seed, stream_id) pairs give
/// bit-identical sequences on every platform; distinct stream ids select
/// disjoint keys. A stream is not thread-safe but may be moved freely.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return key_[0]; }
  std::uint64_t stream_id() const noexcept { return key_[1]; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1): ((x >> 11) + 0.5) * 2^-53.
  double uniform() noexcept;

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() noexcept;

 private:
  PhiloxKey key_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int buffer_pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace gammaratio
