#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace scor {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

inline constexpr const char* kRngName = "philox4x32-10";

/// Identifies one independent random stream: (seed, replication, role).
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint32_t replication = 0;
  std::uint32_t role = 0;
};

/// 64-bit UniformRandomBitGenerator over a Philox stream.
///
/// The key is the seed; counter words 2 and 3 hold (replication, role) and words
/// 0-1 a 64-bit block index, so streams never overlap and need no shared state.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  explicit PhiloxEngine(StreamKey stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1).
  double uniform_open() noexcept;
  /// Standard normal by the Box-Muller transform.
  double normal() noexcept;

 private:
  PhiloxKey key_;
  std::uint32_t replication_;
  std::uint32_t role_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace scor
