#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace psmm {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3").  A 64-bit key and a 128-bit counter map to
// 128 random bits; streams are cheap because state is just the counter.
struct Philox4x32 {
  static constexpr std::uint32_t kMult0 = 0xD2511F53u;
  static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(kMult0) * ctr[0];
      const std::uint64_t p1 = std::uint64_t(kMult1) * ctr[2];
      const std::array<std::uint32_t, 4> next = {
          std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
          std::uint32_t(p1),
          std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
          std::uint32_t(p0),
      };
      ctr = next;
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic combination of a base seed with an index (replicate number,
// subject id, ...) into a fresh 64-bit seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

// One substream of randomness, identified by (seed, stream).  Draws with the
// same (seed, stream, position) are identical regardless of what other
// substreams were consumed, which makes per-subject and per-replicate
// generation order-independent.
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() {
    if (have_spare_u64_) {
      have_spare_u64_ = false;
      return spare_u64_;
    }
    const auto out = Philox4x32::block(
        {std::uint32_t(counter_), std::uint32_t(counter_ >> 32),
         std::uint32_t(stream_), std::uint32_t(stream_ >> 32)},
        {std::uint32_t(seed_), std::uint32_t(seed_ >> 32)});
    ++counter_;
    spare_u64_ = (std::uint64_t(out[2]) << 32) | out[3];
    have_spare_u64_ = true;
    return (std::uint64_t(out[0]) << 32) | out[1];
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (deterministic draw count, no rejection).
  double normal() {
    if (have_spare_normal_) {
      have_spare_normal_ = false;
      return spare_normal_;
    }
    // u1 in (0, 1] so log() is finite.
    const double u1 = (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = double(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_normal_ = r * std::sin(a);
    have_spare_normal_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n), n >= 1.  Bitmask rejection keeps it exact;
  // draw count varies with the bits rejected, so use a dedicated substream
  // when reproducibility of neighbouring draws matters.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t(0);
    mask >>= __builtin_clzll(n - 1 | 1);
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < n) return v;
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t spare_u64_ = 0;
  bool have_spare_u64_ = false;
  double spare_normal_ = 0.0;
  bool have_spare_normal_ = false;
};

}  // namespace psmm
