#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace graphforge {

// Deterministic 64-bit stream (splitmix64). Every random decision in the
// engine flows through this type so that corpora are byte-reproducible
// across platforms; std:: distributions are implementation-defined and
// must not be used on corpus-affecting paths.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(next_u64()) * range;
    return lo + static_cast<int>(wide >> 64);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform_int(0, static_cast<int>(v.size()) - 1))];
  }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform_int(0, i))]);
    }
  }

  // Derive an independent child stream.
  Rng fork(std::uint64_t salt) {
    std::uint64_t z = next_u64();
    return Rng(z ^ (salt * 0xff51afd7ed558ccdULL));
  }

 private:
  std::uint64_t state_;
};

// FNV-1a, used to fold strings into seed derivations.
inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t mix_u64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Per-sample seed derivation: hash(master, component, task, index), with the
// retry counter folded in so rejected samples draw a fresh stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view component,
                                 std::string_view task, std::uint64_t index,
                                 std::uint64_t retry = 0) {
  std::uint64_t h = mix_u64(master ^ hash_str(component));
  h = mix_u64(h ^ hash_str(task));
  h = mix_u64(h ^ index);
  if (retry != 0) h = mix_u64(h ^ (0x9e3779b97f4a7c15ULL * retry));
  return h;
}

}  // namespace graphforge
