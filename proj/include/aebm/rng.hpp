#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace aebm {

uint64_t fnv1a64(std::string_view bytes);
uint64_t mix64(uint64_t x);  // splitmix64 finalizer

// Deterministic PRNG stream: xoshiro256++ with splitmix64 seed expansion.
// Named substreams are derived by hashing (seed, label), so the draw order
// inside one module can never perturb another module's stream.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  Rng substream(std::string_view label) const;
  Rng substream(std::string_view label, uint64_t index) const;

  uint64_t next_u64();
  uint64_t below(uint64_t n);  // uniform in [0, n), exact (Lemire + rejection)
  double uniform();            // [0, 1), 53-bit
  double normal();             // standard normal, Box-Muller with cached spare

  // Draws an index from an explicit probability vector.
  // The probabilities must be non-negative and sum to 1 within 1e-6.
  int categorical(std::span<const float> probs);
  int categorical(std::span<const double> probs);

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;  // root value, kept for substream derivation
  uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace aebm
