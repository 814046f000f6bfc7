#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace graphph {

// Error taxonomy. The CLI maps ValidationError to exit code 1 and the
// input/format/computation errors to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : InputError {
    using InputError::InputError;
};

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic random source. std::mt19937_64 has a standard-mandated
// output sequence; the <random> distributions do not, so bits are drawn
// and mapped here explicitly to keep results identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t n);

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  private:
    std::mt19937_64 engine_;
};

// Mixes a stream index into a base seed (splitmix64 finalizer), so that
// per-item generators derived from one seed are decorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Number of worker threads: GRAPH_PH_THREADS if set and positive,
// otherwise hardware concurrency (at least 1).
unsigned thread_budget();

// Runs fn(i) for i in [0, count). Work is distributed over at most
// thread_budget() threads (or max_threads if nonzero); each index is
// processed exactly once, so writes into per-index slots stay
// deterministic regardless of the thread count. The first exception
// thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned max_threads = 0);

// Fixed text rendering for reals in CSV output: "%.9g", with "inf" /
// "-inf" for infinities. Byte-stable across platforms for IEEE doubles.
std::string format_real(double value);

}  // namespace graphph
