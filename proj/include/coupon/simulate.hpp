#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace coupon {

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

// splitmix64 step; also reused as a standalone 64-bit finalizer.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic per-trial random stream: xoshiro256++ whose state is derived
// from a 128-bit mix of (master_seed, trial_index), expanded through
// splitmix64. Distinct trial indices give independent streams regardless of
// execution order, which is what makes parallel batches reproducible.
//
// Draw protocol (fixed; the coupled runner relies on it):
//   - initial state: n fair bits, bit i from draw i (top bit of one word each)
//   - one uniform index in [0, n) per round, via unbiased rejection
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t sm = mix64(master_seed + 0x9E3779B97F4A7C15ull) ^
                       mix64(trial_index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull);
    for (auto& word : state_) word = splitmix64_next(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
      state_[0] = 0x9E3779B97F4A7C15ull;  // xoshiro state must not be all zero
    }
  }

  std::uint64_t next_word() {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  bool next_bit() { return next_word() >> 63; }

  // Uniform in [0, n), unbiased: reject the top 2^64 mod n values of the
  // native word (modulo bias would distort hitting-time means at the level
  // the statistical checks resolve).
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r = next_word();
    while (r > ~rem) r = next_word();
    return r % n;
  }

  // Uniform in (0, 1].
  double next_unit() {
    return static_cast<double>((next_word() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

// ---------------------------------------------------------------------------
// Search points / coupon sets
// ---------------------------------------------------------------------------

class BitString {
 public:
  explicit BitString(std::uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return n_; }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::uint64_t count_ones() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  bool operator==(const BitString&) const = default;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Fitness functions
// ---------------------------------------------------------------------------

// Strictly monotone pseudo-Boolean fitness: flipping any 0-bit to 1 strictly
// increases it, flipping any 1-bit to 0 strictly decreases it. Acceptance
// decisions go through compare() rather than value() so that orders finer
// than double precision (BinVal past 53 bits) stay exact.
class MonotoneFitness {
 public:
  virtual ~MonotoneFitness() = default;

  virtual double value(const BitString& x) const = 0;

  // Three-way fitness order: negative/zero/positive as f(a) </==/> f(b).
  virtual int compare(const BitString& a, const BitString& b) const {
    const double fa = value(a);
    const double fb = value(b);
    return (fa > fb) - (fa < fb);
  }
};

enum class FitnessKind { kOneMax, kBinVal, kRandomPositiveLinear };

// onemax: number of ones. binval: sum of 2^i x_i, compared lexicographically
// on the underlying words (exact for any n; value() saturates past double
// range). random-positive-linear: sum of w_i x_i with w_i i.i.d. uniform on
// (0, 1], drawn deterministically from `seed`.
std::unique_ptr<MonotoneFitness> make_fitness(FitnessKind kind, std::uint64_t n,
                                              std::uint64_t seed);

std::string_view to_string(FitnessKind kind);
std::optional<FitnessKind> parse_fitness_kind(std::string_view name);

// ---------------------------------------------------------------------------
// Trials
// ---------------------------------------------------------------------------

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t initial_count = 0;  // collected types / ones in the initial state
  std::uint64_t hitting_time = 0;   // rounds until complete; 0 iff initially complete
  bool operator==(const TrialRecord&) const = default;
};

// Coupon collector with random initial stake: draw n fair bits, then mark a
// uniform type per round until all n are collected. `trajectory`, when
// given, receives the collected-count after every round.
template <class Stream>
TrialRecord run_coupon_trial(std::uint64_t n, Stream& stream,
                             std::vector<std::uint32_t>* trajectory = nullptr) {
  BitString owned(n);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (stream.next_bit()) {
      owned.set(i);
      ++count;
    }
  }
  TrialRecord rec;
  rec.initial_count = count;
  std::uint64_t rounds = 0;
  while (count < n) {
    const std::uint64_t j = stream.next_index(n);
    ++rounds;
    if (!owned.test(j)) {
      owned.set(j);
      ++count;
    }
    if (trajectory) trajectory->push_back(static_cast<std::uint32_t>(count));
  }
  rec.hitting_time = rounds;
  return rec;
}

// Randomized local search: uniform initial point, one uniform single-bit
// flip per iteration, accepted iff the fitness does not decrease. For
// strictly monotone f this sets exactly the coupon-collector bits.
template <class Stream>
TrialRecord run_rls_trial(std::uint64_t n, const MonotoneFitness& f, Stream& stream,
                          std::vector<std::uint32_t>* trajectory = nullptr) {
  BitString x(n);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (stream.next_bit()) {
      x.set(i);
      ++count;
    }
  }
  BitString y = x;
  TrialRecord rec;
  rec.initial_count = count;
  std::uint64_t rounds = 0;
  while (count < n) {
    const std::uint64_t j = stream.next_index(n);
    ++rounds;
    y.flip(j);
    if (f.compare(y, x) >= 0) {
      x.flip(j);  // keep x synced with the accepted y
      if (x.test(j)) {
        ++count;
      } else {
        --count;
      }
    } else {
      y.flip(j);  // revert the candidate
    }
    if (trajectory) trajectory->push_back(static_cast<std::uint32_t>(count));
  }
  rec.hitting_time = rounds;
  return rec;
}

// Runs the coupon process and RLS on identical draws: the same n initial
// bits and the same index sequence, one shared index per round. For strictly
// monotone f the two hitting times are equal in every trial, not just in
// distribution.
template <class Stream>
std::pair<std::uint64_t, std::uint64_t> coupled_run(
    std::uint64_t n, const MonotoneFitness& f, Stream& stream,
    std::vector<std::uint32_t>* coupon_trajectory = nullptr,
    std::vector<std::uint32_t>* rls_trajectory = nullptr) {
  BitString owned(n);
  BitString x(n);
  std::uint64_t coupon_count = 0;
  std::uint64_t rls_count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (stream.next_bit()) {
      owned.set(i);
      ++coupon_count;
      x.set(i);
      ++rls_count;
    }
  }
  BitString y = x;
  std::uint64_t rounds = 0;
  std::uint64_t t_coupon = 0;
  std::uint64_t t_rls = 0;
  while (coupon_count < n || rls_count < n) {
    const std::uint64_t j = stream.next_index(n);
    ++rounds;
    if (coupon_count < n) {
      if (!owned.test(j)) {
        owned.set(j);
        if (++coupon_count == n) t_coupon = rounds;
      }
    }
    if (rls_count < n) {
      y.flip(j);
      if (f.compare(y, x) >= 0) {
        x.flip(j);
        if (x.test(j)) {
          if (++rls_count == n) t_rls = rounds;
        } else {
          --rls_count;
        }
      } else {
        y.flip(j);
      }
    }
    if (coupon_trajectory) coupon_trajectory->push_back(static_cast<std::uint32_t>(coupon_count));
    if (rls_trajectory) rls_trajectory->push_back(static_cast<std::uint32_t>(rls_count));
  }
  return {t_coupon, t_rls};
}

// ---------------------------------------------------------------------------
// Batches
// ---------------------------------------------------------------------------

enum class ProcessKind { kCoupon, kRls };

std::string_view to_string(ProcessKind kind);
std::optional<ProcessKind> parse_process_kind(std::string_view name);

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;  // n * trials

struct BatchConfig {
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 1;
  ProcessKind process = ProcessKind::kCoupon;
  FitnessKind fitness = FitnessKind::kOneMax;  // RLS only
  unsigned threads = 0;                        // 0 -> hardware concurrency
  std::uint64_t work_budget = kDefaultWorkBudget;
};

// Records for trial_index 0..trials-1, each trial on its own derived stream.
// The output is a pure function of the config: identical regardless of
// thread count or scheduling (records are written by trial index).
// CapacityError when n * trials exceeds the work budget.
std::vector<TrialRecord> run_batch(const BatchConfig& cfg);

}  // namespace coupon
