#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jetquiver/numeric.hpp"

namespace jetquiver {

/// Sparse matrix over Q: only nonzero entries are stored.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  /// Assigns entry (r, c); storing zero erases it.
  void set(int r, int c, const Rat& v);
  /// Adds to entry (r, c).
  void add(int r, int c, const Rat& v);
  /// Value at (r, c); zero when absent.
  Rat at(int r, int c) const;

  RationalMatrix transpose() const;
  RationalMatrix multiply(const RationalMatrix& rhs) const;
  static RationalMatrix identity(int n);

  bool operator==(const RationalMatrix&) const = default;

 private:
  void check(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rat> entries_;
};

/// Exact rank over Q by fraction-free one-step elimination (Bareiss).
/// Deterministic: pivots are chosen as the first nonzero entry in
/// row-then-column order.
int rank_exact(const RationalMatrix& M);

/// Signals that a chosen prime divides an entry denominator; the caller
/// should retry with a different prime.
struct BadPrimeError : std::runtime_error {
  explicit BadPrimeError(std::uint64_t p)
      : std::runtime_error("prime divides an entry denominator"), prime(p) {}
  std::uint64_t prime;
};

/// Rank of M reduced mod p. Always a lower bound for the rank over Q, so a
/// value equal to min(rows, cols) certifies maximal rank. Throws
/// BadPrimeError when p divides some denominator.
int rank_mod_p(const RationalMatrix& M, std::uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

/// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime_62(std::uint64_t& state);

enum class RankMethod { exact, modular };

struct RankCertificate {
  int rank = 0;
  RankMethod method = RankMethod::exact;
  /// Primes used by the modular method (empty for exact).
  std::vector<std::uint64_t> primes;
};

struct RankPolicy {
  /// Seed for the prime draw; same seed, same primes.
  std::uint64_t seed = 0;
  /// Optional fixed first prime (the second is still drawn from the seed).
  std::optional<std::uint64_t> prime_override;
  /// Exact elimination is used when min(rows, cols) <= exact_max_dim,
  /// otherwise a two-prime modular lower bound is reported.
  int exact_max_dim = 400;
};

/// Rank with a certification record. The modular value is the max of two
/// independent mod-p ranks; it is exact whenever it reaches min(rows, cols).
RankCertificate certified_rank(const RationalMatrix& M, const RankPolicy& policy = {});

}  // namespace jetquiver
