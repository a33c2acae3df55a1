#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jetquiver/numeric.hpp"

namespace jetquiver {

/// Integer partition in normal form: weakly decreasing positive parts,
/// trailing zeros stripped on construction. The empty partition is ().
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Total number of boxes |mu|.
  int size() const;
  /// i-th part, 0-based; 0 beyond the last row.
  int part(int i) const;
  /// Componentwise containment nu <= mu.
  bool contains(const Partition& nu) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  /// "(2,1)"; "()" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Exponent vector of a monomial in variables x_0..x_n. Entries may be
/// negative (Laurent monomials); length is fixed at construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {}
  /// Zero vector of the given length.
  static MultiIndex zero(int length) { return MultiIndex(std::vector<int>(length, 0)); }

  int length() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  /// True when every exponent is >= 0.
  bool is_polynomial() const;
  int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& exps() const { return exps_; }

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  bool operator==(const MultiIndex&) const = default;
  auto operator<=>(const MultiIndex&) const = default;

  /// "[2,0,1]"
  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// Multinomial coefficient m! / (i_0! ... i_n!). Requires I polynomial
/// with |I| = m; throws std::invalid_argument otherwise.
Int multinomial(int m, const MultiIndex& I);

/// All exponent vectors of degree k in n+1 variables, graded-lex descending
/// with x_0 > x_1 > ... > x_n. Size is C(k+n, n). Requires n >= 1, k >= 0.
std::vector<MultiIndex> monomial_basis(int n, int k);

/// All partitions nu with at most max_rows rows interlacing mu:
/// mu_i >= nu_i >= mu_{i+1} for each row. mu may have up to max_rows + 1
/// parts. Ordered by |nu| descending, ties lexicographically descending.
std::vector<Partition> horizontal_strips(const Partition& mu, int max_rows);

/// All partitions obtained from nu by adding a single box, keeping at most
/// max_rows rows. Ordered by the row index of the added box, ascending.
std::vector<Partition> pieri_add_one(const Partition& nu, int max_rows);

}  // namespace jetquiver
