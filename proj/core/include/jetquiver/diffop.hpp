#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetquiver/numeric.hpp"
#include "jetquiver/partitions.hpp"

namespace jetquiver {

/// Homogeneous linear combination of Laurent monomials x^A in nvars
/// variables. Exponents may be negative; every stored term has the declared
/// total degree, and zero coefficients are pruned eagerly.
class LaurentCombo {
 public:
  LaurentCombo(int nvars, int degree);
  static LaurentCombo monomial(const MultiIndex& a, const Rat& c = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Rat>& terms() const { return terms_; }

  /// Adds c * x^a; a must have the declared length and degree.
  void add_term(const MultiIndex& a, const Rat& c);

  bool operator==(const LaurentCombo&) const = default;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Rat> terms_;
};

/// Element of S^kV tensor the Laurent ring: a combination of x^I (x) x^A
/// terms with |I| = k and I >= 0. The right factors share a common total
/// degree in any value this library produces, but only the left degree is
/// part of the type.
class TensorElement {
 public:
  TensorElement(int nvars, int left_degree);

  int nvars() const { return nvars_; }
  int left_degree() const { return left_degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<MultiIndex, MultiIndex>, Rat>& terms() const { return terms_; }

  /// Adds c * x^I (x) x^A; requires |I| = left degree, I >= 0.
  void add_term(const MultiIndex& I, const MultiIndex& A, const Rat& c);

  TensorElement& operator*=(const Rat& c);
  friend TensorElement operator*(TensorElement t, const Rat& c) { return t *= c; }
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);

  bool operator==(const TensorElement&) const = default;

 private:
  int nvars_ = 0;
  int left_degree_ = 0;
  std::map<std::pair<MultiIndex, MultiIndex>, Rat> terms_;
};

/// xi^k(f) = sum_{|I|=k} multinomial(k,I) x^I (x) d^I(f), where the
/// derivative of a Laurent monomial carries falling-factorial coefficients:
/// d^I(x^A) = prod_j A_j(A_j-1)...(A_j-I_j+1) x^{A-I}.
TensorElement xi_power(const LaurentCombo& f, int k);

/// One application of eta = sum_i d_i (x) x_i: differentiates the left
/// factor and multiplies the right. Throws when the left degree is 0.
TensorElement eta_apply(const TensorElement& t);

struct LemmaReport {
  bool ok = false;
  int k = 0;
  int degree = 0;
  /// Human-readable description of each discrepant term (empty when ok).
  std::vector<std::string> discrepancies;
};

/// Checks eta(xi^k(f)) = k (deg f - k + 1) xi^{k-1}(f) exactly, term by
/// term. A false result is a counterexample report, not an error.
LemmaReport verify_lemma(int n, int k, const LaurentCombo& f);

}  // namespace jetquiver
