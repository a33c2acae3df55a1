#include "jetquiver/diffop.hpp"

#include <stdexcept>

namespace jetquiver {

LaurentCombo::LaurentCombo(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw std::invalid_argument("LaurentCombo: need at least one variable");
}

LaurentCombo LaurentCombo::monomial(const MultiIndex& a, const Rat& c) {
  LaurentCombo f(a.length(), a.degree());
  f.add_term(a, c);
  return f;
}

void LaurentCombo::add_term(const MultiIndex& a, const Rat& c) {
  if (a.length() != nvars_) throw std::invalid_argument("LaurentCombo: wrong number of variables");
  if (a.degree() != degree_) throw std::invalid_argument("LaurentCombo: inhomogeneous term");
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(a, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement::TensorElement(int nvars, int left_degree)
    : nvars_(nvars), left_degree_(left_degree) {
  if (nvars < 1) throw std::invalid_argument("TensorElement: need at least one variable");
  if (left_degree < 0) throw std::invalid_argument("TensorElement: negative left degree");
}

void TensorElement::add_term(const MultiIndex& I, const MultiIndex& A, const Rat& c) {
  if (I.length() != nvars_ || A.length() != nvars_)
    throw std::invalid_argument("TensorElement: wrong number of variables");
  if (!I.is_polynomial() || I.degree() != left_degree_)
    throw std::invalid_argument("TensorElement: left factor must be a degree-k monomial");
  auto key = std::make_pair(I, A);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  if (a.nvars() != b.nvars() || a.left_degree() != b.left_degree())
    throw std::invalid_argument("TensorElement: shape mismatch in subtraction");
  TensorElement r = a;
  for (const auto& [key, coeff] : b.terms()) r.add_term(key.first, key.second, -coeff);
  return r;
}

namespace {

// prod_j A_j(A_j-1)...(A_j-I_j+1): coefficient of d^I acting on x^A.
Int derivative_coefficient(const MultiIndex& A, const MultiIndex& I) {
  Int c = 1;
  for (int j = 0; j < A.length(); ++j) {
    c *= falling_factorial(A[j], I[j]);
    if (c == 0) break;
  }
  return c;
}

}  // namespace

TensorElement xi_power(const LaurentCombo& f, int k) {
  if (k < 0) throw std::invalid_argument("xi_power: negative order");
  const int n = f.nvars() - 1;
  TensorElement out(f.nvars(), k);
  for (const MultiIndex& I : monomial_basis(n, k)) {
    const Int weight = multinomial(k, I);
    for (const auto& [A, c] : f.terms()) {
      Int deriv = derivative_coefficient(A, I);
      if (deriv == 0) continue;
      out.add_term(I, A - I, c * Rat(weight * deriv));
    }
  }
  return out;
}

TensorElement eta_apply(const TensorElement& t) {
  if (t.left_degree() < 1)
    throw std::invalid_argument("eta_apply: left degree must be at least 1");
  TensorElement out(t.nvars(), t.left_degree() - 1);
  for (const auto& [key, c] : t.terms()) {
    const auto& [I, A] = key;
    for (int i = 0; i < t.nvars(); ++i) {
      if (I[i] == 0) continue;
      std::vector<int> left(I.exps()), right(A.exps());
      left[static_cast<size_t>(i)] -= 1;
      right[static_cast<size_t>(i)] += 1;
      out.add_term(MultiIndex(left), MultiIndex(right), c * I[i]);
    }
  }
  return out;
}

LemmaReport verify_lemma(int n, int k, const LaurentCombo& f) {
  if (k < 1) throw std::invalid_argument("verify_lemma: need k >= 1");
  if (f.nvars() != n + 1) throw std::invalid_argument("verify_lemma: variable count mismatch");
  LemmaReport report;
  report.k = k;
  report.degree = f.degree();
  TensorElement lhs = eta_apply(xi_power(f, k));
  TensorElement rhs = xi_power(f, k - 1) * Rat(Int(k) * (f.degree() - k + 1));
  TensorElement diff = lhs - rhs;
  report.ok = diff.is_zero();
  for (const auto& [key, c] : diff.terms()) {
    std::string line = key.first.to_string() + " (x) " + key.second.to_string() +
                       ": difference " + c.str();
    report.discrepancies.push_back(std::move(line));
  }
  return report;
}

}  // namespace jetquiver
