#include "jetquiver/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jetquiver {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 0) throw std::invalid_argument("Partition::part: negative index");
  return i < rows() ? parts_[static_cast<size_t>(i)] : 0;
}

bool Partition::contains(const Partition& nu) const {
  if (nu.rows() > rows()) return false;
  for (int i = 0; i < nu.rows(); ++i)
    if (nu.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

int MultiIndex::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool MultiIndex::is_polynomial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.length() != length()) throw std::invalid_argument("MultiIndex: length mismatch");
  for (size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.length() != length()) throw std::invalid_argument("MultiIndex: length mismatch");
  for (size_t i = 0; i < exps_.size(); ++i) exps_[i] -= o.exps_[i];
  return *this;
}

std::string MultiIndex::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + "]";
}

Int multinomial(int m, const MultiIndex& I) {
  if (m < 0) throw std::invalid_argument("multinomial: negative degree");
  if (!I.is_polynomial()) throw std::invalid_argument("multinomial: negative exponent");
  if (I.degree() != m) throw std::invalid_argument("multinomial: degree mismatch");
  Int r = factorial(m);
  for (int i = 0; i < I.length(); ++i) r /= factorial(I[i]);
  return r;
}

namespace {

void fill_basis(int vars_left, int deg_left, std::vector<int>& prefix,
                std::vector<MultiIndex>& out) {
  if (vars_left == 1) {
    prefix.push_back(deg_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = deg_left; e >= 0; --e) {
    prefix.push_back(e);
    fill_basis(vars_left - 1, deg_left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int n, int k) {
  if (n < 1) throw std::invalid_argument("monomial_basis: need n >= 1");
  if (k < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(n) + 1);
  fill_basis(n + 1, k, prefix, out);
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& mu, int max_rows) {
  if (max_rows < 0) throw std::invalid_argument("horizontal_strips: negative row bound");
  if (mu.rows() > max_rows + 1)
    throw std::invalid_argument("horizontal_strips: mu has too many rows");
  // Row i of nu ranges over [mu_{i+1}, mu_i]; enumerate the product.
  std::vector<Partition> out;
  std::vector<int> nu(static_cast<size_t>(max_rows), 0);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == max_rows) {
      out.emplace_back(nu);
      return;
    }
    for (int v = mu.part(row); v >= mu.part(row + 1); --v) {
      nu[static_cast<size_t>(row)] = v;
      self(self, row + 1);
    }
    nu[static_cast<size_t>(row)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
  });
  return out;
}

std::vector<Partition> pieri_add_one(const Partition& nu, int max_rows) {
  if (max_rows < 0) throw std::invalid_argument("pieri_add_one: negative row bound");
  if (nu.rows() > max_rows)
    throw std::invalid_argument("pieri_add_one: nu has too many rows");
  std::vector<Partition> out;
  int limit = std::min(nu.rows() + 1, max_rows);
  for (int i = 0; i < limit; ++i) {
    // A box may be added at row i iff the result is still weakly decreasing.
    if (i > 0 && nu.part(i) + 1 > nu.part(i - 1)) continue;
    std::vector<int> parts(nu.parts());
    if (i < nu.rows())
      parts[static_cast<size_t>(i)] += 1;
    else
      parts.push_back(1);
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace jetquiver
