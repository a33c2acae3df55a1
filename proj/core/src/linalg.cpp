#include "jetquiver/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace jetquiver {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
}

void RationalMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("RationalMatrix: index out of range");
}

void RationalMatrix::set(int r, int c, const Rat& v) {
  check(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void RationalMatrix::add(int r, int c, const Rat& v) {
  check(r, c);
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    if (v != 0) entries_.emplace(std::make_pair(r, c), v);
    return;
  }
  it->second += v;
  if (it->second == 0) entries_.erase(it);
}

Rat RationalMatrix::at(int r, int c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix T(cols_, rows_);
  for (const auto& [rc, v] : entries_) T.entries_[{rc.second, rc.first}] = v;
  return T;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  // Row-major sparse accumulation; rhs rows are gathered once.
  std::vector<std::vector<std::pair<int, Rat>>> rhs_rows(static_cast<size_t>(rhs.rows_));
  for (const auto& [rc, v] : rhs.entries_) rhs_rows[static_cast<size_t>(rc.first)].push_back({rc.second, v});
  RationalMatrix P(rows_, rhs.cols_);
  for (const auto& [rc, v] : entries_)
    for (const auto& [c2, w] : rhs_rows[static_cast<size_t>(rc.second)]) P.add(rc.first, c2, v * w);
  return P;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.set(i, i, 1);
  return I;
}

namespace {

// Union-find over row and column nodes; connected components of the
// bipartite nonzero pattern can be ranked independently, which keeps
// fraction-free elimination on block-structured matrices cheap.
struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[parent[static_cast<size_t>(a)]];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// Rank of a dense integer matrix by one-step fraction-free elimination.
// Pivot choice: first column with a nonzero, first such row within it.
int rank_bareiss(std::vector<std::vector<Int>>& a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
    const auto& p = a[static_cast<size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<size_t>(r)];
      const Int f = row[static_cast<size_t>(col)];
      // Every division by the previous pivot is exact (Sylvester identity).
      if (f == 0) {
        for (int j = col + 1; j < cols; ++j)
          if (row[static_cast<size_t>(j)] != 0)
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j)] * p[static_cast<size_t>(col)] / prev;
      } else {
        for (int j = col + 1; j < cols; ++j) {
          Int t = row[static_cast<size_t>(j)] * p[static_cast<size_t>(col)] - f * p[static_cast<size_t>(j)];
          row[static_cast<size_t>(j)] = t == 0 ? Int(0) : t / prev;
        }
        row[static_cast<size_t>(col)] = 0;
      }
    }
    prev = p[static_cast<size_t>(col)];
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_exact(const RationalMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0 || M.nonzeros() == 0) return 0;
  UnionFind uf(M.rows() + M.cols());
  for (const auto& [rc, v] : M.entries()) uf.unite(rc.first, M.rows() + rc.second);
  // Bucket entries by component.
  std::unordered_map<int, std::vector<std::pair<std::pair<int, int>, Rat>>> comps;
  for (const auto& [rc, v] : M.entries()) comps[uf.find(rc.first)].push_back({rc, v});
  // Deterministic component order (map iteration order is unspecified).
  std::vector<int> roots;
  roots.reserve(comps.size());
  for (const auto& [root, ignored] : comps) roots.push_back(root);
  std::sort(roots.begin(), roots.end());

  int rank = 0;
  for (int root : roots) {
    auto& cells = comps[root];
    std::vector<int> rws, cls;
    for (const auto& [rc, v] : cells) {
      rws.push_back(rc.first);
      cls.push_back(rc.second);
    }
    std::sort(rws.begin(), rws.end());
    rws.erase(std::unique(rws.begin(), rws.end()), rws.end());
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    // Orient with rows <= cols so elimination runs over the short side.
    const bool flip = rws.size() > cls.size();
    const auto& rids = flip ? cls : rws;
    const auto& cids = flip ? rws : cls;
    std::unordered_map<int, int> rpos, cpos;
    for (size_t i = 0; i < rids.size(); ++i) rpos[rids[i]] = static_cast<int>(i);
    for (size_t i = 0; i < cids.size(); ++i) cpos[cids[i]] = static_cast<int>(i);
    std::vector<std::vector<Rat>> q(rids.size(), std::vector<Rat>(cids.size(), Rat(0)));
    for (const auto& [rc, v] : cells) {
      int r = flip ? rc.second : rc.first;
      int c = flip ? rc.first : rc.second;
      q[static_cast<size_t>(rpos[r])][static_cast<size_t>(cpos[c])] = v;
    }
    // Clear denominators row by row; scaling rows keeps the rank.
    std::vector<std::vector<Int>> a(rids.size(), std::vector<Int>(cids.size(), Int(0)));
    for (size_t r = 0; r < q.size(); ++r) {
      Int l = 1;
      for (const Rat& v : q[r])
        if (v != 0) l = lcm(l, Int(denominator(v)));
      for (size_t c = 0; c < q[r].size(); ++c)
        if (q[r][c] != 0) a[r][c] = Int(numerator(q[r][c])) * (l / Int(denominator(q[r][c])));
    }
    rank += rank_bareiss(a);
  }
  return rank;
}

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t mod_p(const Int& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.backend().data(), static_cast<unsigned long>(p));
}

using SparseRow = std::vector<std::pair<int, std::uint64_t>>;  // sorted by column

// row -= f * pivot (mod p); both sorted, result sorted.
SparseRow axpy(const SparseRow& row, std::uint64_t f, const SparseRow& pivot, std::uint64_t p) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.push_back({pivot[j].first, p - mulmod(f, pivot[j].second, p)});
      ++j;
    } else {
      std::uint64_t v = (row[i].second + p - mulmod(f, pivot[j].second, p)) % p;
      if (v) out.push_back({row[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int rank_mod_p(const RationalMatrix& M, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be a prime");
  std::vector<SparseRow> rows(static_cast<size_t>(M.rows()));
  for (const auto& [rc, v] : M.entries()) {
    std::uint64_t den = mod_p(Int(denominator(v)), p);
    if (den == 0) throw BadPrimeError(p);
    std::uint64_t num = mod_p(Int(numerator(v)), p);
    std::uint64_t val = mulmod(num, invmod(den, p), p);
    if (val) rows[static_cast<size_t>(rc.first)].push_back({rc.second, val});
  }
  // Sparse echelon: pivot rows are normalized to leading value 1 and keyed
  // by leading column; incoming rows are reduced in original order.
  std::unordered_map<int, SparseRow> pivots;
  int rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, row.front().second, it->second, p);
    }
    if (row.empty()) continue;
    const std::uint64_t inv = invmod(row.front().second, p);
    for (auto& [c, v] : row) v = mulmod(v, inv, p);
    pivots.emplace(row.front().first, row);
    ++rank;
  }
  return rank;
}

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x % q == 0) return x == q;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a known deterministic witness set for 64 bits.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t v = powmod(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, x);
      if (v == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t random_prime_62(std::uint64_t& state) {
  for (;;) {
    std::uint64_t x = splitmix64(state);
    x = (x & ((1ull << 61) - 1)) | (1ull << 61) | 1ull;
    if (is_prime_u64(x)) return x;
  }
}

RankCertificate certified_rank(const RationalMatrix& M, const RankPolicy& policy) {
  RankCertificate cert;
  const int mindim = std::min(M.rows(), M.cols());
  if (mindim <= policy.exact_max_dim) {
    cert.rank = rank_exact(M);
    cert.method = RankMethod::exact;
    return cert;
  }
  cert.method = RankMethod::modular;
  std::uint64_t state = policy.seed ^ 0x6a09e667f3bcc908ull;
  int best = 0;
  while (cert.primes.size() < 2) {
    std::uint64_t p;
    if (cert.primes.empty() && policy.prime_override) {
      p = *policy.prime_override;
      if (!is_prime_u64(p)) throw std::invalid_argument("certified_rank: prime override is not prime");
    } else {
      p = random_prime_62(state);
    }
    if (!cert.primes.empty() && p == cert.primes.front()) continue;
    try {
      best = std::max(best, rank_mod_p(M, p));
      cert.primes.push_back(p);
    } catch (const BadPrimeError&) {
      if (cert.primes.empty() && policy.prime_override)
        throw;  // an explicit override that hits a denominator is an input error
    }
  }
  cert.rank = best;
  return cert;
}

}  // namespace jetquiver
