#include "jetquiver/jetbundles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "jetquiver/parallel.hpp"

namespace jetquiver {

SplittingReport splitting_type(int n, int k, int d) {
  if (n < 1) throw std::invalid_argument("splitting_type: need n >= 1");
  if (k < 0) throw std::invalid_argument("splitting_type: negative order");
  SplittingReport rep;
  rep.n = n;
  rep.k = k;
  rep.d = d;
  rep.total_rank = binomial(k + n, n);
  if (d >= k || d < 0) {
    rep.tag = SplittingReport::Case::trivializing;
    rep.description = "P^" + std::to_string(k) + "O(" + std::to_string(d) + ") = S^" +
                      std::to_string(k) + "V (x) O(" + std::to_string(d - k) + ")";
    for (int i = 0; i <= k; ++i)
      rep.graded_pieces.push_back(
          IrreducibleSummand{n, i == 0 ? Partition() : Partition({i}), d});
    rep.q_rank = 0;
  } else {
    rep.tag = SplittingReport::Case::split;
    rep.description = "P^" + std::to_string(k) + "O(" + std::to_string(d) + ") = Q_{" +
                      std::to_string(k) + "," + std::to_string(d) + "} (+) S^" +
                      std::to_string(d) + "V (x) O";
    for (int i = d + 1; i <= k; ++i)
      rep.graded_pieces.push_back(IrreducibleSummand{n, Partition({i}), d});
    rep.q_rank = rep.total_rank - binomial(d + n, n);
    Int pieces = 0;
    for (const IrreducibleSummand& s : rep.graded_pieces) pieces += s.rank();
    Int telescoped = 0;
    for (int i = 0; i <= k - d - 1; ++i) telescoped += binomial(k - i + n - 1, n - 1);
    if (pieces != rep.q_rank || telescoped != rep.q_rank)
      throw std::logic_error("splitting_type: graded ranks do not telescope");
    if (n >= 2) rep.stability = stability_Q(n, k, d);
  }
  return rep;
}

namespace {

std::map<MultiIndex, int> index_of(const std::vector<MultiIndex>& basis) {
  std::map<MultiIndex, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));
  return pos;
}

}  // namespace

RationalMatrix truncation_matrix(int n, int d, int k, int h) {
  if (n < 1) throw std::invalid_argument("truncation_matrix: need n >= 1");
  if (!(d >= k && k >= h && h >= 0))
    throw std::invalid_argument("truncation_matrix: need d >= k >= h >= 0");
  const auto dom_left = monomial_basis(n, k);
  const auto dom_right = monomial_basis(n, d - k);
  const auto cod_left = monomial_basis(n, h);
  const auto cod_right = monomial_basis(n, d - h);
  const auto cod_left_pos = index_of(cod_left);
  const auto cod_right_pos = index_of(cod_right);
  const auto steps = monomial_basis(n, k - h);

  RationalMatrix M(static_cast<int>(cod_left.size() * cod_right.size()),
                   static_cast<int>(dom_left.size() * dom_right.size()));
  int col = 0;
  for (const MultiIndex& I : dom_left) {
    // Precompute the admissible decrements of I together with their weights.
    std::vector<std::pair<const MultiIndex*, Int>> moves;
    for (const MultiIndex& m : steps) {
      MultiIndex J = I - m;
      if (!J.is_polynomial()) continue;
      Int w = multinomial(k - h, m);
      for (int j = 0; j <= n; ++j) w *= falling_factorial(I[j], m[j]);
      moves.push_back({&m, w});
    }
    for (const MultiIndex& A : dom_right) {
      for (const auto& [m, w] : moves) {
        const int jrow = cod_left_pos.at(I - *m);
        const int brow = cod_right_pos.at(A + *m);
        M.set(jrow * static_cast<int>(cod_right.size()) + brow, col, Rat(w));
      }
      ++col;
    }
  }
  return M;
}

namespace {

TruncationReport rank_via_matrix(TruncationReport rep, int mk, int mh, const RankPolicy& policy) {
  RationalMatrix M = truncation_matrix(rep.n, rep.d, mk, mh);
  RankCertificate cert = certified_rank(M, policy);
  rep.rank = cert.rank;
  rep.method = cert.method;
  rep.primes = cert.primes;
  return rep;
}

}  // namespace

TruncationReport truncation_rank(int n, int d, int k, int h, const RankPolicy& policy) {
  if (n < 1) throw std::invalid_argument("truncation_rank: need n >= 1");
  if (!(k >= h && h >= 0)) throw std::invalid_argument("truncation_rank: need k >= h >= 0");
  TruncationReport rep;
  rep.n = n;
  rep.d = d;
  rep.k = k;
  rep.h = h;
  if (d < 0) {
    rep.dim_domain = 0;
    rep.dim_codomain = 0;
    rep.rank = 0;
    rep.reduction = "twist below zero: no global sections on either side";
  } else if (d >= k) {
    rep.dim_domain = binomial(k + n, n) * binomial(d - k + n, n);
    rep.dim_codomain = binomial(h + n, n) * binomial(d - h + n, n);
    rep = rank_via_matrix(std::move(rep), k, h, policy);
  } else if (h <= d) {  // k > d >= h
    rep.dim_domain = binomial(d + n, n);
    rep.dim_codomain = binomial(h + n, n) * binomial(d - h + n, n);
    rep = rank_via_matrix(std::move(rep), d, h, policy);
    rep.reduction = "sections of the order-k bundle are the polynomials of degree d; "
                    "rank taken from the order-d collapse (same map on sections)";
  } else {  // k >= h > d >= 0
    rep.dim_domain = binomial(d + n, n);
    rep.dim_codomain = binomial(d + n, n);
    rep = rank_via_matrix(std::move(rep), d, d, policy);
    rep.reduction = "both sides are the polynomials of degree d; "
                    "the collapse reduces to the identity on sections";
  }
  Int mindim = std::min(rep.dim_domain, rep.dim_codomain);
  rep.maximal = rep.rank == mindim;
  rep.kernel_dim = rep.dim_domain - rep.rank;
  rep.injective = rep.kernel_dim == 0;
  rep.surjective = rep.rank == rep.dim_codomain;
  return rep;
}

RationalMatrix fiber_matrix(int n, int k, int m, const std::vector<Rat>& point) {
  if (n < 1) throw std::invalid_argument("fiber_matrix: need n >= 1");
  if (!(0 <= m && m <= k)) throw std::invalid_argument("fiber_matrix: need 0 <= m <= k");
  if (static_cast<int>(point.size()) != n + 1)
    throw std::invalid_argument("fiber_matrix: point has wrong length");
  if (std::all_of(point.begin(), point.end(), [](const Rat& c) { return c == 0; }))
    throw std::invalid_argument("fiber_matrix: point must be nonzero");
  const auto dom = monomial_basis(n, k);
  const auto cod = monomial_basis(n, k - m);
  const auto cod_pos = index_of(cod);
  RationalMatrix M(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t col = 0; col < dom.size(); ++col) {
    const MultiIndex& C = dom[col];
    for (const MultiIndex& I : monomial_basis(n, m)) {
      MultiIndex J = C - I;
      if (!J.is_polynomial()) continue;
      Rat w(multinomial(m, I));
      for (int j = 0; j <= n; ++j) {
        w *= falling_factorial(C[j], I[j]);
        for (int e = 0; e < I[j]; ++e) w *= point[static_cast<size_t>(j)];
      }
      if (w != 0) M.add(cod_pos.at(J), static_cast<int>(col), w);
    }
  }
  return M;
}

CrossCheckReport cross_check_kernel(int n, int d, int k, int h, const RankPolicy& policy) {
  if (!(d >= k && k > h && h >= 0))
    throw std::invalid_argument("cross_check_kernel: need d >= k > h >= 0");
  CrossCheckReport rep;
  rep.trunc = truncation_rank(n, d, k, h, policy);
  rep.summands = h0_Q_twist(n, k, h, d);
  rep.kernel_dim = rep.trunc.kernel_dim;
  rep.h0_dim = rep.summands.dimension();
  rep.ok = rep.kernel_dim == rep.h0_dim;
  return rep;
}

std::uint64_t point_seed(std::uint64_t base, int n, int d, int k, int h) {
  // splitmix64-style mixing of the grid key into the base seed.
  std::uint64_t z = base;
  for (std::uint64_t part : {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d),
                             static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(h)}) {
    z += 0x9e3779b97f4a7c15ull + part;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
  }
  return z;
}

SweepResult sweep_truncation_grid(const std::vector<int>& ns, int d_max,
                                  const RankPolicy& policy, int threads) {
  std::vector<std::array<int, 4>> grid;
  for (int n : ns)
    for (int d = 0; d <= d_max; ++d)
      for (int k = 1; k <= d; ++k)
        for (int h = 0; h < k; ++h) grid.push_back({n, d, k, h});
  std::sort(grid.begin(), grid.end());

  SweepResult result;
  result.rows.resize(grid.size());
  if (threads <= 0) threads = default_threads();
  parallel_for(grid.size(), threads, [&](std::size_t idx) {
    const auto [n, d, k, h] = grid[idx];
    RankPolicy local = policy;
    local.seed = point_seed(policy.seed, n, d, k, h);
    SweepRow row;
    row.n = n;
    row.d = d;
    row.k = k;
    row.h = h;
    row.report = truncation_rank(n, d, k, h, local);
    row.h0_dim = h0_Q_twist(n, k, h, d).dimension();
    row.rank_maximal_ok = row.report.maximal;
    row.kernel_matches_h0 = row.report.kernel_dim == row.h0_dim;
    row.injectivity_boundary_ok = (row.report.kernel_dim == 0) == (d <= h + k);
    result.rows[idx] = std::move(row);
  });
  for (const SweepRow& row : result.rows)
    if (!row.ok()) result.all_ok = false;
  return result;
}

}  // namespace jetquiver
