#include "jetquiver/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetquiver {

Rat IrreducibleSummand::slope() const {
  return Rat(-(n + 1), n) * mu.size() + twist;
}

Int IrreducibleSummand::c1() const {
  Rat c = Rat(rank()) * slope();
  if (denominator(c) != 1) throw std::logic_error("IrreducibleSummand: c1 is not integral");
  return numerator(c);
}

std::string IrreducibleSummand::to_string() const {
  std::string s;
  if (mu.rows() == 0)
    s = "O";
  else if (mu.rows() == 1 && mu.part(0) == 1)
    s = "Omega";
  else if (mu.rows() == 1)
    s = "S^" + std::to_string(mu.part(0)) + "Omega";
  else
    s = "S_" + mu.to_string() + "Omega";
  if (twist != 0) s += "(" + std::to_string(twist) + ")";
  return s;
}

bool QuiverRep::is_connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const QuiverArrow& a : arrows) {
    adj[static_cast<size_t>(a.from)].push_back(a.to);
    adj[static_cast<size_t>(a.to)].push_back(a.from);
  }
  std::vector<char> seen(vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertices.size();
}

QuiverRep quiver_schur(int n, const Partition& mu) {
  if (n < 1) throw std::invalid_argument("quiver_schur: need n >= 1");
  if (mu.rows() > n + 1) throw std::invalid_argument("quiver_schur: mu has too many rows");
  std::vector<Partition> support = horizontal_strips(mu, n);
  std::sort(support.begin(), support.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  QuiverRep rep;
  for (const Partition& nu : support)
    rep.vertices.push_back({IrreducibleSummand{n, nu, mu.size()}, 1});
  for (size_t u = 0; u < support.size(); ++u)
    for (size_t v = 0; v < support.size(); ++v) {
      if (support[v].size() != support[u].size() + 1) continue;
      if (!support[v].contains(support[u])) continue;
      rep.arrows.push_back({static_cast<int>(u), static_cast<int>(v), true});
    }
  return rep;
}

QuiverRep quiver_pp(int n, int k, int d) {
  if (n < 1) throw std::invalid_argument("quiver_pp: need n >= 1");
  if (k < 0) throw std::invalid_argument("quiver_pp: negative order");
  QuiverRep rep;
  for (int i = 0; i <= k; ++i) {
    Partition row = i == 0 ? Partition() : Partition({i});
    rep.vertices.push_back({IrreducibleSummand{n, row, d}, 1});
  }
  const bool split = (0 <= d && d < k);
  for (int i = 0; i < k; ++i) {
    if (split && i == d) continue;  // the chain breaks between S^d and S^{d+1}
    rep.arrows.push_back({i, i + 1, true});
  }
  return rep;
}

QuiverRep quiver_Q(int n, int k, int d) {
  if (n < 1) throw std::invalid_argument("quiver_Q: need n >= 1");
  if (!(k > d && d >= 0)) throw std::invalid_argument("quiver_Q: need k > d >= 0");
  QuiverRep rep;
  for (int i = d + 1; i <= k; ++i)
    rep.vertices.push_back({IrreducibleSummand{n, Partition({i}), d}, 1});
  for (int i = 0; i + 1 < static_cast<int>(rep.vertices.size()); ++i)
    rep.arrows.push_back({i, i + 1, true});
  return rep;
}

Int mu_F(const std::vector<QuiverVertex>& F, const std::vector<QuiverVertex>& Eprime) {
  Int c1F = 0, rkF = 0, c1E = 0, rkE = 0;
  for (const QuiverVertex& v : F) {
    c1F += v.multiplicity * v.summand.c1();
    rkF += v.multiplicity * v.summand.rank();
  }
  for (const QuiverVertex& v : Eprime) {
    c1E += v.multiplicity * v.summand.c1();
    rkE += v.multiplicity * v.summand.rank();
  }
  return c1F * rkE - rkF * c1E;
}

StabilityVerdict stability_Q(int n, int k, int d) {
  if (n < 2) throw std::invalid_argument("stability_Q: need n >= 2");
  if (!(k > d && d >= 0)) throw std::invalid_argument("stability_Q: need k > d >= 0");
  const QuiverRep rep = quiver_Q(n, k, d);
  StabilityVerdict verdict;
  verdict.stable = true;
  for (int i = d + 1; i <= k; ++i) {
    std::vector<QuiverVertex> suffix(rep.vertices.begin() + (i - d - 1), rep.vertices.end());
    Int value = mu_F(rep.vertices, suffix);
    if (i == d + 1) {
      if (value != 0) verdict.stable = false;  // the full chain must be neutral
    } else if (value <= 0) {
      verdict.stable = false;
    }
    verdict.table.push_back({i, value});
  }
  return verdict;
}

}  // namespace jetquiver
