#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetquiver/bott.hpp"
#include "jetquiver/diffop.hpp"
#include "jetquiver/jetbundles.hpp"
#include "jetquiver/quiver.hpp"
#include "json.hpp"

using jetquiver::GModuleSum;
using jetquiver::Int;
using jetquiver::MultiIndex;
using jetquiver::Partition;
using jetquiver::Rat;
using json = nlohmann::ordered_json;

namespace {

json json_int(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

json json_rat(const Rat& x) {
  return json{{"num", numerator(x).str()}, {"den", denominator(x).str()}};
}

std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

json json_partition(const Partition& p) {
  json a = json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

json json_module(const GModuleSum& m) {
  json a = json::array();
  for (const auto& [lambda, mult] : m.terms())
    a.push_back(json{{"partition", json_partition(lambda)},
                     {"mult", mult},
                     {"dim", json_int(Int(mult) * jetquiver::schur_dim(lambda, m.ambient()))}});
  return a;
}

std::string module_str(const GModuleSum& m) {
  if (m.terms().empty()) return "0";
  std::string s;
  for (const auto& [lambda, mult] : m.terms()) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += "S_" + lambda.to_string() + " [dim " + jetquiver::schur_dim(lambda, m.ambient()).str() + "]";
  }
  return s;
}

json json_primes(const std::vector<std::uint64_t>& primes) {
  json a = json::array();
  for (std::uint64_t p : primes) a.push_back(p);
  return a;
}

json make_cert(const std::string& method, const std::vector<std::uint64_t>& primes,
               std::uint64_t seed) {
  return json{{"method", method}, {"primes", json_primes(primes)}, {"seed", seed}};
}

void emit(const std::string& command, const json& params, const json& result, const json& cert) {
  json out;
  out["command"] = command;
  out["params"] = params;
  out["result"] = result;
  out["cert"] = cert;
  std::cout << out.dump(2) << "\n";
}

const char* method_name(jetquiver::RankMethod m) {
  return m == jetquiver::RankMethod::exact ? "exact" : "modular";
}

json trunc_report_json(const jetquiver::TruncationReport& r) {
  json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["k"] = r.k;
  j["h"] = r.h;
  j["dim_domain"] = json_int(r.dim_domain);
  j["dim_codomain"] = json_int(r.dim_codomain);
  j["rank"] = json_int(r.rank);
  j["maximal"] = r.maximal;
  j["kernel_dim"] = json_int(r.kernel_dim);
  j["injective"] = r.injective;
  j["surjective"] = r.surjective;
  j["method"] = method_name(r.method);
  j["primes"] = json_primes(r.primes);
  j["reduction"] = r.reduction;
  return j;
}

void print_trunc_text(const jetquiver::TruncationReport& r) {
  std::cout << "truncation P^" << r.k << "O(" << r.d << ") -> P^" << r.h << "O(" << r.d
            << ") on sections, P^" << r.n << "\n";
  std::cout << "domain " << r.dim_domain << "  codomain " << r.dim_codomain << "  rank " << r.rank
            << "\n";
  std::cout << "maximal " << (r.maximal ? "yes" : "no") << "  kernel " << r.kernel_dim
            << "  injective " << (r.injective ? "yes" : "no") << "  surjective "
            << (r.surjective ? "yes" : "no") << "\n";
  std::cout << "method " << method_name(r.method);
  for (std::uint64_t p : r.primes) std::cout << " " << p;
  std::cout << "\n";
  if (!r.reduction.empty()) std::cout << "reduction: " << r.reduction << "\n";
}

json stability_json(const jetquiver::StabilityVerdict& v) {
  json t = json::array();
  for (const auto& row : v.table) t.push_back(json{{"i", row.i}, {"muF", json_int(row.muF)}});
  return json{{"stable", v.stable}, {"table", t}};
}

json quiver_json(const jetquiver::QuiverRep& q) {
  json verts = json::array();
  for (size_t i = 0; i < q.vertices.size(); ++i) {
    const auto& v = q.vertices[i];
    verts.push_back(json{{"index", static_cast<int>(i)},
                         {"name", v.summand.to_string()},
                         {"partition", json_partition(v.summand.mu)},
                         {"twist", v.summand.twist},
                         {"mult", v.multiplicity},
                         {"rank", json_int(v.summand.rank())},
                         {"slope", json_rat(v.summand.slope())}});
  }
  json arrows = json::array();
  for (const auto& a : q.arrows)
    arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"nonzero", a.nonzero}});
  return json{{"vertices", verts}, {"arrows", arrows}, {"connected", q.is_connected()}};
}

void print_quiver_text(const jetquiver::QuiverRep& q) {
  for (size_t i = 0; i < q.vertices.size(); ++i) {
    const auto& v = q.vertices[i];
    std::cout << i << ": " << v.summand.to_string() << "  rank " << v.summand.rank() << "  slope "
              << rat_str(v.summand.slope());
    if (v.multiplicity != 1) std::cout << "  mult " << v.multiplicity;
    std::cout << "\n";
  }
  std::cout << "arrows:";
  if (q.arrows.empty()) std::cout << " none";
  for (const auto& a : q.arrows) std::cout << " " << a.from << "->" << a.to;
  std::cout << "\n";
  std::cout << "connected " << (q.is_connected() ? "yes" : "no") << "\n";
}

struct CommonOpts {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_seed, bool with_prime) {
  sub->set_help_flag("--help", "print this help message");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (with_seed) sub->add_option("--seed", c.seed, "seed for randomized choices")->capture_default_str();
  if (with_prime) sub->add_option("--prime", c.prime, "fixed first prime for the modular rank");
}

jetquiver::RankPolicy policy_of(const CommonOpts& c) {
  jetquiver::RankPolicy p;
  p.seed = c.seed;
  p.prime_override = c.prime;
  return p;
}

int env_threads() {
  const char* s = std::getenv("JETQUIVER_THREADS");
  if (!s) return 0;
  int v = std::atoi(s);
  return v > 0 ? v : 0;
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

// Point with entries in [-5,5], not all zero, drawn from the seed.
std::vector<Rat> random_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<Rat> p(static_cast<size_t>(n) + 1);
  for (;;) {
    bool nonzero = false;
    for (auto& c : p) {
      c = coord(rng);
      if (c != 0) nonzero = true;
    }
    if (nonzero) return p;
  }
}

int cmd_split(int n, int k, int d, const CommonOpts& c) {
  jetquiver::SplittingReport rep = jetquiver::splitting_type(n, k, d);
  json result;
  result["n"] = rep.n;
  result["k"] = rep.k;
  result["d"] = rep.d;
  result["case"] = rep.tag == jetquiver::SplittingReport::Case::trivializing ? "trivializing" : "split";
  result["description"] = rep.description;
  result["total_rank"] = json_int(rep.total_rank);
  result["q_rank"] = json_int(rep.q_rank);
  json pieces = json::array();
  for (const auto& s : rep.graded_pieces)
    pieces.push_back(json{{"name", s.to_string()},
                          {"partition", json_partition(s.mu)},
                          {"twist", s.twist},
                          {"rank", json_int(s.rank())},
                          {"slope", json_rat(s.slope())}});
  result["graded_pieces"] = pieces;
  result["stability"] = rep.stability ? stability_json(*rep.stability) : json(nullptr);
  if (c.format == "json") {
    emit("split", json{{"n", n}, {"k", k}, {"d", d}}, result, make_cert("none", {}, c.seed));
  } else {
    std::cout << rep.description << "\n";
    std::cout << "case " << result["case"].get<std::string>() << "  total rank " << rep.total_rank
              << "  kernel-bundle rank " << rep.q_rank << "\n";
    std::cout << "pieces:";
    for (const auto& s : rep.graded_pieces) std::cout << " " << s.to_string();
    std::cout << "\n";
    if (rep.stability)
      std::cout << "kernel bundle stable " << (rep.stability->stable ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_trunc_rank(int n, int d, int k, int h, const CommonOpts& c) {
  jetquiver::TruncationReport rep = jetquiver::truncation_rank(n, d, k, h, policy_of(c));
  if (c.format == "json") {
    emit("trunc-rank", json{{"n", n}, {"d", d}, {"k", k}, {"h", h}, {"seed", c.seed}},
         trunc_report_json(rep), make_cert(method_name(rep.method), rep.primes, c.seed));
  } else {
    print_trunc_text(rep);
  }
  return 0;
}

int cmd_fiber_rank(int n, int k, int d, const CommonOpts& c) {
  if (!(0 <= d && d <= k)) throw std::invalid_argument("fiber-rank: need 0 <= d <= k");
  std::vector<Rat> point = random_point(n, c.seed);
  jetquiver::RationalMatrix F = jetquiver::fiber_matrix(n, k, k - d, point);
  Int rank = jetquiver::rank_exact(F);
  Int expected = jetquiver::binomial(d + n, n);
  bool ok = rank == expected;
  if (c.format == "json") {
    json pt = json::array();
    for (const Rat& x : point) pt.push_back(json_rat(x));
    json result{{"n", n},
                {"k", k},
                {"d", d},
                {"m", k - d},
                {"point", pt},
                {"rank", json_int(rank)},
                {"expected", json_int(expected)},
                {"ok", ok}};
    emit("fiber-rank", json{{"n", n}, {"k", k}, {"d", d}, {"seed", c.seed}}, result,
         make_cert("exact", {}, c.seed));
  } else {
    std::cout << "fiber of the order-" << (k - d) << " collapse S^" << k << "V -> S^" << d
              << "V at point (";
    for (size_t i = 0; i < point.size(); ++i)
      std::cout << (i ? ", " : "") << rat_str(point[i]);
    std::cout << ")\n";
    std::cout << "rank " << rank << "  expected " << expected << "  ok " << (ok ? "yes" : "no")
              << "\n";
  }
  return ok ? 0 : 2;
}

int cmd_cross_check(int n, int d, int k, int h, const CommonOpts& c) {
  jetquiver::CrossCheckReport rep = jetquiver::cross_check_kernel(n, d, k, h, policy_of(c));
  if (c.format == "json") {
    json result{{"n", n},
                {"d", d},
                {"k", k},
                {"h", h},
                {"kernel_dim", json_int(rep.kernel_dim)},
                {"h0_dim", json_int(rep.h0_dim)},
                {"summands", json_module(rep.summands)},
                {"ok", rep.ok},
                {"trunc", trunc_report_json(rep.trunc)}};
    emit("cross-check", json{{"n", n}, {"d", d}, {"k", k}, {"h", h}, {"seed", c.seed}}, result,
         make_cert(method_name(rep.trunc.method), rep.trunc.primes, c.seed));
  } else {
    print_trunc_text(rep.trunc);
    std::cout << "kernel sections " << module_str(rep.summands) << "\n";
    std::cout << "kernel dim " << rep.kernel_dim << "  predicted " << rep.h0_dim << "  ok "
              << (rep.ok ? "yes" : "no") << "\n";
  }
  return rep.ok ? 0 : 2;
}

int cmd_bott(int n, int i, int l, const CommonOpts& c) {
  jetquiver::SymOmegaCohomology r = jetquiver::cohomology_sym_omega(n, i, l);
  if (c.format == "json") {
    json result{{"n", n},
                {"i", i},
                {"l", l},
                {"h0", json_module(r.h0)},
                {"h1", json_module(r.h1)},
                {"higher_possible", r.higher_possible}};
    emit("bott", json{{"n", n}, {"i", i}, {"l", l}}, result, make_cert("none", {}, c.seed));
  } else {
    std::cout << "S^" << i << "Omega(" << l << ") on P^" << n << "\n";
    std::cout << "H^0 = " << module_str(r.h0) << "\n";
    std::cout << "H^1 = " << module_str(r.h1) << "\n";
    std::cout << "higher cohomology possible " << (r.higher_possible ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_quiver(int n, const std::optional<std::string>& mu_str, std::optional<int> k,
               std::optional<int> d, const std::string& kind, const CommonOpts& c) {
  jetquiver::QuiverRep q;
  json params{{"n", n}};
  if (mu_str) {
    if (k || d) throw std::invalid_argument("quiver: give either --mu or --k/--d, not both");
    Partition mu = parse_partition(*mu_str);
    q = jetquiver::quiver_schur(n, mu);
    params["mu"] = json_partition(mu);
  } else if (k && d) {
    q = kind == "q" ? jetquiver::quiver_Q(n, *k, *d) : jetquiver::quiver_pp(n, *k, *d);
    params["kind"] = kind;
    params["k"] = *k;
    params["d"] = *d;
  } else {
    throw std::invalid_argument("quiver: need --mu, or both --k and --d");
  }
  if (c.format == "json") {
    emit("quiver", params, quiver_json(q), make_cert("none", {}, c.seed));
  } else {
    print_quiver_text(q);
  }
  return 0;
}

int cmd_stability(int n, int k, int d, const CommonOpts& c) {
  jetquiver::StabilityVerdict v = jetquiver::stability_Q(n, k, d);
  json result = stability_json(v);
  result["n"] = n;
  result["k"] = k;
  result["d"] = d;
  if (c.format == "json") {
    emit("stability", json{{"n", n}, {"k", k}, {"d", d}}, result, make_cert("none", {}, c.seed));
  } else {
    std::cout << "kernel bundle of P^" << k << "O(" << d << ") on P^" << n << ": "
              << (v.stable ? "stable" : "NOT stable") << "\n";
    for (const auto& row : v.table)
      std::cout << "suffix from S^" << row.i << "Omega: muF = " << row.muF << "\n";
  }
  return v.stable ? 0 : 2;
}

int cmd_verify_lemma(int n, int k, int count, const CommonOpts& c) {
  std::mt19937_64 rng(c.seed ^ 0x6a09e667f3bcc908ull);
  std::uniform_int_distribution<int> deg(-5, 8);
  std::uniform_int_distribution<int> spread(-4, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int checked = 0;
  json failures = json::array();
  std::vector<std::string> failure_lines;
  for (int rep = 0; rep < count; ++rep) {
    int degree = deg(rng);
    std::vector<int> e(static_cast<size_t>(n) + 1);
    int partial = 0;
    for (int j = 0; j < n; ++j) {
      e[static_cast<size_t>(j)] = spread(rng);
      partial += e[static_cast<size_t>(j)];
    }
    e[static_cast<size_t>(n)] = degree - partial;
    int cnum = 0;
    while (cnum == 0) cnum = num(rng);
    Rat coeff(cnum, den(rng));
    MultiIndex a{e};
    jetquiver::LemmaReport r =
        jetquiver::verify_lemma(n, k, jetquiver::LaurentCombo::monomial(a, coeff));
    ++checked;
    if (!r.ok) {
      json f{{"monomial", a.to_string()}, {"coeff", json_rat(coeff)}, {"discrepancies", r.discrepancies}};
      failures.push_back(f);
      failure_lines.push_back(a.to_string() + " coeff " + rat_str(coeff));
    }
  }
  bool ok = failures.empty();
  if (c.format == "json") {
    json result{{"n", n}, {"k", k}, {"degree_range", json::array({-5, 8})},
                {"checked", checked}, {"failures", failures}, {"ok", ok}};
    emit("verify-lemma", json{{"n", n}, {"k", k}, {"count", count}, {"seed", c.seed}}, result,
         make_cert("exact", {}, c.seed));
  } else {
    std::cout << "contraction identity at order " << k << " in " << (n + 1)
              << " variables: " << checked << " random Laurent monomials, degrees in [-5,8]\n";
    for (const auto& line : failure_lines) std::cout << "FAIL " << line << "\n";
    std::cout << (ok ? "all checks passed" : "counterexample found") << "\n";
  }
  return ok ? 0 : 2;
}

int cmd_sweep(std::vector<int> ns, int d_max, const CommonOpts& c) {
  if (ns.empty()) ns = {1, 2, 3};
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("sweep: dimensions must be >= 1");
  if (d_max < 0) throw std::invalid_argument("sweep: need d_max >= 0");
  jetquiver::SweepResult res =
      jetquiver::sweep_truncation_grid(ns, d_max, policy_of(c), env_threads());
  int failures = 0;
  for (const auto& row : res.rows)
    if (!row.ok()) ++failures;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& row : res.rows) {
      rows.push_back(json{{"n", row.n},
                          {"d", row.d},
                          {"k", row.k},
                          {"h", row.h},
                          {"rank", json_int(row.report.rank)},
                          {"maximal", row.rank_maximal_ok},
                          {"kernel_dim", json_int(row.report.kernel_dim)},
                          {"h0_dim", json_int(row.h0_dim)},
                          {"boundary_ok", row.injectivity_boundary_ok},
                          {"method", method_name(row.report.method)},
                          {"primes", json_primes(row.report.primes)},
                          {"ok", row.ok()}});
    }
    json nsj = json::array();
    for (int n : ns) nsj.push_back(n);
    json result{{"ns", nsj}, {"d_max", d_max}, {"points", static_cast<int>(res.rows.size())},
                {"failures", failures}, {"all_ok", res.all_ok}, {"rows", rows}};
    emit("sweep", json{{"ns", nsj}, {"d_max", d_max}, {"seed", c.seed}}, result,
         make_cert("per-point", {}, c.seed));
  } else {
    std::cout << "grid: maximal rank, kernel vs cohomology, injectivity boundary\n";
    for (const auto& row : res.rows)
      if (!row.ok())
        std::cout << "FAIL n=" << row.n << " d=" << row.d << " k=" << row.k << " h=" << row.h
                  << " rank=" << row.report.rank << " kernel=" << row.report.kernel_dim
                  << " h0=" << row.h0_dim << "\n";
    std::cout << res.rows.size() << " points, " << failures << " failures\n";
  }
  return res.all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for principal-parts bundles on projective space"};
  app.set_help_flag("--help", "print this help message");
  app.require_subcommand(1);

  // split
  auto* split = app.add_subcommand("split", "splitting type of P^kO(d)");
  int sp_n = 1, sp_k = 0, sp_d = 0;
  CommonOpts sp_c;
  split->add_option("--dim,--n", sp_n, "projective space dimension")->required();
  split->add_option("--order,--k", sp_k, "jet order")->required();
  split->add_option("--twist,--d", sp_d, "twist")->required();
  add_common(split, sp_c, false, false);

  // trunc-rank
  auto* tr = app.add_subcommand("trunc-rank", "rank of the section truncation P^kO(d) -> P^hO(d)");
  int tr_n = 1, tr_d = 0, tr_k = 0, tr_h = 0;
  CommonOpts tr_c;
  tr->add_option("--dim,--n", tr_n, "projective space dimension")->required();
  tr->add_option("--twist,--d", tr_d, "twist")->required();
  tr->add_option("--order,--k", tr_k, "source jet order")->required();
  tr->add_option("--trunc-to,--h", tr_h, "target jet order")->required();
  add_common(tr, tr_c, true, true);

  // fiber-rank
  auto* fr = app.add_subcommand("fiber-rank",
                                "rank of the collapse fiber S^kV -> S^dV at a random point");
  int fr_n = 1, fr_k = 0, fr_d = 0;
  CommonOpts fr_c;
  fr->add_option("--dim,--n", fr_n, "projective space dimension")->required();
  fr->add_option("--order,--k", fr_k, "source symmetric power")->required();
  fr->add_option("--twist,--d", fr_d, "target symmetric power")->required();
  add_common(fr, fr_c, true, false);

  // cross-check
  auto* cc = app.add_subcommand("cross-check",
                                "kernel of the truncation vs the cohomology prediction");
  int cc_n = 1, cc_d = 0, cc_k = 0, cc_h = 0;
  CommonOpts cc_c;
  cc->add_option("--dim,--n", cc_n, "projective space dimension")->required();
  cc->add_option("--twist,--d", cc_d, "twist")->required();
  cc->add_option("--order,--k", cc_k, "source jet order")->required();
  cc->add_option("--trunc-to,--h", cc_h, "target jet order")->required();
  add_common(cc, cc_c, true, true);

  // bott
  auto* bt = app.add_subcommand("bott", "cohomology of S^iOmega(l) on P^n");
  int bt_n = 1, bt_i = 0, bt_l = 0;
  CommonOpts bt_c;
  bt->add_option("--dim,--n", bt_n, "projective space dimension")->required();
  bt->add_option("--i", bt_i, "symmetric power of the cotangent bundle")->required();
  bt->add_option("--l", bt_l, "twist")->required();
  add_common(bt, bt_c, false, false);

  // quiver
  auto* qv = app.add_subcommand("quiver", "quiver representation of a homogeneous bundle");
  int qv_n = 1;
  std::optional<std::string> qv_mu;
  std::optional<int> qv_k, qv_d;
  std::string qv_kind = "pp";
  CommonOpts qv_c;
  qv->add_option("--dim,--n", qv_n, "projective space dimension")->required();
  qv->add_option("--mu", qv_mu, "partition, comma separated, for S_mu(V) (x) O");
  qv->add_option("--order,--k", qv_k, "jet order (with --twist)");
  qv->add_option("--twist,--d", qv_d, "twist (with --order)");
  qv->add_option("--kind", qv_kind, "pp for the principal parts, q for the kernel bundle")
      ->check(CLI::IsMember({"pp", "q"}))
      ->capture_default_str();
  add_common(qv, qv_c, false, false);

  // stability
  auto* st = app.add_subcommand("stability", "slope stability of the kernel bundle Q_{k,d}");
  int st_n = 2, st_k = 1, st_d = 0;
  CommonOpts st_c;
  st->add_option("--dim,--n", st_n, "projective space dimension")->required();
  st->add_option("--order,--k", st_k, "jet order")->required();
  st->add_option("--twist,--d", st_d, "twist")->required();
  add_common(st, st_c, false, false);

  // verify-lemma
  auto* vl = app.add_subcommand("verify-lemma",
                                "contraction identity on random Laurent monomials");
  int vl_n = 1, vl_k = 1, vl_count = 100;
  CommonOpts vl_c;
  vl->add_option("--dim,--n", vl_n, "number of variables minus one")->required();
  vl->add_option("--order,--k", vl_k, "power of the raising operator")->required();
  vl->add_option("--count", vl_count, "number of random monomials")->capture_default_str();
  add_common(vl, vl_c, true, false);

  // sweep
  auto* sw = app.add_subcommand("sweep", "maximal-rank and kernel checks over the full grid");
  std::vector<int> sw_ns;
  int sw_dmax = 8;
  CommonOpts sw_c;
  sw->add_option("--dim,--n", sw_ns, "projective space dimensions (repeatable)")->delimiter(',');
  sw->add_option("--dmax", sw_dmax, "largest twist")->capture_default_str();
  add_common(sw, sw_c, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (app.got_subcommand(split)) code = cmd_split(sp_n, sp_k, sp_d, sp_c);
    else if (app.got_subcommand(tr)) code = cmd_trunc_rank(tr_n, tr_d, tr_k, tr_h, tr_c);
    else if (app.got_subcommand(fr)) code = cmd_fiber_rank(fr_n, fr_k, fr_d, fr_c);
    else if (app.got_subcommand(cc)) code = cmd_cross_check(cc_n, cc_d, cc_k, cc_h, cc_c);
    else if (app.got_subcommand(bt)) code = cmd_bott(bt_n, bt_i, bt_l, bt_c);
    else if (app.got_subcommand(qv)) code = cmd_quiver(qv_n, qv_mu, qv_k, qv_d, qv_kind, qv_c);
    else if (app.got_subcommand(st)) code = cmd_stability(st_n, st_k, st_d, st_c);
    else if (app.got_subcommand(vl)) code = cmd_verify_lemma(vl_n, vl_k, vl_count, vl_c);
    else if (app.got_subcommand(sw)) code = cmd_sweep(sw_ns, sw_dmax, sw_c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // Timing goes to stderr so standard output stays byte-identical run to run.
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return code;
}
