// Command-line front end: prints generator q-expansions and the pair
// catalog, reports symbol-space dimensions and Hecke images, runs the
// lattice-geometry commands, and drives the verification suite.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error.
// Output is deterministic for identical invocations except for the elapsed
// fields of verification reports.

#include <toric/eisenstein.hpp>
#include <toric/lattice.hpp>
#include <toric/linalg.hpp>
#include <toric/manin.hpp>
#include <toric/qseries.hpp>
#include <toric/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace {

using toric::Rational;
using Json = nlohmann::ordered_json;

constexpr int kMaxOrder = 10000;
constexpr unsigned kCliSeed = 2026;

struct GlobalOptions {
  bool json = false;
  bool fast = false;
  int order_override = 0;  // 0 = use per-command defaults
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// Verification reports

struct CheckReport {
  std::string check;
  Json params;
  bool verdict;
  long long elapsed_ms;
};

CheckReport timed(std::string check, Json params, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool verdict = body();
  return {std::move(check), std::move(params), verdict, ms_since(t0)};
}

Json report_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["verdict"] = r.verdict;
  j["elapsed"] = r.elapsed_ms;
  return j;
}

// Human-readable verdict lines (unless --json), then one JSON report line
// per check; entries sorted for a stable order. Returns the exit code.
int emit_reports(std::vector<CheckReport> reports, const GlobalOptions& global) {
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
  std::size_t failures = 0;
  for (const CheckReport& r : reports) {
    if (!r.verdict) ++failures;
  }
  if (!global.json) {
    for (const CheckReport& r : reports) {
      std::printf("%s %s %s (%lld ms)\n", r.verdict ? "[ ok ]" : "[FAIL]", r.check.c_str(),
                  r.params.dump().c_str(), r.elapsed_ms);
    }
    std::printf("%zu checks, %zu failures\n", reports.size(), failures);
  }
  for (const CheckReport& r : reports) std::printf("%s\n", report_json(r).dump().c_str());
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Verification runners (shared between the single commands and `verify all`)

void run_main_check(std::vector<CheckReport>& out, const GlobalOptions& global, int l, int k,
                    bool print_combination) {
  const int N = global.order_override > 0 ? global.order_override : 40;
  const auto t0 = std::chrono::steady_clock::now();
  const toric::QSeries form = toric::newform_oracle(l, k, N);
  const toric::MembershipResult result = toric::check_newform_membership(l, k, form, N);
  out.push_back({"main", Json{{"level", l}, {"weight", k}, {"order", N}}, result.member,
                 ms_since(t0)});
  if (print_combination && !global.json && result.member) {
    for (const auto& [label, coeff] : result.combination) {
      std::printf("  %s : %s\n", label.c_str(), toric::to_string(coeff).c_str());
    }
  }
}

void run_abcd(std::vector<CheckReport>& out, long pmax) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (p > pmax) continue;
    out.push_back(timed("abcd", Json{{"p", p}}, [p] {
      bool ok = toric::check_abcd(p);
      if (p == 2) {
        const auto subs = toric::sublattices_index_p(2);
        std::size_t segments = 0;
        for (const auto& S : subs) segments += toric::boundary_segments(S).size();
        ok = ok && subs.size() == 3 && segments == 4;
      }
      return ok;
    }));
  }
}

void run_firstapprox(std::vector<CheckReport>& out, int l, int k, long dmax) {
  out.push_back(timed("firstapprox", Json{{"level", l}, {"weight", k}, {"dmax", dmax}}, [=] {
    for (long D = 1; D <= dmax; ++D) {
      if (!toric::check_firstapprox(l, k, D)) return false;
    }
    return true;
  }));
}

void run_mumap(std::vector<CheckReport>& out, const GlobalOptions& global, int l, int k,
               int default_order) {
  const int N = global.order_override > 0 ? global.order_override : default_order;
  out.push_back(timed("mumap", Json{{"level", l}, {"weight", k}, {"order", N}}, [=] {
    // Run at the working order and again with ten extra coefficients so a
    // membership verdict cannot be a truncation artifact.
    return toric::check_mumap_all(l, k, N) && toric::check_mumap_all(l, k, N + 10);
  }));
}

void run_hecke(std::vector<CheckReport>& out, const GlobalOptions& global, int l, int k, long p,
               std::size_t count) {
  const int min_order = static_cast<int>(p) * (toric::sturm_bound(l, k) + 10);
  const int N = std::max(global.order_override, min_order);
  out.push_back(timed(
      "hecke", Json{{"level", l}, {"weight", k}, {"p", p}, {"vectors", count}, {"order", N}},
      [=] {
        toric::SymbolSpace space(l, k);
        for (const auto& w : toric::random_symbol_vectors(space, count, kCliSeed)) {
          if (!toric::check_hecke_equivariance(l, k, p, w, N)) return false;
        }
        return true;
      }));
}

void run_derivs(std::vector<CheckReport>& out, const GlobalOptions& global, int l, int k) {
  const int N = global.order_override > 0 ? global.order_override : 30;
  out.push_back(timed("derivative-membership", Json{{"level", l}, {"weight", k}, {"order", N}},
                      [=] { return toric::check_derivs_in_pairs(l, k, N); }));
}

void run_conesum(std::vector<CheckReport>& out, std::size_t count) {
  out.push_back(timed("cone-sum-parity", Json{{"samples", count}, {"seed", kCliSeed}},
                      [=] { return toric::check_conesum_random(count, kCliSeed); }));
}

void run_roundtrip(std::vector<CheckReport>& out, std::size_t count, int order) {
  out.push_back(
      timed("divisor-series-roundtrip", Json{{"samples", count}, {"seed", kCliSeed}, {"order", order}},
            [=] { return toric::check_odd_roundtrip(count, kCliSeed, order); }));
}

void run_commute(std::vector<CheckReport>& out, int l, int k, std::size_t count) {
  out.push_back(timed("hecke-commutation", Json{{"level", l}, {"weight", k}, {"vectors", count}},
                      [=] { return toric::check_hecke_commutation(l, k, count, kCliSeed); }));
}

void run_inside(std::vector<CheckReport>& out, int l, int k, long p, long dmax) {
  out.push_back(
      timed("inside-cancellation", Json{{"level", l}, {"weight", k}, {"p", p}, {"dmax", dmax}},
            [=] { return toric::check_inside_zero(l, k, p, dmax); }));
}

void run_threads_check(std::vector<CheckReport>& out, long dmax) {
  out.push_back(timed("thread-partition", Json{{"dmax", dmax}}, [=] {
    for (long D = 1; D <= dmax; ++D) {
      if (!toric::check_threads_partition(D)) return false;
    }
    return true;
  }));
}

void run_dims_check(std::vector<CheckReport>& out) {
  out.push_back(timed("dimension-oracles", Json::object(), [] {
    const toric::Dims d53 = toric::dims(5, 3);
    const toric::Dims d73 = toric::dims(7, 3);
    const toric::Dims d54 = toric::dims(5, 4);
    return d53.dim_M == 4 && d53.dim_S == 0 && d73.dim_M == 7 && d73.dim_S == 1 &&
           d54.dim_M == 5 && d54.dim_S == 1;
  }));
}

void run_span_check(std::vector<CheckReport>& out, const GlobalOptions& global) {
  for (auto [l, k, default_order] :
       {std::tuple<int, int, int>{5, 3, 20}, {7, 3, 30}, {5, 4, 30}}) {
    const int N = global.order_override > 0 ? global.order_override : default_order;
    out.push_back(timed("span-rank-bounds", Json{{"level", l}, {"weight", k}, {"order", N}}, [=] {
      const toric::SpanReport report = toric::pair_span_report(l, k, N);
      return report.bounds_ok && report.stable;
    }));
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_series(const GlobalOptions& global, int level, int weight, int a, int order, bool ek) {
  require(order >= 0 && order <= kMaxOrder, "--order must be in [0, 10000]");
  require(weight >= 1, "--weight must be at least 1");
  toric::QSeries series = [&] {
    if (ek) return toric::eis_k(weight, order);
    require(level >= 1, "--level is required (and must be positive) without --ek");
    require(a >= 0, "--a is required (and must be nonnegative) without --ek");
    return toric::tilde_s(level, a, weight, order);
  }();
  std::printf("%s\n", (global.json ? series.to_json_string() : series.to_display_string()).c_str());
  return 0;
}

int cmd_pairs(int level, int weight, int order, bool quasi) {
  require(level >= 1, "--level must be positive");
  require(weight >= 2, "--weight must be at least 2");
  require(order >= 0 && order <= kMaxOrder, "--order must be in [0, 10000]");
  for (const auto& [label, series] : toric::pair_basis(level, weight, order, quasi)) {
    Json line;
    line["label"] = label.to_string();
    line["series"] = Json::parse(series.to_json_string());
    std::printf("%s\n", line.dump().c_str());
  }
  return 0;
}

int cmd_symbols_dims(const GlobalOptions& global, int level, int weight) {
  require(level >= 1, "--level must be positive");
  require(weight >= 2, "--weight must be at least 2");
  toric::SymbolSpace space(level, weight);
  const std::size_t dim = space.quotient_dim();
  toric::EchelonBasis plus_span(dim), minus_span(dim);
  for (std::size_t i = 0; i < space.num_generators(); ++i) {
    std::vector<Rational> raw(space.num_generators(), Rational(0));
    raw[i] = Rational(1);
    const toric::SymbolVector e(space, std::move(raw));
    plus_span.insert(
        space.quotient_coordinates(toric::symmetrize(e, toric::SymmetrizationSign::plus).raw()));
    minus_span.insert(
        space.quotient_coordinates(toric::symmetrize(e, toric::SymmetrizationSign::minus).raw()));
  }
  if (global.json) {
    Json j;
    j["level"] = level;
    j["weight"] = weight;
    j["generators"] = space.num_generators();
    j["relation_rank"] = space.relation_rank();
    j["quotient_dim"] = dim;
    j["quotient_dim_plus"] = plus_span.rank();
    j["quotient_dim_minus"] = minus_span.rank();
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("level %d weight %d\n", level, weight);
    std::printf("generators %zu\n", space.num_generators());
    std::printf("relation rank %zu\n", space.relation_rank());
    std::printf("quotient dim %zu\n", dim);
    std::printf("quotient dim (+) %zu\n", plus_span.rank());
    std::printf("quotient dim (-) %zu\n", minus_span.rank());
  }
  return 0;
}

int cmd_symbols_hecke(const GlobalOptions& global, int level, int weight, long n, int r, long u,
                      long v) {
  require(level >= 1, "--level must be positive");
  require(weight >= 2, "--weight must be at least 2");
  require(n >= 1, "--n must be at least 1");
  require(r >= 0 && r <= weight - 2, "--r must be in [0, weight-2]");
  toric::SymbolSpace space(level, weight);
  const toric::SymbolVector image = toric::hecke_tn(toric::monomial_symbol(space, r, u, v), n);
  const std::vector<Rational> coords = space.quotient_coordinates(image.raw());
  if (global.json) {
    Json j;
    j["level"] = level;
    j["weight"] = weight;
    j["n"] = n;
    j["r"] = r;
    j["u"] = u;
    j["v"] = v;
    Json list = Json::array();
    for (const Rational& c : coords) list.push_back(toric::to_string(c));
    j["coords"] = list;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::string line;
    for (const Rational& c : coords) {
      if (!line.empty()) line += ' ';
      line += toric::to_string(c);
    }
    std::printf("%s\n", line.c_str());
  }
  return 0;
}

int cmd_lattice_hp(const GlobalOptions& global, long p) {
  require(is_prime(p), "--p must be prime");
  require(p <= 997, "--p must be at most 997");
  const auto subs = toric::sublattices_index_p(p);
  std::size_t total_segments = 0;
  Json sublattice_list = Json::array();
  std::string human;
  for (const auto& S : subs) {
    const auto quads = toric::boundary_segment_quads(S);
    total_segments += quads.size();
    Json entry;
    entry["lattice"] = S.to_string();
    Json segment_list = Json::array();
    std::string quad_text;
    for (const auto& h : quads) {
      segment_list.push_back(Json::array({h.a, h.b, h.c, h.d}));
      quad_text += " (" + std::to_string(h.a) + "," + std::to_string(h.b) + "," +
                   std::to_string(h.c) + "," + std::to_string(h.d) + ")";
    }
    entry["segments"] = segment_list;
    sublattice_list.push_back(entry);
    human += S.to_string() + ":" + quad_text + "\n";
  }
  const bool match = toric::check_abcd(p);
  if (global.json) {
    Json j;
    j["p"] = p;
    j["sublattices"] = sublattice_list;
    j["segment_count"] = total_segments;
    j["matches_hecke_set"] = match;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("p %ld\n%s", p, human.c_str());
    std::printf("sublattices %zu, segments %zu\n", subs.size(), total_segments);
    std::printf("segment multiset equals the determinant-%ld quadruple set: %s\n", p,
                match ? "yes" : "no");
  }
  return match ? 0 : 1;
}

int cmd_lattice_threads(const GlobalOptions& global, long D) {
  require(D >= 1 && D <= 500, "--d must be in [1, 500]");
  const auto chains = toric::threads(D);
  if (global.json) {
    Json j;
    j["d"] = D;
    Json thread_list = Json::array();
    for (const auto& chain : chains) {
      Json one = Json::array();
      for (const auto& t : chain) one.push_back(Json::array({t.m1, t.k1, t.m2, t.k2}));
      thread_list.push_back(one);
    }
    j["threads"] = thread_list;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("d %ld, threads %zu\n", D, chains.size());
    for (const auto& chain : chains) {
      std::string line;
      for (const auto& t : chain) {
        if (!line.empty()) line += " -> ";
        line += "(" + std::to_string(t.m1) + "," + std::to_string(t.k1) + "," +
                std::to_string(t.m2) + "," + std::to_string(t.k2) + ")";
      }
      std::printf("%s\n", line.c_str());
    }
  }
  return 0;
}

int cmd_verify_main(const GlobalOptions& global, int level, int weight) {
  std::vector<CheckReport> reports;
  run_main_check(reports, global, level, weight, /*print_combination=*/true);
  return emit_reports(std::move(reports), global);
}

int cmd_verify_mumap(const GlobalOptions& global, int level, int weight) {
  std::vector<CheckReport> reports;
  run_mumap(reports, global, level, weight, level == 7 ? 40 : 30);
  return emit_reports(std::move(reports), global);
}

int cmd_verify_hecke(const GlobalOptions& global, int level, int weight, long p) {
  require(is_prime(p), "--p must be prime");
  require(std::gcd(p, static_cast<long>(level)) == 1, "--p must be coprime to the level");
  std::vector<CheckReport> reports;
  run_hecke(reports, global, level, weight, p, global.fast ? 5 : 10);
  return emit_reports(std::move(reports), global);
}

int cmd_verify_firstapprox(const GlobalOptions& global, int level, int weight, long dmax) {
  require(dmax >= 1 && dmax <= 500, "--dmax must be in [1, 500]");
  std::vector<CheckReport> reports;
  run_firstapprox(reports, level, weight, global.fast ? std::min(dmax, 8L) : dmax);
  return emit_reports(std::move(reports), global);
}

int cmd_verify_abcd(const GlobalOptions& global, long pmax) {
  require(pmax >= 2, "--pmax must be at least 2");
  std::vector<CheckReport> reports;
  run_abcd(reports, global.fast ? std::min(pmax, 7L) : pmax);
  return emit_reports(std::move(reports), global);
}

int cmd_verify_all(const GlobalOptions& global) {
  std::vector<CheckReport> reports;
  run_main_check(reports, global, 7, 3, false);
  run_main_check(reports, global, 5, 4, false);
  run_abcd(reports, global.fast ? 7 : 13);
  for (auto [l, k] : {std::pair<int, int>{5, 3}, {5, 4}, {7, 3}}) {
    run_firstapprox(reports, l, k, global.fast ? 8 : 12);
  }
  run_mumap(reports, global, 5, 3, 30);
  run_mumap(reports, global, 5, 4, 30);
  run_mumap(reports, global, 7, 3, 40);
  const std::size_t hecke_vectors = global.fast ? 5 : 10;
  for (int l : {5, 7}) {
    for (long p : {2L, 3L}) run_hecke(reports, global, l, 3, p, hecke_vectors);
  }
  run_derivs(reports, global, 5, 3);
  run_derivs(reports, global, 5, 4);
  run_conesum(reports, 100);
  run_roundtrip(reports, 50, 50);
  for (auto [l, k] : {std::pair<int, int>{5, 3}, {7, 3}}) {
    run_commute(reports, l, k, global.fast ? 5 : 20);
  }
  for (long p : {2L, 3L}) run_inside(reports, 5, 3, p, global.fast ? 8 : 10);
  run_threads_check(reports, global.fast ? 8 : 30);
  run_dims_check(reports);
  run_span_check(reports, global);
  return emit_reports(std::move(reports), global);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  int exit_code = 0;

  CLI::App app{"Exact q-expansion, symbol-space, and lattice toolkit with a verification suite"};
  app.require_subcommand(1);
  app.add_flag("--json", global.json, "machine-readable JSON output only");
  app.add_flag("--fast", global.fast,
               "trimmed sweeps for CI: degree <= 8, primes <= 7, 5 random vectors");
  app.add_option("--order-override", global.order_override,
                 "replace the default q-expansion orders of verification commands "
                 "(commands with a hard minimum clamp up to it)")
      ->check(CLI::Range(1, kMaxOrder));

  // series
  int s_level = 0, s_weight = 0, s_a = -1, s_order = -1;
  bool s_ek = false;
  auto* series = app.add_subcommand("series", "print one generator q-expansion");
  series->fallthrough();
  series->add_option("--level", s_level, "level");
  series->add_option("--weight", s_weight, "weight")->required();
  series->add_option("--a", s_a, "residue label");
  series->add_option("--order", s_order, "truncation order")->required();
  series->add_flag("--ek", s_ek, "print the classical level-one series of this weight instead");
  series->callback([&] { exit_code = cmd_series(global, s_level, s_weight, s_a, s_order, s_ek); });

  // pairs
  int p_level = 0, p_weight = 0, p_order = -1;
  bool p_quasi = false;
  auto* pairs = app.add_subcommand("pairs", "emit the weight-k product catalog as JSON lines");
  pairs->fallthrough();
  pairs->add_option("--level", p_level, "level")->required();
  pairs->add_option("--weight", p_weight, "total weight")->required();
  pairs->add_option("--order", p_order, "truncation order")->required();
  pairs->add_flag("--quasi", p_quasi, "include entries with an E_2-type factor");
  pairs->callback([&] { exit_code = cmd_pairs(p_level, p_weight, p_order, p_quasi); });

  // symbols
  auto* symbols = app.add_subcommand("symbols", "weight-k symbol-space commands");
  symbols->require_subcommand(1);
  symbols->fallthrough();

  int yd_level = 0, yd_weight = 0;
  auto* symbols_dims = symbols->add_subcommand("dims", "generator, relation, and quotient counts");
  symbols_dims->fallthrough();
  symbols_dims->add_option("--level", yd_level, "level")->required();
  symbols_dims->add_option("--weight", yd_weight, "weight")->required();
  symbols_dims->callback([&] { exit_code = cmd_symbols_dims(global, yd_level, yd_weight); });

  int yh_level = 0, yh_weight = 0, yh_r = 0;
  long yh_n = 0, yh_u = 0, yh_v = 0;
  auto* symbols_hecke =
      symbols->add_subcommand("hecke", "quotient coordinates of a Hecke image of one monomial");
  symbols_hecke->fallthrough();
  symbols_hecke->add_option("--level", yh_level, "level")->required();
  symbols_hecke->add_option("--weight", yh_weight, "weight")->required();
  symbols_hecke->add_option("--n", yh_n, "Hecke index")->required();
  symbols_hecke->add_option("--r", yh_r, "x-power of the monomial")->required();
  symbols_hecke->add_option("--u", yh_u, "first label")->required();
  symbols_hecke->add_option("--v", yh_v, "second label")->required();
  symbols_hecke->callback([&] {
    exit_code = cmd_symbols_hecke(global, yh_level, yh_weight, yh_n, yh_r, yh_u, yh_v);
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "planar lattice-geometry commands");
  lattice->require_subcommand(1);
  lattice->fallthrough();

  long lp_p = 0;
  auto* lattice_hp =
      lattice->add_subcommand("hp", "index-p sublattices, boundary segments, multiset verdict");
  lattice_hp->fallthrough();
  lattice_hp->add_option("--p", lp_p, "prime index")->required();
  lattice_hp->callback([&] { exit_code = cmd_lattice_hp(global, lp_p); });

  long lt_d = 0;
  auto* lattice_threads = lattice->add_subcommand("threads", "thread partition of the degree-D set");
  lattice_threads->fallthrough();
  lattice_threads->add_option("--d", lt_d, "degree")->required();
  lattice_threads->callback([&] { exit_code = cmd_lattice_threads(global, lt_d); });

  // verify
  auto* verify = app.add_subcommand("verify", "verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();

  int vm_level = 0, vm_weight = 0;
  auto* verify_main =
      verify->add_subcommand("main", "eta-product newform membership in the pair span");
  verify_main->fallthrough();
  verify_main->add_option("--level", vm_level, "level")->required();
  verify_main->add_option("--weight", vm_weight, "weight")->required();
  verify_main->callback([&] { exit_code = cmd_verify_main(global, vm_level, vm_weight); });

  int vu_level = 0, vu_weight = 0;
  auto* verify_mumap = verify->add_subcommand(
      "mumap", "series images of all three-term relations lie in the fixed subspace");
  verify_mumap->fallthrough();
  verify_mumap->add_option("--level", vu_level, "level")->required();
  verify_mumap->add_option("--weight", vu_weight, "weight")->required();
  verify_mumap->callback([&] { exit_code = cmd_verify_mumap(global, vu_level, vu_weight); });

  int vh_level = 0, vh_weight = 0;
  long vh_p = 0;
  auto* verify_hecke = verify->add_subcommand(
      "hecke", "Hecke action commutes with the symbols-to-series map modulo the fixed subspace");
  verify_hecke->fallthrough();
  verify_hecke->add_option("--level", vh_level, "level")->required();
  verify_hecke->add_option("--weight", vh_weight, "weight")->required();
  verify_hecke->add_option("--p", vh_p, "prime")->required();
  verify_hecke->callback(
      [&] { exit_code = cmd_verify_hecke(global, vh_level, vh_weight, vh_p); });

  int vf_level = 0, vf_weight = 0;
  long vf_dmax = 12;
  auto* verify_firstapprox =
      verify->add_subcommand("firstapprox", "degree-D symbol identity in the quotient");
  verify_firstapprox->fallthrough();
  verify_firstapprox->add_option("--level", vf_level, "level")->required();
  verify_firstapprox->add_option("--weight", vf_weight, "weight")->required();
  verify_firstapprox->add_option("--dmax", vf_dmax, "largest degree (default 12)");
  verify_firstapprox->callback(
      [&] { exit_code = cmd_verify_firstapprox(global, vf_level, vf_weight, vf_dmax); });

  long va_pmax = 13;
  auto* verify_abcd =
      verify->add_subcommand("abcd", "boundary-segment multiset equals the determinant-p set");
  verify_abcd->fallthrough();
  verify_abcd->add_option("--pmax", va_pmax, "largest prime (default 13)");
  verify_abcd->callback([&] { exit_code = cmd_verify_abcd(global, va_pmax); });

  auto* verify_all = verify->add_subcommand("all", "run the full verification suite");
  verify_all->fallthrough();
  verify_all->callback([&] { exit_code = cmd_verify_all(global); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
