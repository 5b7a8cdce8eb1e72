// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "plt/audit.hpp"
#include "plt/bounds.hpp"
#include "plt/demand_io.hpp"
#include "plt/error.hpp"
#include "plt/fixtures.hpp"
#include "plt/net.hpp"
#include "plt/protocol.hpp"
#include "plt/store.hpp"
#include "plt/wire.hpp"

namespace plt::cli {
namespace {

// Thrown for flag combinations CLI11 cannot express; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;

  std::size_t K = 0;
  std::size_t D = 0;
  std::size_t L = 0;
  std::uint64_t q = 0;
  std::size_t N = 1;

  int which = 0;
  std::size_t trials = 1;
  std::size_t max_k = 20;
  std::string ratio;
  std::size_t dstep = 1;

  std::string demand_path;
  std::string store_path;
  std::string verify_store;
  std::string out_path;
  std::string endpoint;
  std::size_t max_requests = 0;
  bool json = false;
};

std::string one_based(const std::vector<std::size_t>& indices) {
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(indices[i] + 1);
  }
  return s;
}

std::string matrix_lines(const FqMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c > 0 ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
}

std::string fraction_cell(const Rational& r) { return to_fraction(r) + " (" + to_decimal(r) + ")"; }

std::string describe(const ProtocolParams& p) {
  std::ostringstream out;
  out << "K=" << p.K << " D=" << p.D << " L=" << p.L << " q=" << p.q << ": R=" << p.R
      << " S=" << p.S << " n=" << p.n << " case " << to_string(p.kind) << ", " << p.answer_rows
      << " answer rows";
  return out.str();
}

// Demand from --demand if given, else a random one for the --D/--L flags.
Demand obtain_demand(const Options& o, const PrimeField& field, Rng& rng, ProtocolParams& params) {
  if (!o.demand_path.empty()) {
    Demand d = read_demand_file(o.demand_path, field, o.K);
    if ((o.D != 0 && o.D != d.D()) || (o.L != 0 && o.L != d.L())) {
      throw UsageError("--D/--L disagree with the demand file (D=" + std::to_string(d.D()) +
                       ", L=" + std::to_string(d.L()) + ")");
    }
    params = derive_params(o.K, d.D(), d.L(), o.q, o.N);
    return d;
  }
  if (o.D == 0 || o.L == 0) throw UsageError("either --demand or both --D and --L are required");
  params = derive_params(o.K, o.D, o.L, o.q, o.N);
  return random_demand(params, rng);
}

int cmd_bounds(const Options& o, std::ostream& out) {
  RateBounds b;
  try {
    b = rate_bounds(o.K, o.D, o.L);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BadShape) throw;
    throw UsageError(e.what());
  }
  out << "K=" << o.K << " D=" << o.D << " L=" << o.L << " R=" << o.K % o.D << '\n';
  out << "upper  " << fraction_cell(b.upper) << '\n';
  out << "lower  " << fraction_cell(b.lower) << '\n';
  out << "exact  " << (b.exact ? fraction_cell(*b.exact) : std::string("none")) << '\n';
  out << "jplt   " << fraction_cell(b.jplt) << '\n';
  return 0;
}

int cmd_example(const Options& o, std::ostream& out) {
  const ExampleReport report = run_example(o.which, o.seed);
  out << to_text(report);
  return report.passed() ? 0 : 1;
}

int cmd_demo(const Options& o, std::ostream& out) {
  const PrimeField field(o.q);
  Rng rng(o.seed);
  ProtocolParams params;
  const Demand demand = obtain_demand(o, field, rng, params);
  const MessageStore store = random_store(field, o.K, o.N, rng);
  const QueryBundle bundle = build_query(demand, params, rng);
  const Answer a = answer(bundle.query, store.X);
  const FqMatrix z = recover(a, bundle.secret, params, demand);
  const bool ok = z == demand_value(demand, store.X);

  out << describe(params) << '\n';
  out << "demand support " << one_based(demand.W()) << '\n';
  out << "query " << bundle.query.G.rows() << "x" << bundle.query.G.cols() << ", block "
      << bundle.secret.b + 1 << " of " << params.n + 1 << '\n';
  out << "recovered: " << (ok ? "OK" : "MISMATCH") << ", rate " << to_fraction(achieved_rate(params))
      << '\n';
  return ok ? 0 : 1;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const PrimeField field(o.q);
  const ProtocolParams params = derive_params(o.K, o.D, o.L, o.q, o.N);
  Rng rng(o.seed);
  std::uint64_t candidates = 0, violations = 0, subsets = 0, feasible = 0;
  std::size_t failed_trials = 0;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const Demand demand = random_demand(params, rng);
    const QueryBundle bundle = build_query(demand, params, rng);
    const PrivacyReport report = audit_individual_privacy(bundle.query, params);
    const SubsetSweep sweep = candidate_feasibility(bundle.query, params, bundle.secret);
    candidates += report.candidates;
    violations += report.violations.size();
    subsets += sweep.subsets;
    feasible += sweep.feasible;
    if (!report.ok() || !sweep.ok()) {
      ++failed_trials;
      out << "trial " << trial << " failed\n" << to_text(report);
      for (const auto& f : sweep.failures) out << "infeasible support " << one_based(f) << '\n';
    }
  }
  out << describe(params) << '\n';
  out << "trials " << o.trials << ", candidates " << candidates << ", violations " << violations
      << ", feasible supports " << feasible << "/" << subsets << '\n';
  out << "expected posterior " << to_fraction(Rational(static_cast<std::int64_t>(o.D),
                                                       static_cast<std::int64_t>(o.K)))
      << '\n';
  if (failed_trials > 0) {
    out << failed_trials << " of " << o.trials << " trials failed\n";
    return 1;
  }
  out << "posterior D/K for all indices in all trials\n";
  return 0;
}

int cmd_ilp(const Options& o, std::ostream& out) {
  if (o.max_k > kIlpMaxK) throw UsageError("--max-K is limited to " + std::to_string(kIlpMaxK));
  std::uint64_t triples = 0, mismatches = 0;
  for (std::size_t K = 1; K <= o.max_k; ++K) {
    for (std::size_t D = 1; D <= K; ++D) {
      for (std::size_t L = 1; L <= D; ++L) {
        ++triples;
        const std::uint64_t brute = ilp_bruteforce(K, D, L);
        const std::uint64_t closed = ilp_closed_form(K, D, L);
        if (brute != closed) {
          ++mismatches;
          out << "mismatch K=" << K << " D=" << D << " L=" << L << ": search " << brute
              << ", closed form " << closed << '\n';
        }
      }
    }
  }
  out << "checked " << triples << " triples with K <= " << o.max_k << ", " << mismatches
      << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.dstep == 0) throw UsageError("--dstep must be positive");
  std::vector<std::size_t> d_values;
  for (std::size_t d = o.dstep; d <= o.K; d += o.dstep) d_values.push_back(d);
  const std::string csv = sweep_csv(sweep(o.K, parse_rational(o.ratio), d_values));
  if (o.out_path.empty()) {
    out << csv;
  } else {
    write_text(o.out_path, csv);
    out << "wrote " << d_values.size() << " rows to " << o.out_path << '\n';
  }
  return 0;
}

int cmd_make_store(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  const MessageStore store = random_store(PrimeField(o.q), o.K, o.N, rng);
  store_save(store, o.out_path);
  out << "wrote " << store.K() << "x" << store.N() << " store over GF(" << store.q() << ") to "
      << o.out_path << '\n';
  return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
  Server server(store_load(o.store_path), parse_endpoint(o.endpoint));
  out << "listening on " << server.endpoint().to_string() << std::endl;
  server.run(o.max_requests);
  return 0;
}

int cmd_fetch(const Options& o, std::ostream& out) {
  const PrimeField field(o.q);
  Rng rng(o.seed);
  ProtocolParams params;
  const Demand demand = obtain_demand(o, field, rng, params);
  const QueryBundle bundle = build_query(demand, params, rng);
  if (o.json) out << query_to_json(bundle.query) << '\n';
  const Answer a = fetch(parse_endpoint(o.endpoint), bundle.query);
  if (o.json) out << answer_to_json(a) << '\n';
  const FqMatrix z = recover(a, bundle.secret, params, demand);

  out << describe(params) << '\n';
  if (o.out_path.empty()) {
    out << matrix_lines(z);
  } else {
    write_text(o.out_path, matrix_lines(z));
    out << "wrote " << z.rows() << "x" << z.cols() << " result to " << o.out_path << '\n';
  }
  bool ok = true;
  if (!o.verify_store.empty()) {
    ok = z == demand_value(demand, store_load(o.verify_store).X);
    out << "recovered: " << (ok ? "OK" : "MISMATCH") << ", ";
  }
  out << "rate " << to_fraction(achieved_rate(params)) << '\n';
  return ok ? 0 : 1;
}

void add_shape(CLI::App* cmd, Options& o, bool with_q) {
  cmd->add_option("--K", o.K, "number of stored messages")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--D", o.D, "support size")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--L", o.L, "demand dimension")->required()->check(CLI::PositiveNumber);
  if (with_q) cmd->add_option("--q", o.q, "field modulus (prime)")->required();
}

void add_demand_shape(CLI::App* cmd, Options& o) {
  cmd->add_option("--K", o.K, "number of stored messages")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--D", o.D, "support size (random demand)");
  cmd->add_option("--L", o.L, "demand dimension (random demand)");
  cmd->add_option("--q", o.q, "field modulus (prime)")->required();
  cmd->add_option("--demand", o.demand_path, "demand file")->check(CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Private linear transformation toolkit"};
  app.name(args.empty() ? "plt" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "seed for every random choice")->envname("PLT_SEED");

  auto* bounds = app.add_subcommand("bounds", "capacity bounds and joint-privacy rate");
  add_shape(bounds, o, false);

  auto* example = app.add_subcommand("example", "reproduce a worked example");
  example->add_option("which", o.which, "example number")->required()->check(CLI::Range(1, 3));

  auto* demo = app.add_subcommand("demo", "build, answer and recover one query in process");
  add_demand_shape(demo, o);
  demo->add_option("--N", o.N, "message length")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "privacy and feasibility audit of generated queries");
  add_shape(audit, o, true);
  audit->add_option("--trials", o.trials, "number of queries")->check(CLI::PositiveNumber);

  auto* ilp = app.add_subcommand("ilp", "compare the converse search with its closed form");
  ilp->add_option("--max-K", o.max_k, "largest K")->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of bounds over D with L = ratio * D");
  sweep_cmd->add_option("--K", o.K, "number of stored messages")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--ratio", o.ratio, "L / D as p/q or decimal")->required();
  sweep_cmd->add_option("--dstep", o.dstep, "step between D values");
  sweep_cmd->add_option("--out", o.out_path, "CSV path (default stdout)");

  auto* make_store = app.add_subcommand("make-store", "write a random message store");
  make_store->add_option("--K", o.K, "number of messages")->required()->check(CLI::PositiveNumber);
  make_store->add_option("--N", o.N, "message length")->check(CLI::PositiveNumber);
  make_store->add_option("--q", o.q, "field modulus (prime)")->required();
  make_store->add_option("--out", o.out_path, "store path")->required();

  auto* serve = app.add_subcommand("serve", "answer queries against a store over TCP");
  serve->add_option("--store", o.store_path, "store path")->required()->check(CLI::ExistingFile);
  o.endpoint = "127.0.0.1:0";
  serve->add_option("--listen", o.endpoint, "host:port (port 0 picks one)");
  serve->add_option("--max-requests", o.max_requests, "exit after this many requests (0 = never)");

  auto* fetch_cmd = app.add_subcommand("fetch", "send a query to a server and recover the demand");
  add_demand_shape(fetch_cmd, o);
  fetch_cmd->add_option("--connect", o.endpoint, "server host:port")->required();
  fetch_cmd->add_option("--out", o.out_path, "result path (default stdout)");
  fetch_cmd->add_option("--verify-store", o.verify_store, "compare against a local store")
      ->check(CLI::ExistingFile);
  fetch_cmd->add_flag("--json", o.json, "print the query and answer as JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bounds) return cmd_bounds(o, out);
    if (*example) return cmd_example(o, out);
    if (*demo) return cmd_demo(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*ilp) return cmd_ilp(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*make_store) return cmd_make_store(o, out);
    if (*serve) return cmd_serve(o, out);
    if (*fetch_cmd) return cmd_fetch(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.get_subcommands().front()->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace plt::cli
