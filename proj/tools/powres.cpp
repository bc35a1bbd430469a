// Copyright 2026 The powres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// powres: command-line front end.
//
//   powres decide    --q 3 --k 2 --elements 2,3,5,6,7
//   powres verify    --q 3 --k 1 --elements 2,3,6,18 --bound 100000
//   powres witness   --q 3 --k 1 --elements 2,4
//   powres construct minimum --q 3 --k 2 --primes 2,5,7
//   powres equiv     --elements 2,3,6,18 --elements 5,7,35,245
//   powres map       --q 5 --elements 2,12,45
//
// Exit codes: 0 success / member / equivalent, 1 non_member / not
// equivalent / failed self-check, 2 usage or input error, 3 the decision
// and the numerical oracle disagree.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powres/powres.hpp"

namespace {

using powres::BigInt;
using powres::Json;

constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct Options {
  std::uint64_t q = 3;
  std::size_t k = 1;
  std::vector<std::string> elements;
  std::vector<std::string> files;
  std::optional<std::uint64_t> bound;
  std::string primes;
  std::string kind;
  bool json = false;
  unsigned threads = 1;
  bool no_verify = false;
};

struct UsageError : powres::Error {
  using powres::Error::Error;
};

std::string format_vector(const powres::Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string format_integers(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return "{" + s + "}";
}

std::string format_modulus(const powres::FactoredModulus& n) {
  std::string s = std::to_string(n.value) + " =";
  for (std::size_t i = 0; i < n.factors.size(); ++i) {
    s += (i ? " * " : " ") + std::to_string(n.factors[i].prime);
    if (n.factors[i].exponent > 1) s += "^" + std::to_string(n.factors[i].exponent);
  }
  return s;
}

void print_points(std::ostream& out, const powres::PointSet& ps) {
  out << "points (" << ps.size() << " in PG(F_" << ps.field().order() << "^" << ps.ambient_dim() << ")):\n";
  for (const auto& p : ps) out << "  " << format_vector(p.coords()) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Integer sets from --elements (one per occurrence) followed by --file.
// A file's own "q" must agree with --q when both are given.
std::vector<powres::ResidueSet> load_sets(const Options& o, const CLI::App& cmd) {
  std::vector<powres::ResidueSet> sets;
  for (const auto& list : o.elements) sets.push_back(powres::build_residue_set(powres::parse_integer_list(list), o.q));
  for (const auto& path : o.files) {
    const auto in = powres::integer_set_from_json(read_json_file(path));
    if (cmd.count("--q") > 0 && in.q != o.q) {
      throw UsageError(path + ": q = " + std::to_string(in.q) + " conflicts with --q " + std::to_string(o.q));
    }
    sets.push_back(powres::build_residue_set(in.elements, in.q));
  }
  return sets;
}

powres::ResidueSet load_one(const Options& o, const CLI::App& cmd) {
  auto sets = load_sets(o, cmd);
  if (sets.size() != 1) throw UsageError("expected exactly one input set (--elements or --file)");
  return sets.front();
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& p : powres::parse_integer_list(text)) {
    if (p < 2 || p > std::numeric_limits<std::uint64_t>::max()) throw UsageError("bad prime " + p.str());
    out.push_back(static_cast<std::uint64_t>(p));
  }
  return out;
}

void print_decision(std::ostream& out, const powres::ResidueSet& rs, const powres::Decision& d) {
  out << "verdict: " << powres::to_string(d.verdict) << "\n";
  out << "reason: " << d.reason << "\n";
  out << "q = " << rs.q << ", k = " << d.k << ", support:";
  for (auto p : rs.support) out << " " << p;
  out << "\n";
  if (d.points) {
    print_points(out, *d.points);
    out << "size " << d.points->size() << " vs minimum blocking size " << powres::bose_burton_bound(d.k, rs.q)
        << "\n";
  }
  if (d.unblocked) {
    out << "certificate: subspace of codimension " << d.k << " missed by every point, basis:\n";
    for (const auto& row : d.unblocked->basis().to_rows()) out << "  " << format_vector(row) << "\n";
  }
}

Json decision_json(const powres::ResidueSet& rs, const powres::Decision& d) {
  Json j = powres::to_json(d);
  j["q"] = rs.q;
  j["support"] = rs.support;
  j["bose_burton_bound"] = powres::bose_burton_bound(d.k, rs.q);
  return j;
}

int cmd_decide(const Options& o, const CLI::App& cmd) {
  const auto rs = load_one(o, cmd);
  const auto d = powres::decide(rs, o.k, o.threads);
  if (o.json) {
    std::cout << decision_json(rs, d).dump(2) << "\n";
  } else {
    print_decision(std::cout, rs, d);
  }
  return d.is_member() ? 0 : 1;
}

int cmd_verify(const Options& o, const CLI::App& cmd) {
  const auto rs = load_one(o, cmd);
  const auto d = powres::decide(rs, o.k, o.threads);
  const auto report = powres::verify_membership(rs, o.k, o.bound.value_or(100000), o.threads);
  // A member must pass at every admissible modulus.
  const bool consistent = !(d.is_member() && !report.verified());
  if (o.json) {
    Json j = powres::to_json(report);
    j["decision"] = powres::to_string(d.verdict);
    j["consistent"] = consistent;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "decision: " << powres::to_string(d.verdict) << "\n";
    if (report.verified()) {
      std::cout << "verified: no counterexample among " << report.checked << " moduli up to " << report.bound << "\n";
    } else {
      std::cout << "counterexample: " << format_modulus(*report.counterexample) << " (after " << report.checked
                << " moduli)\n";
    }
    std::cout << (consistent ? "consistent" : "INCONSISTENT: decision and oracle disagree") << "\n";
  }
  return consistent ? 0 : kExitInconsistent;
}

int cmd_witness(const Options& o, const CLI::App& cmd) {
  const auto rs = load_one(o, cmd);
  const auto d = powres::decide(rs, o.k, o.threads);
  const std::uint64_t bound = o.bound.value_or(1000000);
  const auto w = powres::find_witness(rs, o.k, bound, o.threads);
  const bool consistent = !(d.is_member() && w);
  const char* status = w ? "found" : (d.is_member() ? "none" : "inconclusive");
  if (o.json) {
    Json j = {{"status", status},
              {"bound", bound},
              {"witness", w ? Json(w->value) : Json(nullptr)},
              {"factors", w ? powres::to_json(*w)["factors"] : Json(nullptr)},
              {"decision", powres::to_string(d.verdict)},
              {"consistent", consistent}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "decision: " << powres::to_string(d.verdict) << "\n";
    if (w) {
      std::cout << "witness: " << format_modulus(*w) << "\n";
    } else if (d.is_member()) {
      std::cout << "no witness up to " << bound << "\n";
    } else {
      std::cout << "inconclusive: no witness up to " << bound << "\n";
    }
    std::cout << (consistent ? "consistent" : "INCONSISTENT: decision and oracle disagree") << "\n";
  }
  return consistent ? 0 : kExitInconsistent;
}

struct SelfCheck {
  std::string name;
  bool passed;
};

int cmd_construct(const Options& o) {
  const powres::PrimeField f(o.q);
  if (o.k < 1) throw UsageError("k must be at least 1");
  std::size_t n = 0;
  powres::PointSet ps(f, 1);
  std::uint64_t expected = 0;
  bool expect_k_space = false;
  if (o.kind == "minimum") {
    n = o.k + 1;
    ps = powres::full_space_points(f, n);
    expected = powres::k_space_size(o.k, o.q);
    expect_k_space = true;
  } else if (o.kind == "second_smallest") {
    if (o.k < 2) throw UsageError("second_smallest needs k >= 2 (use triangle for k = 1)");
    n = o.k + 2;
    ps = powres::second_smallest_blocking(n, o.k, o.q);
    expected = powres::second_smallest_size(o.k, o.q);
  } else if (o.kind == "triangle") {
    if (o.k != 1) throw UsageError("triangle is a 1-blocking set; use --k 1");
    n = 3;
    ps = powres::projective_triangle(o.q);
    expected = powres::second_smallest_size(1, o.q);
  } else {
    throw UsageError("unknown kind '" + o.kind + "' (minimum | second_smallest | triangle)");
  }

  std::vector<std::uint64_t> primes;
  if (o.primes.empty()) {
    for (std::uint64_t p = 2; primes.size() < n; ++p) {
      if (powres::is_prime(p)) primes.push_back(p);
    }
  } else {
    primes = parse_primes(o.primes);
  }
  if (primes.size() != n) {
    throw UsageError(o.kind + " with k = " + std::to_string(o.k) + " needs " + std::to_string(n) + " primes, got " +
                     std::to_string(primes.size()));
  }
  std::vector<BigInt> elements;
  try {
    elements = powres::realize(ps, primes);
  } catch (const powres::Error& e) {
    throw UsageError(e.what());
  }

  std::vector<SelfCheck> checks;
  if (!o.no_verify) {
    const auto rs = powres::build_residue_set(elements, o.q);
    checks.push_back({"size", elements.size() == expected});
    checks.push_back({"no perfect power", !rs.contains_perfect_power});
    checks.push_back({"round trip", !rs.contains_perfect_power && powres::pi_q(rs, primes) == ps});
    checks.push_back({"blocking", powres::is_k_blocking(ps, o.k, o.threads)});
    checks.push_back({"minimal", checks.back().passed && powres::is_minimal_blocking(ps, o.k)});
    checks.push_back({expect_k_space ? "contains k-space" : "no k-space",
                      powres::contains_k_space(ps, o.k) == expect_k_space});
  }
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;

  if (o.json) {
    Json elems = Json::array();
    for (const auto& e : elements) elems.push_back(powres::integer_to_json(e));
    Json jchecks = Json::object();
    for (const auto& c : checks) jchecks[c.name] = c.passed;
    Json j = {{"kind", o.kind}, {"q", o.q},           {"k", o.k},
              {"primes", primes}, {"elements", elems}, {"size", elements.size()},
              {"expected_size", expected}, {"points", powres::to_json(ps)}, {"self_checks", jchecks}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << o.kind << " (q = " << o.q << ", k = " << o.k << ") over primes";
    for (auto p : primes) std::cout << " " << p;
    std::cout << "\nelements: " << format_integers(elements) << "\n";
    std::cout << "size " << elements.size() << ", expected " << expected << "\n";
    print_points(std::cout, ps);
    if (o.no_verify) std::cout << "self-checks skipped\n";
    for (const auto& c : checks) std::cout << "check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_equiv(const Options& o, const CLI::App& cmd) {
  const auto sets = load_sets(o, cmd);
  if (sets.size() != 2) throw UsageError("equiv needs exactly two input sets");
  if (sets[0].contains_perfect_power || sets[1].contains_perfect_power) {
    throw UsageError("equiv: a set containing a perfect q-th power has no point set");
  }
  const auto [a, b] = powres::common_embedding(sets[0], sets[1]);
  const auto m = powres::are_pgl_equivalent(a, b);
  if (o.json) {
    Json j = {{"equivalent", m.has_value()}, {"matrix", m ? powres::to_json(*m) : Json(nullptr)},
              {"first", powres::to_json(a)}, {"second", powres::to_json(b)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (m ? "equivalent" : "not equivalent") << "\n";
    std::cout << "common support:";
    std::vector<std::uint64_t> primes = sets[0].support;
    primes.insert(primes.end(), sets[1].support.begin(), sets[1].support.end());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes) std::cout << " " << p;
    std::cout << "\n";
    if (m) {
      std::cout << "matrix (acting on row vectors):\n";
      for (const auto& row : m->matrix().to_rows()) std::cout << "  " << format_vector(row) << "\n";
    }
  }
  return m ? 0 : 1;
}

int cmd_map(const Options& o, const CLI::App& cmd) {
  const auto rs = load_one(o, cmd);
  if (o.json) {
    std::cout << powres::to_json(rs).dump(2) << "\n";
    return 0;
  }
  std::cout << "q = " << rs.q << "\nsupport:";
  for (auto p : rs.support) std::cout << " " << p;
  std::cout << "\nreduced:";
  for (const auto& r : rs.reduced) std::cout << " " << r.value().str();
  std::cout << "\ndelta = " << rs.delta.str() << "\n";
  if (rs.contains_perfect_power) {
    std::cout << "contains a perfect q-th power: the point set is undefined\n";
  } else {
    print_points(std::cout, powres::pi_q(rs));
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o, bool with_bound) {
  cmd->add_option("--q", o.q, "odd prime q")->check(CLI::PositiveNumber);
  cmd->add_option("--k", o.k, "bound on the number of prime factors")->check(CLI::PositiveNumber);
  cmd->add_option("--elements", o.elements, "comma-separated integers (repeat for a second set)")
      ->delimiter('\0')
      ->allow_extra_args(false);
  cmd->add_option("--file", o.files, "JSON file {\"q\": ..., \"elements\": [...]}");
  if (with_bound) cmd->add_option("--bound", o.bound, "largest modulus examined")->check(CLI::Range(2ULL, ~0ULL));
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power residues modulo almost every N via blocking sets"};
  app.require_subcommand(1);
  Options o;
  auto* decide = app.add_subcommand("decide", "decide membership");
  auto* verify = app.add_subcommand("verify", "check all admissible moduli up to a bound");
  auto* witness = app.add_subcommand("witness", "search for the smallest failing modulus");
  auto* construct = app.add_subcommand("construct", "build an extremal set");
  auto* equiv = app.add_subcommand("equiv", "geometric equivalence of two sets");
  auto* map = app.add_subcommand("map", "print the associated point set");
  add_common(decide, o, false);
  add_common(verify, o, true);
  add_common(witness, o, true);
  add_common(equiv, o, false);
  add_common(map, o, false);
  construct->add_option("kind,--kind", o.kind, "minimum | second_smallest | triangle")->required();
  construct->add_option("--q", o.q, "odd prime q")->check(CLI::PositiveNumber);
  construct->add_option("--k", o.k, "blocking codimension")->check(CLI::PositiveNumber);
  construct->add_option("--primes", o.primes, "comma-separated distinct primes");
  construct->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  construct->add_flag("--json", o.json, "machine-readable output");
  construct->add_flag("--no-verify", o.no_verify, "skip self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decide) return cmd_decide(o, *decide);
    if (*verify) return cmd_verify(o, *verify);
    if (*witness) return cmd_witness(o, *witness);
    if (*construct) return cmd_construct(o);
    if (*equiv) return cmd_equiv(o, *equiv);
    if (*map) return cmd_map(o, *map);
  } catch (const powres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
