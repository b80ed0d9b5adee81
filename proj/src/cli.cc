// Copyright 2026 The Authors.
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

#include "resonance/cli.h"

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resonance/arrangement.h"
#include "resonance/errors.h"
#include "resonance/nbc.h"
#include "resonance/prototype.h"
#include "resonance/quad_circuits.h"
#include "resonance/stirling.h"
#include "resonance/table1.h"
#include "resonance/universality.h"

namespace resonance {
namespace {

using Json = nlohmann::ordered_json;

void Emit(const JobConfig& job, std::ostream& out, const Json& j,
          const std::string& text) {
  if (job.format == OutputFormat::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ExactMatrix ReadMatrix(const std::string& path) {
  if (path.empty()) throw ValidationError("--input is required");
  std::istringstream in(ReadFile(path));
  return ParseMatrix(in);
}

Json Strings(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const mpz_class& x : v) a.push_back(x.get_str());
  return a;
}

CharPoly ComputeCharPoly(const JobConfig& job) {
  if (!job.primes.empty() && job.method != "ff") {
    throw ValidationError("--primes only applies to --method ff");
  }
  if (job.method == "whitney") return WhitneyCharPoly(job.n, job.guards);
  if (job.method == "ff") {
    if (job.primes.empty()) {
      return FiniteFieldCharPoly(job.n, job.guards, job.threads);
    }
    return FiniteFieldCharPoly(job.n, job.primes, job.guards, job.threads);
  }
  return CharPolyViaNbc(job.n, job.guards, job.threads);
}

void RunCharPoly(const JobConfig& job, std::ostream& out) {
  const CharPoly p = ComputeCharPoly(job);
  Json j;
  j["coeffs"] = p.DescendingDecimal();
  Emit(job, out, j, p.ToString() + "\n");
}

void RunBetti(const JobConfig& job, std::ostream& out) {
  Arrangement arrangement(job.n);
  const int i_max = job.i_max > 0 ? job.i_max : job.n;
  std::vector<mpz_class> betti;
  if (job.method == "nbc") {
    betti = BettiViaNbc(job.n, std::min(i_max, job.n), job.guards, job.threads);
  } else {
    betti = ComputeCharPoly(job).BettiNumbers();
  }
  betti.resize(i_max + 1, 0);  // b_i = 0 beyond the rank
  std::string text;
  for (int i = 0; i <= i_max; ++i) {
    text += "b_" + std::to_string(i) + " = " + betti[i].get_str() + "\n";
  }
  Json j;
  j["n"] = std::to_string(job.n);
  j["method"] = job.method;
  j["betti"] = Strings(betti);
  Emit(job, out, j, text);
}

void RunRegions(const JobConfig& job, std::ostream& out) {
  mpz_class regions;
  if (job.method == "chambers") {
    regions = EnumerateChambersBruteforce(job.n, job.guards);
  } else {
    regions = RegionCount(ComputeCharPoly(job));
  }
  Json j;
  j["n"] = std::to_string(job.n);
  j["method"] = job.method;
  j["regions"] = regions.get_str();
  Emit(job, out, j, regions.get_str() + "\n");
}

void RunClosedForm(const JobConfig& job, std::ostream& out) {
  Arrangement arrangement(job.n);
  const std::vector<mpz_class> betti = {(mpz_class(1) << job.n) - 1,
                                        B2Closed(job.n), B3Closed(job.n)};
  std::string text;
  Json values, bounds;
  for (int i = 1; i <= 3; ++i) {
    const std::string key = std::to_string(i);
    const mpz_class bound = BettiUpperBound(i, job.n);
    values[key] = betti[i - 1].get_str();
    bounds[key] = bound.get_str();
    text += "b_" + key + " = " + betti[i - 1].get_str() + "  (bound " +
            bound.get_str() + ")\n";
  }
  Json j;
  j["n"] = std::to_string(job.n);
  j["betti"] = values;
  j["upper_bounds"] = bounds;
  if (job.n >= 2) {
    const RegionBound r = RegionLog2Bound(job.n);
    j["region_log2_bound"] = std::to_string(r.exponent);
    j["region_bound_certified"] = r.certified;
    text += "log2 R_n < " + std::to_string(r.exponent) + ": " +
            (r.certified ? "certified" : "not certified by the sum") + "\n";
  }
  Emit(job, out, j, text);
}

void RunFitCoeffs(const JobConfig& job, std::ostream& out) {
  std::vector<mpz_class> values;
  if (job.values.empty()) {
    const GoldenTable& golden = GoldenTable::Get();
    const int m = 1 << job.i;
    if (job.i < 1 || job.i > golden.i_max() || m > golden.n_max()) {
      throw ValidationError("no table values for i = " +
                            std::to_string(job.i) + "; pass --values");
    }
    for (int n = 1; n <= m; ++n) {
      const auto v = golden.Betti(job.i, n);
      if (!v) {
        throw ValidationError("b_" + std::to_string(job.i) + "(A_" +
                              std::to_string(n) + ") is unknown");
      }
      values.push_back(*v);
    }
  } else {
    for (const std::string& s : job.values) {
      mpz_class v;
      if (v.set_str(s, 10) != 0) {
        throw ValidationError("not an integer: \"" + s + "\"");
      }
      values.push_back(v);
    }
  }
  const StirlingCombination c = FitStirlingCoeffs(job.i, values);
  Json coeffs = Json::object();
  for (const auto& [k, v] : c.c) coeffs[std::to_string(k)] = v.get_str();
  Json j;
  j["i"] = std::to_string(job.i);
  j["coeffs"] = coeffs;
  Emit(job, out, j, c.ToString() + "\n");
}

void RunPrototypes(const JobConfig& job, std::ostream& out) {
  if (job.i < 1 || job.i > kMaxPrototypeIndex) {
    throw ValidationError("--i must lie in [1, " +
                          std::to_string(kMaxPrototypeIndex) + "]");
  }
  const int top = 1 << job.i;
  if (job.k != 0 && (job.k <= job.i || job.k > top)) {
    throw ValidationError("--k must lie in [i + 1, 2^i]");
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), job.i);
  StirlingCombination total;
  total.i = job.i;
  std::string text;
  Json rows = Json::array();
  for (int k = job.i + 1; k <= top; ++k) {
    if (job.k != 0 && k != job.k) continue;
    std::map<PrototypeClass, unsigned long> counts;
    EnumeratePrototypes(
        job.i, k,
        [&](const Prototype& p) {
          ++counts[Classify(p)];
          return true;
        },
        job.guards);
    const mpz_class functional = counts[PrototypeClass::kFunctional];
    if (!mpz_divisible_p(functional.get_mpz_t(), fact.get_mpz_t())) {
      throw InvariantError("functional count is not divisible by i!");
    }
    const mpz_class c = functional / fact;
    if (c != 0) total.c[k] = c;
    Json row;
    row["k"] = std::to_string(k);
    row["maps"] = CountPrototypes(job.i, k).get_str();
    for (PrototypeClass cls : {PrototypeClass::kFunctional,
                               PrototypeClass::kBroken,
                               PrototypeClass::kDegenerate}) {
      row[ToString(cls)] = std::to_string(counts[cls]);
    }
    row["coefficient"] = c.get_str();
    rows.push_back(row);
    text += "k = " + std::to_string(k) + ": maps " + row["maps"].get<std::string>();
    for (PrototypeClass cls : {PrototypeClass::kFunctional,
                               PrototypeClass::kBroken,
                               PrototypeClass::kDegenerate}) {
      text += ", " + ToString(cls) + " " + std::to_string(counts[cls]);
    }
    text += ", c = " + c.get_str() + "\n";
  }
  text += "coefficients " + total.ToString() + "\n";
  Json j;
  j["i"] = std::to_string(job.i);
  j["rows"] = rows;
  Json coeffs = Json::object();
  for (const auto& [k, v] : total.c) coeffs[std::to_string(k)] = v.get_str();
  j["coeffs"] = coeffs;
  Emit(job, out, j, text);
}

void RunCircuitsCensus(const JobConfig& job, std::ostream& out) {
  const mpz_class triples = CountIntersectingTriples(job.n);
  const mpz_class tetrahedra = CountTetrahedronCircuits(job.n);
  const mpz_class rectangles = CountRectangleCircuits(job.n);
  const mpz_class via = triples - tetrahedra - rectangles;
  const mpz_class closed = B3Closed(job.n);
  if (via != closed) {
    throw InvariantError("circuit census gives b_3 = " + via.get_str() +
                         ", closed form gives " + closed.get_str());
  }
  Json j;
  j["n"] = std::to_string(job.n);
  j["intersecting_triples"] = triples.get_str();
  j["tetrahedra"] = tetrahedra.get_str();
  j["rectangles"] = rectangles.get_str();
  j["b3"] = via.get_str();
  Emit(job, out, j,
       "intersecting triples " + triples.get_str() + "\ntetrahedra " +
           tetrahedra.get_str() + "\nrectangles " + rectangles.get_str() +
           "\nb_3 = " + via.get_str() + "\n");
}

// The certificate is JSON whatever --format says.
void RunEmbed(const JobConfig& job, std::ostream& out) {
  const ExactMatrix a = ReadMatrix(job.input_path);
  const Embedding e = Embed(a);
  if (!job.verify) {
    out << CertificateJson(e, nullptr).dump(2) << "\n";
    return;
  }
  const Verification v = VerifyEmbedding(e, a);
  const bool minor = MinorMatroidCheck(e, a, job.sample_budget, job.seed);
  Json j = CertificateJson(e, &v);
  j["minor_check"] = minor;
  out << j.dump(2) << "\n";
  if (!v.ok || !minor) {
    throw InvariantError("embedding failed its own verification: " +
                         (v.ok ? std::string("minor check") : v.failure));
  }
}

void RunVerifyEmbed(const JobConfig& job, std::ostream& out) {
  if (job.certificate_path.empty()) {
    throw ValidationError("--certificate is required");
  }
  const ExactMatrix a = ReadMatrix(job.input_path);
  nlohmann::json cert;
  try {
    cert = nlohmann::json::parse(ReadFile(job.certificate_path));
  } catch (const nlohmann::json::parse_error& ex) {
    throw ValidationError(std::string("certificate is not JSON: ") + ex.what());
  }
  const Embedding e = EmbeddingFromCertificate(cert);
  if (e.r != a.rows() || e.n != a.cols()) {
    throw ValidationError("certificate is for a " + std::to_string(e.r) +
                          "x" + std::to_string(e.n) + " matrix");
  }
  const Verification v = VerifyEmbedding(e, a);
  const bool minor = MinorMatroidCheck(e, a, job.sample_budget, job.seed);
  Json j;
  j["verified"] = v.ok;
  j["minor_check"] = minor;
  if (!v.ok) j["failure"] = v.failure;
  std::string text = std::string("verified: ") + (v.ok ? "true" : "false") +
                     "\nminor check: " + (minor ? "true" : "false") + "\n";
  if (!v.ok) text += "failure: " + v.failure + "\n";
  Emit(job, out, j, text);
  if (!v.ok || !minor) throw ValidationError("certificate does not verify");
}

void RunTable1(const JobConfig& job, std::ostream& out) {
  const GoldenTable& golden = GoldenTable::Get();
  const int n_max = job.n > 0 ? job.n : golden.n_max();
  const int i_max = job.i_max > 0 ? job.i_max : golden.i_max();
  const Table1Report report =
      BuildTable1Report(n_max, i_max, job.with_regions, job.guards, job.threads);
  std::string text;
  Json cells = Json::array();
  for (const Table1Cell& c : report.cells) {
    Json cell;
    cell["cell"] = c.Name();
    cell["golden"] = c.golden ? Json(c.golden->get_str()) : Json(nullptr);
    Json computed = Json::object();
    text += c.Name() + "  golden " + (c.golden ? c.golden->get_str() : "?");
    for (const auto& [method, value] : c.computed) {
      computed[method] = value.get_str();
      text += "  " + method + " " + value.get_str();
    }
    cell["computed"] = computed;
    cell["status"] = ToString(c.status);
    cells.push_back(cell);
    text += "  " + ToString(c.status) + "\n";
  }
  Json summary;
  std::string line;
  for (CellStatus s : {CellStatus::kMatch, CellStatus::kMismatch,
                       CellStatus::kUnknown, CellStatus::kNotComputed}) {
    summary[ToString(s)] = std::to_string(report.Count(s));
    line += (line.empty() ? "" : ", ") + ToString(s) + " " +
            std::to_string(report.Count(s));
  }
  Json j;
  j["cells"] = cells;
  j["summary"] = summary;
  Emit(job, out, j, text + line + "\n");
  if (!report.ok()) throw InvariantError("known table has mismatching cells");
}

}  // namespace

void RunJob(const JobConfig& job, std::ostream& out) {
  static const std::map<std::string, void (*)(const JobConfig&, std::ostream&)>
      kCommands = {
          {"charpoly", RunCharPoly},
          {"betti", RunBetti},
          {"regions", RunRegions},
          {"closed-form", RunClosedForm},
          {"fit-coeffs", RunFitCoeffs},
          {"prototypes", RunPrototypes},
          {"circuits-census", RunCircuitsCensus},
          {"embed", RunEmbed},
          {"verify-embed", RunVerifyEmbed},
          {"table1", RunTable1},
      };
  const auto it = kCommands.find(job.command);
  if (it == kCommands.end()) {
    throw ValidationError("unknown command \"" + job.command + "\"");
  }
  it->second(job, out);
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  JobConfig job;
  std::string format = "text";

  CLI::App app("Exact computations on the resonance arrangement A_n.",
               "resonance");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", job.threads, "worker threads; 0 for all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--guard-override", job.guards.override_all,
               "lift every size guard (expensive runs)");
  app.add_option("--seed", job.seed, "seed for sampled checks");
  app.add_option("--sample-budget", job.sample_budget,
                 "subsets tried by the minor check before sampling");
  app.add_option("--output", job.output_path, "write results to this file");

  const std::vector<std::string> methods = {"whitney", "ff", "nbc"};
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", job.n, "arrangement dimension")->required();
  };

  CLI::App* charpoly = app.add_subcommand("charpoly", "chi(A_n; t)");
  add_n(charpoly);
  job.method = "nbc";
  charpoly->add_option("--method", job.method)->check(CLI::IsMember(methods));
  charpoly->add_option("--primes", job.primes, "primes for --method ff")
      ->delimiter(',');

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers b_0..b_i");
  add_n(betti);
  betti->add_option("--i-max", job.i_max, "deepest Betti number (default n)")
      ->check(CLI::PositiveNumber);
  betti->add_option("--method", job.method)->check(CLI::IsMember(methods));
  betti->add_option("--primes", job.primes)->delimiter(',');

  CLI::App* regions = app.add_subcommand("regions", "number of chambers R_n");
  add_n(regions);
  regions->add_option("--method", job.method)
      ->check(CLI::IsMember({"whitney", "ff", "nbc", "chambers"}));
  regions->add_option("--primes", job.primes)->delimiter(',');

  CLI::App* closed = app.add_subcommand("closed-form", "b_1, b_2, b_3 in closed form");
  add_n(closed);

  CLI::App* fit = app.add_subcommand(
      "fit-coeffs", "Stirling coefficients from b_i(A_1..A_{2^i})");
  fit->add_option("--i", job.i)->required();
  fit->add_option("--values", job.values,
                  "b_i(A_n) for n = 1..2^i (default: the known table)")
      ->delimiter(',');

  CLI::App* prototypes =
      app.add_subcommand("prototypes", "classify (i, k)-prototypes");
  prototypes->add_option("--i", job.i)->required();
  prototypes->add_option("--k", job.k, "a single k (default: all)");

  CLI::App* census = app.add_subcommand("circuits-census",
                                        "b_3 from intersecting triples");
  add_n(census);

  CLI::App* embed = app.add_subcommand("embed", "embed a matrix into A_N");
  embed->add_option("--input", job.input_path, "matrix file")->required();
  embed->add_flag("--verify", job.verify, "run the pivots and minor check");

  CLI::App* verify = app.add_subcommand("verify-embed", "check a certificate");
  verify->add_option("--certificate", job.certificate_path)->required();
  verify->add_option("--input", job.input_path, "matrix file")->required();

  CLI::App* table1 = app.add_subcommand("table1", "recompute the known table");
  table1->add_option("--n,--n-max", job.n, "largest n (default 9)")
      ->check(CLI::PositiveNumber);
  table1->add_option("--i-max", job.i_max, "largest i (default 4)")
      ->check(CLI::PositiveNumber);
  table1->add_flag("--with-regions", job.with_regions, "add the R_n row");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  if (job.threads == 0) {
    job.threads = std::max(1u, std::thread::hardware_concurrency());
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    RunJob(job, buffer);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitValidation;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    code = kExitGuard;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = kExitInvariant;
  }
  if (job.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(job.output_path);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << job.output_path << "\n";
      return code == kExitOk ? kExitValidation : code;
    }
  }
  return code;
}

}  // namespace resonance
