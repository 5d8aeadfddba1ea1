// Copyright 2026 The a2frac Authors
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

// Command-line surface over the a2frac library. Every stochastic subcommand
// takes --seed (default kDefaultSeed, overridable via A2FRAC_SEED) and prints
// the seed it used, so identical invocations produce identical bytes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "a2frac/cylinder.hpp"
#include "a2frac/distribution.hpp"
#include "a2frac/ergodic.hpp"
#include "a2frac/errors.hpp"
#include "a2frac/representation.hpp"
#include "a2frac/rng.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("A2FRAC_SEED")) {
    return std::strtoull(env, nullptr, 0);
  }
  return a2frac::kDefaultSeed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw a2frac::Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

a2frac::ProbabilitySchedule load_schedule(const std::string& path_or_json) {
  if (!path_or_json.empty() && path_or_json.front() == '{') {
    return a2frac::ProbabilitySchedule::from_json(path_or_json);
  }
  return a2frac::ProbabilitySchedule::from_json(read_file(path_or_json));
}

a2frac::ExponentConvention parse_convention(const std::string& name) {
  if (name == "as-printed") return a2frac::ExponentConvention::AsPrinted;
  if (name == "frequency-corrected") return a2frac::ExponentConvention::FrequencyCorrected;
  throw a2frac::ParseError("unknown convention '" + name + "'");
}

// Emits doubles with 17 significant digits so output round-trips bit-exactly.
json num(double v) { return json::parse(fmt17(v)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical toolkit for continued fractions over {1/2, 1}"};
  app.require_subcommand(1);

  std::string x_text, word_text, schedule_text, format = "json";
  std::string convention_name = "frequency-corrected";
  std::string source_name = "eta";
  std::uint64_t seed = default_seed();
  int depth = 40, level = 1, grid = 0, count = 1, top_k = 10;
  long steps = 10000;
  double tol = 1e-6, alpha = 0.5, beta = 1.0;
  bool require_verdict = false;

  auto* c_encode = app.add_subcommand("encode", "digits of a rational in [1/2, 1]");
  c_encode->add_option("--x", x_text, "value, as num/den or decimal")->required();
  c_encode->add_option("--depth", depth, "number of digits");

  auto* c_decode = app.add_subcommand("decode", "value of a word like 1h(1h)");
  c_decode->add_option("--word", word_text)->required();

  auto* c_cyl = app.add_subcommand("cylinder", "exact cylinder of a finite word");
  c_cyl->add_option("--word", word_text)->required();
  c_cyl->add_option("--format", format, "json or csv");

  auto* c_part = app.add_subcommand("partition-check", "verify level-n cylinders tile [1/2, 1]");
  c_part->add_option("--level", level)->required();

  auto* c_orbit = app.add_subcommand("orbit", "Birkhoff statistics along a shift orbit");
  c_orbit->add_option("--x0", x_text, "start point; omit to draw from the invariant measure");
  c_orbit->add_option("--steps", steps);
  c_orbit->add_option("--seed", seed);
  c_orbit->add_option("--format", format, "json or csv");

  auto* c_levy = app.add_subcommand("levy", "the constant G and derived rates");
  c_levy->add_option("--tol", tol);

  auto* c_pres = app.add_subcommand("preserve-check", "invariance of eta on an interval");
  c_pres->add_option("--alpha", alpha)->required();
  c_pres->add_option("--beta", beta)->required();

  auto* c_classify = app.add_subcommand("classify", "Lebesgue structure of a digit schedule");
  c_classify->add_option("--schedule", schedule_text, "JSON file or inline JSON")->required();
  c_classify->add_option("--convention", convention_name, "as-printed or frequency-corrected");
  c_classify->add_option("--tol", tol);
  c_classify->add_flag("--require-verdict", require_verdict,
                       "exit 3 when the classifier is inconclusive");

  auto* c_cdf = app.add_subcommand("cdf", "distribution function of the random fraction");
  c_cdf->add_option("--schedule", schedule_text)->required();
  c_cdf->add_option("--x", x_text, "single evaluation point");
  c_cdf->add_option("--grid", grid, "evaluate on a uniform grid of this many points");
  c_cdf->add_option("--depth", depth);
  c_cdf->add_option("--format", format, "json or csv");

  auto* c_sample = app.add_subcommand("sample", "Monte Carlo draws of the random fraction");
  c_sample->add_option("--schedule", schedule_text)->required();
  c_sample->add_option("--count", count);
  c_sample->add_option("--depth", depth);
  c_sample->add_option("--seed", seed);

  auto* c_atoms = app.add_subcommand("atoms", "highest-mass support points (discrete case)");
  c_atoms->add_option("--schedule", schedule_text)->required();
  c_atoms->add_option("--top-k", top_k);

  auto* c_like = app.add_subcommand("likelihood-rate", "digit-probability rate along a path");
  c_like->add_option("--schedule", schedule_text)->required();
  c_like->add_option("--source", source_name, "eta or xi");
  c_like->add_option("--steps", steps);
  c_like->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_encode->parsed()) {
      const a2frac::Rational x = a2frac::parse_rational(x_text);
      const a2frac::DigitWord word = a2frac::encode(x, depth);
      const a2frac::Cylinder cyl = a2frac::cylinder(word);
      json out;
      out["word"] = a2frac::format_word(word);
      out["left"] = a2frac::format_rational(cyl.left);
      out["right"] = a2frac::format_rational(cyl.right);
      out["length"] = a2frac::format_rational(cyl.length());
      std::cout << out.dump() << "\n";
    } else if (c_decode->parsed()) {
      const auto word = a2frac::parse_periodic_word(word_text);
      const auto value = a2frac::decode(word);
      json out;
      out["word"] = a2frac::format_periodic_word(a2frac::canonicalize(word));
      out["approx"] = num(value.approx);
      if (value.is_exact()) {
        out["exact"] = a2frac::format_rational(*value.exact);
      } else {
        out["quadratic"] = {a2frac::format_rational(value.quad_a),
                            a2frac::format_rational(value.quad_b),
                            a2frac::format_rational(value.quad_c)};
      }
      out["a2_binary"] = a2frac::is_a2_binary(word);
      std::cout << out.dump() << "\n";
    } else if (c_cyl->parsed()) {
      const a2frac::Cylinder cyl = a2frac::cylinder(a2frac::parse_word(word_text));
      if (format == "csv") {
        a2frac::emit_cylinder_csv(std::cout, cyl, true);
      } else {
        json out;
        out["word"] = a2frac::format_word(cyl.word);
        out["left"] = a2frac::format_rational(cyl.left);
        out["right"] = a2frac::format_rational(cyl.right);
        out["length"] = a2frac::format_rational(cyl.length());
        std::cout << out.dump() << "\n";
      }
    } else if (c_part->parsed()) {
      const bool ok = a2frac::partition_check(level);
      json out;
      out["level"] = level;
      out["partition_ok"] = ok;
      std::cout << out.dump() << "\n";
      return ok ? 0 : 2;
    } else if (c_orbit->parsed()) {
      double x0;
      if (x_text.empty()) {
        x0 = a2frac::sample_eta(seed, 1)[0];
      } else {
        x0 = a2frac::to_double(a2frac::parse_rational(x_text));
      }
      const auto stats = a2frac::orbit_statistics(x0, steps);
      if (format == "csv") {
        std::cout << "steps,mean_log,freq_half,cyl_rate\n"
                  << stats.steps << ',' << fmt17(stats.mean_log) << ','
                  << fmt17(stats.digit_freq_half) << ','
                  << fmt17(stats.log_cylinder_rate) << "\n";
      } else {
        json out;
        out["seed"] = seed;
        out["x0"] = num(x0);
        out["steps"] = stats.steps;
        out["mean_log"] = num(stats.mean_log);
        out["freq_half"] = num(stats.digit_freq_half);
        out["cyl_rate"] = num(stats.log_cylinder_rate);
        std::cout << out.dump() << "\n";
      }
    } else if (c_levy->parsed()) {
      const auto levy = a2frac::compute_levy_constants(tol);
      json out;
      out["G"] = num(levy.G);
      out["e2G"] = num(levy.cylinder_rate);
      out["quad_err"] = num(levy.quadrature_error);
      std::cout << out.dump() << "\n";
    } else if (c_pres->parsed()) {
      const auto check = a2frac::check_measure_preservation(alpha, beta);
      json out;
      out["lhs"] = num(check.lhs);
      out["rhs"] = num(check.rhs);
      out["difference"] = num(check.lhs - check.rhs);
      std::cout << out.dump() << "\n";
    } else if (c_classify->parsed()) {
      const auto schedule = load_schedule(schedule_text);
      const auto result =
          a2frac::classify(schedule, parse_convention(convention_name), tol);
      std::cout << result.to_json() << "\n";
      if (require_verdict && result.verdict == a2frac::Verdict::Inconclusive) return 3;
    } else if (c_cdf->parsed()) {
      const auto schedule = load_schedule(schedule_text);
      if (grid <= 0 && x_text.empty()) throw a2frac::Error("cdf: pass --x or --grid");
      if (format == "csv" || grid > 0) {
        std::cout << "x,F,err\n";
        for (int i = 0; i < std::max(grid, 1); ++i) {
          const auto q =
              grid > 0
                  ? a2frac::cdf(schedule, 0.5 + 0.5 * (i + 0.5) / grid, depth)
                  : a2frac::cdf(schedule, a2frac::parse_rational(x_text), depth);
          std::cout << fmt17(q.x) << ',' << fmt17(q.result) << ','
                    << fmt17(q.error_bound) << "\n";
        }
      } else {
        // Exact rational evaluation: inputs like 2/3 terminate exactly.
        const auto q = a2frac::cdf(schedule, a2frac::parse_rational(x_text), depth);
        json out;
        out["x"] = num(q.x);
        out["F"] = num(q.result);
        out["err"] = num(q.error_bound);
        out["depth"] = q.depth;
        std::cout << out.dump() << "\n";
      }
    } else if (c_sample->parsed()) {
      const auto schedule = load_schedule(schedule_text);
      const auto samples = a2frac::sample_xi(schedule, seed, count, depth);
      json out;
      out["seed"] = seed;
      out["depth"] = depth;
      json values = json::array();
      for (double v : samples) values.push_back(num(v));
      out["samples"] = values;
      std::cout << out.dump() << "\n";
    } else if (c_atoms->parsed()) {
      const auto schedule = load_schedule(schedule_text);
      const auto list = a2frac::atoms(schedule, top_k);
      json out = json::array();
      double total = 0.0;
      for (const auto& atom : list) {
        json row;
        row["word"] = a2frac::format_periodic_word(atom.word);
        const auto value = a2frac::decode(atom.word);
        row["value"] = num(value.approx);
        row["mass"] = num(atom.mass);
        total += atom.mass;
        out.push_back(row);
      }
      json wrapper;
      wrapper["atoms"] = out;
      wrapper["total_mass"] = num(total);
      std::cout << wrapper.dump() << "\n";
    } else if (c_like->parsed()) {
      const auto schedule = load_schedule(schedule_text);
      const auto source = source_name == "xi" ? a2frac::PathSource::Xi
                                              : a2frac::PathSource::Eta;
      const double rate = a2frac::likelihood_rate(schedule, source, steps, seed);
      json out;
      out["seed"] = seed;
      out["steps"] = steps;
      out["source"] = source_name;
      out["rate"] = num(rate);
      std::cout << out.dump() << "\n";
    }
  } catch (const a2frac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
