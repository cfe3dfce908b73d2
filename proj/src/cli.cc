// Copyright 2026 The subuniform Authors.
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

#include "subuniform/cli.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "subuniform/errors.h"

namespace subuniform::cli {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

json exact(const Rational& q) { return format_rational(q); }

json eisenstein_json(const Eisenstein64& z) {
  return {{"a", z.a()}, {"b", z.b()}};
}

json vectors_json(const std::vector<GFVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

json coset_json(const Coset& c) {
  return {{"rep", c.rep().to_string()},
          {"basis", vectors_json(c.subspace().basis())},
          {"dim", c.subspace().dim()},
          {"codim", c.subspace().codim()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json colouring_json(const AlmostColouring& c) {
  json colours = json::array();
  for (std::uint64_t x = 0; x < c.size(); ++x) {
    const auto col = c.colour(x);
    colours.push_back(col ? json(*col) : json(nullptr));
  }
  return {{"m", c.m()},
          {"max_colour", c.max_colour()},
          {"coloured_fraction", exact(c.coloured_fraction())},
          {"colours", std::move(colours)}};
}

}  // namespace

// ---------------------------------------------------------------------------
// File formats

PointSet parse_set_file(std::string_view text) {
  std::optional<PointSet> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;

    if (!out) {
      int p = 0, n = 0;
      const auto sp = line.find_first_of(" \t");
      if (sp == std::string_view::npos || line.substr(0, 2) != "p=" ||
          !parse_int(line.substr(2, sp - 2), p)) {
        fail_at(line_no, "expected header 'p=<2|3> n=<int>'");
      }
      const std::string_view rest = trim(line.substr(sp));
      if (rest.substr(0, 2) != "n=" || !parse_int(rest.substr(2), n)) {
        fail_at(line_no, "expected header 'p=<2|3> n=<int>'");
      }
      try {
        check_ambient(p, n);
      } catch (const InputError& e) {
        fail_at(line_no, e.what());
      }
      out.emplace(p, n);
      continue;
    }

    GFVector x(out->p(), out->n());
    try {
      x = GFVector::parse(out->p(), out->n(), line);
    } catch (const InputError& e) {
      fail_at(line_no, e.what());
    }
    if (!out->insert(x)) fail_at(line_no, "duplicate vector " + x.to_string());
  }
  if (!out) throw InputError("missing header 'p=<2|3> n=<int>'");
  return *out;
}

std::string format_set_file(const PointSet& a) {
  std::string s = "p=" + std::to_string(a.p()) + " n=" + std::to_string(a.n()) + "\n";
  for (const auto& x : a.members()) s += x.to_string() + "\n";
  return s;
}

Subspace parse_subspace_basis(int p, int n, std::string_view csv) {
  std::vector<GFVector> vs;
  csv = trim(csv);
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    vs.push_back(GFVector::parse(p, n, trim(csv.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    csv = csv.substr(comma + 1);
  }
  return rref_basis(p, n, vs);
}

PointSet generate_random_set(int p, int n, const Rational& density,
                             std::uint64_t seed) {
  if (density < 0 || density > 1) throw InputError("density must lie in [0, 1]");
  const BigInt num = boost::multiprecision::numerator(density);
  const BigInt den = boost::multiprecision::denominator(density);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw InputError("density denominator must fit in 64 bits");
  }
  const BigInt threshold = num << 64;
  std::mt19937_64 gen(seed);
  PointSet a(p, n);
  for (std::uint64_t r = 0; r < a.ambient(); ++r) {
    if (BigInt(gen()) * den < threshold) a.insert_rank(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const Subspace& v) {
  return {{"p", v.p()},
          {"n", v.n()},
          {"dim", v.dim()},
          {"codim", v.codim()},
          {"basis", vectors_json(v.basis())}};
}

json to_json(const UniformityReport& r) {
  json j = {{"sup_sq", exact(r.sup_sq)},
            {"sup_sq_float", render_float(to_double(r.sup_sq))},
            {"sup_float", render_float(std::sqrt(to_double(r.sup_sq)))},
            {"density", exact(r.density)},
            {"density_float", render_float(to_double(r.density))},
            {"scale", r.scale},
            {"witness_t", nullptr},
            {"witness_r", nullptr}};
  if (r.witness_t) {
    j["witness_t"] = r.witness_t->to_string();
    j["witness_r"] = r.witness_r->to_string();
    j["witness_coefficient"] = eisenstein_json(r.witness_coefficient);
    j["witness_value"] = eisenstein_json(r.witness_value);
  }
  return j;
}

json to_json(const IncrementTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j = coset_json(s.coset);
    j["density"] = exact(s.density);
    j["sup_sq"] = exact(s.sup_sq);
    j["witness_r"] = s.witness_r ? json(s.witness_r->to_string()) : json(nullptr);
    steps.push_back(std::move(j));
  }
  json fin = coset_json(t.final);
  fin["density"] = exact(t.steps.back().density);
  fin["density_float"] = render_float(to_double(t.steps.back().density));
  fin["sup_sq"] = exact(t.steps.back().sup_sq);
  return {{"refinements", t.refinements()},
          {"steps", std::move(steps)},
          {"final", std::move(fin)}};
}

json to_json(const RegularityResult& r) {
  json energy = json::array();
  for (const auto& e : r.energy_trace) energy.push_back(exact(e));
  return {{"outcome", r.outcome == RegularityOutcome::kSuccess ? "success"
                                                              : "codim_exhausted"},
          {"W", to_json(r.w)},
          {"good_fraction", exact(r.good_fraction)},
          {"good_fraction_float", render_float(to_double(r.good_fraction))},
          {"bad_reps", vectors_json(r.bad_reps)},
          {"rounds", r.rounds},
          {"energy_trace", std::move(energy)},
          {"codim_trace", r.codim_trace}};
}

json to_json(const PipelineReport& r) {
  json j = {{"outcome", to_string(r.outcome)},
            {"d", r.d},
            {"buckets", r.buckets},
            {"W", to_json(r.w())},
            {"regularity", to_json(r.regularity)},
            {"assembly", r.assembly ? json(to_string(*r.assembly)) : json(nullptr)},
            {"colour", r.colour ? json(*r.colour) : json(nullptr)},
            {"quotient_xs", vectors_json(r.quotient_xs)},
            {"xs", vectors_json(r.xs)},
            {"V", r.v ? to_json(*r.v) : json(nullptr)},
            {"bound_sq", exact(r.bound_sq)}};
  if (r.colouring) j["colouring"] = colouring_json(*r.colouring);
  if (r.outcome == PipelineOutcome::kSuccess) {
    j["sup_sq"] = exact(r.sup_sq);
    j["sup_float"] = render_float(std::sqrt(to_double(r.sup_sq)));
    j["within_bound"] = r.within_bound;
  }
  return j;
}

json to_json(const BestSubspace& b) {
  return {{"V", to_json(b.v)},
          {"sup_sq", exact(b.sup_sq)},
          {"sup_float", render_float(std::sqrt(to_double(b.sup_sq)))},
          {"examined", b.examined}};
}

json to_json(const F3Report& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"basis", vectors_json(rec.v.basis())},
                       {"dim", rec.v.dim()},
                       {"sup_sq", exact(rec.sup_sq)},
                       {"sup_float", render_float(std::sqrt(to_double(rec.sup_sq)))},
                       {"witness_r", rec.witness_r.to_string()},
                       {"j", rec.j + 1},
                       {"coefficient_at_e_j", eisenstein_json(rec.coefficient)},
                       {"passed", rec.passed},
                       {"witness_identity_holds", rec.witness_identity_holds},
                       {"inclusions_hold", rec.inclusions_hold},
                       {"equidistributed", rec.equidistributed},
                       {"witness_outside_perp", rec.witness_outside_perp}});
  }
  return {{"n", r.n},
          {"threshold_sq", exact(kF3Threshold)},
          {"total_subspaces", r.total_subspaces},
          {"all_passed", r.all_passed},
          {"first_failure", r.first_failure ? to_json(*r.first_failure) : json(nullptr)},
          {"records", std::move(records)}};
}

// ---------------------------------------------------------------------------
// Commands

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Fourier uniformity of subsets of F_2^n and F_3^n on subspaces"};
  app.require_subcommand(1);

  std::string set_path, basis_csv, rep_text, eps_text, eta_text = "0",
                                                 density_text, out_path,
                                                 colouring_path;
  std::string slack_text = "4";
  int min_codim = 0, max_codim = -1, d = 0, buckets = 0, n_arg = 0, p_arg = 2;
  std::uint64_t seed = 0;
  bool long_run = false;

  auto* uniformity = app.add_subcommand("uniformity", "Uniformity of a set on a coset");
  uniformity->add_option("--set", set_path, "Set file")->required();
  uniformity->add_option("--subspace-basis", basis_csv, "Comma-separated basis vectors")
      ->required();
  uniformity->add_option("--rep", rep_text, "Coset representative");
  uniformity->add_option("--eps", eps_text, "Optional threshold a/b");

  auto* increment = app.add_subcommand("increment", "Density increment (F_2)");
  increment->add_option("--set", set_path, "Set file")->required();
  increment->add_option("--eps", eps_text, "Threshold a/b")->required();

  auto* regularity = app.add_subcommand("regularity", "Energy-increment regularity (F_2)");
  regularity->add_option("--set", set_path, "Set file")->required();
  regularity->add_option("--eps", eps_text, "Threshold a/b")->required();
  regularity->add_option("--eta", eta_text, "Allowed bad fraction a/b")->required();
  regularity->add_option("--min-codim", min_codim, "Starting codimension");
  regularity->add_option("--max-codim", max_codim, "Codimension cap (default n)");

  auto* pipeline = app.add_subcommand("pipeline", "Find a subspace the set is uniform on (F_2)");
  pipeline->add_option("--set", set_path, "Set file")->required();
  pipeline->add_option("--eps", eps_text, "Threshold a/b")->required();
  pipeline->add_option("--eta", eta_text, "Allowed bad fraction a/b (default 0)");
  pipeline->add_option("--d", d, "Subset-sum structure size");
  pipeline->add_option("--buckets", buckets, "Density buckets");
  pipeline->add_option("--slack", slack_text, "Reported bound is slack*eps (default 4)");
  pipeline->add_option("--min-codim", min_codim, "Starting codimension");
  pipeline->add_option("--max-codim", max_codim, "Codimension cap (default n)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive best subspace");
  oracle->add_option("--set", set_path, "Set file")->required();
  oracle->add_option("--max-codim", max_codim, "Largest codimension scanned")->required();

  auto* f3 = app.add_subcommand("f3-verify", "Verify the F_3 non-uniform example");
  f3->add_option("--n", n_arg, "Dimension")->required();
  f3->add_flag("--long-run", long_run, "Allow n = 5");

  auto* wht = app.add_subcommand("wht", "Full-space spectrum dump");
  wht->add_option("--set", set_path, "Set file")->required();

  auto* gen = app.add_subcommand("gen-random", "Seeded pseudorandom set");
  gen->add_option("--p", p_arg, "Field size, 2 or 3")->required();
  gen->add_option("--n", n_arg, "Dimension")->required();
  gen->add_option("--density", density_text, "Inclusion probability a/b")->required();
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--out", out_path, "Also write the set file here");

  auto* ramsey = app.add_subcommand("ramsey", "Subset-sum structure search on a colouring file");
  ramsey->add_option("--colouring", colouring_path, "Colouring file")->required();
  ramsey->add_option("--d", d, "Structure size")->required();

  std::vector<const char*> argv{"subuniform"};
  for (const auto& a : args) argv.push_back(a.c_str());

  std::string command = args.empty() ? "" : args.front();
  const auto started = std::chrono::steady_clock::now();
  json report = {{"command", command}};
  int code = kOk;
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      throw InputError(e.what());
    }

    auto load_set = [&] {
      report["inputs"]["set"] = set_path;
      return parse_set_file(read_file(set_path));
    };

    if (*uniformity) {
      const PointSet a = load_set();
      const Subspace v = parse_subspace_basis(a.p(), a.n(), basis_csv);
      const GFVector x = rep_text.empty() ? GFVector(a.p(), a.n())
                                          : GFVector::parse(a.p(), a.n(), rep_text);
      const Coset c(x, v);
      const UniformityReport r = uniformity_sup(a, c);
      report["inputs"]["subspace_basis"] = basis_csv;
      report["coset"] = coset_json(c);
      report["result"] = to_json(r);
      if (!eps_text.empty()) {
        const UniformityParams params(parse_rational(eps_text));
        report["inputs"]["eps"] = exact(params.eps());
        report["result"]["uniform"] = r.sup_sq <= params.eps_sq();
      }
    } else if (*increment) {
      const PointSet a = load_set();
      const Rational eps = parse_rational(eps_text);
      report["inputs"]["eps"] = exact(eps);
      report["result"] = to_json(density_increment(a, eps));
    } else if (*regularity) {
      const PointSet a = load_set();
      const Rational eps = parse_rational(eps_text);
      const Rational eta = parse_rational(eta_text);
      const int hi = max_codim < 0 ? a.n() : max_codim;
      report["inputs"].update({{"eps", exact(eps)},
                               {"eta", exact(eta)},
                               {"min_codim", min_codim},
                               {"max_codim", hi}});
      const RegularityResult r = regularity_decompose(a, eps, eta, min_codim, hi);
      report["result"] = to_json(r);
    } else if (*pipeline) {
      const PointSet a = load_set();
      PipelineParams params;
      params.eps = parse_rational(eps_text);
      params.eta = parse_rational(eta_text);
      params.slack = parse_rational(slack_text);
      if (d != 0) params.d = d;
      if (buckets != 0) params.buckets = buckets;
      params.min_codim = min_codim;
      if (max_codim >= 0) params.max_codim = max_codim;
      params.validate(a.n());
      report["inputs"].update({{"eps", exact(params.eps)},
                               {"eta", exact(params.eta)},
                               {"slack", exact(params.slack)},
                               {"d", params.resolved_d()},
                               {"buckets", params.resolved_buckets()},
                               {"min_codim", params.min_codim},
                               {"max_codim", params.resolved_max_codim(a.n())}});
      const PipelineReport r = find_uniform_subspace(a, params);
      report["result"] = to_json(r);
      report["outcome"] = to_string(r.outcome);
      if (r.outcome == PipelineOutcome::kSuccess && !r.within_bound) {
        code = kVerificationFailure;
      }
    } else if (*oracle) {
      const PointSet a = load_set();
      report["inputs"]["max_codim"] = max_codim;
      report["result"] = to_json(exhaustive_best_subspace(a, max_codim));
    } else if (*f3) {
      report["inputs"] = {{"n", n_arg}, {"long_run", long_run}};
      const F3Report r = verify_f3_example(n_arg, long_run);
      report["result"] = to_json(r);
      report["total_subspaces"] = r.total_subspaces;
      report["all_passed"] = r.all_passed;
      if (!r.all_passed) code = kVerificationFailure;
    } else if (*wht) {
      const PointSet a = load_set();
      const Spectrum s = restricted_spectrum(a, Coset(Subspace::full(a.p(), a.n())));
      json coeffs = json::array();
      for (const auto& z : s.coefficients) {
        if (a.p() == 2) {
          coeffs.push_back(z.a());
        } else {
          coeffs.push_back({z.a(), z.b()});
        }
      }
      report["result"] = {{"p", a.p()},
                          {"n", a.n()},
                          {"scale", s.scale},
                          {"coefficients", std::move(coeffs)},
                          {"uniformity", to_json(uniformity_sup(a, s.coset))}};
    } else if (*gen) {
      const Rational density = parse_rational(density_text);
      check_ambient(p_arg, n_arg);
      report["inputs"] = {{"p", p_arg},
                          {"n", n_arg},
                          {"density", exact(density)},
                          {"seed", seed},
                          {"generator", "mt19937_64, member iff u*den < num*2^64"}};
      const PointSet a = generate_random_set(p_arg, n_arg, density, seed);
      const std::string text = format_set_file(a);
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InputError("cannot write '" + out_path + "'");
        f << text;
      }
      report["result"] = {{"size", a.size()}, {"set_file", text}};
    } else if (*ramsey) {
      const AlmostColouring c = parse_colouring(read_file(colouring_path));
      report["inputs"] = {{"colouring", colouring_path}, {"d", d}};
      const auto s = find_union_structure(c, d);
      report["result"] = {{"found", s.has_value()},
                          {"coloured_fraction", exact(c.coloured_fraction())}};
      if (s) {
        report["result"]["xs"] = vectors_json(s->xs);
        report["result"]["colour"] = s->colour;
      }
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    report["error"] = e.what();
    code = kInputError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    report["error"] = e.what();
    code = kBudgetExceeded;
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report["exit_code"] = code;
  report["timing"] = {
      {"elapsed_ms",
       std::chrono::duration<double, std::milli>(elapsed).count()}};
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace subuniform::cli
