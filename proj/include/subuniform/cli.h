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

#ifndef SUBUNIFORM_CLI_H_
#define SUBUNIFORM_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"
#include "subuniform/increments.h"
#include "subuniform/pipeline.h"
#include "subuniform/ramsey.h"
#include "subuniform/spectra.h"

namespace subuniform::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Set files: a header "p=<2|3> n=<int>", then one vector per line as n
// digits, coordinate 1 first. '#' starts a comment; blank lines are skipped.
// Errors carry the offending line number.
PointSet parse_set_file(std::string_view text);
// Canonical form: the header, then members in lexicographic order.
std::string format_set_file(const PointSet& a);

// "v1,v2,..." digit strings; the empty string is the zero subspace.
Subspace parse_subspace_basis(int p, int n, std::string_view csv);

// One std::mt19937_64 draw u per point of F_p^n in rank order, seeded with
// `seed`; the point is a member iff u * den < num * 2^64 where
// density = num/den in [0, 1].
PointSet generate_random_set(int p, int n, const Rational& density,
                             std::uint64_t seed);

nlohmann::json to_json(const Subspace& v);
nlohmann::json to_json(const UniformityReport& r);
nlohmann::json to_json(const IncrementTrace& t);
nlohmann::json to_json(const RegularityResult& r);
nlohmann::json to_json(const PipelineReport& r);
nlohmann::json to_json(const BestSubspace& b);
nlohmann::json to_json(const F3Report& r);

// Runs one subcommand. args excludes the program name. The JSON report goes
// to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace subuniform::cli

#endif  // SUBUNIFORM_CLI_H_
