// Copyright 2026 The cqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cqa/anneal.hpp"
#include "cqa/constraints.hpp"
#include "cqa/drivers.hpp"
#include "cqa/encodings.hpp"
#include "cqa/pauli.hpp"
#include "cqa/spectral.hpp"
#include "cqa/statespace.hpp"

namespace cqa::io {

using Json = nlohmann::json;

/// Every document written carries this top-level "format_version".
inline constexpr int kFormatVersion = 1;

/// Parses text; syntax errors become ErrorCode::parse.
Json parse_json(const std::string &text);
Json read_json_file(const std::string &path);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// 17 significant digits with a '.' decimal separator.
std::string format_real(double v);

/// {"format_version", "n", "terms": [{"sites", "paulis", "coeff": [re, im]}]}.
/// Terms list only the non-identity sites; "paulis" has one letter per site.
Json to_json(const Hamiltonian &h);
Hamiltonian hamiltonian_from_json(const Json &j);

/// Canonical forms: linear_z {coeffs, target}, z_parity {support, target},
/// clause {support, violating}. Input also accepts magnetization {sites,
/// target} and one_up {sites}.
Json to_json(const Constraint &c);
Constraint constraint_from_json(const Json &j, int n_sites);

struct ConstraintSet {
    int n_sites = 0;
    std::vector<Constraint> constraints;
};
/// {"format_version", "n", "constraints": [...]}.
Json to_json(const ConstraintSet &cs);
ConstraintSet constraint_set_from_json(const Json &j);

Json to_json(const SectorBasis &sector);
Json to_json(const Gf2Solution &sol);
Json to_json(const ClosureReport &report);
Json to_json(const VerifyReport &report);
Json to_json(const AnnealResult &result);
Json to_json(const SpectrumSweep &sweep);
Json to_json(const ResourceCounts &counts);

/// Header line then one row per point.
std::string to_csv(const MagnetizationCurve &curve);
std::string to_csv(const SpectrumSweep &sweep);
std::string to_csv(const AnnealResult &result);

/// Driver construction from a family tag and a parameter object:
///   transverse {n}; xy_cycle {n, cycle?, J?}; gi_row_xy {n, J?};
///   gi_fourbody {n}; nae_clause {n, clauses: [{support, violating}]};
///   lhz_twoflip {n, cycles}; lhz_gf2 {n, parities: [{support, target?}], subsets?}.
Hamiltonian build_driver(DriverFamily family, const Json &params);

}  // namespace cqa::io
