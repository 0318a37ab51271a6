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

#include "cqa/json_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cqa::io {

namespace {

// Runs a parsing body, turning library type errors into parse errors.
template <typename F>
auto guarded(const char *what, F &&body) -> decltype(body()) {
    try {
        return body();
    } catch (const Json::exception &e) {
        throw Error(ErrorCode::parse, std::string(what) + ": " + e.what());
    }
}

const Json &field(const Json &j, const char *key) {
    require(j.is_object(), std::string("expected an object holding '") + key + "'", ErrorCode::parse);
    auto it = j.find(key);
    require(it != j.end(), std::string("missing field '") + key + "'", ErrorCode::parse);
    return *it;
}

int site_count(const Json &j) {
    int n = field(j, "n").get<int>();
    require(n >= 1 && n <= kMaxSites, "field 'n' must lie in 1..64", ErrorCode::parse);
    return n;
}

void check_version(const Json &j) {
    auto it = j.find("format_version");
    if (it != j.end()) {
        require(it->get<int>() == kFormatVersion, "unsupported format_version", ErrorCode::parse);
    }
}

Json complex_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Complex complex_from(const Json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    require(j.is_array() && j.size() == 2, "coefficients are numbers or [re, im] pairs", ErrorCode::parse);
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<int> mask_sites(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) {
        out.push_back(std::countr_zero(m));
    }
    return out;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path + "'", ErrorCode::parse);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string &path) {
    return parse_json(read_text_file(path));
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot write '" + path + "'");
    out << text;
    require(out.good(), "failed writing '" + path + "'");
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Hamiltonian &h) {
    Json terms = Json::array();
    for (const auto &t : h.terms()) {
        Json sites = Json::array();
        std::string letters;
        for (int s : mask_sites(t.support())) {
            sites.push_back(s);
            letters.push_back(t.pauli_at(s));
        }
        terms.push_back({{"sites", sites}, {"paulis", letters}, {"coeff", complex_json(t.coeff)}});
    }
    return {{"format_version", kFormatVersion}, {"n", h.n_sites()}, {"terms", terms}};
}

Hamiltonian hamiltonian_from_json(const Json &j) {
    return guarded("Hamiltonian", [&] {
        check_version(j);
        const int n = site_count(j);
        const Json &arr = field(j, "terms");
        require(arr.is_array(), "'terms' must be an array", ErrorCode::parse);
        std::vector<PauliTerm> terms;
        for (const auto &t : arr) {
            auto sites = field(t, "sites").get<std::vector<int>>();
            auto letters = field(t, "paulis").get<std::string>();
            require(letters.find_first_not_of("IXYZ") == std::string::npos, "Pauli letters must be I, X, Y or Z",
                    ErrorCode::parse);
            Complex coeff = t.contains("coeff") ? complex_from(t["coeff"]) : Complex{1.0};
            try {
                terms.push_back(PauliTerm::on_sites(n, sites, letters, coeff));
            } catch (const Error &e) {
                throw Error(ErrorCode::parse, e.what());
            }
        }
        return Hamiltonian(n, std::move(terms));
    });
}

Json to_json(const Constraint &c) {
    return std::visit(
        [](const auto &k) -> Json {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, LinearZ>) {
                return {{"type", "linear_z"}, {"coeffs", k.coeffs}, {"target", k.target}};
            } else if constexpr (std::is_same_v<K, ZParity>) {
                return {{"type", "z_parity"}, {"support", k.support}, {"target", k.target}};
            } else {
                return {{"type", "clause"}, {"support", k.support}, {"violating", k.violating}};
            }
        },
        c.kind());
}

Constraint constraint_from_json(const Json &j, int n_sites) {
    return guarded("constraint", [&] {
        auto type = field(j, "type").get<std::string>();
        try {
            if (type == "linear_z") {
                auto coeffs = field(j, "coeffs").get<std::vector<int>>();
                require(static_cast<int>(coeffs.size()) == n_sites, "linear_z needs one coefficient per site");
                return Constraint::linear_z(std::move(coeffs), field(j, "target").get<int>());
            }
            if (type == "magnetization") {
                auto sites = field(j, "sites").get<std::vector<int>>();
                return Constraint::magnetization(n_sites, sites, field(j, "target").get<int>());
            }
            if (type == "one_up") {
                auto sites = field(j, "sites").get<std::vector<int>>();
                return Constraint::one_up(n_sites, sites);
            }
            if (type == "z_parity") {
                int target = j.contains("target") ? j["target"].get<int>() : 1;
                return Constraint::z_parity(n_sites, field(j, "support").get<std::vector<int>>(), target);
            }
            if (type == "clause") {
                auto support = field(j, "support").get<std::array<int, 3>>();
                return Constraint::clause(n_sites, support, field(j, "violating").get<unsigned>());
            }
        } catch (const Error &e) {
            throw Error(ErrorCode::parse, e.what());
        }
        throw Error(ErrorCode::parse, "unknown constraint type '" + type + "'");
    });
}

Json to_json(const ConstraintSet &cs) {
    Json arr = Json::array();
    for (const auto &c : cs.constraints) {
        arr.push_back(to_json(c));
    }
    return {{"format_version", kFormatVersion}, {"n", cs.n_sites}, {"constraints", arr}};
}

ConstraintSet constraint_set_from_json(const Json &j) {
    return guarded("constraint set", [&] {
        check_version(j);
        ConstraintSet out;
        out.n_sites = site_count(j);
        const Json &arr = field(j, "constraints");
        require(arr.is_array(), "'constraints' must be an array", ErrorCode::parse);
        for (const auto &c : arr) {
            out.constraints.push_back(constraint_from_json(c, out.n_sites));
        }
        return out;
    });
}

Json to_json(const SectorBasis &sector) {
    return {{"format_version", kFormatVersion},
            {"n", sector.n_sites()},
            {"size", sector.size()},
            {"states", std::vector<Mask>(sector.states().begin(), sector.states().end())}};
}

Json to_json(const Gf2Solution &sol) {
    return {{"format_version", kFormatVersion}, {"n", sol.n_sites},        {"rank", sol.rank()},
            {"dependent", sol.dependent},       {"exprs", sol.expressions}, {"constants", sol.constants},
            {"independent", sol.independent}};
}

Json to_json(const ClosureReport &report) {
    Json witnesses = Json::array();
    for (const auto &w : report.witnesses) {
        witnesses.push_back(
            {{"from", w.from}, {"to", w.to}, {"x_mask", w.x_mask}, {"amplitude", complex_json(w.amplitude)}});
    }
    return {{"format_version", kFormatVersion},
            {"closure", report.pass ? "pass" : "fail"},
            {"states_checked", report.states_checked},
            {"violations", report.violations},
            {"witnesses", witnesses}};
}

Json to_json(const VerifyReport &report) {
    Json j = to_json(report.closure);
    j["connected"] = report.connected;
    j["components"] = report.components;
    j["sector_size"] = report.sector_size;
    j["max_term_support"] = report.max_term_support;
    j["n_terms"] = report.n_terms;
    return j;
}

Json to_json(const AnnealResult &result) {
    Json cps = Json::array();
    for (const auto &c : result.checkpoints) {
        cps.push_back({{"t", c.t}, {"s", c.s}, {"energy", c.energy}, {"leakage", c.leakage}, {"norm", c.norm}});
    }
    return {{"format_version", kFormatVersion},
            {"overlap", result.overlap},
            {"ground_multiplicity", result.ground_multiplicity},
            {"max_leakage", result.max_leakage},
            {"steps", result.steps},
            {"sector_restricted", result.sector.has_value()},
            {"checkpoints", cps}};
}

Json to_json(const SpectrumSweep &sweep) {
    return {{"format_version", kFormatVersion},
            {"s", sweep.s_grid},
            {"energies", sweep.energies},
            {"min_gap", std::isfinite(sweep.min_gap) ? Json(sweep.min_gap) : Json(nullptr)},
            {"min_gap_s", sweep.min_gap_s}};
}

Json to_json(const ResourceCounts &counts) {
    Json j = {{"format_version", kFormatVersion}};
    auto put = [&](const char *key, const std::optional<std::int64_t> &v) {
        if (v) {
            j[key] = *v;
        }
    };
    put("qubits", counts.qubits);
    put("qudits", counts.qudits);
    put("levels", counts.levels);
    put("edges", counts.edges);
    put("driver_terms", counts.driver_terms);
    put("constraints", counts.constraints);
    return j;
}

std::string to_csv(const MagnetizationCurve &curve) {
    std::string out = "b_over_j,mz,e0_per_jn\n";
    for (std::size_t i = 0; i < curve.b_over_j.size(); ++i) {
        out += format_real(curve.b_over_j[i]) + "," + std::to_string(curve.mz[i]) + "," +
               format_real(curve.e0_density[i]) + "\n";
    }
    return out;
}

std::string to_csv(const SpectrumSweep &sweep) {
    std::string out = "s";
    std::size_t levels = sweep.energies.empty() ? 0 : sweep.energies.front().size();
    for (std::size_t k = 0; k < levels; ++k) {
        out += ",e" + std::to_string(k);
    }
    out += "\n";
    for (std::size_t i = 0; i < sweep.s_grid.size(); ++i) {
        out += format_real(sweep.s_grid[i]);
        for (double e : sweep.energies[i]) {
            out += "," + format_real(e);
        }
        out += "\n";
    }
    return out;
}

std::string to_csv(const AnnealResult &result) {
    std::string out = "t,s,energy,leakage,norm\n";
    for (const auto &c : result.checkpoints) {
        out += format_real(c.t) + "," + format_real(c.s) + "," + format_real(c.energy) + "," +
               format_real(c.leakage) + "," + format_real(c.norm) + "\n";
    }
    return out;
}

Hamiltonian build_driver(DriverFamily family, const Json &params) {
    return guarded("driver parameters", [&]() -> Hamiltonian {
        const int n = site_count(params);
        auto real_or = [&](const char *key, double dflt) {
            return params.contains(key) ? params[key].get<double>() : dflt;
        };
        switch (family) {
            case DriverFamily::transverse:
                return build_transverse(n);
            case DriverFamily::xy_cycle: {
                std::vector<int> cycle(static_cast<std::size_t>(n));
                std::iota(cycle.begin(), cycle.end(), 0);
                if (params.contains("cycle")) {
                    cycle = params["cycle"].get<std::vector<int>>();
                }
                return build_xy_cycle(n, cycle, real_or("J", 1.0));
            }
            case DriverFamily::gi_row_xy:
                return build_gi_row_xy(n, real_or("J", 1.0));
            case DriverFamily::gi_fourbody:
                return build_gi_fourbody(n);
            case DriverFamily::nae_clause: {
                std::vector<Constraint> clauses;
                for (const auto &c : field(params, "clauses")) {
                    clauses.push_back(Constraint::clause(n, field(c, "support").get<std::array<int, 3>>(),
                                                         field(c, "violating").get<unsigned>()));
                }
                return build_nae_driver(clauses, n);
            }
            case DriverFamily::lhz_twoflip: {
                auto cycles = field(params, "cycles").get<std::vector<std::vector<int>>>();
                return build_lhz_twoflip_total(n, cycles);
            }
            case DriverFamily::lhz_gf2: {
                std::vector<Constraint> parities;
                for (const auto &p : field(params, "parities")) {
                    int target = p.contains("target") ? p["target"].get<int>() : 1;
                    parities.push_back(Constraint::z_parity(n, field(p, "support").get<std::vector<int>>(), target));
                }
                std::vector<std::vector<int>> subsets;
                if (params.contains("subsets")) {
                    subsets = params["subsets"].get<std::vector<std::vector<int>>>();
                }
                return build_lhz_gf2_driver(gf2_solve(parities), subsets);
            }
        }
        throw Error(ErrorCode::invalid_argument, "unknown driver family");
    });
}

}  // namespace cqa::io
