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

#include "cqa/drivers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "cqa/spectral.hpp"

namespace cqa {

namespace {

Mask checked_site_set(int n_sites, std::span<const int> sites, const char *what) {
    Mask m = 0;
    for (int s : sites) {
        require(s >= 0 && s < n_sites, std::string(what) + ": site " + std::to_string(s) + " out of range");
        require(!((m >> s) & 1), std::string(what) + ": repeated site " + std::to_string(s));
        m |= Mask{1} << s;
    }
    return m;
}

void check_cycle(int n_sites, std::span<const int> cycle, const char *what) {
    require(cycle.size() >= 3, std::string(what) + ": cycles need at least 3 sites");
    checked_site_set(n_sites, cycle, what);
}

PauliTerm pair_term(int n_sites, int a, int b, char pauli, double coeff) {
    const int sites[] = {a, b};
    const char letters[] = {pauli, pauli, '\0'};
    return PauliTerm::on_sites(n_sites, sites, letters, coeff);
}

}  // namespace

std::string to_string(DriverFamily f) {
    switch (f) {
        case DriverFamily::transverse:
            return "transverse";
        case DriverFamily::xy_cycle:
            return "xy_cycle";
        case DriverFamily::gi_row_xy:
            return "gi_row_xy";
        case DriverFamily::gi_fourbody:
            return "gi_fourbody";
        case DriverFamily::nae_clause:
            return "nae_clause";
        case DriverFamily::lhz_twoflip:
            return "lhz_twoflip";
        case DriverFamily::lhz_gf2:
            return "lhz_gf2";
    }
    return "unknown";
}

DriverFamily driver_family_from_string(const std::string &name) {
    for (auto f : {DriverFamily::transverse, DriverFamily::xy_cycle, DriverFamily::gi_row_xy, DriverFamily::gi_fourbody,
                   DriverFamily::nae_clause, DriverFamily::lhz_twoflip, DriverFamily::lhz_gf2}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown driver family '" + name + "'");
}

Hamiltonian build_transverse(int n) {
    require(n >= 1, "transverse driver needs at least one site");
    std::vector<PauliTerm> terms;
    for (int i = 0; i < n; ++i) {
        terms.push_back(PauliTerm{n, Mask{1} << i, 0, -1.0});
    }
    return Hamiltonian(n, std::move(terms));
}

Hamiltonian build_xy_cycle(int n_sites, std::span<const int> cycle, double J) {
    check_cycle(n_sites, cycle, "xy cycle");
    std::vector<PauliTerm> terms;
    for (std::size_t m = 0; m < cycle.size(); ++m) {
        int a = cycle[m];
        int b = cycle[(m + 1) % cycle.size()];
        terms.push_back(pair_term(n_sites, a, b, 'X', -J));
        terms.push_back(pair_term(n_sites, a, b, 'Y', -J));
    }
    return Hamiltonian(n_sites, std::move(terms));
}

Hamiltonian build_aux(std::span<const Constraint> cs, std::span<const double> B) {
    require(cs.size() == B.size(), "build_aux: got " + std::to_string(cs.size()) + " constraints but " +
                                       std::to_string(B.size()) + " field values");
    require(!cs.empty(), "build_aux needs at least one constraint");
    Hamiltonian out(cs.front().n_sites());
    for (std::size_t j = 0; j < cs.size(); ++j) {
        out += constraint_as_hamiltonian(cs[j]) * Complex{-B[j]};
    }
    return out;
}

AuxFieldResult find_aux_field(int n, int target_mz, double J) {
    require(std::abs(target_mz) <= n, "target magnetization exceeds the number of sites");
    require(((n - target_mz) % 2) == 0, "target magnetization parity does not match n");
    auto energies = xy_sector_ground_energies(n, J);

    // Sector M wins at field B when E_M - B M is minimal; the winning set of
    // B for each sector is an interval bounded by its neighbours' crossings.
    auto interval = [&](int target) {
        double e_t = 0.0;
        for (const auto &[m, e] : energies) {
            if (m == target) {
                e_t = e;
            }
        }
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const auto &[m, e] : energies) {
            if (m < target) {
                lo = std::max(lo, (e_t - e) / (target - m));
            } else if (m > target) {
                hi = std::min(hi, (e - e_t) / (m - target));
            }
        }
        return std::pair{lo, hi};
    };

    AuxFieldResult out;
    for (const auto &[m, e] : energies) {
        auto [lo, hi] = interval(m);
        if (hi - lo > 1e-12) {
            out.attainable.push_back(m);
        }
    }
    auto [lo, hi] = interval(target_mz);
    out.lower = lo;
    out.upper = hi;
    out.upper_unbounded = std::isinf(hi);
    if (hi - lo <= 1e-12) {
        return out;
    }
    if (std::isinf(hi) && std::isinf(lo)) {
        out.B = 0.0;
    } else if (std::isinf(hi)) {
        out.B = lo + std::abs(J);
    } else if (std::isinf(lo)) {
        out.B = hi - std::abs(J);
    } else {
        out.B = 0.5 * (lo + hi);
    }
    return out;
}

Hamiltonian build_gi_row_xy(int n, double J) {
    require(n >= 3, "row-XY driver needs n >= 3");
    Hamiltonian out(n * n);
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            row[c] = grid_site(n, r, c);
        }
        out += build_xy_cycle(n * n, row, J);
    }
    return out;
}

std::vector<Hamiltonian> gi_fourbody_generators(int n) {
    require(n >= 3, "four-body driver needs n >= 3");
    require(n * n <= kMaxSites, "four-body driver limited to 64 grid sites");
    // Sites (r,c), (r+1,c), (r+1,c'), (r,c'): sigma+ sigma- sigma+ sigma-,
    // with sigma+ = |up><down| = |0><1|.
    constexpr unsigned kTo = 0b1010;
    constexpr unsigned kFrom = 0b0101;
    std::vector<Hamiltonian> out;
    for (int r = 0; r < n; ++r) {
        int r2 = (r + 1) % n;
        for (int c = 0; c < n; ++c) {
            for (int c2 = c + 1; c2 < n; ++c2) {
                const int sites[] = {grid_site(n, r, c), grid_site(n, r2, c), grid_site(n, r2, c2),
                                     grid_site(n, r, c2)};
                Hamiltonian hop = transition(n * n, sites, kTo, kFrom) + transition(n * n, sites, kFrom, kTo);
                out.push_back(hop * Complex{-1.0});
            }
        }
    }
    return out;
}

Hamiltonian build_gi_fourbody(int n) {
    Hamiltonian out(n * n);
    for (const auto &g : gi_fourbody_generators(n)) {
        out += g;
    }
    return out;
}

Hamiltonian build_nae_driver(std::span<const Constraint> clauses, int n) {
    require(n >= 1 && n <= kMaxSites, "NAE driver needs 1..64 sites");
    Hamiltonian out(n);
    Mask covered = 0;
    for (const auto &c : clauses) {
        const auto *clause = std::get_if<ClauseIndicator>(&c.kind());
        require(clause != nullptr, "NAE driver accepts clause constraints only");
        require(c.n_sites() == n, "clause defined on a different number of sites");
        require((covered & c.support()) == 0, "constraint clauses must be disjoint");
        covered |= c.support();
        for (unsigned a = 0; a < 8; ++a) {
            if (a == clause->violating || a == clause->violating_complement()) {
                continue;
            }
            for (unsigned b = 0; b < 8; ++b) {
                if (b == a || b == clause->violating || b == clause->violating_complement()) {
                    continue;
                }
                out -= transition(n, clause->support, a, b);
            }
        }
    }
    std::vector<PauliTerm> field;
    for (int k = 0; k < n; ++k) {
        if (!((covered >> k) & 1)) {
            field.push_back(PauliTerm{n, Mask{1} << k, 0, -1.0});
        }
    }
    return out + Hamiltonian(n, std::move(field));
}

Hamiltonian build_lhz_twoflip(int n_sites, std::span<const int> cycle) {
    check_cycle(n_sites, cycle, "two-flip driver");
    std::vector<PauliTerm> terms;
    for (std::size_t m = 0; m < cycle.size(); ++m) {
        terms.push_back(pair_term(n_sites, cycle[m], cycle[(m + 1) % cycle.size()], 'X', -1.0));
    }
    return Hamiltonian(n_sites, std::move(terms));
}

Hamiltonian build_lhz_twoflip_total(int n_sites, std::span<const std::vector<int>> cycles) {
    Hamiltonian out(n_sites);
    Mask covered = 0;
    for (const auto &cycle : cycles) {
        check_cycle(n_sites, cycle, "two-flip driver");
        Mask m = checked_site_set(n_sites, cycle, "two-flip driver");
        require((covered & m) == 0, "two-flip cycles must not overlap");
        covered |= m;
        out += build_lhz_twoflip(n_sites, cycle);
    }
    std::vector<PauliTerm> field;
    for (int k = 0; k < n_sites; ++k) {
        if (!((covered >> k) & 1)) {
            field.push_back(PauliTerm{n_sites, Mask{1} << k, 0, -1.0});
        }
    }
    return out + Hamiltonian(n_sites, std::move(field));
}

std::vector<PauliTerm> lhz_gf2_terms(const Gf2Solution &sol, std::span<const std::vector<int>> subsets) {
    Mask independent = 0;
    for (int i : sol.independent) {
        independent |= Mask{1} << i;
    }
    std::vector<Mask> exprs;
    for (const auto &e : sol.expressions) {
        Mask m = 0;
        for (int i : e) {
            m |= Mask{1} << i;
        }
        exprs.push_back(m);
    }

    std::vector<std::vector<int>> singletons;
    if (subsets.empty()) {
        for (int i : sol.independent) {
            singletons.push_back({i});
        }
        subsets = singletons;
    }

    std::vector<PauliTerm> out;
    for (const auto &subset : subsets) {
        require(!subset.empty(), "driver subsets must be nonempty");
        Mask x = checked_site_set(sol.n_sites, subset, "gf2 driver subset");
        require((x & ~independent) == 0, "driver subsets may contain independent sites only");
        Mask flips = x;
        // The solved constraint for dependent d is Z_d Prod_{expr(d)} Z; it
        // anticommutes with X_S exactly when |S & expr(d)| is odd.
        for (std::size_t r = 0; r < sol.dependent.size(); ++r) {
            if (std::popcount(x & exprs[r]) & 1) {
                flips |= Mask{1} << sol.dependent[r];
            }
        }
        out.push_back(PauliTerm{sol.n_sites, flips, 0, 1.0});
    }
    return out;
}

Hamiltonian build_lhz_gf2_driver(const Gf2Solution &sol, std::span<const std::vector<int>> subsets) {
    auto terms = lhz_gf2_terms(sol, subsets);
    for (auto &t : terms) {
        t.coeff = -1.0;
    }
    return Hamiltonian(sol.n_sites, std::move(terms));
}

TermIndependence check_term_independence(std::span<const PauliTerm> terms) {
    std::vector<Mask> basis;  // pivot = highest set bit, kept distinct
    for (const auto &t : terms) {
        require(t.z == 0, "independence check accepts pure X-strings only");
        Mask v = t.x;
        for (Mask b : basis) {
            if (v & (Mask{1} << (std::bit_width(b) - 1))) {
                v ^= b;
            }
        }
        if (v != 0) {
            basis.push_back(v);
            std::sort(basis.begin(), basis.end(), std::greater<>());
        }
    }
    int rank = static_cast<int>(basis.size());
    return TermIndependence{rank == static_cast<int>(terms.size()), rank};
}

}  // namespace cqa
