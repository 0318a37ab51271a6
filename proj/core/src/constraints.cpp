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

#include "cqa/constraints.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <string>

namespace cqa {

namespace {

int spin(Mask state, int site) {
    return ((state >> site) & 1) ? -1 : 1;
}

void check_site(int n_sites, int site) {
    require(site >= 0 && site < n_sites,
            "constraint site " + std::to_string(site) + " out of range for " + std::to_string(n_sites) + " sites");
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Constraint Constraint::linear_z(std::vector<int> coeffs, int target) {
    int n = static_cast<int>(coeffs.size());
    require(n <= kMaxSites, "too many sites for a linear constraint");
    int abs_sum = 0;
    for (int c : coeffs) {
        abs_sum += std::abs(c);
    }
    // c * z == c (mod 2) for z = +-1, so the reachable sums share Sum|c|'s parity.
    require(((abs_sum - target) % 2) == 0, "linear constraint target " + std::to_string(target) +
                                               " has the wrong parity for coefficient sum " + std::to_string(abs_sum));
    return Constraint(n, LinearZ{std::move(coeffs), target});
}

Constraint Constraint::magnetization(int n_sites, std::span<const int> sites, int target) {
    std::vector<int> coeffs(static_cast<std::size_t>(n_sites), 0);
    for (int s : sites) {
        check_site(n_sites, s);
        require(coeffs[s] == 0, "site " + std::to_string(s) + " listed twice");
        coeffs[s] = 1;
    }
    return linear_z(std::move(coeffs), target);
}

Constraint Constraint::one_up(int n_sites, std::span<const int> sites) {
    return magnetization(n_sites, sites, 2 - static_cast<int>(sites.size()));
}

Constraint Constraint::z_parity(int n_sites, std::vector<int> support, int target) {
    require(n_sites >= 1 && n_sites <= kMaxSites, "parity constraint needs 1..64 sites");
    require(!support.empty(), "parity constraint support must be nonempty");
    require(target == 1 || target == -1, "parity target must be +1 or -1");
    Mask seen = 0;
    for (int s : support) {
        check_site(n_sites, s);
        require(!((seen >> s) & 1), "site " + std::to_string(s) + " listed twice");
        seen |= Mask{1} << s;
    }
    return Constraint(n_sites, ZParity{std::move(support), target});
}

Constraint Constraint::clause(int n_sites, std::array<int, 3> support, unsigned violating) {
    require(n_sites >= 3 && n_sites <= kMaxSites, "clause needs 3..64 sites");
    require(violating < 8, "violating configuration must be a 3-bit value");
    for (int s : support) {
        check_site(n_sites, s);
    }
    require(support[0] != support[1] && support[0] != support[2] && support[1] != support[2],
            "clause sites must be distinct");
    return Constraint(n_sites, ClauseIndicator{support, violating});
}

int Constraint::target() const {
    return std::visit(overloaded{[](const LinearZ &c) { return c.target; }, [](const ZParity &c) { return c.target; },
                                 [](const ClauseIndicator &) { return 0; }},
                      kind_);
}

Mask Constraint::support() const {
    Mask m = 0;
    std::visit(overloaded{[&](const LinearZ &c) {
                              for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
                                  if (c.coeffs[i] != 0) {
                                      m |= Mask{1} << i;
                                  }
                              }
                          },
                          [&](const ZParity &c) {
                              for (int s : c.support) {
                                  m |= Mask{1} << s;
                              }
                          },
                          [&](const ClauseIndicator &c) {
                              for (int s : c.support) {
                                  m |= Mask{1} << s;
                              }
                          }},
               kind_);
    return m;
}

int eval_constraint(const Constraint &c, Mask state) {
    return std::visit(overloaded{[&](const LinearZ &k) {
                                     int sum = 0;
                                     for (std::size_t i = 0; i < k.coeffs.size(); ++i) {
                                         sum += k.coeffs[i] * spin(state, static_cast<int>(i));
                                     }
                                     return sum;
                                 },
                                 [&](const ZParity &k) {
                                     int prod = 1;
                                     for (int s : k.support) {
                                         prod *= spin(state, s);
                                     }
                                     return prod;
                                 },
                                 [&](const ClauseIndicator &k) {
                                     unsigned local = 0;
                                     for (int b = 0; b < 3; ++b) {
                                         local |= static_cast<unsigned>((state >> k.support[b]) & 1) << b;
                                     }
                                     return (local == k.violating || local == k.violating_complement()) ? 1 : 0;
                                 }},
                      c.kind());
}

Hamiltonian constraint_as_hamiltonian(const Constraint &c) {
    const int n = c.n_sites();
    return std::visit(overloaded{[&](const LinearZ &k) {
                                     std::vector<PauliTerm> terms;
                                     for (int i = 0; i < n; ++i) {
                                         if (k.coeffs[i] != 0) {
                                             terms.push_back(PauliTerm{n, 0, Mask{1} << i, double(k.coeffs[i])});
                                         }
                                     }
                                     return Hamiltonian(n, std::move(terms));
                                 },
                                 [&](const ZParity &k) {
                                     Mask z = 0;
                                     for (int s : k.support) {
                                         z |= Mask{1} << s;
                                     }
                                     return Hamiltonian(n, {PauliTerm{n, 0, z, 1.0}});
                                 },
                                 [&](const ClauseIndicator &k) {
                                     return transition(n, k.support, k.violating, k.violating) +
                                            transition(n, k.support, k.violating_complement(),
                                                       k.violating_complement());
                                 }},
                      c.kind());
}

Hamiltonian penalty_term(const Constraint &c) {
    Hamiltonian shifted = constraint_as_hamiltonian(c) - Hamiltonian::identity(c.n_sites(), double(c.target()));
    return shifted * shifted;
}

SectorBasis::SectorBasis(int n_sites, std::vector<Mask> states) : n_sites_(n_sites), states_(std::move(states)) {
    std::sort(states_.begin(), states_.end());
    states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
}

std::optional<std::size_t> SectorBasis::index_of(Mask state) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), state);
    if (it == states_.end() || *it != state) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - states_.begin());
}

SectorBasis sector_basis(std::span<const Constraint> cs, int n_sites) {
    require(n_sites >= 0 && n_sites <= kMaxSites, "sector enumeration supports at most 64 sites");
    for (const auto &c : cs) {
        require(c.n_sites() == n_sites, "constraint defined on " + std::to_string(c.n_sites()) + " sites, expected " +
                                            std::to_string(n_sites));
    }

    struct LinearBound {
        const LinearZ *c;
        std::vector<int> suffix_abs;  // suffix_abs[k] = Sum_{i >= k} |coeffs[i]|
    };
    std::vector<LinearBound> linear;
    // Non-linear constraints are checked once their last support site is set.
    std::vector<std::vector<const Constraint *>> complete_at(static_cast<std::size_t>(n_sites));
    for (const auto &c : cs) {
        if (const auto *lz = std::get_if<LinearZ>(&c.kind())) {
            LinearBound b{lz, std::vector<int>(static_cast<std::size_t>(n_sites) + 1, 0)};
            for (int i = n_sites - 1; i >= 0; --i) {
                b.suffix_abs[i] = b.suffix_abs[i + 1] + std::abs(lz->coeffs[i]);
            }
            linear.push_back(std::move(b));
        } else {
            int last = std::bit_width(c.support()) - 1;
            complete_at[last].push_back(&c);
        }
    }

    std::vector<Mask> found;
    std::vector<int> partial(linear.size(), 0);

    std::function<void(int, Mask)> descend = [&](int site, Mask state) {
        if (site == n_sites) {
            require(found.size() < kMaxSectorStates, "sector exceeds the enumeration limit", ErrorCode::dimension_limit);
            found.push_back(state);
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            Mask next = state | (Mask(bit) << site);
            int z = bit ? -1 : 1;
            bool ok = true;
            for (std::size_t j = 0; j < linear.size(); ++j) {
                partial[j] += linear[j].c->coeffs[site] * z;
                if (std::abs(linear[j].c->target - partial[j]) > linear[j].suffix_abs[site + 1]) {
                    ok = false;
                }
            }
            if (ok) {
                for (const Constraint *c : complete_at[site]) {
                    if (!satisfied(*c, next)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                descend(site + 1, next);
            }
            for (std::size_t j = 0; j < linear.size(); ++j) {
                partial[j] -= linear[j].c->coeffs[site] * z;
            }
        }
    };
    descend(0, 0);
    return SectorBasis(n_sites, std::move(found));
}

Mask Gf2Solution::complete(Mask assignment) const {
    Mask state = 0;
    for (int i : independent) {
        state |= assignment & (Mask{1} << i);
    }
    for (std::size_t r = 0; r < dependent.size(); ++r) {
        int bit = constants[r];
        for (int i : expressions[r]) {
            bit ^= static_cast<int>((state >> i) & 1);
        }
        state |= Mask(bit) << dependent[r];
    }
    return state;
}

Gf2Solution gf2_solve(std::span<const Constraint> parities) {
    require(!parities.empty(), "gf2_solve needs at least one parity constraint");
    const int n = parities.front().n_sites();

    struct Row {
        Mask vars;
        int rhs;
        int pivot;
    };
    std::vector<Row> rows;
    for (const auto &c : parities) {
        const auto *zp = std::get_if<ZParity>(&c.kind());
        require(zp != nullptr, "gf2_solve accepts parity constraints only");
        require(c.n_sites() == n, "parity constraints disagree on the site count");
        Row r{c.support(), zp->target == -1 ? 1 : 0, -1};
        for (const auto &p : rows) {
            if ((r.vars >> p.pivot) & 1) {
                r.vars ^= p.vars;
                r.rhs ^= p.rhs;
            }
        }
        if (r.vars == 0) {
            require(r.rhs == 0, "parity system is inconsistent", ErrorCode::infeasible);
            continue;
        }
        r.pivot = std::bit_width(r.vars) - 1;
        // Keep earlier rows free of the new pivot so the result is fully reduced.
        for (auto &p : rows) {
            if ((p.vars >> r.pivot) & 1) {
                p.vars ^= r.vars;
                p.rhs ^= r.rhs;
            }
        }
        rows.push_back(r);
    }

    Gf2Solution sol;
    sol.n_sites = n;
    Mask dependent_mask = 0;
    for (const auto &r : rows) {
        sol.dependent.push_back(r.pivot);
        sol.constants.push_back(r.rhs);
        std::vector<int> expr;
        Mask rest = r.vars & ~(Mask{1} << r.pivot);
        for (int i = 0; i < n; ++i) {
            if ((rest >> i) & 1) {
                expr.push_back(i);
            }
        }
        sol.expressions.push_back(std::move(expr));
        dependent_mask |= Mask{1} << r.pivot;
    }
    for (int i = 0; i < n; ++i) {
        if (!((dependent_mask >> i) & 1)) {
            sol.independent.push_back(i);
        }
    }
    return sol;
}

}  // namespace cqa
