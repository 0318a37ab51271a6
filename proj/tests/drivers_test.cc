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

#include <numeric>

#include "gtest/gtest.h"

#include "cqa/encodings.hpp"
#include "cqa/spectral.hpp"
#include "oracles.hpp"

using namespace cqa;

namespace {

std::vector<int> ring(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

double max_commutator(const Hamiltonian &h, std::span<const Constraint> cs) {
    double worst = 0.0;
    for (const auto &c : cs) {
        worst = std::max(worst, commutator_norm(h, constraint_as_hamiltonian(c)));
    }
    return worst;
}

}  // namespace

TEST(driver_family, names_round_trip) {
    for (auto f : {DriverFamily::transverse, DriverFamily::xy_cycle, DriverFamily::gi_row_xy, DriverFamily::gi_fourbody,
                   DriverFamily::nae_clause, DriverFamily::lhz_twoflip, DriverFamily::lhz_gf2}) {
        ASSERT_EQ(driver_family_from_string(to_string(f)), f);
    }
    ASSERT_THROW(driver_family_from_string("heisenberg"), Error);
}

TEST(xy_cycle, commutes_with_magnetization) {
    for (int n : {3, 4, 6, 8}) {
        auto sites = ring(n);
        Hamiltonian h = build_xy_cycle(n, sites);
        ASSERT_TRUE(h.is_hermitian());
        ASSERT_EQ(h.size(), static_cast<std::size_t>(2 * n));
        const Constraint c[] = {Constraint::magnetization(n, sites, n % 2)};
        ASSERT_LT(max_commutator(h, c), 1e-12);
        if (n <= 6) {
            ASSERT_LT(oracle::dense_commutator_norm(h, constraint_as_hamiltonian(c[0])), 1e-12);
        }
    }
    ASSERT_THROW(build_xy_cycle(4, std::vector<int>{0, 1}), Error);
    ASSERT_THROW(build_xy_cycle(4, std::vector<int>{0, 1, 1}), Error);
}

TEST(transverse, anticommutes_with_field) {
    Hamiltonian h = build_transverse(4);
    const Constraint c[] = {Constraint::magnetization(4, ring(4), 0)};
    ASSERT_GT(max_commutator(h, c), 1.0);
    ASSERT_NEAR(max_commutator(h, c), oracle::dense_commutator_norm(h, constraint_as_hamiltonian(c[0])), 1e-12);
}

TEST(aux_field, selects_requested_sector) {
    const int n = 6;
    auto sites = ring(n);
    Hamiltonian xy = build_xy_cycle(n, sites);
    for (int m = -n; m <= n; m += 2) {
        auto res = find_aux_field(n, m);
        ASSERT_TRUE(res.B.has_value()) << "M=" << m;
        ASSERT_GT(*res.B, res.lower);
        ASSERT_LT(*res.B, res.upper);
        const Constraint c[] = {Constraint::magnetization(n, sites, m)};
        const double B[] = {*res.B};
        auto gs = ground_states(xy + build_aux(c, B), 1);
        ASSERT_EQ(gs.multiplicity, 1);
        Eigen::MatrixXcd mz = oracle::dense(constraint_as_hamiltonian(c[0]));
        Eigen::VectorXcd v = gs.vectors.col(0);
        ASSERT_NEAR(v.dot(mz * v).real(), m, 1e-9);
    }
    auto zero = find_aux_field(4, 0);
    ASSERT_NEAR(*zero.B, 0.0, 1e-12);
    auto full = find_aux_field(4, 4);
    ASSERT_TRUE(full.upper_unbounded);
    ASSERT_NEAR(*full.B, full.lower + 1.0, 1e-12);
    ASSERT_NEAR(full.lower, 2.0, 1e-12);
}

TEST(gi_drivers, conserve_rows_and_columns) {
    for (int n : {3, 4}) {
        auto cs = gi_constraints(n);
        ASSERT_LT(max_commutator(build_gi_fourbody(n), cs), 1e-12);
        std::vector<Constraint> rows(cs.begin(), cs.begin() + n);
        Hamiltonian rx = build_gi_row_xy(n);
        ASSERT_LT(max_commutator(rx, rows), 1e-12);
        ASSERT_GT(max_commutator(rx, cs), 1e-3);
    }
    ASSERT_THROW(build_gi_fourbody(2), Error);
    ASSERT_EQ(gi_fourbody_generators(3).size(), 9u);
    ASSERT_EQ(gi_fourbody_generators(4).size(), 24u);
}

TEST(gi_drivers, fourbody_ground_is_uniform_on_permutations) {
    auto cs = gi_constraints(3);
    auto sector = sector_basis(cs, 9);
    ASSERT_EQ(sector.size(), 6u);
    auto g = sector_ground(build_gi_fourbody(3), sector);
    ASSERT_EQ(g.multiplicity, 1);
    for (Eigen::Index i = 0; i < g.state.size(); ++i) {
        ASSERT_NEAR(std::abs(g.state[i]), 1.0 / std::sqrt(6.0), 1e-12);
    }
}

TEST(nae_driver, single_clause_ground) {
    const Constraint c[] = {Constraint::clause(3, {0, 1, 2}, 0)};
    Hamiltonian h = build_nae_driver(c, 3);
    ASSERT_LT(max_commutator(h, c), 1e-12);
    auto d = oracle::dense(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d);
    ASSERT_NEAR(es.eigenvalues()[0], -5.0, 1e-12);
    ASSERT_GT(es.eigenvalues()[1], -5.0 + 1e-6);
    Eigen::VectorXcd v = es.eigenvectors().col(0);
    v *= std::conj(v[1]) / std::abs(v[1]);
    for (Mask u = 0; u < 8; ++u) {
        double expect = (u == 0 || u == 7) ? 0.0 : 1.0 / std::sqrt(6.0);
        ASSERT_NEAR(std::abs(v[static_cast<Eigen::Index>(u)] - expect), 0.0, 1e-12);
    }
}

TEST(nae_driver, disjoint_clauses_required) {
    const Constraint overlap[] = {Constraint::clause(5, {0, 1, 2}, 0), Constraint::clause(5, {2, 3, 4}, 0)};
    ASSERT_THROW(build_nae_driver(overlap, 5), Error);
    const Constraint ok[] = {Constraint::clause(7, {0, 1, 2}, 1), Constraint::clause(7, {3, 4, 5}, 6)};
    Hamiltonian h = build_nae_driver(ok, 7);
    ASSERT_LT(max_commutator(h, ok), 1e-12);
}

TEST(lhz_twoflip, commutes_with_cycle_parity) {
    for (int len : {3, 4, 5}) {
        auto cycle = ring(len);
        Hamiltonian h = build_lhz_twoflip(len, cycle);
        const Constraint c[] = {Constraint::z_parity(len, cycle)};
        ASSERT_LT(max_commutator(h, c), 1e-12);
    }
    std::vector<std::vector<int>> cycles = {{0, 1, 2}, {3, 4, 5, 6}};
    Hamiltonian total = build_lhz_twoflip_total(8, cycles);
    const Constraint cs[] = {Constraint::z_parity(8, cycles[0]), Constraint::z_parity(8, cycles[1])};
    ASSERT_LT(max_commutator(total, cs), 1e-12);
    std::vector<std::vector<int>> overlapping = {{0, 1, 2}, {2, 3, 4}};
    ASSERT_THROW(build_lhz_twoflip_total(5, overlapping), Error);
}

TEST(lhz_gf2, terms_commute_with_all_parities) {
    auto inst = lhz_plaquette_instance(5, std::vector<double>(10, 1.0));
    std::vector<Constraint> cs;
    for (const auto &cycle : inst.cycles) {
        cs.push_back(Constraint::z_parity(10, cycle));
    }
    auto sol = gf2_solve(cs);
    ASSERT_EQ(sol.rank(), static_cast<int>(inst.cycles.size()));
    Hamiltonian h = build_lhz_gf2_driver(sol);
    ASSERT_LT(max_commutator(h, cs), 1e-12);
    auto terms = lhz_gf2_terms(sol, {});
    ASSERT_EQ(terms.size(), sol.independent.size());
    ASSERT_TRUE(check_term_independence(terms).independent);
}

TEST(term_independence, detects_dependent_sets) {
    std::vector<PauliTerm> terms = {PauliTerm::from_string("XXI"), PauliTerm::from_string("IXX"),
                                    PauliTerm::from_string("XIX")};
    auto r = check_term_independence(terms);
    ASSERT_FALSE(r.independent);
    ASSERT_EQ(r.rank, 2);
    std::vector<PauliTerm> withz = {PauliTerm::from_string("XZ")};
    ASSERT_THROW(check_term_independence(withz), Error);
}
