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

#include "cqa/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Sparse>

#include "cqa/drivers.hpp"
#include "cqa/spectral.hpp"

namespace cqa {

namespace {

using SpMat = Eigen::SparseMatrix<Complex>;

// Dense eigendecomposition per step up to this dimension, Taylor series above.
constexpr Eigen::Index kDenseStepDim = 256;
constexpr double kLeaveTolerance = 1e-12;
constexpr double kNormTolerance = 1e-10;
constexpr std::size_t kMaxStepsPerCheckpoint = std::size_t{1} << 24;

SpMat sparse_full(const Hamiltonian &h) {
    const auto dim = static_cast<Eigen::Index>(checked_dense_dim(h.n_sites()));
    std::vector<Eigen::Triplet<Complex>> trips;
    for (Eigen::Index u = 0; u < dim; ++u) {
        for (auto [v, amp] : column(h, static_cast<Mask>(u), 0.0)) {
            trips.emplace_back(static_cast<Eigen::Index>(v), u, amp);
        }
    }
    SpMat m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

SpMat sparse_sector(const Hamiltonian &h, const SectorBasis &sector) {
    require(h.n_sites() == sector.n_sites(), "sector and Hamiltonian disagree on the site count");
    require(sector.feasible(), "cannot evolve in an empty sector", ErrorCode::infeasible);
    require(sector.size() <= max_dense_dim(),
            "sector dimension " + std::to_string(sector.size()) + " exceeds the dense limit",
            ErrorCode::dimension_limit);
    const auto dim = static_cast<Eigen::Index>(sector.size());
    std::vector<Eigen::Triplet<Complex>> trips;
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (auto [v, amp] : column(h, sector.state(static_cast<std::size_t>(a)), 0.0)) {
            auto b = sector.index_of(v);
            if (!b) {
                require(std::abs(amp) <= kLeaveTolerance, "operator maps a sector state outside the sector",
                        ErrorCode::closure_violation);
                continue;
            }
            trips.emplace_back(static_cast<Eigen::Index>(*b), a, amp);
        }
    }
    SpMat m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

double coefficient_norm(const Hamiltonian &h) {
    double sum = 0.0;
    for (const auto &t : h.terms()) {
        sum += std::abs(t.coeff);
    }
    return sum;
}

// Ground eigenspace of H_p: a list of basis indices when H_p is diagonal,
// orthonormal columns otherwise.
struct GroundSpace {
    std::vector<Eigen::Index> indices;
    Eigen::MatrixXcd vectors;
    bool diagonal = true;
    int multiplicity = 0;

    double weight(const Eigen::VectorXcd &psi) const {
        if (diagonal) {
            double w = 0.0;
            for (auto i : indices) {
                w += std::norm(psi[i]);
            }
            return w;
        }
        return (vectors.adjoint() * psi).squaredNorm();
    }
};

GroundSpace ground_space(const Hamiltonian &hp, const SpMat &p) {
    GroundSpace g;
    if (hp.is_diagonal()) {
        Eigen::VectorXd d = Eigen::VectorXd(p.diagonal().real());
        double e0 = d.minCoeff();
        double tol = degeneracy_tolerance(e0);
        for (Eigen::Index i = 0; i < d.size(); ++i) {
            if (d[i] <= e0 + tol) {
                g.indices.push_back(i);
            }
        }
        g.multiplicity = static_cast<int>(g.indices.size());
        return g;
    }
    g.diagonal = false;
    GroundStates gs = ground_states(Eigen::MatrixXcd(p), 1);
    g.multiplicity = gs.multiplicity;
    g.vectors = gs.vectors.leftCols(gs.multiplicity);
    return g;
}

// Smallest multiple of the checkpoint count meeting the drift bound.
std::size_t steps_per_checkpoint(const Schedule &sched, double drift_norm) {
    const double T = sched.total_time;
    const auto C = static_cast<std::size_t>(sched.checkpoints);
    if (drift_norm == 0.0) {
        return 1;
    }
    auto max_drift = [&](std::size_t m) {
        const std::size_t K = C * m;
        const double dt = T / static_cast<double>(K);
        double worst = 0.0;
        double prev = 0.0;
        for (std::size_t k = 1; k <= K; ++k) {
            double s = sched.s_at(dt * static_cast<double>(k));
            worst = std::max(worst, std::abs(s - prev));
            prev = s;
        }
        return worst * drift_norm * dt;
    };
    auto m = static_cast<std::size_t>(
        std::max(1.0, std::ceil(std::sqrt(drift_norm * T / sched.drift_tolerance) / static_cast<double>(C))));
    while (max_drift(m) >= sched.drift_tolerance) {
        require(m < kMaxStepsPerCheckpoint, "schedule needs too many steps", ErrorCode::dimension_limit);
        m *= 2;
    }
    return m;
}

struct Engine {
    SpMat p;
    SpMat d;
    double norm_p = 0.0;
    double norm_d = 0.0;
    Eigen::MatrixXcd dense_p;
    Eigen::MatrixXcd dense_d;

    bool dense() const {
        return p.rows() <= kDenseStepDim;
    }

    Eigen::VectorXcd apply(double s, const Eigen::VectorXcd &psi) const {
        return s * (p * psi) + (1.0 - s) * (d * psi);
    }

    double energy(double s, const Eigen::VectorXcd &psi) const {
        return psi.dot(apply(s, psi)).real();
    }

    void step(double s, double dt, Eigen::VectorXcd &psi) const {
        if (dense()) {
            EigenSystem es = eigh(s * dense_p + (1.0 - s) * dense_d);
            Eigen::VectorXcd c = es.vectors.adjoint() * psi;
            for (Eigen::Index i = 0; i < c.size(); ++i) {
                c[i] *= std::exp(Complex{0.0, -es.values[i] * dt});
            }
            psi = es.vectors * c;
            return;
        }
        const double bound = s * norm_p + (1.0 - s) * norm_d;
        const int sub = std::max(1, static_cast<int>(std::ceil(bound * dt / 0.5)));
        const double h = dt / sub;
        for (int r = 0; r < sub; ++r) {
            Eigen::VectorXcd term = psi;
            Eigen::VectorXcd acc = psi;
            for (int k = 1; k <= 64; ++k) {
                term = apply(s, term) * Complex{0.0, -h / k};
                acc += term;
                if (term.norm() <= 1e-17 * acc.norm()) {
                    break;
                }
            }
            psi = std::move(acc);
        }
    }
};

AnnealResult run(const Engine &eng, const GroundSpace &ground, const Eigen::VectorXcd &psi0,
                 const Schedule &sched, const std::vector<char> *outside, double drift_norm) {
    sched.validate();
    require(psi0.size() == eng.p.rows(), "initial state dimension does not match the Hamiltonians");
    require(std::abs(psi0.norm() - 1.0) < kNormTolerance, "initial state is not normalized");
    AnnealResult res;
    res.ground_multiplicity = ground.multiplicity;
    Eigen::VectorXcd psi = psi0;
    auto checkpoint = [&](double t, double s) {
        Checkpoint c;
        c.t = t;
        c.s = s;
        c.energy = eng.energy(s, psi);
        c.norm = psi.norm();
        if (outside) {
            double w = 0.0;
            for (Eigen::Index i = 0; i < psi.size(); ++i) {
                if ((*outside)[static_cast<std::size_t>(i)]) {
                    w += std::norm(psi[i]);
                }
            }
            c.leakage = w;
        }
        res.max_leakage = std::max(res.max_leakage, c.leakage);
        res.checkpoints.push_back(c);
        res.checkpoint_states.push_back(psi);
    };
    const double T = sched.total_time;
    checkpoint(0.0, 0.0);
    if (T == 0.0) {
        // Sudden limit: the state is unchanged while H jumps from H_d to H_p.
        checkpoint(0.0, 1.0);
    } else {
        const std::size_t m = steps_per_checkpoint(sched, drift_norm);
        const std::size_t C = static_cast<std::size_t>(sched.checkpoints);
        const std::size_t K = C * m;
        const double dt = T / static_cast<double>(K);
        for (std::size_t k = 0; k < K; ++k) {
            double s_mid = sched.s_at(dt * (static_cast<double>(k) + 0.5));
            eng.step(s_mid, dt, psi);
            if ((k + 1) % m == 0) {
                double t = dt * static_cast<double>(k + 1);
                checkpoint(t, sched.s_at(t));
            }
        }
        res.steps = K;
    }
    res.final_state = psi;
    res.overlap = ground.weight(psi);
    return res;
}

Engine make_engine(SpMat p, SpMat d, const Hamiltonian &hp, const Hamiltonian &hd) {
    Engine eng{std::move(p), std::move(d), coefficient_norm(hp), coefficient_norm(hd), {}, {}};
    if (eng.dense()) {
        eng.dense_p = Eigen::MatrixXcd(eng.p);
        eng.dense_d = Eigen::MatrixXcd(eng.d);
    }
    return eng;
}

void fix_phase(Eigen::VectorXcd &v) {
    Eigen::Index best = 0;
    v.cwiseAbs().maxCoeff(&best);
    v *= std::conj(v[best]) / std::abs(v[best]);
    v /= v.norm();
}

std::vector<int> charges(std::span<const Constraint> cs, Mask state) {
    std::vector<int> out;
    out.reserve(cs.size());
    for (const auto &c : cs) {
        out.push_back(eval_constraint(c, state));
    }
    return out;
}

}  // namespace

double Schedule::s_at(double t) const {
    if (total_time == 0.0) {
        return t > 0.0 ? 1.0 : 0.0;
    }
    double u = std::clamp(t / total_time, 0.0, 1.0);
    return shape ? shape(u) : u;
}

void Schedule::validate() const {
    require(std::isfinite(total_time) && total_time >= 0.0, "total time must be finite and non-negative");
    require(drift_tolerance > 0.0, "drift tolerance must be positive");
    require(checkpoints >= 1, "at least one checkpoint is required");
    if (!shape) {
        return;
    }
    require(std::abs(shape(0.0)) < 1e-12 && std::abs(shape(1.0) - 1.0) < 1e-12, "schedule must run from 0 to 1");
    double prev = shape(0.0);
    for (int k = 1; k <= 4096; ++k) {
        double s = shape(k / 4096.0);
        require(s >= prev - 1e-15, "schedule must be non-decreasing");
        prev = s;
    }
}

AnnealResult evolve(const Hamiltonian &hp, const Hamiltonian &hd, const Eigen::VectorXcd &psi0,
                    const Schedule &sched, const SectorBasis *monitor) {
    require(hp.n_sites() == hd.n_sites(), "H_p and H_d have different numbers of sites");
    Engine eng = make_engine(sparse_full(hp), sparse_full(hd), hp, hd);
    GroundSpace ground = ground_space(hp, eng.p);
    std::vector<char> outside;
    if (monitor) {
        require(monitor->n_sites() == hp.n_sites(), "monitored sector has a different number of sites");
        outside.assign(static_cast<std::size_t>(eng.p.rows()), 1);
        for (Mask u : monitor->states()) {
            outside[static_cast<std::size_t>(u)] = 0;
        }
    }
    return run(eng, ground, psi0, sched, monitor ? &outside : nullptr, coefficient_norm(hp - hd));
}

AnnealResult evolve_in_sector(const Hamiltonian &hp, const Hamiltonian &hd, const Eigen::VectorXcd &psi0_local,
                              const Schedule &sched, const SectorBasis &sector) {
    require(hp.n_sites() == hd.n_sites(), "H_p and H_d have different numbers of sites");
    Engine eng = make_engine(sparse_sector(hp, sector), sparse_sector(hd, sector), hp, hd);
    GroundSpace ground = ground_space(hp, eng.p);
    AnnealResult res = run(eng, ground, psi0_local, sched, nullptr, coefficient_norm(hp - hd));
    res.sector = sector;
    return res;
}

std::vector<double> leakage_trace(const AnnealResult &result, std::span<const Constraint> constraints,
                                  const SectorBasis &psi0_sector) {
    require(psi0_sector.feasible(), "reference sector is empty", ErrorCode::infeasible);
    const auto ref = charges(constraints, psi0_sector.state(0));
    for (Mask u : psi0_sector.states()) {
        require(charges(constraints, u) == ref, "reference sector mixes constraint values");
    }
    std::vector<double> trace;
    for (const auto &psi : result.checkpoint_states) {
        double w = 0.0;
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
            Mask u = result.sector ? result.sector->state(static_cast<std::size_t>(i)) : static_cast<Mask>(i);
            if (charges(constraints, u) != ref) {
                w += std::norm(psi[i]);
            }
        }
        trace.push_back(w);
    }
    return trace;
}

double leakage(const AnnealResult &result, std::span<const Constraint> constraints, const SectorBasis &psi0_sector) {
    auto trace = leakage_trace(result, constraints, psi0_sector);
    return trace.empty() ? 0.0 : *std::max_element(trace.begin(), trace.end());
}

Eigen::VectorXcd prepare_initial(const Hamiltonian &hd, const PrepareMode &mode) {
    Eigen::VectorXcd psi;
    if (std::holds_alternative<GlobalGround>(mode)) {
        GroundStates gs = ground_states(hd, 1);
        require(gs.multiplicity == 1,
                "driver ground state is " + std::to_string(gs.multiplicity) + "-fold degenerate; pick a sector",
                ErrorCode::degenerate);
        psi = gs.vectors.col(0);
    } else if (const auto *sg = std::get_if<SectorGroundMode>(&mode)) {
        SectorGround g = sector_ground(hd, sg->sector);
        require(g.multiplicity == 1,
                "sector ground state is " + std::to_string(g.multiplicity) + "-fold degenerate",
                ErrorCode::degenerate);
        psi = embed(sg->sector, g.state);
    } else {
        const auto &aux = std::get<AuxAssisted>(mode);
        GroundStates gs = ground_states(hd + build_aux(aux.constraints, aux.B), 1);
        require(gs.multiplicity == 1,
                "aux-assisted ground state is " + std::to_string(gs.multiplicity) + "-fold degenerate",
                ErrorCode::degenerate);
        psi = gs.vectors.col(0);
        double inside = 0.0;
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
            bool ok = std::all_of(aux.constraints.begin(), aux.constraints.end(),
                                  [&](const Constraint &c) { return satisfied(c, static_cast<Mask>(i)); });
            if (ok) {
                inside += std::norm(psi[i]);
            }
        }
        require(inside > 1.0 - 1e-8, "aux field selects a ground state outside the constrained sector",
                ErrorCode::wrong_sector);
    }
    fix_phase(psi);
    return psi;
}

}  // namespace cqa
