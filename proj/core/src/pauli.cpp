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

#include "cqa/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cqa {

namespace {

constexpr std::size_t kDefaultMaxDim = 4096;

int popcount(Mask m) {
    return std::popcount(m);
}

Mask site_mask(int n_sites) {
    return n_sites >= 64 ? ~Mask{0} : ((Mask{1} << n_sites) - 1);
}

void check_sites(int n_sites) {
    require(n_sites >= 0 && n_sites <= kMaxSites, "site count must lie in [0, 64], got " + std::to_string(n_sites));
}

void check_same_size(int a, int b) {
    require(a == b, "site-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

std::size_t max_dense_dim() {
    const char *env = std::getenv("CQA_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxDim;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        return kDefaultMaxDim;
    }
    return static_cast<std::size_t>(v);
}

Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

PauliTerm PauliTerm::identity(int n_sites, Complex coeff) {
    check_sites(n_sites);
    return PauliTerm{n_sites, 0, 0, coeff};
}

PauliTerm PauliTerm::from_string(std::string_view paulis, Complex coeff) {
    PauliTerm t = identity(static_cast<int>(paulis.size()), coeff);
    for (std::size_t k = 0; k < paulis.size(); ++k) {
        Mask bit = Mask{1} << k;
        switch (paulis[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                t.x |= bit;
                break;
            case 'Y':
                t.x |= bit;
                t.z |= bit;
                break;
            case 'Z':
                t.z |= bit;
                break;
            default:
                throw Error(ErrorCode::invalid_argument, std::string("unknown Pauli letter '") + paulis[k] + "'");
        }
    }
    return t;
}

PauliTerm PauliTerm::on_sites(int n_sites, std::span<const int> sites, std::string_view paulis, Complex coeff) {
    require(sites.size() == paulis.size(), "site list and Pauli letters differ in length");
    check_sites(n_sites);
    std::string full(static_cast<std::size_t>(n_sites), 'I');
    for (std::size_t k = 0; k < sites.size(); ++k) {
        int s = sites[k];
        require(s >= 0 && s < n_sites, "site " + std::to_string(s) + " out of range");
        require(full[s] == 'I', "site " + std::to_string(s) + " listed twice");
        full[s] = paulis[k];
    }
    return from_string(full, coeff);
}

int PauliTerm::weight() const {
    return popcount(support());
}

char PauliTerm::pauli_at(int site) const {
    bool xb = (x >> site) & 1;
    bool zb = (z >> site) & 1;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

std::string PauliTerm::paulis() const {
    std::string out(static_cast<std::size_t>(n_sites), 'I');
    for (int k = 0; k < n_sites; ++k) {
        out[k] = pauli_at(k);
    }
    return out;
}

Complex PauliTerm::string_amplitude(Mask state) const {
    // S(x,z) = i^{|x&z|} X^x Z^z
    int k = popcount(x & z) + 2 * popcount(z & state);
    return i_pow(k);
}

PauliTerm multiply(const PauliTerm &a, const PauliTerm &b) {
    check_same_size(a.n_sites, b.n_sites);
    PauliTerm out{a.n_sites, a.x ^ b.x, a.z ^ b.z, a.coeff * b.coeff};
    int k = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) - popcount(out.x & out.z);
    out.coeff *= i_pow(k);
    return out;
}

bool commutes(const PauliTerm &a, const PauliTerm &b) {
    check_same_size(a.n_sites, b.n_sites);
    return (popcount((a.x & b.z) ^ (a.z & b.x)) & 1) == 0;
}

Hamiltonian::Hamiltonian(int n_sites) : n_sites_(n_sites) {
    check_sites(n_sites);
}

Hamiltonian::Hamiltonian(int n_sites, std::vector<PauliTerm> terms) : n_sites_(n_sites), terms_(std::move(terms)) {
    check_sites(n_sites);
    Mask allowed = site_mask(n_sites);
    for (const auto &t : terms_) {
        check_same_size(n_sites, t.n_sites);
        require(((t.x | t.z) & ~allowed) == 0, "Pauli masks set bits beyond n_sites");
    }
    canonicalize();
}

Hamiltonian Hamiltonian::identity(int n_sites, Complex coeff) {
    return Hamiltonian(n_sites, {PauliTerm::identity(n_sites, coeff)});
}

void Hamiltonian::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm &a, const PauliTerm &b) {
        return a.x != b.x ? a.x < b.x : a.z < b.z;
    });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (const auto &t : terms_) {
        if (!merged.empty() && merged.back().same_string(t)) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const PauliTerm &t) { return std::abs(t.coeff) < kMergeTolerance; });
    terms_ = std::move(merged);
}

Complex Hamiltonian::coeff(Mask x, Mask z) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{x, z}, [](const PauliTerm &t, auto key) {
        return t.x != key.first ? t.x < key.first : t.z < key.second;
    });
    if (it != terms_.end() && it->x == x && it->z == z) {
        return it->coeff;
    }
    return 0.0;
}

Hamiltonian Hamiltonian::adjoint() const {
    Hamiltonian out = *this;
    for (auto &t : out.terms_) {
        t.coeff = std::conj(t.coeff);
    }
    return out;
}

bool Hamiltonian::is_hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliTerm &t) { return std::abs(t.coeff.imag()) <= tol; });
}

bool Hamiltonian::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) { return t.is_diagonal(); });
}

int Hamiltonian::max_support() const {
    int best = 0;
    for (const auto &t : terms_) {
        best = std::max(best, t.weight());
    }
    return best;
}

Complex Hamiltonian::diagonal_element(Mask state) const {
    Complex sum = 0.0;
    for (const auto &t : terms_) {
        if (t.x == 0) {
            sum += t.coeff * t.string_amplitude(state);
        }
    }
    return sum;
}

double Hamiltonian::frobenius_norm() const {
    double sq = 0.0;
    for (const auto &t : terms_) {
        sq += std::norm(t.coeff);
    }
    return std::sqrt(std::ldexp(sq, n_sites_));
}

Hamiltonian &Hamiltonian::operator+=(const Hamiltonian &other) {
    check_same_size(n_sites_, other.n_sites_);
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
}

Hamiltonian &Hamiltonian::operator-=(const Hamiltonian &other) {
    return *this += other * Complex{-1.0};
}

Hamiltonian &Hamiltonian::operator*=(Complex scale) {
    for (auto &t : terms_) {
        t.coeff *= scale;
    }
    canonicalize();
    return *this;
}

Hamiltonian operator*(const Hamiltonian &a, const Hamiltonian &b) {
    check_same_size(a.n_sites_, b.n_sites_);
    std::vector<PauliTerm> out;
    out.reserve(a.size() * b.size());
    for (const auto &ta : a.terms_) {
        for (const auto &tb : b.terms_) {
            out.push_back(multiply(ta, tb));
        }
    }
    return Hamiltonian(a.n_sites_, std::move(out));
}

Hamiltonian transition(int n_sites, std::span<const int> sites, unsigned to_bits, unsigned from_bits) {
    Hamiltonian out = Hamiltonian::identity(n_sites);
    for (std::size_t k = 0; k < sites.size(); ++k) {
        int s = sites[k];
        require(s >= 0 && s < n_sites, "site " + std::to_string(s) + " out of range");
        bool to = (to_bits >> k) & 1;
        bool from = (from_bits >> k) & 1;
        const int one[] = {s};
        Hamiltonian local(n_sites);
        if (to == from) {
            // |0><0| = (I + Z)/2, |1><1| = (I - Z)/2
            local = Hamiltonian(n_sites, {PauliTerm::identity(n_sites, 0.5),
                                          PauliTerm::on_sites(n_sites, one, "Z", to ? -0.5 : 0.5)});
        } else {
            // |0><1| = (X + iY)/2, |1><0| = (X - iY)/2
            local = Hamiltonian(n_sites, {PauliTerm::on_sites(n_sites, one, "X", 0.5),
                                          PauliTerm::on_sites(n_sites, one, "Y", Complex{0.0, to ? -0.5 : 0.5})});
        }
        out = out * local;
    }
    return out;
}

Hamiltonian commutator(const Hamiltonian &a, const Hamiltonian &b) {
    check_same_size(a.n_sites(), b.n_sites());
    std::vector<PauliTerm> out;
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            if (!commutes(ta, tb)) {
                PauliTerm p = multiply(ta, tb);
                p.coeff *= 2.0;
                out.push_back(p);
            }
        }
    }
    return Hamiltonian(a.n_sites(), std::move(out));
}

double commutator_norm(const Hamiltonian &a, const Hamiltonian &b) {
    return commutator(a, b).frobenius_norm();
}

std::size_t checked_dense_dim(int n_sites) {
    std::size_t limit = max_dense_dim();
    bool ok = n_sites < 63 && (std::size_t{1} << n_sites) <= limit;
    require(ok, "dimension 2^" + std::to_string(n_sites) + " exceeds the dense limit " + std::to_string(limit),
            ErrorCode::dimension_limit);
    return std::size_t{1} << n_sites;
}

Eigen::MatrixXcd to_matrix(const Hamiltonian &h) {
    const auto dim = static_cast<Eigen::Index>(checked_dense_dim(h.n_sites()));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        for (Eigen::Index u = 0; u < dim; ++u) {
            Mask state = static_cast<Mask>(u);
            m(static_cast<Eigen::Index>(state ^ t.x), u) += t.coeff * t.string_amplitude(state);
        }
    }
    return m;
}

std::vector<std::pair<Mask, Complex>> column(const Hamiltonian &h, Mask state, double tol) {
    std::vector<std::pair<Mask, Complex>> out;
    auto terms = h.terms();
    for (std::size_t i = 0; i < terms.size();) {
        Mask x = terms[i].x;
        Complex amp = 0.0;
        for (; i < terms.size() && terms[i].x == x; ++i) {
            amp += terms[i].coeff * terms[i].string_amplitude(state);
        }
        if (std::abs(amp) > tol) {
            out.emplace_back(state ^ x, amp);
        }
    }
    return out;
}

Eigen::VectorXcd apply(const Hamiltonian &h, const Eigen::VectorXcd &psi) {
    require(h.n_sites() < 40, "matrix-free application limited to fewer than 40 sites", ErrorCode::dimension_limit);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_sites());
    require(psi.size() == dim, "state dimension does not match the Hamiltonian");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (const auto &t : h.terms()) {
        for (Eigen::Index u = 0; u < dim; ++u) {
            if (psi[u] == Complex{0.0}) {
                continue;
            }
            Mask state = static_cast<Mask>(u);
            out[static_cast<Eigen::Index>(state ^ t.x)] += t.coeff * t.string_amplitude(state) * psi[u];
        }
    }
    return out;
}

}  // namespace cqa
