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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cqa/errors.hpp"

namespace cqa {

using Complex = std::complex<double>;

/// Bit k refers to site k. For basis states, bit 0 is spin up (sigma^z = +1)
/// and bit 1 is spin down (sigma^z = -1).
using Mask = std::uint64_t;

inline constexpr int kMaxSites = 64;

/// Coefficients with magnitude below this are dropped when terms are merged.
inline constexpr double kMergeTolerance = 1e-14;

/// Largest Hilbert-space dimension realized as a dense matrix. The
/// CQA_MAX_DIM environment variable overrides the default of 4096.
std::size_t max_dense_dim();

/// i^k for integer k (any sign), computed exactly.
Complex i_pow(int k);

/// A weighted Pauli string coeff * P_0 (x) P_1 (x) ... on n_sites sites.
///
/// Site k carries I, X, Z or Y according to (x bit, z bit) = (0,0), (1,0),
/// (0,1), (1,1). A (1,1) site is the Hermitian Y = iXZ; the phase needed to
/// relate products to that convention is tracked as an integer power of i and
/// folded into coeff, so the string itself is always Hermitian.
struct PauliTerm {
    int n_sites = 0;
    Mask x = 0;
    Mask z = 0;
    Complex coeff{1.0, 0.0};

    static PauliTerm identity(int n_sites, Complex coeff = 1.0);
    /// Parses one character per site ("IXYZ", '_' also means identity).
    static PauliTerm from_string(std::string_view paulis, Complex coeff = 1.0);
    /// Places the given Pauli letters on the listed sites.
    static PauliTerm on_sites(int n_sites, std::span<const int> sites, std::string_view paulis, Complex coeff = 1.0);

    Mask support() const {
        return x | z;
    }
    int weight() const;
    char pauli_at(int site) const;
    std::string paulis() const;
    bool is_diagonal() const {
        return x == 0;
    }

    /// Amplitude a with P|state> = a |state ^ x>, excluding coeff.
    Complex string_amplitude(Mask state) const;

    bool same_string(const PauliTerm &other) const {
        return x == other.x && z == other.z;
    }

    bool operator==(const PauliTerm &) const = default;
};

/// Operator product a*b with exact phase tracking. Masks combine by XOR.
PauliTerm multiply(const PauliTerm &a, const PauliTerm &b);

/// True iff the strings commute: <a.x, b.z> + <a.z, b.x> = 0 (mod 2).
bool commutes(const PauliTerm &a, const PauliTerm &b);

/// A weighted sum of Pauli strings in canonical form: terms sorted by
/// (x, z), no repeated strings, negligible coefficients removed.
class Hamiltonian {
   public:
    explicit Hamiltonian(int n_sites = 0);
    Hamiltonian(int n_sites, std::vector<PauliTerm> terms);

    static Hamiltonian identity(int n_sites, Complex coeff = 1.0);

    int n_sites() const {
        return n_sites_;
    }
    std::span<const PauliTerm> terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Coefficient of the string (x, z), zero if absent.
    Complex coeff(Mask x, Mask z) const;

    Hamiltonian adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool is_diagonal() const;
    /// Largest number of sites touched by any one term (0 for an empty sum).
    int max_support() const;

    /// <state|H|state>, summing only the diagonal strings.
    Complex diagonal_element(Mask state) const;

    /// Frobenius norm of the matrix realization, computed from coefficients.
    double frobenius_norm() const;

    Hamiltonian &operator+=(const Hamiltonian &other);
    Hamiltonian &operator-=(const Hamiltonian &other);
    Hamiltonian &operator*=(Complex scale);

    friend Hamiltonian operator+(Hamiltonian a, const Hamiltonian &b) {
        return a += b;
    }
    friend Hamiltonian operator-(Hamiltonian a, const Hamiltonian &b) {
        return a -= b;
    }
    friend Hamiltonian operator*(Hamiltonian a, Complex s) {
        return a *= s;
    }
    friend Hamiltonian operator*(Complex s, Hamiltonian a) {
        return a *= s;
    }
    friend Hamiltonian operator*(const Hamiltonian &a, const Hamiltonian &b);

    bool operator==(const Hamiltonian &other) const = default;

   private:
    void canonicalize();

    int n_sites_ = 0;
    std::vector<PauliTerm> terms_;
};

/// |to><from| on the listed sites (bit k of to/from refers to sites[k]),
/// expanded into Pauli strings.
Hamiltonian transition(int n_sites, std::span<const int> sites, unsigned to_bits, unsigned from_bits);

/// AB - BA evaluated in the Pauli algebra.
Hamiltonian commutator(const Hamiltonian &a, const Hamiltonian &b);

/// Frobenius norm of AB - BA. Zero (to rounding) iff the operators commute.
double commutator_norm(const Hamiltonian &a, const Hamiltonian &b);

/// Dense 2^n x 2^n realization. Row/column index is the basis bitstring.
Eigen::MatrixXcd to_matrix(const Hamiltonian &h);

/// One matrix column of H: the pairs (state ^ x, <state ^ x|H|state>) for
/// every distinct x mask, with strings sharing an x mask summed first.
/// Entries with |amplitude| <= tol are skipped.
std::vector<std::pair<Mask, Complex>> column(const Hamiltonian &h, Mask state, double tol = 0.0);

/// Matrix-free H|psi> over the full 2^n space.
Eigen::VectorXcd apply(const Hamiltonian &h, const Eigen::VectorXcd &psi);

/// The Hilbert-space dimension 2^n, rejecting values above max_dense_dim().
std::size_t checked_dense_dim(int n_sites);

}  // namespace cqa
