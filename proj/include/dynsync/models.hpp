// models.hpp — the two chain models (spin-1 XXZ with quadratic dephasing,
// charge-dephased Hubbard), their analytic steady states, dynamical-symmetry
// operators and initial states.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dynsync/hilbert.hpp"

namespace dynsync {

// ---------------------------------- spin-1 ----------------------------------

// Local basis order (↑, 0, ↓): S^z = diag(1, 0, −1), S^+|↓⟩ = √2|0⟩,
// S^+|0⟩ = √2|↑⟩.
DenseMatrix spin1_sz();
DenseMatrix spin1_sp();
DenseMatrix spin1_sm();
DenseMatrix spin1_sx();
DenseMatrix spin1_sy();

struct SpinChainParams {
    int n_sites = 0;
    std::vector<double> omegas;     // natural frequency per site, units of J
    double hopping = 1.0;           // J, the energy unit
    double anisotropy = 0.0;        // Δ
    double dephasing_rate = 0.0;    // γ ≥ 0

    static SpinChainParams homogeneous(int n_sites, double omega, double anisotropy,
                                       double dephasing_rate);
    void validate() const;
};

// --------------------------------- Hubbard ----------------------------------

struct HubbardParams {
    int n_sites = 0;
    double tunneling = 1.0;         // τ, the energy unit
    double interaction = 0.0;       // U
    std::vector<double> omegas;     // magnetic field per site
    std::vector<double> chem_potentials; // μ_j
    double dephasing_rate = 0.0;    // γ ≥ 0

    static HubbardParams homogeneous(int n_sites, double omega, double interaction,
                                     double dephasing_rate);
    void validate() const;
};

enum class Spin { up, down };

// Jordan–Wigner fermion operators. Modes are ordered site-major with spin-↑
// before spin-↓ within a site; the returned operators live on the composite
// site space (local dim 4, digit = 2·n_↑ + n_↓).
Operator hubbard_annihilation(int site, Spin spin, int n_sites);
Operator hubbard_creation(int site, Spin spin, int n_sites);
Operator hubbard_number(int site, Spin spin, int n_sites);
Operator hubbard_site_number(int site, int n_sites);       // n_j = n_{↑,j} + n_{↓,j}
Operator hubbard_sz(int site, int n_sites);                // n_{↑,j} − n_{↓,j}
Operator hubbard_sx(int site, int n_sites);                // (c†_↑c_↓ + c†_↓c_↑)/2

// ------------------------------- Lindblad form ------------------------------

struct JumpChannel {
    Operator op;
    double rate = 0.0;
};

struct LindbladModel {
    SpaceDescriptor space;
    Operator hamiltonian;
    std::vector<JumpChannel> jumps;

    void validate(double herm_tol = default_tolerances().hermiticity) const;
};

LindbladModel build_spin1_chain(const SpinChainParams& params);
LindbladModel build_hubbard(const HubbardParams& params);

// ------------------------ spin-1 steady-state family ------------------------

// Magnetisation bookkeeping in the lexicographic spin-1 basis.
int spin1_magnetisation(long basis_index, int n_sites);
long spin1_spin_flip_index(long basis_index, int n_sites);
std::map<int, long> spin1_sector_counts(int n_sites);      // m → G_m

// Coefficients of the steady-state family: ρ_ss = Σ_m λ_m Σ_i |m_i⟩⟨m_i| +
// λ₀′ Σ_i |0_i⟩⟨0′_i| with |m′_i⟩ the spin-flipped partner.
struct SteadyStateSpec {
    std::map<int, double> lambdas;  // m ∈ [−N, N]
    double lambda0_prime = 0.0;
    std::map<int, long> sector_counts;

    // λ₀′ + Σ_m λ_m G_m, which must equal 1 for a unit-trace state.
    double normalization(int n_sites) const;
};

SteadyStateSpec maximally_mixed_spec(int n_sites);
SteadyStateSpec random_admissible_spec(int n_sites, std::uint64_t seed);

Operator spin1_steady_state(int n_sites, const SteadyStateSpec& spec);

// Strong dynamical symmetry A_m = Σ_i |m_i⟩⟨−m′_i|, m ≠ 0.
Operator spin1_symmetry(int n_sites, int m);

// The supplemental staggered operator B = Σ_s (−1)^s |↑…↑⟩⟨↑…↓_s…↑|. Commutes
// with every (S^z_j)² jump; a dynamical symmetry only at Δ = 0; breaks swap
// invariance through the alternating signs.
Operator sm_extra_symmetry_B(int n_sites);

// Global magnetic raising operator S⁺ = Σ_j c†_{j,↑} c_{j,↓}.
Operator hubbard_spin_raising(int n_sites);

// ------------------------------ initial states ------------------------------

// Spin-1 labels: up, down, zero, right (= (|↑⟩+|↓⟩)/√2), left (= (|↑⟩−|↓⟩)/√2).
// The unicode forms ↑ ↓ 0 → ← are accepted as aliases.
StateVector product_state_spin1(const std::vector<std::string>& labels);

// Hubbard labels: up, down, right, left, empty, double. Single-occupancy spin
// states are built by applying the Jordan–Wigner creation operators to the
// vacuum, so fermionic signs are inherited from the mode ordering.
StateVector product_state_hubbard(const std::vector<std::string>& labels);

// Seeded random product state: independent normalized complex local vectors.
StateVector random_product_state(const SpaceDescriptor& space, std::uint64_t seed);

// ----------------------------- detuning profiles ----------------------------

// Inhomogeneous-field bookkeeping for the perturbation operations: δ_j are
// re-centred so Σ δ_j = 0 and the mean is absorbed into mean_frequency. The
// scale mean_detuning is the half-width of the frequency set, which is the
// δ of the {ω̄−δ, ω̄, ω̄+δ} profiles.
struct DetuningProfile {
    std::vector<Operator> field_ops;
    std::vector<double> detunings;
    double mean_frequency = 0.0;
    double mean_detuning = 0.0;

    static DetuningProfile from_frequencies(std::vector<Operator> field_ops,
                                            const std::vector<double>& omegas);
    void validate() const;
};

} // namespace dynsync
