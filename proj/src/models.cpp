// models.cpp — model builders, steady states and symmetry operators

#include "dynsync/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dynsync {

namespace {

const double kSqrt2 = std::sqrt(2.0);

SpaceDescriptor spin1_space(int n_sites) { return SpaceDescriptor::uniform(n_sites, 3); }
SpaceDescriptor hubbard_space(int n_sites) { return SpaceDescriptor::uniform(n_sites, 4); }
SpaceDescriptor mode_space(int n_modes) { return SpaceDescriptor::uniform(n_modes, 2); }

} // namespace

DenseMatrix spin1_sz() {
    DenseMatrix sz = DenseMatrix::Zero(3, 3);
    sz(0, 0) = 1.0;
    sz(2, 2) = -1.0;
    return sz;
}

DenseMatrix spin1_sp() {
    DenseMatrix sp = DenseMatrix::Zero(3, 3);
    sp(0, 1) = kSqrt2;
    sp(1, 2) = kSqrt2;
    return sp;
}

DenseMatrix spin1_sm() { return spin1_sp().adjoint(); }

DenseMatrix spin1_sx() { return 0.5 * (spin1_sp() + spin1_sm()); }

DenseMatrix spin1_sy() { return 0.5 * kImag * (spin1_sm() - spin1_sp()); }

SpinChainParams SpinChainParams::homogeneous(int n_sites, double omega, double anisotropy,
                                             double dephasing_rate) {
    SpinChainParams p;
    p.n_sites = n_sites;
    p.omegas.assign(static_cast<size_t>(n_sites), omega);
    p.anisotropy = anisotropy;
    p.dephasing_rate = dephasing_rate;
    return p;
}

void SpinChainParams::validate() const {
    if (n_sites < 1) throw std::invalid_argument("SpinChainParams: n_sites must be positive");
    if (static_cast<int>(omegas.size()) != n_sites) {
        throw std::invalid_argument("SpinChainParams: omegas length must equal n_sites");
    }
    if (dephasing_rate < 0.0) throw std::invalid_argument("SpinChainParams: gamma must be >= 0");
}

HubbardParams HubbardParams::homogeneous(int n_sites, double omega, double interaction,
                                         double dephasing_rate) {
    HubbardParams p;
    p.n_sites = n_sites;
    p.interaction = interaction;
    p.omegas.assign(static_cast<size_t>(n_sites), omega);
    p.chem_potentials.assign(static_cast<size_t>(n_sites), 0.0);
    p.dephasing_rate = dephasing_rate;
    return p;
}

void HubbardParams::validate() const {
    if (n_sites < 1) throw std::invalid_argument("HubbardParams: n_sites must be positive");
    if (static_cast<int>(omegas.size()) != n_sites ||
        static_cast<int>(chem_potentials.size()) != n_sites) {
        throw std::invalid_argument("HubbardParams: field lists must have one entry per site");
    }
    if (dephasing_rate < 0.0) throw std::invalid_argument("HubbardParams: gamma must be >= 0");
}

void LindbladModel::validate(double herm_tol) const {
    if (!hamiltonian.is_hermitian(herm_tol)) {
        throw std::invalid_argument("LindbladModel: Hamiltonian is not Hermitian");
    }
    for (const auto& jump : jumps) {
        if (jump.rate < 0.0) throw std::invalid_argument("LindbladModel: negative jump rate");
    }
}

LindbladModel build_spin1_chain(const SpinChainParams& params) {
    params.validate();
    const SpaceDescriptor space = spin1_space(params.n_sites);
    const DenseMatrix sz = spin1_sz();
    const DenseMatrix sp = spin1_sp();
    const DenseMatrix sm = spin1_sm();

    Operator h = Operator::zero(space);
    for (int j = 0; j < params.n_sites; ++j) {
        h = h + params.omegas[static_cast<size_t>(j)] * embed_local(sz, j, space);
    }
    for (int j = 0; j + 1 < params.n_sites; ++j) {
        const Operator sp_j = embed_local(sp, j, space);
        const Operator sm_j = embed_local(sm, j, space);
        const Operator sp_next = embed_local(sp, j + 1, space);
        const Operator sm_next = embed_local(sm, j + 1, space);
        const Operator sz_j = embed_local(sz, j, space);
        const Operator sz_next = embed_local(sz, j + 1, space);
        h = h + params.hopping * (sp_j * sm_next + sm_j * sp_next) +
            params.anisotropy * (sz_j * sz_next);
    }

    LindbladModel model{space, std::move(h), {}};
    const DenseMatrix sz2 = spin1_sz() * spin1_sz();
    for (int j = 0; j < params.n_sites; ++j) {
        model.jumps.push_back({embed_local(sz2, j, space), params.dephasing_rate});
    }
    model.validate();
    return model;
}

// --------------------------- Jordan–Wigner fermions --------------------------

namespace {

// Annihilation operator for mode p among n_modes: Z⊗…⊗Z⊗a⊗I⊗…⊗I.
Operator mode_annihilation(int mode, int n_modes) {
    DenseMatrix z = DenseMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    DenseMatrix a = DenseMatrix::Zero(2, 2);
    a(0, 1) = 1.0;
    DenseMatrix id = DenseMatrix::Identity(2, 2);

    Operator out(SpaceDescriptor::uniform(1, 2), mode == 0 ? a : z);
    for (int q = 1; q < n_modes; ++q) {
        const DenseMatrix& local = q < mode ? z : (q == mode ? a : id);
        out = kron(out, Operator(SpaceDescriptor::uniform(1, 2), local));
    }
    return Operator(mode_space(n_modes), std::move(out.mat));
}

int hubbard_mode(int site, Spin spin) { return 2 * site + (spin == Spin::down ? 1 : 0); }

} // namespace

Operator hubbard_annihilation(int site, Spin spin, int n_sites) {
    const SpaceDescriptor space = hubbard_space(n_sites);
    space.check_site(site);
    Operator c = mode_annihilation(hubbard_mode(site, spin), 2 * n_sites);
    return Operator(space, std::move(c.mat));
}

Operator hubbard_creation(int site, Spin spin, int n_sites) {
    return hubbard_annihilation(site, spin, n_sites).adjoint();
}

Operator hubbard_number(int site, Spin spin, int n_sites) {
    const Operator c = hubbard_annihilation(site, spin, n_sites);
    return c.adjoint() * c;
}

Operator hubbard_site_number(int site, int n_sites) {
    return hubbard_number(site, Spin::up, n_sites) + hubbard_number(site, Spin::down, n_sites);
}

Operator hubbard_sz(int site, int n_sites) {
    return hubbard_number(site, Spin::up, n_sites) - hubbard_number(site, Spin::down, n_sites);
}

Operator hubbard_sx(int site, int n_sites) {
    const Operator up = hubbard_annihilation(site, Spin::up, n_sites);
    const Operator down = hubbard_annihilation(site, Spin::down, n_sites);
    return 0.5 * (up.adjoint() * down + down.adjoint() * up);
}

LindbladModel build_hubbard(const HubbardParams& params) {
    params.validate();
    const SpaceDescriptor space = hubbard_space(params.n_sites);

    Operator h = Operator::zero(space);
    for (int j = 0; j + 1 < params.n_sites; ++j) {
        for (Spin s : {Spin::up, Spin::down}) {
            const Operator cj = hubbard_annihilation(j, s, params.n_sites);
            const Operator cl = hubbard_annihilation(j + 1, s, params.n_sites);
            const Operator hop = cj.adjoint() * cl;
            h = h - params.tunneling * (hop + hop.adjoint());
        }
    }
    for (int j = 0; j < params.n_sites; ++j) {
        const Operator n_up = hubbard_number(j, Spin::up, params.n_sites);
        const Operator n_down = hubbard_number(j, Spin::down, params.n_sites);
        h = h + params.interaction * (n_up * n_down) +
            0.5 * params.omegas[static_cast<size_t>(j)] * (n_up - n_down) +
            params.chem_potentials[static_cast<size_t>(j)] * (n_up + n_down);
    }

    LindbladModel model{space, std::move(h), {}};
    for (int j = 0; j < params.n_sites; ++j) {
        model.jumps.push_back({hubbard_site_number(j, params.n_sites), params.dephasing_rate});
    }
    model.validate();
    return model;
}

// ------------------------ spin-1 steady-state family ------------------------

int spin1_magnetisation(long basis_index, int n_sites) {
    int m = 0;
    long rest = basis_index;
    for (int j = 0; j < n_sites; ++j) {
        m += 1 - static_cast<int>(rest % 3);
        rest /= 3;
    }
    return m;
}

long spin1_spin_flip_index(long basis_index, int n_sites) {
    long flipped = 0;
    long rest = basis_index;
    long stride = 1;
    for (int j = 0; j < n_sites; ++j) {
        flipped += (2 - rest % 3) * stride;
        rest /= 3;
        stride *= 3;
    }
    return flipped;
}

std::map<int, long> spin1_sector_counts(int n_sites) {
    std::map<int, long> counts;
    for (int m = -n_sites; m <= n_sites; ++m) counts[m] = 0;
    const long dim = spin1_space(n_sites).total_dim();
    for (long i = 0; i < dim; ++i) counts[spin1_magnetisation(i, n_sites)] += 1;
    return counts;
}

double SteadyStateSpec::normalization(int n_sites) const {
    const auto counts = sector_counts.empty() ? spin1_sector_counts(n_sites) : sector_counts;
    double total = lambda0_prime;
    for (const auto& [m, lambda] : lambdas) {
        total += lambda * static_cast<double>(counts.at(m));
    }
    return total;
}

SteadyStateSpec maximally_mixed_spec(int n_sites) {
    SteadyStateSpec spec;
    spec.sector_counts = spin1_sector_counts(n_sites);
    const double weight = 1.0 / static_cast<double>(spin1_space(n_sites).total_dim());
    for (int m = -n_sites; m <= n_sites; ++m) spec.lambdas[m] = weight;
    spec.lambda0_prime = 0.0;
    return spec;
}

SteadyStateSpec random_admissible_spec(int n_sites, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.1, 1.0);

    SteadyStateSpec spec;
    spec.sector_counts = spin1_sector_counts(n_sites);
    double total = 0.0;
    for (int m = -n_sites; m <= n_sites; ++m) {
        const double lambda = uniform(rng);
        spec.lambdas[m] = lambda;
        total += lambda * static_cast<double>(spec.sector_counts.at(m));
    }
    for (auto& [m, lambda] : spec.lambdas) lambda /= total;
    // keep |λ₀′| < λ₀ so the 2×2 spin-flip blocks stay positive semidefinite
    spec.lambda0_prime = 0.5 * spec.lambdas.at(0);
    const double prime_trace = spec.lambda0_prime;
    for (auto& [m, lambda] : spec.lambdas) lambda *= (1.0 - prime_trace);
    return spec;
}

Operator spin1_steady_state(int n_sites, const SteadyStateSpec& spec) {
    if (std::abs(spec.normalization(n_sites) - 1.0) > 1e-12) {
        throw std::invalid_argument("spin1_steady_state: spec is not normalized");
    }
    const SpaceDescriptor space = spin1_space(n_sites);
    const long dim = space.total_dim();
    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(2 * dim));
    for (long i = 0; i < dim; ++i) {
        const int m = spin1_magnetisation(i, n_sites);
        const auto it = spec.lambdas.find(m);
        if (it != spec.lambdas.end() && it->second != 0.0) {
            trips.emplace_back(i, i, Complex(it->second, 0.0));
        }
        if (m == 0 && spec.lambda0_prime != 0.0) {
            trips.emplace_back(i, spin1_spin_flip_index(i, n_sites),
                               Complex(spec.lambda0_prime, 0.0));
        }
    }
    SpMat mat(dim, dim);
    mat.setFromTriplets(trips.begin(), trips.end());
    return Operator(space, std::move(mat));
}

Operator spin1_symmetry(int n_sites, int m) {
    if (m == 0 || std::abs(m) > n_sites) {
        throw std::invalid_argument("spin1_symmetry: need 1 <= |m| <= N");
    }
    const SpaceDescriptor space = spin1_space(n_sites);
    const long dim = space.total_dim();
    std::vector<Triplet> trips;
    for (long i = 0; i < dim; ++i) {
        if (spin1_magnetisation(i, n_sites) == m) {
            trips.emplace_back(i, spin1_spin_flip_index(i, n_sites), Complex(1.0, 0.0));
        }
    }
    SpMat mat(dim, dim);
    mat.setFromTriplets(trips.begin(), trips.end());
    return Operator(space, std::move(mat));
}

Operator sm_extra_symmetry_B(int n_sites) {
    const SpaceDescriptor space = spin1_space(n_sites);
    std::vector<Triplet> trips;
    for (int site = 0; site < n_sites; ++site) {
        // bra index: all sites ↑ (digit 0) except digit 2 at `site`
        const long bra = 2 * space.site_stride(site);
        trips.emplace_back(0, bra, Complex(site % 2 == 0 ? 1.0 : -1.0, 0.0));
    }
    SpMat mat(space.total_dim(), space.total_dim());
    mat.setFromTriplets(trips.begin(), trips.end());
    return Operator(space, std::move(mat));
}

Operator hubbard_spin_raising(int n_sites) {
    Operator sp = Operator::zero(hubbard_space(n_sites));
    for (int j = 0; j < n_sites; ++j) {
        sp = sp + hubbard_creation(j, Spin::up, n_sites) *
                      hubbard_annihilation(j, Spin::down, n_sites);
    }
    return sp;
}

// ------------------------------ initial states ------------------------------

namespace {

DenseVector spin1_local_vector(const std::string& label) {
    DenseVector v = DenseVector::Zero(3);
    if (label == "up" || label == "↑") {
        v(0) = 1.0;
    } else if (label == "zero" || label == "0") {
        v(1) = 1.0;
    } else if (label == "down" || label == "↓") {
        v(2) = 1.0;
    } else if (label == "right" || label == "→") {
        v(0) = v(2) = 1.0 / kSqrt2;
    } else if (label == "left" || label == "←") {
        v(0) = 1.0 / kSqrt2;
        v(2) = -1.0 / kSqrt2;
    } else {
        throw std::invalid_argument("product_state_spin1: unknown label '" + label + "'");
    }
    return v;
}

} // namespace

StateVector product_state_spin1(const std::vector<std::string>& labels) {
    if (labels.empty()) throw std::invalid_argument("product_state_spin1: empty label list");
    DenseVector amps = spin1_local_vector(labels.front());
    for (size_t j = 1; j < labels.size(); ++j) {
        const DenseVector local = spin1_local_vector(labels[j]);
        DenseVector next(amps.size() * 3);
        for (long a = 0; a < amps.size(); ++a) {
            next.segment(3 * a, 3) = amps(a) * local;
        }
        amps = std::move(next);
    }
    return StateVector(spin1_space(static_cast<int>(labels.size())), std::move(amps));
}

StateVector product_state_hubbard(const std::vector<std::string>& labels) {
    if (labels.empty()) throw std::invalid_argument("product_state_hubbard: empty label list");
    const int n = static_cast<int>(labels.size());
    const SpaceDescriptor space = hubbard_space(n);

    DenseVector psi = DenseVector::Zero(space.total_dim());
    psi(0) = 1.0; // vacuum: every mode empty

    // Apply site factors right-to-left so the composite matches the
    // left-to-right creation-operator product.
    for (int j = n - 1; j >= 0; --j) {
        const std::string& label = labels[static_cast<size_t>(j)];
        const Operator cu = hubbard_creation(j, Spin::up, n);
        const Operator cd = hubbard_creation(j, Spin::down, n);
        if (label == "up" || label == "↑") {
            psi = cu.mat * psi;
        } else if (label == "down" || label == "↓") {
            psi = cd.mat * psi;
        } else if (label == "right" || label == "→") {
            psi = (cu.mat * psi + cd.mat * psi) / kSqrt2;
        } else if (label == "left" || label == "←") {
            psi = (cu.mat * psi - cd.mat * psi) / kSqrt2;
        } else if (label == "double") {
            psi = cu.mat * (cd.mat * psi);
        } else if (label == "empty") {
            // leave the site unoccupied
        } else {
            throw std::invalid_argument("product_state_hubbard: unknown label '" + label + "'");
        }
    }
    return StateVector(space, std::move(psi));
}

StateVector random_product_state(const SpaceDescriptor& space, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    DenseVector amps = DenseVector::Ones(1);
    for (int j = 0; j < space.n_sites(); ++j) {
        const int ld = space.local_dims[static_cast<size_t>(j)];
        DenseVector local(ld);
        for (int k = 0; k < ld; ++k) local(k) = Complex(gauss(rng), gauss(rng));
        local /= local.norm();
        DenseVector next(amps.size() * ld);
        for (long a = 0; a < amps.size(); ++a) {
            next.segment(ld * a, ld) = amps(a) * local;
        }
        amps = std::move(next);
    }
    return StateVector(space, std::move(amps));
}

// ----------------------------- detuning profiles ----------------------------

DetuningProfile DetuningProfile::from_frequencies(std::vector<Operator> field_ops,
                                                  const std::vector<double>& omegas) {
    if (field_ops.size() != omegas.size() || omegas.empty()) {
        throw std::invalid_argument("DetuningProfile: need one field operator per frequency");
    }
    DetuningProfile profile;
    profile.field_ops = std::move(field_ops);
    profile.mean_frequency =
        std::accumulate(omegas.begin(), omegas.end(), 0.0) / static_cast<double>(omegas.size());
    profile.detunings.reserve(omegas.size());
    for (double w : omegas) profile.detunings.push_back(w - profile.mean_frequency);
    const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
    profile.mean_detuning = 0.5 * (*hi - *lo);
    return profile;
}

void DetuningProfile::validate() const {
    if (field_ops.size() != detunings.size()) {
        throw std::invalid_argument("DetuningProfile: field/detuning length mismatch");
    }
    const double sum = std::accumulate(detunings.begin(), detunings.end(), 0.0);
    if (std::abs(sum) > 1e-12) {
        throw std::invalid_argument("DetuningProfile: detunings must sum to zero");
    }
}

} // namespace dynsync
