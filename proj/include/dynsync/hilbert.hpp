// hilbert.hpp — composite Hilbert-space bookkeeping and the operator algebra
// shared by every other module: tensor products, local embedding, partial
// transpose, norms.

#pragma once

#include <string>
#include <vector>

#include "dynsync/types.hpp"

namespace dynsync {

// Ordered list of local dimensions, one per site. Basis ordering is
// lexicographic and site-major: composite index i decomposes into digits
// (i_0, i_1, …) with site 0 the most significant. For spin-1 chains the local
// basis order (↑, 0, ↓) makes row/column 0 the all-up configuration and the
// last row/column the all-down one, so dumps line up with the ternary-string
// layout used throughout the chain presets.
struct SpaceDescriptor {
    std::vector<int> local_dims;

    SpaceDescriptor() = default;
    explicit SpaceDescriptor(std::vector<int> dims);

    static SpaceDescriptor uniform(int n_sites, int local_dim);

    int n_sites() const { return static_cast<int>(local_dims.size()); }
    long total_dim() const;

    // Stride of one step of the site's digit in the composite index.
    long site_stride(int site) const;

    void check_site(int site) const;

    bool operator==(const SpaceDescriptor& other) const {
        return local_dims == other.local_dims;
    }
};

// A (possibly non-Hermitian) operator on a composite space. Storage is sparse;
// the predicates and accessors below are storage-independent.
struct Operator {
    SpaceDescriptor space;
    SpMat mat;

    Operator() = default;
    Operator(SpaceDescriptor sp, SpMat m);
    Operator(SpaceDescriptor sp, const DenseMatrix& m);

    long dim() const { return mat.rows(); }
    DenseMatrix dense() const { return DenseMatrix(mat); }

    Complex trace() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol = default_tolerances().hermiticity) const;
    Operator adjoint() const;

    static Operator identity(const SpaceDescriptor& space);
    static Operator zero(const SpaceDescriptor& space);
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
Operator operator*(double scale, const Operator& a);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

// Normalized pure state on a composite space.
struct StateVector {
    SpaceDescriptor space;
    DenseVector amplitudes;

    StateVector() = default;
    StateVector(SpaceDescriptor sp, DenseVector amps);

    long dim() const { return amplitudes.size(); }

    // |ψ⟩⟨ψ| as an Operator.
    Operator projector() const;
};

// Tensor product; a's space forms the leading (most significant) sites.
Operator kron(const Operator& a, const Operator& b);

// Lift a single-site operator to the composite space, identity elsewhere.
Operator embed_local(const DenseMatrix& op_local, int site, const SpaceDescriptor& space);

// Transpose the indices of one site only.
Operator partial_transpose(const Operator& rho, int site);

// Tr √(A†A). Hermitian inputs go through a Hermitian eigensolve, everything
// else through singular values.
double trace_norm(const Operator& a);

// Frobenius inner product ⟨A,B⟩ = Tr(A†B).
Complex frobenius_inner(const Operator& a, const Operator& b);

// Debug serialization: {"dims": [...], "triplets": [[row, col, re, im], ...]}.
// Not a stability-guaranteed interchange format.
std::string to_debug_json(const Operator& op);
Operator operator_from_debug_json(const std::string& text);

} // namespace dynsync
