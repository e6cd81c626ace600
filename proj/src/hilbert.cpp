// hilbert.cpp — operator algebra on composite spaces

#include "dynsync/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <nlohmann/json.hpp>

namespace dynsync {

SpaceDescriptor::SpaceDescriptor(std::vector<int> dims) : local_dims(std::move(dims)) {
    if (local_dims.empty()) {
        throw std::invalid_argument("SpaceDescriptor: need at least one site");
    }
    for (int d : local_dims) {
        if (d < 2) {
            throw std::invalid_argument("SpaceDescriptor: every local dim must be >= 2");
        }
    }
}

SpaceDescriptor SpaceDescriptor::uniform(int n_sites, int local_dim) {
    if (n_sites < 1) {
        throw std::invalid_argument("SpaceDescriptor: n_sites must be positive");
    }
    return SpaceDescriptor(std::vector<int>(static_cast<size_t>(n_sites), local_dim));
}

long SpaceDescriptor::total_dim() const {
    long d = 1;
    for (int ld : local_dims) d *= ld;
    return d;
}

long SpaceDescriptor::site_stride(int site) const {
    check_site(site);
    long stride = 1;
    for (int j = site + 1; j < n_sites(); ++j) stride *= local_dims[static_cast<size_t>(j)];
    return stride;
}

void SpaceDescriptor::check_site(int site) const {
    if (site < 0 || site >= n_sites()) {
        throw std::out_of_range("SpaceDescriptor: site index out of range");
    }
}

Operator::Operator(SpaceDescriptor sp, SpMat m) : space(std::move(sp)), mat(std::move(m)) {
    if (mat.rows() != mat.cols() || mat.rows() != space.total_dim()) {
        throw std::invalid_argument("Operator: matrix shape does not match space");
    }
}

Operator::Operator(SpaceDescriptor sp, const DenseMatrix& m)
    : Operator(std::move(sp), SpMat(m.sparseView())) {}

Complex Operator::trace() const {
    Complex tr = 0.0;
    for (int k = 0; k < mat.outerSize(); ++k) {
        for (SpMat::InnerIterator it(mat, k); it; ++it) {
            if (it.row() == it.col()) tr += it.value();
        }
    }
    return tr;
}

double Operator::frobenius_norm() const { return mat.norm(); }

bool Operator::is_hermitian(double tol) const {
    return SpMat(mat - SpMat(mat.adjoint())).norm() <= tol;
}

Operator Operator::adjoint() const { return Operator(space, SpMat(mat.adjoint())); }

Operator Operator::identity(const SpaceDescriptor& space) {
    SpMat id(space.total_dim(), space.total_dim());
    id.setIdentity();
    return Operator(space, std::move(id));
}

Operator Operator::zero(const SpaceDescriptor& space) {
    return Operator(space, SpMat(space.total_dim(), space.total_dim()));
}

namespace {

void check_same_space(const Operator& a, const Operator& b) {
    if (!(a.space == b.space)) {
        throw std::invalid_argument("operator arithmetic: spaces differ");
    }
}

} // namespace

Operator operator+(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return Operator(a.space, SpMat(a.mat + b.mat));
}

Operator operator-(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return Operator(a.space, SpMat(a.mat - b.mat));
}

Operator operator*(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return Operator(a.space, SpMat(a.mat * b.mat));
}

Operator operator*(Complex scale, const Operator& a) {
    return Operator(a.space, SpMat(scale * a.mat));
}

Operator operator*(double scale, const Operator& a) { return Complex(scale, 0.0) * a; }

Operator commutator(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return Operator(a.space, SpMat(a.mat * b.mat - b.mat * a.mat));
}

Operator anticommutator(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return Operator(a.space, SpMat(a.mat * b.mat + b.mat * a.mat));
}

StateVector::StateVector(SpaceDescriptor sp, DenseVector amps)
    : space(std::move(sp)), amplitudes(std::move(amps)) {
    if (amplitudes.size() != space.total_dim()) {
        throw std::invalid_argument("StateVector: length does not match space");
    }
    const double norm = amplitudes.norm();
    if (norm < 1e-14) {
        throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    }
    amplitudes /= norm;
}

Operator StateVector::projector() const {
    DenseMatrix proj = amplitudes * amplitudes.adjoint();
    return Operator(space, proj);
}

Operator kron(const Operator& a, const Operator& b) {
    std::vector<int> dims = a.space.local_dims;
    dims.insert(dims.end(), b.space.local_dims.begin(), b.space.local_dims.end());
    SpaceDescriptor joined(std::move(dims));

    const long db = b.dim();
    SpMat out(joined.total_dim(), joined.total_dim());
    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(a.mat.nonZeros()) * static_cast<size_t>(b.mat.nonZeros()));
    for (int ka = 0; ka < a.mat.outerSize(); ++ka) {
        for (SpMat::InnerIterator ia(a.mat, ka); ia; ++ia) {
            for (int kb = 0; kb < b.mat.outerSize(); ++kb) {
                for (SpMat::InnerIterator ib(b.mat, kb); ib; ++ib) {
                    trips.emplace_back(ia.row() * db + ib.row(), ia.col() * db + ib.col(),
                                       ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(trips.begin(), trips.end());
    return Operator(std::move(joined), std::move(out));
}

Operator embed_local(const DenseMatrix& op_local, int site, const SpaceDescriptor& space) {
    space.check_site(site);
    const int ld = space.local_dims[static_cast<size_t>(site)];
    if (op_local.rows() != ld || op_local.cols() != ld) {
        throw std::invalid_argument("embed_local: local operator dim mismatch");
    }

    // Composite index = left * (ld * stride) + digit * stride + right.
    const long stride = space.site_stride(site);
    const long n_left = space.total_dim() / (ld * stride);

    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(n_left * stride) * static_cast<size_t>(ld * ld));
    for (int r = 0; r < ld; ++r) {
        for (int c = 0; c < ld; ++c) {
            const Complex v = op_local(r, c);
            if (v == Complex(0.0, 0.0)) continue;
            for (long left = 0; left < n_left; ++left) {
                const long base_r = (left * ld + r) * stride;
                const long base_c = (left * ld + c) * stride;
                for (long right = 0; right < stride; ++right) {
                    trips.emplace_back(base_r + right, base_c + right, v);
                }
            }
        }
    }
    SpMat out(space.total_dim(), space.total_dim());
    out.setFromTriplets(trips.begin(), trips.end());
    return Operator(space, std::move(out));
}

Operator partial_transpose(const Operator& rho, int site) {
    rho.space.check_site(site);
    const int ld = rho.space.local_dims[static_cast<size_t>(site)];
    const long stride = rho.space.site_stride(site);

    // Swap the site digit between row and column index.
    std::vector<Triplet> trips;
    trips.reserve(static_cast<size_t>(rho.mat.nonZeros()));
    for (int k = 0; k < rho.mat.outerSize(); ++k) {
        for (SpMat::InnerIterator it(rho.mat, k); it; ++it) {
            const long r = it.row();
            const long c = it.col();
            const long dr = (r / stride) % ld;
            const long dc = (c / stride) % ld;
            const long new_r = r + (dc - dr) * stride;
            const long new_c = c + (dr - dc) * stride;
            trips.emplace_back(new_r, new_c, it.value());
        }
    }
    SpMat out(rho.dim(), rho.dim());
    out.setFromTriplets(trips.begin(), trips.end());
    return Operator(rho.space, std::move(out));
}

double trace_norm(const Operator& a) {
    const DenseMatrix m = a.dense();
    if (a.is_hermitian()) {
        Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().cwiseAbs().sum();
    }
    Eigen::BDCSVD<DenseMatrix> svd(m);
    return svd.singularValues().sum();
}

Complex frobenius_inner(const Operator& a, const Operator& b) {
    check_same_space(a, b);
    return SpMat(a.mat.adjoint() * b.mat).diagonal().sum();
}

std::string to_debug_json(const Operator& op) {
    nlohmann::json j;
    j["dims"] = op.space.local_dims;
    auto& trips = j["triplets"] = nlohmann::json::array();
    for (int k = 0; k < op.mat.outerSize(); ++k) {
        for (SpMat::InnerIterator it(op.mat, k); it; ++it) {
            trips.push_back({it.row(), it.col(), it.value().real(), it.value().imag()});
        }
    }
    return j.dump();
}

Operator operator_from_debug_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SpaceDescriptor space(j.at("dims").get<std::vector<int>>());
    std::vector<Triplet> trips;
    for (const auto& t : j.at("triplets")) {
        trips.emplace_back(t.at(0).get<long>(), t.at(1).get<long>(),
                           Complex(t.at(2).get<double>(), t.at(3).get<double>()));
    }
    SpMat m(space.total_dim(), space.total_dim());
    m.setFromTriplets(trips.begin(), trips.end());
    return Operator(std::move(space), std::move(m));
}

} // namespace dynsync
