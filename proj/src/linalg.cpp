#include "oracle_lens/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oracle_lens/errors.hpp"

namespace oracle_lens {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(dim_) +
                                    " vs " + std::to_string(rhs.dim_));
    }
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = at(r, k);
            if (a == Complex{}) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(r, c) = at(r, c) * scalar;
    return out;
}

bool ComplexMatrix::is_unitary(double tol) const {
    const ComplexMatrix product = *this * adjoint();
    return product.max_abs_diff(identity(dim_)) < tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix comparison dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

nlohmann::json ComplexMatrix::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : entries_) {
        entries.push_back({z.real(), z.imag()});
    }
    return {{"dim", dim_}, {"entries", entries}};
}

ComplexMatrix ComplexMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("matrix JSON must have \"dim\" and \"entries\"");
    }
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw std::invalid_argument("matrix JSON entry count must be dim*dim");
    }
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& pair = entries.at(i);
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("matrix JSON entries must be [re, im] pairs");
        }
        m.entries_[i] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return m;
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {
    if (dim == 0) throw std::invalid_argument("state dimension must be >= 1");
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
    StateVector s(dim);
    if (index >= dim) throw std::invalid_argument("basis state index out of range");
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const Complex& z : amps_) acc += std::norm(z);
    return std::sqrt(acc);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t dim_cap) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da > dim_cap / db) {
        throw ResourceError("kron result dimension " + std::to_string(da) + "*" +
                            std::to_string(db) + " exceeds the dense-matrix cap " +
                            std::to_string(dim_cap));
    }
    ComplexMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const Complex f = a.at(ra, ca);
            if (f == Complex{}) continue;
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out.at(ra * db + rb, ca * db + cb) = f * b.at(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix& g, std::size_t j, std::size_t m,
                                 double tol) {
    if (g.dim() != 2) throw std::invalid_argument("embed_single_qubit expects a 2x2 gate");
    if (j >= m) throw std::invalid_argument("qubit index out of range");
    if (!g.is_unitary(tol)) throw std::invalid_argument("embed_single_qubit gate is not unitary");
    ComplexMatrix out = (j == 0) ? g : ComplexMatrix::identity(2);
    for (std::size_t pos = 1; pos < m; ++pos) {
        const ComplexMatrix& factor = (pos == j) ? g : ComplexMatrix::identity(2);
        out = kron(factor, out);
    }
    return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& b, double tol) {
    if (u.dim() != b.dim()) {
        throw std::invalid_argument("conjugate_by dimension mismatch: " + std::to_string(u.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
    if (!b.is_unitary(tol)) throw std::invalid_argument("conjugate_by basis matrix is not unitary");
    return b.adjoint() * u * b;
}

bool equals(const ComplexMatrix& a, const ComplexMatrix& b, double tol, CompareMode mode) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("equals dimension mismatch");
    }
    if (mode == CompareMode::Strict) {
        return a.max_abs_diff(b) < tol;
    }
    // Pivot on a's largest-modulus entry.
    std::size_t pr = 0, pc = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            const double mag = std::abs(a.at(r, c));
            if (mag > best) {
                best = mag;
                pr = r;
                pc = c;
            }
        }
    }
    const Complex pa = a.at(pr, pc);
    const Complex pb = b.at(pr, pc);
    if (std::abs(pa) < tol || std::abs(pb) < tol) return false;
    return (a * (1.0 / pa)).max_abs_diff(b * (1.0 / pb)) < tol;
}

StateVector apply(const ComplexMatrix& u, const StateVector& s, double tol) {
    if (u.dim() != s.dim()) throw std::invalid_argument("apply dimension mismatch");
    if (!u.is_unitary(tol)) throw std::invalid_argument("apply expects a unitary operator");
    StateVector out(s.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < u.dim(); ++c) {
            acc += u.at(r, c) * s.amp(c);
        }
        out.amp(r) = acc;
    }
    return out;
}

void apply_single_qubit_inplace(StateVector& s, const ComplexMatrix& g, std::size_t j) {
    if (g.dim() != 2) throw std::invalid_argument("expected a 2x2 gate");
    const std::size_t dim = s.dim();
    const std::size_t stride = std::size_t{1} << j;
    if (stride >= dim) throw std::invalid_argument("qubit index out of range for state");
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = s.amp(i0);
            const Complex a1 = s.amp(i1);
            s.amp(i0) = g.at(0, 0) * a0 + g.at(0, 1) * a1;
            s.amp(i1) = g.at(1, 0) * a0 + g.at(1, 1) * a1;
        }
    }
}

namespace gates {

namespace {
ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}
}  // namespace

ComplexMatrix identity2() { return make2(1, 0, 0, 1); }
ComplexMatrix pauli_x() { return make2(0, 1, 1, 0); }
ComplexMatrix pauli_y() { return make2(0, Complex(0, -1), Complex(0, 1), 0); }
ComplexMatrix pauli_z() { return make2(1, 0, 0, -1); }
ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return make2(s, s, s, -s);
}
ComplexMatrix phase_s() { return make2(1, 0, 0, Complex(0, 1)); }

}  // namespace gates

}  // namespace oracle_lens
