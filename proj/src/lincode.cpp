#include "chaincode/lincode.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chaincode {

namespace {

void require_length(const Vec& v, std::size_t n) {
    if (v.size() != n)
        raise(ErrorKind::LengthMismatch,
              "vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

void require_compatible(const LinearCode& x, const LinearCode& y) {
    if (!(x.ring() == y.ring())) raise(ErrorKind::RingMismatch, "codes over different rings");
    if (x.length() != y.length()) raise(ErrorKind::LengthMismatch, "codes of different lengths");
}

void axpy_row(Matrix& m, std::size_t dst, const RingElem& c, std::size_t src) {
    if (c.is_zero()) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= c * m(src, j);
}

}  // namespace

// ---------------------------------------------------------------------------
// Vectors

Vec zero_vec(const Ring& ring, std::size_t n) { return Vec(n, ring.zero()); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const RingElem& x) { return x.is_zero(); });
}

Vec operator+(const Vec& x, const Vec& y) {
    require_length(y, x.size());
    Vec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

Vec operator-(const Vec& x, const Vec& y) {
    require_length(y, x.size());
    Vec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

Vec operator*(const RingElem& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x = c * x;
    return out;
}

RingElem dot(const Vec& x, const Vec& y) {
    require_length(y, x.size());
    if (x.empty()) raise(ErrorKind::InvalidArgument, "dot product of empty vectors");
    RingElem acc = x.front().ring().zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

Vec frobenius(const Vec& v, int k) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(frobenius(x, k));
    return out;
}

bool vec_less(const Vec& x, const Vec& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), element_less);
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
    Matrix out(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = ring.one();
    return out;
}

Matrix Matrix::from_rows(const Ring& ring, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix out(ring, 0, cols);
    for (const auto& r : rows) out.append_row(r);
    return out;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

void Matrix::append_row(const Vec& v) {
    require_length(v, cols_);
    for (const auto& x : v)
        if (!(x.ring() == ring_)) raise(ErrorKind::RingMismatch, "entry from a different ring");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) raise(ErrorKind::SizeMismatch, "matrix product of incompatible shapes");
    if (!(x.ring_ == y.ring_)) raise(ErrorKind::RingMismatch, "matrices over different rings");
    Matrix out(x.ring_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const RingElem& a = x(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += a * y(k, j);
        }
    return out;
}

bool operator==(const Matrix& x, const Matrix& y) noexcept {
    return x.ring_ == y.ring_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

Vec operator*(const Vec& v, const Matrix& m) {
    require_length(v, m.rows());
    Vec out = zero_vec(m.ring(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) raise(ErrorKind::SizeMismatch, "only square matrices are invertible");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(m.ring(), n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !is_unit(a(piv, c))) ++piv;
        if (piv == n) raise(ErrorKind::NonUnit, "matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        const RingElem s = inverse(a(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = s * a(c, j);
            inv(c, j) = s * inv(c, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const RingElem f = a(i, c);
            axpy_row(a, i, f, c);
            axpy_row(inv, i, f, c);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Standard form

StandardForm standard_form(const Matrix& generators) {
    const Ring& ring = generators.ring();
    const std::size_t n = generators.cols();
    const int s = ring.s();
    Matrix a = generators;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> levels;

    std::size_t r = 0;
    while (r < a.rows() && r < n) {
        // Minimal valuation; ties go to the first column, then the first row.
        int best = s;
        std::size_t bi = 0, bj = 0;
        for (std::size_t j = r; j < n && best > 0; ++j)
            for (std::size_t i = r; i < a.rows(); ++i) {
                const int v = theta_valuation(a(i, j));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == s) break;
        if (bi != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(bi, j));
        if (bj != r) {
            for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, r), a(i, bj));
            std::swap(perm[r], perm[bj]);
        }
        const RingElem unit_inv = inverse(divide_by_theta(a(r, r), best));
        for (std::size_t j = r; j < n; ++j) a(r, j) = unit_inv * a(r, j);
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            axpy_row(a, i, divide_by_theta(a(i, r), best), r);
        levels.push_back(best);
        ++r;
    }

    Matrix out(ring, 0, n);
    for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));

    // Reduce entries above each pivot modulo θ^{level}.
    for (std::size_t k = 1; k < r; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            const RingElem x = out(i, k);
            const RingElem q = divide_by_theta(x - reduce_mod_theta_power(x, levels[k]), levels[k]);
            axpy_row(out, i, q, k);
        }
    }

    StandardForm sf;
    sf.matrix = std::move(out);
    sf.type.assign(static_cast<std::size_t>(s), 0);
    for (int v : levels) ++sf.type[static_cast<std::size_t>(v)];
    sf.permutation = std::move(perm);
    sf.levels = std::move(levels);
    return sf;
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(const Ring& ring, std::size_t n, const std::vector<Vec>& generators)
    : LinearCode(Matrix::from_rows(ring, n, generators)) {}

LinearCode::LinearCode(const Matrix& generators) : generators_(generators), sf_(chaincode::standard_form(generators)) {
    const std::size_t n = generators_.cols();
    basis_.reserve(sf_.rank());
    for (std::size_t i = 0; i < sf_.rank(); ++i) {
        Vec v = zero_vec(ring(), n);
        for (std::size_t j = 0; j < n; ++j) v[sf_.permutation[j]] = sf_.matrix(i, j);
        basis_.push_back(std::move(v));
    }
}

LinearCode LinearCode::zero(const Ring& ring, std::size_t n) { return LinearCode(Matrix(ring, 0, n)); }

LinearCode LinearCode::full(const Ring& ring, std::size_t n) { return LinearCode(Matrix::identity(ring, n)); }

bool LinearCode::is_free() const {
    return std::all_of(sf_.levels.begin(), sf_.levels.end(), [](int v) { return v == 0; });
}

std::uint64_t LinearCode::log_cardinality() const {
    std::uint64_t e = 0;
    const auto m = static_cast<std::uint64_t>(ring().m());
    for (int v : sf_.levels) e += m * static_cast<std::uint64_t>(ring().s() - v);
    return e;
}

std::uint64_t LinearCode::cardinality() const {
    const std::uint64_t e = log_cardinality();
    std::uint64_t out = 1;
    const auto p = static_cast<std::uint64_t>(ring().p());
    for (std::uint64_t i = 0; i < e; ++i) {
        if (out > (std::uint64_t{1} << 63) / p) raise(ErrorKind::Overflow, "code cardinality exceeds 2^63");
        out *= p;
    }
    return out;
}

bool LinearCode::contains(const Vec& v) const {
    const std::size_t n = length();
    require_length(v, n);
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[sf_.permutation[j]];
    for (std::size_t i = 0; i < sf_.rank(); ++i) {
        const int lv = sf_.levels[i];
        if (theta_valuation(w[i]) < lv) return false;
        const RingElem c = divide_by_theta(w[i], lv);
        if (c.is_zero()) continue;
        for (std::size_t j = i; j < n; ++j) w[j] -= c * sf_.matrix(i, j);
    }
    return chaincode::is_zero(w);
}

bool LinearCode::contains(const LinearCode& other) const {
    require_compatible(*this, other);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vec& v) { return contains(v); });
}

bool operator==(const LinearCode& x, const LinearCode& y) {
    if (!(x.ring() == y.ring()) || x.length() != y.length()) return false;
    return x.log_cardinality() == y.log_cardinality() && x.contains(y);
}

LinearCode sum(const LinearCode& x, const LinearCode& y) {
    require_compatible(x, y);
    std::vector<Vec> rows = x.basis();
    rows.insert(rows.end(), y.basis().begin(), y.basis().end());
    return LinearCode(x.ring(), x.length(), rows);
}

LinearCode intersect(const LinearCode& x, const LinearCode& y) {
    require_compatible(x, y);
    return euclidean_dual(sum(euclidean_dual(x), euclidean_dual(y)));
}

LinearCode euclidean_dual(const LinearCode& code) {
    const Ring& ring = code.ring();
    const std::size_t n = code.length();
    const StandardForm& sf = code.standard_form();
    const std::size_t r = sf.rank();
    const int s = ring.s();

    // Column operations G·V = [diag θ^{v_i} | 0], tracked in V.
    Matrix g = sf.matrix;
    Matrix v = Matrix::identity(ring, n);
    for (std::size_t i = 0; i < r; ++i) {
        const int lv = sf.levels[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g(i, j).is_zero()) continue;
            const RingElem c = divide_by_theta(g(i, j), lv);
            for (std::size_t k = 0; k < r; ++k) g(k, j) -= c * g(k, i);
            for (std::size_t k = 0; k < n; ++k) v(k, j) -= c * v(k, i);
        }
    }

    std::vector<Vec> kernel;
    auto emit = [&](std::size_t col, const RingElem& scale) {
        Vec y = zero_vec(ring, n);
        for (std::size_t k = 0; k < n; ++k) y[sf.permutation[k]] = scale * v(k, col);
        kernel.push_back(std::move(y));
    };
    for (std::size_t i = 0; i < r; ++i)
        if (sf.levels[i] > 0) emit(i, theta_power(ring, s - sf.levels[i]));
    for (std::size_t j = r; j < n; ++j) emit(j, ring.one());

    LinearCode dual(ring, n, kernel);
#ifndef NDEBUG
    if (dual.log_cardinality() + code.log_cardinality() !=
        static_cast<std::uint64_t>(ring.m()) * static_cast<std::uint64_t>(s) * n)
        raise(ErrorKind::InvariantViolation, "dual cardinality identity failed");
#endif
    return dual;
}

LinearCode transform(const LinearCode& code, const Matrix& m) {
    if (m.rows() != code.length()) raise(ErrorKind::SizeMismatch, "transform matrix has the wrong size");
    std::vector<Vec> rows;
    rows.reserve(code.basis().size());
    for (const auto& b : code.basis()) rows.push_back(b * m);
    return LinearCode(code.ring(), m.cols(), rows);
}

bool is_invariant(const LinearCode& code, const Matrix& m) {
    if (m.rows() != code.length() || m.cols() != code.length())
        raise(ErrorKind::SizeMismatch, "invariance needs an n x n matrix");
    const LinearCode image = transform(code, m);
    return image.log_cardinality() == code.log_cardinality() && code.contains(image);
}

LinearCode frobenius(const LinearCode& code, int k) {
    std::vector<Vec> rows;
    rows.reserve(code.basis().size());
    for (const auto& b : code.basis()) rows.push_back(frobenius(b, k));
    return LinearCode(code.ring(), code.length(), rows);
}

// ---------------------------------------------------------------------------
// Associate vectors and shifts

AssociateVector::AssociateVector(Vec entries) : entries_(std::move(entries)) {
    if (entries_.empty()) raise(ErrorKind::InvalidArgument, "associate vector must be non-empty");
    if (!is_unit(entries_.front()))
        raise(ErrorKind::NonUnitA0, "a_0 = " + entries_.front().to_string() + " is not a unit");
}

Poly AssociateVector::tail() const { return psi(entries_); }

Poly AssociateVector::ambient() const { return Poly::binomial(ring(), entries_.size(), tail()); }

Poly psi(const Vec& v) {
    if (v.empty()) raise(ErrorKind::InvalidArgument, "empty vector");
    return Poly(v.front().ring(), v);
}

Vec psi_inverse(const Poly& f, std::size_t n) {
    if (f.degree() >= static_cast<int>(n))
        raise(ErrorKind::InvalidArgument, "degree " + std::to_string(f.degree()) + " does not fit length " +
                                              std::to_string(n));
    Vec out = zero_vec(f.ring(), n);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
    return out;
}

ShiftMatrices shift_matrices(const AssociateVector& a) {
    const Ring& ring = a.ring();
    const std::size_t n = a.length();
    const Vec& av = a.entries();
    const RingElem a0_inv = inverse(av[0]);

    Vec b = zero_vec(ring, n);
    for (std::size_t j = 0; j + 1 < n; ++j) b[j] = -(av[j + 1] * a0_inv);
    b[n - 1] = a0_inv;

    Matrix d(ring, n, n), e(ring, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) d(i, i + 1) = ring.one();
    for (std::size_t j = 0; j < n; ++j) d(n - 1, j) = av[j];
    for (std::size_t j = 0; j < n; ++j) e(0, j) = b[j];
    for (std::size_t i = 1; i < n; ++i) e(i, i - 1) = ring.one();
    return {std::move(d), std::move(e), std::move(b)};
}

std::uint64_t period(const AssociateVector& a, std::uint64_t cap) { return period(a.length(), a.tail(), cap); }

}  // namespace chaincode
