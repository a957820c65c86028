#pragma once

/**
 * @file lincode.hpp
 * @brief S-linear codes: generator matrices, θ-adic standard form, membership,
 *        sums, intersections, Euclidean duals and the shift matrices D_a / E_b.
 *
 * A LinearCode computes its standard form eagerly, so every query after
 * construction is a read of immutable data.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "chaincode/polyring.hpp"

namespace chaincode {

using Vec = std::vector<RingElem>;

Vec zero_vec(const Ring& ring, std::size_t n);
bool is_zero(const Vec& v);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const RingElem& c, const Vec& v);
/// Σ x_i y_i.
RingElem dot(const Vec& x, const Vec& y);
/// Entrywise σ^k.
Vec frobenius(const Vec& v, int k);
/// Lexicographic by element index.
bool vec_less(const Vec& x, const Vec& y);
std::string to_string(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const Ring& ring, std::size_t n);
    /// Every row must have length `cols`.
    static Matrix from_rows(const Ring& ring, std::size_t cols, const std::vector<Vec>& rows);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    RingElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RingElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    std::vector<Vec> row_list() const;
    void append_row(const Vec& v);
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix& x, const Matrix& y) noexcept;

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElem> data_;
};

/// Row vector times matrix.
Vec operator*(const Vec& v, const Matrix& m);

/// Inverse by Gauss-Jordan elimination with unit pivots. Throws NonUnit when singular.
Matrix inverse(const Matrix& m);

/// Standard form G·U: row i has θ^{levels[i]} in column i, zeros to its left, and all its
/// entries have valuation ≥ levels[i]. Columns of `matrix` are the original columns taken
/// in the order `permutation`. Levels are non-decreasing; entries above a pivot are
/// reduced coordinate-wise modulo θ^{level}, which leaves identity blocks at level 0.
struct StandardForm {
    Matrix matrix;
    std::vector<int> type;  // (k_0, ..., k_{s-1})
    std::vector<std::size_t> permutation;
    std::vector<int> levels;

    std::size_t rank() const noexcept { return levels.size(); }
};

StandardForm standard_form(const Matrix& generators);

class LinearCode {
public:
    LinearCode() = default;
    LinearCode(const Ring& ring, std::size_t n, const std::vector<Vec>& generators);
    explicit LinearCode(const Matrix& generators);

    static LinearCode zero(const Ring& ring, std::size_t n);
    static LinearCode full(const Ring& ring, std::size_t n);

    const Ring& ring() const noexcept { return generators_.ring(); }
    std::size_t length() const noexcept { return generators_.cols(); }
    const Matrix& generators() const noexcept { return generators_; }
    const StandardForm& standard_form() const noexcept { return sf_; }
    const std::vector<int>& type() const noexcept { return sf_.type; }
    std::size_t rank() const noexcept { return sf_.rank(); }
    bool is_free() const;
    bool is_zero() const noexcept { return sf_.rank() == 0; }

    /// The standard-form rows mapped back to the original column order.
    const std::vector<Vec>& basis() const noexcept { return basis_; }

    /// log_p |C| = Σ_t m(s - t) k_t.
    std::uint64_t log_cardinality() const;
    /// |C|; throws Overflow above 2^63.
    std::uint64_t cardinality() const;

    /// Throws LengthMismatch for a vector of the wrong length.
    bool contains(const Vec& v) const;
    bool contains(const LinearCode& other) const;

    friend bool operator==(const LinearCode& x, const LinearCode& y);

private:
    Matrix generators_;
    StandardForm sf_;
    std::vector<Vec> basis_;
};

LinearCode sum(const LinearCode& x, const LinearCode& y);
LinearCode intersect(const LinearCode& x, const LinearCode& y);
LinearCode euclidean_dual(const LinearCode& code);
/// The code generated by {c·M : c a generator}.
LinearCode transform(const LinearCode& code, const Matrix& m);
/// C·M ⊆ C and |C·M| = |C|. Throws SizeMismatch unless M is n×n.
bool is_invariant(const LinearCode& code, const Matrix& m);
/// Entrywise σ^k applied to every generator.
LinearCode frobenius(const LinearCode& code, int k);

/// a = (a_0, ..., a_{n-1}) with a_0 a unit.
class AssociateVector {
public:
    AssociateVector() = default;
    /// Throws NonUnitA0.
    explicit AssociateVector(Vec entries);

    const Vec& entries() const noexcept { return entries_; }
    const Ring& ring() const noexcept { return entries_.front().ring(); }
    std::size_t length() const noexcept { return entries_.size(); }
    /// Ψ(a).
    Poly tail() const;
    /// X^n - Ψ(a).
    Poly ambient() const;

    friend bool operator==(const AssociateVector&, const AssociateVector&) = default;

private:
    Vec entries_;
};

/// Ψ(c) = Σ c_i X^i.
Poly psi(const Vec& v);
/// Inverse of Ψ on polynomials of degree < n. Throws InvalidArgument otherwise.
Vec psi_inverse(const Poly& f, std::size_t n);

struct ShiftMatrices {
    Matrix d;  // D_a
    Matrix e;  // E_b
    Vec b;     // b_j = -a_{j+1} a_0^{-1}, b_{n-1} = a_0^{-1}
};
ShiftMatrices shift_matrices(const AssociateVector& a);

/// ℓ_a for the ambient X^n - Ψ(a).
std::uint64_t period(const AssociateVector& a, std::uint64_t cap = kDefaultPeriodCap);

}  // namespace chaincode
