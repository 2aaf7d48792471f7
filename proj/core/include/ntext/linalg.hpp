#pragma once

// Dense exact linear algebra over a prime field.
//
// Conventions used throughout the library:
//  * vectors are columns; a matrix acts by left multiplication;
//  * tensors are vectorised with the left factor as the slow index, so the
//    basis vector e_a (x) e_b of U (x) V sits at a * dim(V) + b, and
//    kron(A, B) acts on that vectorisation;
//  * a matrix H of shape r x c is vectorised row-major: vec(H)[i * c + j].

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntext/field.hpp"

namespace ntx {

using Vec = std::vector<Residue>;

class Mat {
public:
    Mat() : Mat(PrimeField(2), 0, 0) {}
    Mat(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Mat identity(PrimeField field, std::size_t n);
    /// Entries may be any integers; they are reduced mod p.
    static Mat from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows,
                         std::size_t cols_if_empty = 0);
    static Mat column(PrimeField field, std::span<const Residue> v);
    static Mat unit_column(PrimeField field, std::size_t n, std::size_t k);

    [[nodiscard]] PrimeField field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Residue& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    [[nodiscard]] std::span<const Residue> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const Residue> data() const noexcept { return data_; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] Mat transpose() const;
    [[nodiscard]] Mat scaled(Residue s) const;
    [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);
    /// Adds s * b into the block starting at (r0, c0).
    void add_block(std::size_t r0, std::size_t c0, const Mat& b, Residue s = 1);
    [[nodiscard]] Vec col(std::size_t j) const;
    [[nodiscard]] Mat select_columns(std::span<const std::size_t> idx) const;
    [[nodiscard]] Mat select_rows(std::span<const std::size_t> idx) const;
    /// Row-major vectorisation as a column.
    [[nodiscard]] Mat vec() const;
    /// Inverse of vec().
    [[nodiscard]] static Mat unvec(const Mat& column, std::size_t rows, std::size_t cols);

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& a, std::span<const Residue> v);
    friend bool operator==(const Mat& a, const Mat& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::vector<std::vector<long long>> to_rows() const;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

Mat hstack(PrimeField field, std::size_t rows, std::span<const Mat> blocks);
Mat vstack(PrimeField field, std::size_t cols, std::span<const Mat> blocks);
Mat block_diag(PrimeField field, std::span<const Mat> blocks);

/// Kronecker product; entry (i*b.rows + k, j*b.cols + l) = a(i,j) * b(k,l).
Mat kron(const Mat& a, const Mat& b);

struct RrefResult {
    Mat reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(Mat m);
std::size_t rank(const Mat& m);

/// A subspace of F_p^n stored by a reduced row-echelon basis (one basis vector
/// per row).
class Subspace {
public:
    static Subspace zero(PrimeField field, std::size_t ambient_dim);
    static Subspace full(PrimeField field, std::size_t ambient_dim);
    /// Span of the rows of m.
    static Subspace row_span(const Mat& m);
    /// Span of the columns of m.
    static Subspace column_span(const Mat& m) { return row_span(m.transpose()); }

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] PrimeField field() const noexcept { return basis_.field(); }
    /// Basis vectors as rows (reduced echelon form).
    [[nodiscard]] const Mat& basis() const noexcept { return basis_; }
    /// Basis vectors as columns: an injective map F_p^dim -> F_p^ambient.
    [[nodiscard]] Mat inclusion() const { return basis_.transpose(); }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    [[nodiscard]] bool contains(std::span<const Residue> v) const;
    /// True if every column of m lies in the subspace.
    [[nodiscard]] bool contains_columns(const Mat& m) const;
    /// Coordinates of a member vector in the echelon basis (read at the pivots).
    [[nodiscard]] Vec coordinates(std::span<const Residue> v) const;
    /// The dim x ambient matrix reading pivot coordinates; a left inverse of
    /// inclusion() on the subspace.
    [[nodiscard]] Mat coordinate_map() const;

    [[nodiscard]] Subspace sum(const Subspace& o) const;
    [[nodiscard]] Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Subspace(Mat basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Mat& m);
/// Column space of m.
inline Subspace image(const Mat& m) { return Subspace::column_span(m); }

/// Some X with m X = b, free variables set to zero; nullopt if inconsistent.
/// Throws std::invalid_argument if m.rows() != b.rows().
std::optional<Mat> solve(const Mat& m, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
bool is_invertible(const Mat& m);

struct QuotientMap {
    Mat proj;     // (n - dim sub) x n, kernel exactly sub
    Mat section;  // n x (n - dim sub), proj * section = I
};

/// Quotient F_p^n / sub with the quotient basis given by the non-pivot
/// coordinates of sub's echelon basis.
QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub);

/// Matrix of the linear map H |-> A H - H B on row-major vec(H), for H of
/// shape A.rows() x B.rows().
Mat sylvester_operator(const Mat& a, const Mat& b);

/// Matrix of an arbitrary linear map on rows x cols matrices, built by
/// evaluating it on the matrix units E_ij (column index i * cols + j).
template <class F>
Mat linear_operator_matrix(PrimeField field, std::size_t rows, std::size_t cols, F&& apply);

/// A subspace of rows x cols matrices, kept in vec coordinates.
class MatrixSpace {
public:
    MatrixSpace(std::size_t rows, std::size_t cols, Subspace span)
        : rows_(rows), cols_(cols), span_(std::move(span)) {}

    /// {H : op * vec(H) = 0}.
    static MatrixSpace solutions(std::size_t rows, std::size_t cols, const Mat& op);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t dim() const noexcept { return span_.dim(); }
    [[nodiscard]] PrimeField field() const noexcept { return span_.field(); }
    [[nodiscard]] const Subspace& span() const noexcept { return span_; }
    [[nodiscard]] Mat basis_element(std::size_t t) const;
    [[nodiscard]] std::vector<Mat> basis() const;
    [[nodiscard]] Mat element(std::span<const Residue> coords) const;
    [[nodiscard]] bool contains(const Mat& m) const { return span_.contains(m.vec().data()); }
    /// Coordinates of a member; read at the echelon pivots.
    [[nodiscard]] Vec coordinates(const Mat& m) const { return span_.coordinates(m.vec().data()); }

private:
    std::size_t rows_;
    std::size_t cols_;
    Subspace span_;
};

template <class F>
Mat linear_operator_matrix(PrimeField field, std::size_t rows, std::size_t cols, F&& apply) {
    std::vector<Mat> images;
    images.reserve(rows * cols);
    std::size_t out = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Mat e(field, rows, cols);
            e(i, j) = 1;
            images.push_back(apply(e).vec());
            out = images.back().rows();
        }
    return hstack(field, out, images);
}

}  // namespace ntx
