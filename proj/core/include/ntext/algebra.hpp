#pragma once

#include <cstdint>
#include <vector>

#include "ntext/common.hpp"
#include "ntext/linalg.hpp"

namespace ntx {

/// A finite-dimensional unital F_p-algebra given by structure constants.
///
/// The multiplication is stored as a dim x dim^2 matrix `mult` with
/// mult * vec(x (x) y) = x * y, i.e. column i * dim + j holds e_i * e_j.
/// Construction only checks shapes; use validate() for the algebra axioms.
class StructureAlgebra {
public:
    StructureAlgebra(PrimeField field, std::size_t dim, Mat mult, Vec unit);
    /// table[i][j] is the coordinate vector of e_i * e_j.
    static StructureAlgebra from_table(PrimeField field, const std::vector<std::vector<Vec>>& table, Vec unit);

    [[nodiscard]] PrimeField field() const noexcept { return field_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Mat& mult() const noexcept { return mult_; }
    [[nodiscard]] const Vec& unit() const noexcept { return unit_; }
    [[nodiscard]] Vec basis_product(std::size_t i, std::size_t j) const { return mult_.col(i * dim_ + j); }

    [[nodiscard]] Vec mul(std::span<const Residue> x, std::span<const Residue> y) const;
    [[nodiscard]] Mat left_regular(std::span<const Residue> x) const;
    [[nodiscard]] Mat right_regular(std::span<const Residue> x) const;
    [[nodiscard]] Vec basis_vector(std::size_t k) const;

    /// Same space with x *op y = y * x.
    [[nodiscard]] StructureAlgebra opposite() const;
    [[nodiscard]] bool is_commutative() const;

    friend bool operator==(const StructureAlgebra&, const StructureAlgebra&) = default;

private:
    PrimeField field_;
    std::size_t dim_;
    Mat mult_;
    Vec unit_;
};

/// An element bound to its parent algebra (the parent must outlive it).
class AlgebraElement {
public:
    AlgebraElement(const StructureAlgebra& parent, Vec coords);

    [[nodiscard]] const StructureAlgebra& parent() const noexcept { return *parent_; }
    [[nodiscard]] const Vec& coords() const noexcept { return coords_; }

    /// Throws std::invalid_argument if the parents differ.
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.parent_ == y.parent_ && x.coords_ == y.coords_;
    }

private:
    const StructureAlgebra* parent_;
    Vec coords_;
};

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
Mat left_regular(const AlgebraElement& x);

/// Reports every failed associativity triple and unit law.
ValidationReport validate(const StructureAlgebra& a);

/// Searches for a unital algebra isomorphism a -> b. The map is pinned down by
/// the images of a greedy generating set of a; those images are enumerated
/// exhaustively when p^(dim * #generators) <= budget, otherwise sampled
/// `budget` times from a generator seeded with `seed`.
IsoResult algebras_isomorphic(const StructureAlgebra& a, const StructureAlgebra& b, std::uint64_t budget,
                              std::uint64_t seed = 0);

/// Checks that w is an invertible unital algebra map a -> b.
bool is_algebra_isomorphism(const Mat& w, const StructureAlgebra& a, const StructureAlgebra& b);

/// F_p[x]/(x^k) in the monomial basis 1, x, ..., x^(k-1).
StructureAlgebra truncated_polynomial_algebra(PrimeField field, std::size_t k);

}  // namespace ntx
