#pragma once

#include <vector>

#include "ntext/algebra.hpp"
#include "ntext/bimodule.hpp"

namespace ntx {

/// S = R x| (M_1, ..., M_n) assembled as a structure-constant algebra on
/// R + M_1 + ... + M_n (degree 0 is R). The degree-k part of a product is
/// the sum over i + j = k of the degree-i by degree-j products; anything of
/// degree above n vanishes.
class ExtensionRing {
public:
    ExtensionRing(StructureAlgebra base, PhiSystem phi_system, StructureAlgebra total, std::vector<std::size_t> offsets);

    [[nodiscard]] const StructureAlgebra& base() const noexcept { return base_; }
    [[nodiscard]] const PhiSystem& phi_system() const noexcept { return phi_; }
    [[nodiscard]] const StructureAlgebra& total() const noexcept { return total_; }
    [[nodiscard]] PrimeField field() const noexcept { return base_.field(); }
    [[nodiscard]] std::size_t n() const noexcept { return phi_.n(); }
    [[nodiscard]] std::size_t dim() const noexcept { return total_.dim(); }

    /// offsets()[d] is the first S-coordinate of degree d; offsets()[n + 1] == dim().
    [[nodiscard]] const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
    [[nodiscard]] std::size_t offset(std::size_t degree) const { return offsets_.at(degree); }
    [[nodiscard]] std::size_t component_dim(std::size_t degree) const {
        return offsets_.at(degree + 1) - offsets_.at(degree);
    }
    /// S-basis index of basis vector b of the degree-d component.
    [[nodiscard]] std::size_t basis_index(std::size_t degree, std::size_t b) const { return offsets_.at(degree) + b; }

    /// The ring maps i : R -> S and pi : S -> R.
    [[nodiscard]] Mat inj() const;
    [[nodiscard]] Mat proj() const;

private:
    StructureAlgebra base_;
    PhiSystem phi_;
    StructureAlgebra total_;
    std::vector<std::size_t> offsets_;
};

/// Throws InvalidInput carrying the validation report when r or ps is invalid.
ExtensionRing build_extension(const StructureAlgebra& r, const PhiSystem& ps);

/// Splits S-coordinates into (r-part, m_1-part, ..., m_n-part).
std::vector<Vec> graded_components(const ExtensionRing& s, std::span<const Residue> x);
Vec assemble_components(const ExtensionRing& s, const std::vector<Vec>& parts);

/// The extension built from R^op, the bimodules with their sides swapped and
/// phi^op(i, j)(a (x) b) = phi(j, i)(b (x) a). Its table is the opposite of s.total().
ExtensionRing opposite_extension(const ExtensionRing& s);

/// Permutation U (x) V -> V (x) U on vectorised tensors.
Mat tensor_swap(PrimeField field, std::size_t dim_u, std::size_t dim_v);

}  // namespace ntx
