#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ntext/algebra.hpp"
#include "ntext/common.hpp"
#include "ntext/lmodule.hpp"

namespace ntx {

/// A right module: action[k] is the matrix of m |-> m * e_k.
struct RightModule {
    std::size_t dim = 0;
    std::vector<Mat> action;
};

/// An R-R bimodule.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Mat> left;   // left[k] : m |-> e_k * m
    std::vector<Mat> right;  // right[k] : m |-> m * e_k

    [[nodiscard]] LeftModule as_left() const { return {dim, left}; }
    [[nodiscard]] RightModule as_right() const { return {dim, right}; }

    static Bimodule regular(const StructureAlgebra& r);
    static Bimodule zero(const StructureAlgebra& r);
    /// R / I for a two-sided ideal I, in the basis of quotient_map(dim R, I).
    static Bimodule quotient(const StructureAlgebra& r, const Subspace& ideal);

    friend bool operator==(const Bimodule&, const Bimodule&) = default;
};

ValidationReport validate_bimodule(const StructureAlgebra& r, const Bimodule& m);

/// The right action of R on the F_p-dual of a left module.
RightModule dual_right(const LeftModule& x);

/// M (x)_R X realised as a quotient of the F_p-tensor ambient (left factor
/// slow) by the balancing relations m r (x) x - m (x) r x.
struct TensorSpace {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    Subspace relations;
    Mat proj;
    Mat section;
    /// Induced left R-action, present when the left factor is a bimodule.
    std::optional<LeftModule> module;

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return left_dim * right_dim; }
    [[nodiscard]] std::size_t dim() const noexcept { return proj.rows(); }
};

TensorSpace balanced_tensor(const RightModule& m, const LeftModule& x);
TensorSpace tensor_over_R(const Bimodule& m, const LeftModule& x);

/// Hom_R(M, X) as a left R-module via (r h)(m) = h(m r).
struct HomSpace {
    MatrixSpace maps;   // X.dim x M.dim matrices
    LeftModule module;  // action on coordinates w.r.t. maps' echelon basis

    [[nodiscard]] std::size_t dim() const noexcept { return maps.dim(); }
    [[nodiscard]] Vec coordinates(const Mat& h) const { return maps.coordinates(h); }
    [[nodiscard]] Mat element(std::span<const Residue> c) const { return maps.element(c); }
};

HomSpace hom_R(const Bimodule& m, const LeftModule& x);

/// The bimodules M_1..M_n and the pre-products phi(i, j) : M_i (x) M_j -> M_(i+j)
/// for i + j <= n, each stored on the full tensor ambient. Degrees are 1-based.
class PhiSystem {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    PhiSystem(std::size_t n, std::vector<Bimodule> modules, std::map<Key, Mat> phi);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const Bimodule& module(std::size_t i) const { return modules_.at(i - 1); }
    [[nodiscard]] const std::vector<Bimodule>& modules() const noexcept { return modules_; }
    [[nodiscard]] std::size_t dim(std::size_t i) const { return module(i).dim; }
    /// Requires i, j >= 1 and i + j <= n.
    [[nodiscard]] const Mat& phi(std::size_t i, std::size_t j) const;
    [[nodiscard]] const std::map<Key, Mat>& phi_table() const noexcept { return phi_; }

private:
    std::size_t n_;
    std::vector<Bimodule> modules_;
    std::map<Key, Mat> phi_;
};

/// Shape, balancing, bilinearity and associativity of the pre-products:
/// phi(i+j, k) (phi(i, j) (x) id) == phi(i, j+k) (id (x) phi(j, k)).
ValidationReport validate_phi(const StructureAlgebra& r, const PhiSystem& ps);

}  // namespace ntx
