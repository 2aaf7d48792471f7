#pragma once

// S-modules in three forms:
//  * a plain action of the assembled table (LeftModule over ext.total());
//  * an R-module X with maps f_i : M_i (x) X -> X (FModule);
//  * an R-module X with maps g_i : X -> Hom_R(M_i, X) (GModule).

#include <cstdint>
#include <vector>

#include "ntext/extension.hpp"

namespace ntx {

struct FModule {
    LeftModule x;
    /// f[i - 1] is dim X x (dim M_i * dim X), on the full tensor ambient.
    std::vector<Mat> f;

    [[nodiscard]] std::size_t dim() const noexcept { return x.dim; }
    [[nodiscard]] const Mat& fi(std::size_t i) const { return f.at(i - 1); }

    friend bool operator==(const FModule&, const FModule&) = default;
};

struct GModule {
    LeftModule x;
    /// g[i - 1] is dim Hom_R(M_i, X) x dim X, in the coordinates of hom_R(M_i, X).
    std::vector<Mat> g;

    [[nodiscard]] std::size_t dim() const noexcept { return x.dim; }
    [[nodiscard]] const Mat& gi(std::size_t i) const { return g.at(i - 1); }

    friend bool operator==(const GModule&, const GModule&) = default;
};

using SAction = LeftModule;

/// Shapes, the R-module axioms, balancing and R-linearity of each f_i, and
///   f_i (M_i (x) f_j) = 0                     for i + j > n,
///   f_(i+j) (phi(i, j) (x) X) = f_i (M_i (x) f_j)  for i + j <= n.
ValidationReport validate_fmodule(const ExtensionRing& s, const FModule& m);
ValidationReport validate_saction(const ExtensionRing& s, const SAction& a);

/// Both throw InvalidInput on invalid input.
SAction fmodule_to_saction(const ExtensionRing& s, const FModule& m);
FModule saction_to_fmodule(const ExtensionRing& s, const SAction& a);

/// Hom in (X, f) form: R-linear gamma with gamma f_i = f'_i (M_i (x) gamma).
/// Elements are b.dim() x a.dim() matrices.
MatrixSpace morphism_space(const ExtensionRing& s, const FModule& a, const FModule& b);
bool is_fmorphism(const ExtensionRing& s, const Mat& gamma, const FModule& a, const FModule& b);

/// Isomorphism search inside morphism_space; see find_invertible_combination.
IsoResult isomorphic(const ExtensionRing& s, const FModule& a, const FModule& b, std::uint64_t budget,
                     std::uint64_t seed = 0);

/// g_i(x) is the map m |-> f_i(m (x) x).
GModule to_left_form(const ExtensionRing& s, const FModule& m);
FModule from_left_form(const ExtensionRing& s, const GModule& g);

/// Shapes, R-linearity of each g_i, and for all basis m_i, m_j, x
///   g_(i+j)(x)(phi(i, j)(m_i (x) m_j)) = g_i(g_j(x)(m_j))(m_i)   for i + j <= n,
///   g_i(g_j(x)(m_j))(m_i) = 0                                  for i + j > n.
ValidationReport validate_gmodule(const ExtensionRing& s, const GModule& g);
/// R-linear gamma with g'_i gamma = Hom_R(M_i, gamma) g_i.
bool is_gmorphism(const ExtensionRing& s, const Mat& gamma, const GModule& a, const GModule& b);
/// Morphisms computed in (X, g) form, without converting to (X, f).
MatrixSpace gmorphism_space(const ExtensionRing& s, const GModule& a, const GModule& b);

/// Matrix of h |-> gamma h from Hom_R(M, X) to Hom_R(M, Y) in hom_R coordinates.
Mat hom_functor_map(const HomSpace& from, const HomSpace& to, const Mat& gamma);

FModule zero_fmodule(const ExtensionRing& s);
FModule direct_sum(const ExtensionRing& s, const FModule& a, const FModule& b);
/// The S-module on an f-stable R-submodule, in the subspace's echelon basis.
FModule restrict_to(const ExtensionRing& s, const FModule& m, const Subspace& stable);

}  // namespace ntx
