#pragma once

// Finite-dimensional left modules over a StructureAlgebra, given by the
// action matrices of the algebra's basis elements. Used both for R-modules
// and, via the assembled table, for plain S-modules.

#include <cstdint>
#include <vector>

#include "ntext/algebra.hpp"
#include "ntext/common.hpp"

namespace ntx {

struct LeftModule {
    std::size_t dim = 0;
    std::vector<Mat> action;  // action[k] is the dim x dim matrix of e_k

    friend bool operator==(const LeftModule&, const LeftModule&) = default;
};

/// Matrix by which an algebra element (given by coordinates) acts.
Mat act(const LeftModule& x, std::span<const Residue> element);

/// Checks shapes, the unit law and multiplicativity on all basis pairs.
ValidationReport validate_module(const StructureAlgebra& a, const LeftModule& x);

LeftModule zero_module(const StructureAlgebra& a);
LeftModule regular_module(const StructureAlgebra& a);
LeftModule free_module(const StructureAlgebra& a, std::size_t rank);
LeftModule direct_sum(const StructureAlgebra& a, const LeftModule& x, const LeftModule& y);
/// Module on a subspace stable under the action, in the subspace's echelon basis.
LeftModule restrict_to(const LeftModule& x, const Subspace& stable);
/// Quotient module in the basis of quotient_map(x.dim, sub).
LeftModule quotient_by(const LeftModule& x, const Subspace& stable);
/// Transport of structure along an invertible change of basis: g x g^-1.
LeftModule conjugate(const LeftModule& x, const Mat& g);

/// Smallest submodule containing the columns of gens.
Subspace generated_submodule(const LeftModule& x, const Mat& gens);

/// The F_p-dual X* = Hom(X, F_p) as a left module over the opposite algebra.
LeftModule dual_module(const LeftModule& x);

/// Hom_A(x, y) as a space of y.dim x x.dim matrices.
MatrixSpace hom_space(const LeftModule& x, const LeftModule& y);
bool is_homomorphism(const Mat& h, const LeftModule& x, const LeftModule& y);

/// Searches a basis of maps for an invertible linear combination: exhaustively
/// when p^basis.size() <= budget, otherwise `budget` seeded random draws.
/// A negative answer is only given in the exhaustive case.
IsoResult find_invertible_combination(PrimeField field, const std::vector<Mat>& basis, std::uint64_t budget,
                                      std::uint64_t seed);

IsoResult modules_isomorphic(const LeftModule& x, const LeftModule& y, std::uint64_t budget, std::uint64_t seed = 0);

/// A surjection from a free module onto x.
struct FreeCover {
    std::size_t rank = 0;
    LeftModule free;
    Mat map;          // x.dim x free.dim, A-linear and surjective
    Mat generators;   // x.dim x rank, images of the free generators
};

/// Cover with one free generator per basis vector of x.
FreeCover basis_cover(const StructureAlgebra& a, const LeftModule& x);
/// Cover on a greedily chosen generating set (basis vectors not already in
/// the submodule generated by earlier choices).
FreeCover greedy_cover(const StructureAlgebra& a, const LeftModule& x);
/// The A-linear map free(rank) -> x sending generator t to column t of gens.
Mat map_from_free(const StructureAlgebra& a, const LeftModule& x, const Mat& gens);

/// Does `cover.map` admit an A-linear section? Returns one if so.
std::optional<Mat> splitting(const FreeCover& cover, const LeftModule& x);
/// Exact projectivity test: x is projective iff its basis cover splits.
bool is_projective_module(const StructureAlgebra& a, const LeftModule& x);

struct Syzygy {
    LeftModule module;
    Mat inclusion;  // into the free module of the greedy cover
    FreeCover cover;
};
Syzygy syzygy(const StructureAlgebra& a, const LeftModule& x);

/// Syzygies larger than this multiple of dim A are not followed.
inline constexpr std::size_t kSyzygyGrowthLimit = 16;

/// Projective dimension by iterated syzygies; capped at `cap`, or earlier at
/// the current step once a syzygy outgrows kSyzygyGrowthLimit * dim A (the
/// value is still a lower bound then).
HomDim projective_dimension(const StructureAlgebra& a, const LeftModule& x, std::size_t cap);
/// Injective dimension as the projective dimension of the dual over A^op.
HomDim injective_dimension(const StructureAlgebra& a, const LeftModule& x, std::size_t cap);

/// Free resolution P_k -> ... -> P_0 -> x -> 0 with greedy covers. differentials[0]
/// is the augmentation P_0 -> x; differentials[t] : P_t -> P_(t-1) for t >= 1.
struct FreeResolution {
    std::vector<std::size_t> ranks;
    std::vector<Mat> differentials;
};
FreeResolution free_resolution(const StructureAlgebra& a, const LeftModule& x, std::size_t length);

/// dim Ext^k_A(x, y) for k = 0..max_degree, from a free resolution of x.
std::vector<std::size_t> ext_dimensions(const StructureAlgebra& a, const LeftModule& x, const LeftModule& y,
                                        std::size_t max_degree);

}  // namespace ntx
