#pragma once

// Small test instances: base rings F_2, F_3 and F_2[x]/(x^2), bimodules
// taken from {0, R, R/rad}, canonical pre-products, R-modules in normal
// form, and enumerated or random S-modules.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ntext/homtests.hpp"

namespace ntx {

enum class BaseRing { f2, f3, dual2 };

struct RingData {
    std::string name;
    StructureAlgebra ring;
    Subspace radical;
};

RingData base_ring(BaseRing which);

/// The bimodule R / I with I = R (zero), 0 (regular) or rad R (top).
enum class Piece { zero, regular, top };
std::string_view to_string(Piece p) noexcept;

Subspace piece_ideal(const RingData& r, Piece p);
Bimodule piece_bimodule(const RingData& r, Piece p);

/// Pre-products induced by multiplication R/I_i x R/I_j -> R/I_(i+j) when
/// I_i + I_j lies in I_(i+j), and 0 otherwise. Falls back to all-zero maps
/// (reported through `fallback`) if the result fails validation.
PhiSystem canonical_phi_system(const RingData& r, const std::vector<Piece>& pieces, bool* fallback = nullptr);

struct Instance {
    std::string label;
    RingData base;
    std::vector<Piece> pieces;
    ExtensionRing ext;
    bool phi_fallback = false;
};

Instance make_instance(BaseRing which, const std::vector<Piece>& pieces);

/// Every ring in {F_2, F_3, F_2[x]/(x^2)}, n in {1, 2, 3}, pieces in
/// {0, R, R/rad} (R/rad is omitted over fields, where it equals R).
std::vector<Instance> default_instances();

/// F_p with M_1 = ... = M_n = F_p and multiplication as pre-products;
/// isomorphic to F_p[x]/(x^(n+1)).
ExtensionRing serial_extension(Residue p, std::size_t n);

/// R-modules of dimension <= max_dim up to isomorphism (all dimensions for a
/// field; Jordan types of x for F_p[x]/(x^2)).
std::vector<LeftModule> normal_form_modules(const RingData& r, std::size_t max_dim);

/// The linear space of maps f_i : M_i (x) X -> X that are balanced and R-linear.
MatrixSpace structure_map_space(const ExtensionRing& s, const LeftModule& x, std::size_t i);

/// Checks conditions (i) and (ii) only (the linear conditions are assumed).
bool satisfies_compatibility(const ExtensionRing& s, const FModule& m);

struct Enumeration {
    std::vector<FModule> modules;
    std::uint64_t candidates = 0;
    std::size_t carriers_used = 0;  // carriers are taken in order until the limit would be exceeded
};

/// All valid (X, f) over the given carriers, taking carriers in order while the
/// cumulative number of candidate f-tuples stays <= limit.
Enumeration enumerate_fmodules(const ExtensionRing& s, const std::vector<LeftModule>& carriers, std::uint64_t limit);

/// A quotient of S^k (1 <= k <= max_rank) by the submodule generated by up to
/// two random vectors.
FModule random_fmodule(const ExtensionRing& s, std::mt19937_64& rng, std::size_t max_rank = 2);

/// X = x1 + U(top) with the S-structure of `top` on the second summand and
/// random maps M_i (x) x1 -> U(top) glueing x1 on; every Im f_i lies in U(top).
SplitCarrier random_split_carrier(const ExtensionRing& s, const LeftModule& x1, const FModule& top,
                                  std::mt19937_64& rng);

Mat random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

}  // namespace ntx
