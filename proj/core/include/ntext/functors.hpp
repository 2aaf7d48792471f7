#pragma once

// The functors between R-modules and S-modules:
//   T : X |-> (X + M_1 (x) X + ... + M_n (x) X, kappa)    left adjoint of U
//   C : (X, f) |-> X / (Im f_1 + ... + Im f_n)          left adjoint of Z
//   U : (X, f) |-> X,   Z : X |-> (X, 0)
//   H : X |-> (G_n X + ... + G_1 X + X, lambda)         right adjoint of U
//   K : (X, g) |-> ker(g_1, ..., g_n)                   right adjoint of Z
// with G_i = Hom_R(M_i, -).

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ntext/smodule.hpp"

namespace ntx {

struct TObject {
    FModule module;
    /// tensors[i - 1] realises M_i (x)_R X.
    std::vector<TensorSpace> tensors;
    /// offsets[0] = 0 is the X block, offsets[i] the M_i (x) X block; back() = dim.
    std::vector<std::size_t> offsets;
};

TObject T_object(const ExtensionRing& s, const LeftModule& x);
FModule T(const ExtensionRing& s, const LeftModule& x);
/// T(alpha) for an R-linear alpha : x -> y.
Mat T_map(const ExtensionRing& s, const LeftModule& x, const LeftModule& y, const Mat& alpha);

struct CObject {
    LeftModule module;
    Mat proj;     // X -> C(m), the natural surjection
    Mat section;  // linear (not necessarily R-linear) right inverse of proj
};

CObject C_object(const ExtensionRing& s, const FModule& m);
LeftModule C(const ExtensionRing& s, const FModule& m);
/// C(gamma); throws std::invalid_argument if gamma does not descend.
Mat C_map(const ExtensionRing& s, const FModule& a, const FModule& b, const Mat& gamma);

LeftModule U(const FModule& m);
FModule Z(const ExtensionRing& s, const LeftModule& x);

struct HObject {
    GModule module;
    FModule fmodule;  // the same module in (X, f) form
    /// homs[k - 1] realises G_k X = Hom_R(M_k, X).
    std::vector<HomSpace> homs;
    /// Block offsets in the order G_n X, ..., G_1 X, X; offsets.back() = dim.
    std::vector<std::size_t> offsets;

    /// First coordinate of the G_k X block (k >= 1) or of the X block (k == 0).
    [[nodiscard]] std::size_t block(std::size_t k) const { return offsets.at(offsets.size() - 2 - k); }
};

HObject H_object(const ExtensionRing& s, const LeftModule& x);
GModule H(const ExtensionRing& s, const LeftModule& x);
Mat H_map(const ExtensionRing& s, const LeftModule& x, const LeftModule& y, const Mat& alpha);

struct KObject {
    LeftModule module;
    Subspace kernel;
    Mat inclusion;
};

KObject K_object(const ExtensionRing& s, const GModule& g);
LeftModule K(const ExtensionRing& s, const GModule& g);
Mat K_map(const ExtensionRing& s, const GModule& a, const GModule& b, const Mat& gamma);

/// The S-map T(x) -> y adjoint to an R-linear h : x -> U(y).
Mat T_transpose(const ExtensionRing& s, const TObject& tx, const FModule& y, const Mat& h);
/// The S-map m -> H(y) adjoint to an R-linear h : U(m) -> y.
Mat H_transpose(const ExtensionRing& s, const FModule& m, const HObject& hy, const Mat& h);

enum class FunctorTag { U, Z, T, C, H, K };
std::string_view to_string(FunctorTag t) noexcept;
/// Throws std::invalid_argument on an unknown name.
FunctorTag parse_functor_tag(std::string_view name);

using ModuleArg = std::variant<LeftModule, FModule, GModule>;

struct AdjunctionReport {
    std::string pair;
    std::size_t left_dim = 0;   // dim Hom(L x, y)
    std::size_t right_dim = 0;  // dim Hom(x, R y)
    bool bijective = false;
    std::size_t squares_checked = 0;
    std::size_t squares_failed = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
        return left_dim == right_dim && bijective && squares_failed == 0 && failures.empty();
    }
};

/// Checks the adjunction bijection Hom(L x, y) ~ Hom(x, R y) for
/// (L, R) in {(T, U), (C, Z), (U, H), (Z, K)}: equal dimensions, the explicit
/// bijection and its inverse compose to identities, and `samples` naturality
/// squares built from seeded random endomorphisms of x and y commute.
/// Argument kinds: (T,U): x R-module, y (X,f); (C,Z): x (X,f), y R-module;
/// (U,H): x (X,f), y R-module; (Z,K): x R-module, y (X,g).
/// Throws std::invalid_argument for other pairs or argument kinds.
AdjunctionReport check_adjunction(const ExtensionRing& s, FunctorTag left, FunctorTag right, const ModuleArg& x,
                                  const ModuleArg& y, std::size_t samples = 20, std::uint64_t seed = 0);

}  // namespace ntx
