#include "doctest.h"
#include "ntext/bimodule.hpp"
#include "support.hpp"

using namespace ntx;

TEST_CASE("tensor_over_R examples") {
    const auto r = truncated_polynomial_algebra(PrimeField(5), 2);
    const LeftModule x{3, {Mat::identity(PrimeField(5), 3), testing::rows(5, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}})}};
    REQUIRE(validate_module(r, x).ok());
    const auto t = tensor_over_R(Bimodule::regular(r), x);
    CHECK(t.dim() == x.dim);
    // R (x) X ~ X through r (x) x |-> r x, and the induced action is the original one.
    const Mat mult = [&] {
        Mat m(PrimeField(5), 3, 6);
        for (std::size_t a = 0; a < 2; ++a) m.set_block(0, a * 3, x.action[a]);
        return m;
    }();
    const Mat iso = mult * t.section;
    REQUIRE(is_invertible(iso));
    CHECK((mult * t.relations.inclusion()).is_zero());
    for (std::size_t k = 0; k < 2; ++k) CHECK(iso * t.module->action[k] == x.action[k] * iso);

    CHECK(tensor_over_R(Bimodule::regular(r), zero_module(r)).dim() == 0);

    const auto r3 = truncated_polynomial_algebra(PrimeField(2), 3);
    const auto t3 = tensor_over_R(Bimodule::regular(r3), regular_module(r3));
    CHECK(t3.dim() == 3);
    CHECK(t3.relations.dim() == 6);
}

TEST_CASE("tensor with a quotient bimodule") {
    const auto r = truncated_polynomial_algebra(PrimeField(2), 2);
    const auto top = Bimodule::quotient(r, Subspace::row_span(testing::rows(2, {{0, 1}})));
    CHECK(top.dim == 1);
    CHECK(validate_bimodule(r, top).ok());
    // R/(x) (x) R ~ R/(x)
    CHECK(tensor_over_R(top, regular_module(r)).dim() == 1);
    // R/(x) (x) R/(x) ~ R/(x)
    const LeftModule simple{1, {Mat::identity(PrimeField(2), 1), Mat(PrimeField(2), 1, 1)}};
    CHECK(tensor_over_R(top, simple).dim() == 1);
}

TEST_CASE("hom_R examples") {
    const auto r = truncated_polynomial_algebra(PrimeField(3), 2);
    const LeftModule x{2, {Mat::identity(PrimeField(3), 2), testing::rows(3, {{0, 0}, {1, 0}})}};
    const auto h = hom_R(Bimodule::regular(r), x);
    CHECK(h.dim() == 2);
    // evaluation at 1 is an R-isomorphism Hom_R(R, X) -> X
    Mat ev(PrimeField(3), 2, 2);
    const auto basis = h.maps.basis();
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::size_t i = 0; i < 2; ++i) ev(i, t) = basis[t](i, 0);
    REQUIRE(is_invertible(ev));
    for (std::size_t k = 0; k < 2; ++k) CHECK(ev * h.module.action[k] == x.action[k] * ev);

    CHECK(hom_R(Bimodule::regular(r), zero_module(r)).dim() == 0);

    const auto f2 = truncated_polynomial_algebra(PrimeField(2), 1);
    const LeftModule x2{2, {Mat::identity(PrimeField(2), 2)}};
    CHECK(hom_R(Bimodule::regular(f2), x2).dim() == 2);
}

TEST_CASE("hom and tensor are dual in dimension") {
    const auto r = truncated_polynomial_algebra(PrimeField(2), 2);
    const auto top = Bimodule::quotient(r, Subspace::row_span(testing::rows(2, {{0, 1}})));
    const auto reg = Bimodule::regular(r);
    std::vector<LeftModule> xs{regular_module(r), zero_module(r),
                               LeftModule{1, {Mat::identity(PrimeField(2), 1), Mat(PrimeField(2), 1, 1)}},
                               direct_sum(r, regular_module(r), regular_module(r))};
    for (const auto& m : {reg, top})
        for (const auto& x : xs) {
            // Hom_R(M, X)* ~ M (x)_R X*, with X* a right module.
            const auto dual = dual_right(x);
            const auto t = balanced_tensor(dual, LeftModule{m.dim, m.left});
            CHECK(hom_R(m, x).dim() == t.dim());
        }
}

TEST_CASE("validate_phi examples") {
    const auto r = truncated_polynomial_algebra(PrimeField(3), 1);
    const auto m = Bimodule::regular(r);
    CHECK(validate_phi(r, PhiSystem(3, {m, m, m}, {})).ok());
    CHECK(validate_phi(r, PhiSystem(1, {m}, {})).ok());
    std::map<PhiSystem::Key, Mat> phi;
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; i + j <= 3; ++j) phi.emplace(PhiSystem::Key{i, j}, Mat::identity(PrimeField(3), 1));
    CHECK(validate_phi(r, PhiSystem(3, {m, m, m}, phi)).ok());

    // Breaking associativity: phi(2,1) = 2 while phi(1,1) = phi(1,2) = 1.
    phi[{2, 1}] = testing::rows(3, {{2}});
    const auto rep = validate_phi(r, PhiSystem(3, {m, m, m}, phi));
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.failures().front().find("(1,1,1)") != std::string::npos);

    CHECK_THROWS_AS(PhiSystem(2, {m, m}, {{{2, 1}, Mat::identity(PrimeField(3), 1)}}), std::invalid_argument);
}

TEST_CASE("phi must be balanced") {
    const auto r = truncated_polynomial_algebra(PrimeField(2), 2);
    const auto reg = Bimodule::regular(r);
    // (a, b) |-> a_0 b_0 as the constant term only: not balanced (x (x) 1 vs 1 (x) x).
    Mat bad(PrimeField(2), 2, 4);
    bad(0, 1) = 1;  // e0 (x) e1 |-> e0
    const auto rep = validate_phi(r, PhiSystem(2, {reg, reg}, {{{1, 1}, bad}}));
    CHECK_FALSE(rep.ok());
}

TEST_CASE("bimodule validation") {
    const auto r = truncated_polynomial_algebra(PrimeField(2), 2);
    auto b = Bimodule::regular(r);
    CHECK(validate_bimodule(r, b).ok());
    CHECK(validate_bimodule(r, Bimodule::zero(r)).ok());
    b.right[1] = Mat::identity(PrimeField(2), 2);
    CHECK_FALSE(validate_bimodule(r, b).ok());
}
