#include "doctest.h"
#include "ntext/functors.hpp"
#include "support.hpp"

using namespace ntx;

namespace {

LeftModule field_module(Residue p, std::size_t d) { return {d, {Mat::identity(PrimeField(p), d)}}; }

}  // namespace

TEST_CASE("validate_fmodule examples") {
    for (const auto& inst : default_instances()) {
        CAPTURE(inst.label);
        for (const auto& x : normal_form_modules(inst.base, 2)) CHECK(validate_fmodule(inst.ext, Z(inst.ext, x)).ok());
        const auto reg = saction_to_fmodule(inst.ext, regular_module(inst.ext.total()));
        CHECK(validate_fmodule(inst.ext, reg).ok());
    }

    const auto s = serial_extension(2, 2);
    FModule bad{field_module(2, 2), {Mat::identity(PrimeField(2), 2), Mat(PrimeField(2), 2, 2)}};
    const auto rep = validate_fmodule(s, bad);
    REQUIRE(rep.failures().size() == 1);
    CHECK(rep.failures()[0].find("condition (ii)") != std::string::npos);
    CHECK(rep.failures()[0].find("(1,1)") != std::string::npos);

    FModule bad_shape{field_module(2, 2), {Mat(PrimeField(2), 2, 3), Mat(PrimeField(2), 2, 2)}};
    CHECK_FALSE(validate_fmodule(s, bad_shape).ok());
}

TEST_CASE("fmodule_to_saction examples") {
    const auto s = serial_extension(2, 1);
    const Mat n = testing::rows(2, {{0, 0}, {1, 0}});
    const FModule m{field_module(2, 2), {n}};
    const auto a = fmodule_to_saction(s, m);
    REQUIRE(a.action.size() == 2);
    CHECK(a.action[0] == Mat::identity(PrimeField(2), 2));
    CHECK(a.action[1] == n);
    CHECK(saction_to_fmodule(s, a) == m);

    const auto za = fmodule_to_saction(s, Z(s, field_module(2, 3)));
    CHECK(za.action[1].is_zero());
    CHECK(saction_to_fmodule(s, za) == Z(s, field_module(2, 3)));
}

TEST_CASE("T(R) is the left regular representation") {
    for (const auto& inst : default_instances()) {
        CAPTURE(inst.label);
        const auto& s = inst.ext;
        CHECK(fmodule_to_saction(s, T(s, regular_module(s.base()))) == regular_module(s.total()));
        CHECK(saction_to_fmodule(s, regular_module(s.total())) == T(s, regular_module(s.base())));
    }
}

TEST_CASE("round trips on random modules") {
    std::mt19937_64 rng(31337);
    for (const auto& inst : default_instances()) {
        CAPTURE(inst.label);
        for (int t = 0; t < 10; ++t) {
            const FModule m = random_fmodule(inst.ext, rng);
            REQUIRE(validate_fmodule(inst.ext, m).ok());
            const auto a = fmodule_to_saction(inst.ext, m);
            CHECK(validate_saction(inst.ext, a).ok());
            CHECK(saction_to_fmodule(inst.ext, a) == m);
            CHECK(fmodule_to_saction(inst.ext, saction_to_fmodule(inst.ext, a)) == a);
            const GModule g = to_left_form(inst.ext, m);
            CHECK(validate_gmodule(inst.ext, g).ok());
            CHECK(from_left_form(inst.ext, g) == m);
        }
    }
}

TEST_CASE("invalid S-actions are rejected") {
    const auto s = serial_extension(3, 1);
    SAction a{1, {Mat::identity(PrimeField(3), 1), Mat::identity(PrimeField(3), 1)}};  // x acts invertibly, x^2 != 0
    CHECK_THROWS_AS((void)saction_to_fmodule(s, a), InvalidInput);
    SAction nonunital{1, {Mat(PrimeField(3), 1, 1), Mat(PrimeField(3), 1, 1)}};
    CHECK_THROWS_AS((void)saction_to_fmodule(s, nonunital), InvalidInput);
}

TEST_CASE("morphism_space examples") {
    const auto s = serial_extension(3, 1);
    const auto r = regular_module(s.base());
    CHECK(morphism_space(s, Z(s, r), Z(s, r)).dim() == 1);
    CHECK(morphism_space(s, T(s, r), Z(s, r)).dim() == hom_space(C(s, T(s, r)), r).dim());
    CHECK(morphism_space(s, T(s, r), Z(s, r)).dim() == 1);

    std::mt19937_64 rng(99);
    for (const auto& inst : default_instances()) {
        const auto m = random_fmodule(inst.ext, rng);
        CHECK(morphism_space(inst.ext, m, m).contains(Mat::identity(inst.ext.field(), m.dim())));
    }
}

TEST_CASE("morphism spaces agree with S-linear maps, in both forms") {
    std::mt19937_64 rng(4242);
    for (const auto& inst : default_instances()) {
        CAPTURE(inst.label);
        const auto& s = inst.ext;
        for (int t = 0; t < 4; ++t) {
            const auto a = random_fmodule(s, rng), b = random_fmodule(s, rng);
            const auto hom = morphism_space(s, a, b);
            CHECK(hom.dim() == hom_space(fmodule_to_saction(s, a), fmodule_to_saction(s, b)).dim());
            const auto ga = to_left_form(s, a), gb = to_left_form(s, b);
            for (const auto& g : hom.basis()) CHECK(is_gmorphism(s, g, ga, gb));
            // A random matrix is a G-morphism exactly when it is an F-morphism.
            for (int u = 0; u < 3; ++u) {
                const Mat g = random_matrix(s.field(), b.dim(), a.dim(), rng);
                CHECK(is_gmorphism(s, g, ga, gb) == is_fmorphism(s, g, a, b));
                CHECK(is_fmorphism(s, g, a, b) == hom.contains(g));
            }
        }
    }
}

TEST_CASE("isomorphic examples") {
    const auto s = serial_extension(2, 2);
    const auto r = regular_module(s.base());
    const auto tr = T(s, r);
    auto res = isomorphic(s, tr, tr, 1'000'000);
    CHECK(res.verdict == Verdict::yes);
    CHECK(is_fmorphism(s, *res.witness, tr, tr));
    res = isomorphic(s, tr, Z(s, r), 1'000'000);
    CHECK(res.verdict == Verdict::no);
    CHECK(res.reason.find("dimension") != std::string::npos);
    const auto reg = saction_to_fmodule(s, regular_module(s.total()));
    CHECK(isomorphic(s, T(s, C(s, reg)), reg, 1'000'000).verdict == Verdict::yes);

    // conjugating a module by a random invertible matrix gives an isomorphic one
    std::mt19937_64 rng(5);
    const auto inst = make_instance(BaseRing::dual2, {Piece::regular, Piece::top});
    for (int t = 0; t < 5; ++t) {
        const auto m = random_fmodule(inst.ext, rng);
        Mat g;
        do g = random_matrix(inst.ext.field(), m.dim(), m.dim(), rng);
        while (!is_invertible(g));
        const auto c = saction_to_fmodule(inst.ext, conjugate(fmodule_to_saction(inst.ext, m), g));
        const auto r2 = isomorphic(inst.ext, m, c, 1'000'000);
        CHECK(r2.verdict == Verdict::yes);
    }
}

TEST_CASE("left form of T(R) over F_2 x| F_2") {
    const auto s = serial_extension(2, 1);
    const auto tr = T(s, regular_module(s.base()));
    CHECK(tr.fi(1) == testing::rows(2, {{0, 0}, {1, 0}}));
    const auto g = to_left_form(s, tr);
    CHECK(g.gi(1) == testing::rows(2, {{0, 0}, {1, 0}}));
    CHECK(from_left_form(s, g) == tr);
    const auto z = to_left_form(s, Z(s, field_module(2, 2)));
    CHECK(z.gi(1).is_zero());
}

TEST_CASE("every module is a quotient of at most dim X copies of S") {
    std::mt19937_64 rng(8);
    for (const auto& inst : default_instances()) {
        const auto m = random_fmodule(inst.ext, rng);
        const auto a = fmodule_to_saction(inst.ext, m);
        const auto cover = greedy_cover(inst.ext.total(), a);
        CHECK(cover.rank <= m.dim());
        CHECK(rank(cover.map) == m.dim());
        CHECK(is_homomorphism(cover.map, cover.free, a));
    }
}

TEST_CASE("broken g data is rejected") {
    const auto s = serial_extension(2, 2);
    const auto m = saction_to_fmodule(s, regular_module(s.total()));
    auto g = to_left_form(s, m);
    CHECK(validate_gmodule(s, g).ok());
    g.g[1] = Mat(PrimeField(2), g.g[1].rows(), g.g[1].cols());
    const auto rep = validate_gmodule(s, g);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.failures()[0].find("(1,1)") != std::string::npos);
}
