#include "ntext/smodule.hpp"

#include <stdexcept>

namespace ntx {

namespace {

std::string idx(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

bool shapes_ok(const ExtensionRing& s, const FModule& m, ValidationReport& rep) {
    const auto& ps = s.phi_system();
    if (m.x.action.size() != s.base().dim()) {
        rep.fail("module needs one action matrix per ring basis element");
        return false;
    }
    for (const auto& A : m.x.action)
        if (A.rows() != m.dim() || A.cols() != m.dim()) {
            rep.fail("action matrix has the wrong shape");
            return false;
        }
    if (m.f.size() != s.n()) {
        rep.fail("expected " + std::to_string(s.n()) + " structure maps, got " + std::to_string(m.f.size()));
        return false;
    }
    for (std::size_t i = 1; i <= s.n(); ++i)
        if (m.fi(i).rows() != m.dim() || m.fi(i).cols() != ps.dim(i) * m.dim()) {
            rep.fail("f_" + std::to_string(i) + " has shape " + std::to_string(m.fi(i).rows()) + "x" +
                     std::to_string(m.fi(i).cols()) + ", expected " + std::to_string(m.dim()) + "x" +
                     std::to_string(ps.dim(i) * m.dim()));
            return false;
        }
    return true;
}

}  // namespace

ValidationReport validate_fmodule(const ExtensionRing& s, const FModule& m) {
    ValidationReport rep;
    if (!shapes_ok(s, m, rep)) return rep;
    const auto& r = s.base();
    const auto& ps = s.phi_system();
    const auto F = s.field();
    rep.merge(validate_module(r, m.x), "R-module: ");
    const Mat Ix = Mat::identity(F, m.dim());
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const auto& Mi = ps.module(i);
        const Mat Ii = Mat::identity(F, Mi.dim);
        for (std::size_t k = 0; k < r.dim(); ++k) {
            if (!(m.fi(i) * (kron(Mi.right[k], Ix) - kron(Ii, m.x.action[k]))).is_zero())
                rep.fail("f_" + std::to_string(i) + " is not balanced for ring basis element " + std::to_string(k));
            if (!(m.fi(i) * kron(Mi.left[k], Ix) == m.x.action[k] * m.fi(i)))
                rep.fail("f_" + std::to_string(i) + " is not R-linear for ring basis element " + std::to_string(k));
        }
    }
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t j = 1; j <= s.n(); ++j) {
            const Mat rhs = m.fi(i) * kron(Mat::identity(F, ps.dim(i)), m.fi(j));
            if (i + j > s.n()) {
                if (!rhs.is_zero()) rep.fail("condition (i) fails for " + idx(i, j) + ": f_i (M_i (x) f_j) != 0");
            } else {
                const Mat lhs = m.fi(i + j) * kron(ps.phi(i, j), Ix);
                if (!(lhs == rhs))
                    rep.fail("condition (ii) fails for " + idx(i, j) + ": f_(i+j) (phi (x) X) != f_i (M_i (x) f_j)");
            }
        }
    return rep;
}

ValidationReport validate_saction(const ExtensionRing& s, const SAction& a) { return validate_module(s.total(), a); }

SAction fmodule_to_saction(const ExtensionRing& s, const FModule& m) {
    auto rep = validate_fmodule(s, m);
    if (!rep.ok()) throw InvalidInput("invalid (X, f) module", rep);
    const std::size_t d = m.dim();
    SAction a{d, {}};
    for (const auto& A : m.x.action) a.action.push_back(A);
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t b = 0; b < s.component_dim(i); ++b) a.action.push_back(m.fi(i).block(0, b * d, d, d));
    return a;
}

FModule saction_to_fmodule(const ExtensionRing& s, const SAction& a) {
    auto rep = validate_saction(s, a);
    if (!rep.ok()) throw InvalidInput("invalid S-action", rep);
    const auto F = s.field();
    FModule m{{a.dim, {}}, {}};
    for (std::size_t k = 0; k < s.base().dim(); ++k) m.x.action.push_back(a.action[k]);
    for (std::size_t i = 1; i <= s.n(); ++i) {
        std::vector<Mat> blocks;
        for (std::size_t b = 0; b < s.component_dim(i); ++b) blocks.push_back(a.action[s.basis_index(i, b)]);
        m.f.push_back(hstack(F, a.dim, blocks));
    }
    return m;
}

MatrixSpace morphism_space(const ExtensionRing& s, const FModule& a, const FModule& b) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t rows = b.dim(), cols = a.dim();
    std::vector<Mat> ops;
    for (std::size_t k = 0; k < s.base().dim(); ++k) ops.push_back(sylvester_operator(b.x.action[k], a.x.action[k]));
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const Mat Ii = Mat::identity(F, ps.dim(i));
        ops.push_back(linear_operator_matrix(F, rows, cols, [&](const Mat& g) {
            return g * a.fi(i) - b.fi(i) * kron(Ii, g);
        }));
    }
    return MatrixSpace::solutions(rows, cols, vstack(F, rows * cols, ops));
}

bool is_fmorphism(const ExtensionRing& s, const Mat& gamma, const FModule& a, const FModule& b) {
    if (gamma.rows() != b.dim() || gamma.cols() != a.dim()) return false;
    const auto F = s.field();
    for (std::size_t k = 0; k < s.base().dim(); ++k)
        if (!(gamma * a.x.action[k] == b.x.action[k] * gamma)) return false;
    for (std::size_t i = 1; i <= s.n(); ++i)
        if (!(gamma * a.fi(i) == b.fi(i) * kron(Mat::identity(F, s.component_dim(i)), gamma))) return false;
    return true;
}

IsoResult isomorphic(const ExtensionRing& s, const FModule& a, const FModule& b, std::uint64_t budget,
                     std::uint64_t seed) {
    if (a.dim() != b.dim()) {
        return {Verdict::no, std::nullopt,
                "dimension obstruction: " + std::to_string(a.dim()) + " != " + std::to_string(b.dim())};
    }
    if (a.dim() == 0) return {Verdict::yes, Mat(s.field(), 0, 0), "both modules are zero"};
    const auto hom = morphism_space(s, a, b);
    if (hom.dim() == 0) return {Verdict::no, std::nullopt, "no nonzero morphisms"};
    auto res = find_invertible_combination(s.field(), hom.basis(), budget, seed);
    if (res.verdict == Verdict::yes && !is_fmorphism(s, *res.witness, a, b))
        throw std::logic_error("isomorphic: witness failed re-verification");
    return res;
}

GModule to_left_form(const ExtensionRing& s, const FModule& m) {
    auto rep = validate_fmodule(s, m);
    if (!rep.ok()) throw InvalidInput("invalid (X, f) module", rep);
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t d = m.dim();
    GModule g{m.x, {}};
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const HomSpace hom = hom_R(ps.module(i), m.x);
        const std::size_t mi = ps.dim(i);
        Mat gi(F, hom.dim(), d);
        for (std::size_t x = 0; x < d; ++x) {
            Mat h(F, d, mi);
            for (std::size_t b = 0; b < mi; ++b)
                for (std::size_t r = 0; r < d; ++r) h(r, b) = m.fi(i)(r, b * d + x);
            const Vec c = hom.coordinates(h);
            for (std::size_t t = 0; t < c.size(); ++t) gi(t, x) = c[t];
        }
        g.g.push_back(std::move(gi));
    }
    return g;
}

FModule from_left_form(const ExtensionRing& s, const GModule& g) {
    auto rep = validate_gmodule(s, g);
    if (!rep.ok()) throw InvalidInput("invalid (X, g) module", rep);
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t d = g.dim();
    FModule m{g.x, {}};
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const HomSpace hom = hom_R(ps.module(i), g.x);
        const std::size_t mi = ps.dim(i);
        Mat fi(F, d, mi * d);
        for (std::size_t x = 0; x < d; ++x) {
            const Mat h = hom.element(g.gi(i).col(x));
            for (std::size_t b = 0; b < mi; ++b)
                for (std::size_t r = 0; r < d; ++r) fi(r, b * d + x) = h(r, b);
        }
        m.f.push_back(std::move(fi));
    }
    return m;
}

ValidationReport validate_gmodule(const ExtensionRing& s, const GModule& g) {
    ValidationReport rep;
    const auto& r = s.base();
    const auto& ps = s.phi_system();
    const auto F = s.field();
    if (g.x.action.size() != r.dim()) {
        rep.fail("module needs one action matrix per ring basis element");
        return rep;
    }
    for (const auto& A : g.x.action)
        if (A.rows() != g.dim() || A.cols() != g.dim()) {
            rep.fail("action matrix has the wrong shape");
            return rep;
        }
    rep.merge(validate_module(r, g.x), "R-module: ");
    if (!rep.ok()) return rep;
    if (g.g.size() != s.n()) {
        rep.fail("expected " + std::to_string(s.n()) + " structure maps, got " + std::to_string(g.g.size()));
        return rep;
    }
    std::vector<HomSpace> homs;
    for (std::size_t i = 1; i <= s.n(); ++i) {
        homs.push_back(hom_R(ps.module(i), g.x));
        if (g.gi(i).rows() != homs.back().dim() || g.gi(i).cols() != g.dim()) {
            rep.fail("g_" + std::to_string(i) + " has the wrong shape");
            return rep;
        }
    }
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t k = 0; k < r.dim(); ++k)
            if (!(g.gi(i) * g.x.action[k] == homs[i - 1].module.action[k] * g.gi(i)))
                rep.fail("g_" + std::to_string(i) + " is not R-linear for ring basis element " + std::to_string(k));

    // h_i[x] is the map M_i -> X attached to basis vector x.
    const std::size_t d = g.dim();
    std::vector<std::vector<Mat>> h(s.n());
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t x = 0; x < d; ++x) h[i - 1].push_back(homs[i - 1].element(g.gi(i).col(x)));
    auto apply_h = [&](std::size_t i, const Vec& y) {
        Mat out(F, d, ps.dim(i));
        for (std::size_t x = 0; x < d; ++x)
            if (y[x]) out.add_block(0, 0, h[i - 1][x], y[x]);
        return out;
    };
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t j = 1; j <= s.n(); ++j) {
            bool ok = true;
            for (std::size_t x = 0; x < d && ok; ++x)
                for (std::size_t b = 0; b < ps.dim(j) && ok; ++b) {
                    const Mat rhs = apply_h(i, h[j - 1][x].col(b));  // a |-> g_i(g_j(x)(m_b))(m_a)
                    if (i + j > s.n()) {
                        ok = rhs.is_zero();
                        continue;
                    }
                    const Mat& P = ps.phi(i, j);
                    for (std::size_t a = 0; a < ps.dim(i) && ok; ++a) {
                        const Vec lhs = h[i + j - 1][x] * P.col(a * ps.dim(j) + b);
                        ok = lhs == rhs.col(a);
                    }
                }
            if (!ok)
                rep.fail(std::string(i + j > s.n() ? "vanishing" : "compatibility") + " condition fails for " +
                         idx(i, j));
        }
    return rep;
}

Mat hom_functor_map(const HomSpace& from, const HomSpace& to, const Mat& gamma) {
    Mat out(gamma.field(), to.dim(), from.dim());
    const auto basis = from.maps.basis();
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const Vec c = to.coordinates(gamma * basis[t]);
        for (std::size_t u = 0; u < c.size(); ++u) out(u, t) = c[u];
    }
    return out;
}

bool is_gmorphism(const ExtensionRing& s, const Mat& gamma, const GModule& a, const GModule& b) {
    if (gamma.rows() != b.dim() || gamma.cols() != a.dim()) return false;
    for (std::size_t k = 0; k < s.base().dim(); ++k)
        if (!(gamma * a.x.action[k] == b.x.action[k] * gamma)) return false;
    const auto& ps = s.phi_system();
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const HomSpace ha = hom_R(ps.module(i), a.x), hb = hom_R(ps.module(i), b.x);
        if (!(b.gi(i) * gamma == hom_functor_map(ha, hb, gamma) * a.gi(i))) return false;
    }
    return true;
}

MatrixSpace gmorphism_space(const ExtensionRing& s, const GModule& a, const GModule& b) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const auto lin = hom_space(a.x, b.x).basis();
    std::vector<HomSpace> ha, hb;
    for (std::size_t i = 1; i <= s.n(); ++i) {
        ha.push_back(hom_R(ps.module(i), a.x));
        hb.push_back(hom_R(ps.module(i), b.x));
    }
    std::vector<Mat> cols;
    std::size_t height = 0;
    for (const auto& gamma : lin) {
        std::vector<Mat> parts;
        for (std::size_t i = 1; i <= s.n(); ++i)
            parts.push_back((b.gi(i) * gamma - hom_functor_map(ha[i - 1], hb[i - 1], gamma) * a.gi(i)).vec());
        cols.push_back(vstack(F, 1, parts));
        height = cols.back().rows();
    }
    if (lin.empty()) return MatrixSpace(b.dim(), a.dim(), Subspace::zero(F, b.dim() * a.dim()));
    const Subspace combos = kernel(hstack(F, height, cols));
    Mat span(F, combos.dim(), b.dim() * a.dim());
    for (std::size_t r = 0; r < combos.dim(); ++r) {
        Mat m(F, b.dim(), a.dim());
        for (std::size_t t = 0; t < lin.size(); ++t)
            if (const Residue c = combos.basis()(r, t)) m.add_block(0, 0, lin[t], c);
        const Mat v = m.vec();
        for (std::size_t e = 0; e < v.rows(); ++e) span(r, e) = v(e, 0);
    }
    return MatrixSpace(b.dim(), a.dim(), Subspace::row_span(span));
}

FModule zero_fmodule(const ExtensionRing& s) {
    const auto F = s.field();
    FModule m{zero_module(s.base()), {}};
    for (std::size_t i = 1; i <= s.n(); ++i) m.f.emplace_back(F, 0, 0);
    return m;
}

FModule direct_sum(const ExtensionRing& s, const FModule& a, const FModule& b) {
    const auto sa = fmodule_to_saction(s, a), sb = fmodule_to_saction(s, b);
    return saction_to_fmodule(s, ntx::direct_sum(s.total(), sa, sb));
}

FModule restrict_to(const ExtensionRing& s, const FModule& m, const Subspace& stable) {
    return saction_to_fmodule(s, ntx::restrict_to(fmodule_to_saction(s, m), stable));
}

}  // namespace ntx
