#include "ntext/functors.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace ntx {

TObject T_object(const ExtensionRing& s, const LeftModule& x) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t n = s.n(), dx = x.dim;
    TObject t;
    t.offsets = {0, dx};
    for (std::size_t i = 1; i <= n; ++i) {
        t.tensors.push_back(tensor_over_R(ps.module(i), x));
        t.offsets.push_back(t.offsets.back() + t.tensors.back().dim());
    }
    const std::size_t dt = t.offsets.back();

    LeftModule& u = t.module.x;
    u.dim = dt;
    for (std::size_t k = 0; k < s.base().dim(); ++k) {
        std::vector<Mat> blocks{x.action[k]};
        for (const auto& q : t.tensors) blocks.push_back(q.module->action[k]);
        u.action.push_back(block_diag(F, blocks));
    }

    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t mi = ps.dim(i);
        Mat kappa(F, dt, mi * dt);
        const auto& qi = t.tensors[i - 1];
        for (std::size_t a = 0; a < mi; ++a) {
            // m_a (x) x lands in M_i (x) X.
            for (std::size_t c = 0; c < dx; ++c) {
                const Vec v = qi.proj.col(a * dx + c);
                for (std::size_t r = 0; r < v.size(); ++r) kappa(t.offsets[i] + r, a * dt + c) = v[r];
            }
            // m_a (x) (m_j (x) x) lands in M_(i+j) (x) X through phi(i, j).
            for (std::size_t j = 1; i + j <= n; ++j) {
                const std::size_t mj = ps.dim(j), mij = ps.dim(i + j);
                const auto& qj = t.tensors[j - 1];
                const auto& qij = t.tensors[i + j - 1];
                const Mat& P = ps.phi(i, j);
                for (std::size_t q = 0; q < qj.dim(); ++q) {
                    const Vec v = qj.section.col(q);
                    Vec y(mij * dx, 0);
                    for (std::size_t c = 0; c < mij; ++c)
                        for (std::size_t b = 0; b < mj; ++b) {
                            const Residue coef = P(c, a * mj + b);
                            if (!coef) continue;
                            for (std::size_t z = 0; z < dx; ++z)
                                y[c * dx + z] = F.add(y[c * dx + z], F.mul(coef, v[b * dx + z]));
                        }
                    const Vec w = qij.proj * y;
                    for (std::size_t r = 0; r < w.size(); ++r)
                        kappa(t.offsets[i + j] + r, a * dt + t.offsets[j] + q) = w[r];
                }
            }
        }
        t.module.f.push_back(std::move(kappa));
    }
    return t;
}

FModule T(const ExtensionRing& s, const LeftModule& x) { return T_object(s, x).module; }

Mat T_map(const ExtensionRing& s, const LeftModule& x, const LeftModule& y, const Mat& alpha) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    std::vector<Mat> blocks{alpha};
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const auto tx = tensor_over_R(ps.module(i), x), ty = tensor_over_R(ps.module(i), y);
        blocks.push_back(ty.proj * kron(Mat::identity(F, ps.dim(i)), alpha) * tx.section);
    }
    return block_diag(F, blocks);
}

CObject C_object(const ExtensionRing& s, const FModule& m) {
    const auto F = s.field();
    const Subspace im = Subspace::column_span(hstack(F, m.dim(), m.f));
    auto q = quotient_map(m.dim(), im);
    return {quotient_by(m.x, im), std::move(q.proj), std::move(q.section)};
}

LeftModule C(const ExtensionRing& s, const FModule& m) { return C_object(s, m).module; }

Mat C_map(const ExtensionRing& s, const FModule& a, const FModule& b, const Mat& gamma) {
    const auto ca = C_object(s, a), cb = C_object(s, b);
    if (!(cb.proj * gamma * hstack(s.field(), a.dim(), a.f)).is_zero())
        throw std::invalid_argument("C_map: map does not descend to the cokernels");
    return cb.proj * gamma * ca.section;
}

LeftModule U(const FModule& m) { return m.x; }

FModule Z(const ExtensionRing& s, const LeftModule& x) {
    FModule m{x, {}};
    for (std::size_t i = 1; i <= s.n(); ++i) m.f.emplace_back(s.field(), x.dim, s.component_dim(i) * x.dim);
    return m;
}

HObject H_object(const ExtensionRing& s, const LeftModule& x) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t n = s.n(), dx = x.dim;
    HObject h;
    for (std::size_t k = 1; k <= n; ++k) h.homs.push_back(hom_R(ps.module(k), x));
    h.offsets = {0};
    for (std::size_t k = n; k >= 1; --k) h.offsets.push_back(h.offsets.back() + h.homs[k - 1].dim());
    h.offsets.push_back(h.offsets.back() + dx);
    const std::size_t dh = h.offsets.back();

    LeftModule u{dh, {}};
    for (std::size_t r = 0; r < s.base().dim(); ++r) {
        Mat a(F, dh, dh);
        for (std::size_t k = 1; k <= n; ++k) a.set_block(h.block(k), h.block(k), h.homs[k - 1].module.action[r]);
        a.set_block(h.block(0), h.block(0), x.action[r]);
        u.action.push_back(std::move(a));
    }

    // m_a in M_i sends a map phi on S (restricted to M_k) to s' |-> phi(s' m_a):
    // for k == i this is phi(m_a) in the X block, for k > i the map
    // M_(k-i) -> X, m |-> phi(m m_a), and 0 for k < i and on the X block.
    FModule fm{u, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t mi = ps.dim(i);
        Mat fi(F, dh, mi * dh);
        for (std::size_t a = 0; a < mi; ++a)
            for (std::size_t k = i; k <= n; ++k) {
                const auto basis = h.homs[k - 1].maps.basis();
                for (std::size_t t = 0; t < basis.size(); ++t) {
                    const std::size_t col = a * dh + h.block(k) + t;
                    const Mat& B = basis[t];
                    if (k == i) {
                        const Vec v = B.col(a);
                        for (std::size_t r = 0; r < dx; ++r) fi(h.block(0) + r, col) = v[r];
                        continue;
                    }
                    const std::size_t j = k - i, mj = ps.dim(j);
                    const Mat& P = ps.phi(j, i);
                    Mat img(F, dx, mj);
                    for (std::size_t c = 0; c < mj; ++c) {
                        const Vec v = B * P.col(c * mi + a);
                        for (std::size_t r = 0; r < dx; ++r) img(r, c) = v[r];
                    }
                    const Vec coords = h.homs[j - 1].coordinates(img);
                    for (std::size_t r = 0; r < coords.size(); ++r) fi(h.block(j) + r, col) = coords[r];
                }
            }
        fm.f.push_back(std::move(fi));
    }
    h.fmodule = std::move(fm);
    h.module = to_left_form(s, h.fmodule);
    return h;
}

GModule H(const ExtensionRing& s, const LeftModule& x) { return H_object(s, x).module; }

Mat H_map(const ExtensionRing& s, const LeftModule& x, const LeftModule& y, const Mat& alpha) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    std::vector<Mat> blocks;
    for (std::size_t k = s.n(); k >= 1; --k)
        blocks.push_back(hom_functor_map(hom_R(ps.module(k), x), hom_R(ps.module(k), y), alpha));
    blocks.push_back(alpha);
    return block_diag(F, blocks);
}

KObject K_object(const ExtensionRing& s, const GModule& g) {
    const auto F = s.field();
    Subspace ker = kernel(vstack(F, g.dim(), g.g));
    auto incl = ker.inclusion();
    return {restrict_to(g.x, ker), std::move(ker), std::move(incl)};
}

LeftModule K(const ExtensionRing& s, const GModule& g) { return K_object(s, g).module; }

Mat K_map(const ExtensionRing& s, const GModule& a, const GModule& b, const Mat& gamma) {
    const auto ka = K_object(s, a), kb = K_object(s, b);
    const Mat img = gamma * ka.inclusion;
    if (!kb.kernel.contains_columns(img)) throw std::invalid_argument("K_map: map does not preserve the kernels");
    return kb.kernel.coordinate_map() * img;
}

Mat T_transpose(const ExtensionRing& s, const TObject& tx, const FModule& y, const Mat& h) {
    const auto F = s.field();
    std::vector<Mat> blocks{h};
    for (std::size_t i = 1; i <= s.n(); ++i)
        blocks.push_back(y.fi(i) * kron(Mat::identity(F, s.component_dim(i)), h) * tx.tensors[i - 1].section);
    return hstack(F, y.dim(), blocks);
}

Mat H_transpose(const ExtensionRing& s, const FModule& m, const HObject& hy, const Mat& h) {
    const auto F = s.field();
    const std::size_t dm = m.dim(), dy = h.rows();
    Mat g(F, hy.fmodule.dim(), dm);
    g.set_block(hy.block(0), 0, h);
    for (std::size_t k = 1; k <= s.n(); ++k) {
        const std::size_t mk = s.component_dim(k);
        for (std::size_t z = 0; z < dm; ++z) {
            // the map M_k -> Y, b |-> h(b z)
            Mat img(F, dy, mk);
            for (std::size_t b = 0; b < mk; ++b) {
                const Vec v = h * m.fi(k).col(b * dm + z);
                for (std::size_t r = 0; r < dy; ++r) img(r, b) = v[r];
            }
            const Vec c = hy.homs[k - 1].coordinates(img);
            for (std::size_t r = 0; r < c.size(); ++r) g(hy.block(k) + r, z) = c[r];
        }
    }
    return g;
}

std::string_view to_string(FunctorTag t) noexcept {
    switch (t) {
        case FunctorTag::U: return "U";
        case FunctorTag::Z: return "Z";
        case FunctorTag::T: return "T";
        case FunctorTag::C: return "C";
        case FunctorTag::H: return "H";
        case FunctorTag::K: return "K";
    }
    return "?";
}

FunctorTag parse_functor_tag(std::string_view name) {
    for (auto t : {FunctorTag::U, FunctorTag::Z, FunctorTag::T, FunctorTag::C, FunctorTag::H, FunctorTag::K})
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown functor '" + std::string(name) + "'");
}

namespace {

using MapFn = std::function<Mat(const Mat&)>;

Mat random_element(const MatrixSpace& space, std::mt19937_64& rng) {
    const auto p = space.field().modulus();
    Vec c(space.dim());
    for (auto& v : c) v = static_cast<Residue>(rng() % p);
    return space.element(c);
}

void check_bijection(AdjunctionReport& rep, const MatrixSpace& lhs, const MatrixSpace& rhs, const MapFn& fwd,
                     const MapFn& bwd) {
    rep.left_dim = lhs.dim();
    rep.right_dim = rhs.dim();
    bool ok = lhs.dim() == rhs.dim();
    for (const auto& a : lhs.basis()) {
        const Mat b = fwd(a);
        if (!rhs.contains(b)) {
            rep.failures.push_back("forward image leaves the target hom-space");
            ok = false;
        } else if (!(bwd(b) == a)) {
            rep.failures.push_back("backward after forward is not the identity");
            ok = false;
        }
    }
    for (const auto& b : rhs.basis()) {
        const Mat a = bwd(b);
        if (!lhs.contains(a)) {
            rep.failures.push_back("backward image leaves the source hom-space");
            ok = false;
        } else if (!(fwd(a) == b)) {
            rep.failures.push_back("forward after backward is not the identity");
            ok = false;
        }
    }
    rep.bijective = ok;
}

template <class Square>
void check_squares(AdjunctionReport& rep, std::size_t samples, std::uint64_t seed, Square&& square) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < samples; ++t) {
        ++rep.squares_checked;
        if (!square(rng)) {
            ++rep.squares_failed;
            rep.failures.push_back("naturality square " + std::to_string(t) + " does not commute");
        }
    }
}

template <class T>
const T& expect(const ModuleArg& m, const char* what) {
    if (const auto* p = std::get_if<T>(&m)) return *p;
    throw std::invalid_argument(std::string("check_adjunction: expected ") + what);
}

}  // namespace

AdjunctionReport check_adjunction(const ExtensionRing& s, FunctorTag left, FunctorTag right, const ModuleArg& x,
                                  const ModuleArg& y, std::size_t samples, std::uint64_t seed) {
    AdjunctionReport rep;
    rep.pair = "(" + std::string(to_string(left)) + "," + std::string(to_string(right)) + ")";

    if (left == FunctorTag::T && right == FunctorTag::U) {
        const auto& X = expect<LeftModule>(x, "an R-module as first argument");
        const auto& Y = expect<FModule>(y, "an (X, f) module as second argument");
        const TObject tx = T_object(s, X);
        const auto lhs = morphism_space(s, tx.module, Y);
        const auto rhs = hom_space(X, Y.x);
        const MapFn fwd = [&](const Mat& g) { return g.block(0, 0, Y.dim(), X.dim); };
        const MapFn bwd = [&](const Mat& h) { return T_transpose(s, tx, Y, h); };
        check_bijection(rep, lhs, rhs, fwd, bwd);
        const auto end_x = hom_space(X, X);
        const auto end_y = morphism_space(s, Y, Y);
        check_squares(rep, samples, seed, [&](std::mt19937_64& rng) {
            const Mat a = random_element(end_x, rng), b = random_element(end_y, rng), g = random_element(lhs, rng);
            return fwd(b * g * T_map(s, X, X, a)) == b * fwd(g) * a;
        });
        return rep;
    }
    if (left == FunctorTag::C && right == FunctorTag::Z) {
        const auto& M = expect<FModule>(x, "an (X, f) module as first argument");
        const auto& Y = expect<LeftModule>(y, "an R-module as second argument");
        const CObject cm = C_object(s, M);
        const auto lhs = hom_space(cm.module, Y);
        const FModule zy = Z(s, Y);
        const auto rhs = morphism_space(s, M, zy);
        const MapFn fwd = [&](const Mat& h) { return h * cm.proj; };
        const MapFn bwd = [&](const Mat& g) { return g * cm.section; };
        check_bijection(rep, lhs, rhs, fwd, bwd);
        const auto end_m = morphism_space(s, M, M);
        const auto end_y = hom_space(Y, Y);
        check_squares(rep, samples, seed, [&](std::mt19937_64& rng) {
            const Mat a = random_element(end_m, rng), b = random_element(end_y, rng), h = random_element(lhs, rng);
            return fwd(b * h * C_map(s, M, M, a)) == b * fwd(h) * a;
        });
        return rep;
    }
    if (left == FunctorTag::U && right == FunctorTag::H) {
        const auto& M = expect<FModule>(x, "an (X, f) module as first argument");
        const auto& Y = expect<LeftModule>(y, "an R-module as second argument");
        const HObject hy = H_object(s, Y);
        const auto lhs = hom_space(M.x, Y);
        const auto rhs = morphism_space(s, M, hy.fmodule);
        const std::size_t dm = M.dim();
        const MapFn fwd = [&](const Mat& h) { return H_transpose(s, M, hy, h); };
        const MapFn bwd = [&](const Mat& g) { return g.block(hy.block(0), 0, Y.dim, dm); };
        check_bijection(rep, lhs, rhs, fwd, bwd);
        const auto end_m = morphism_space(s, M, M);
        const auto end_y = hom_space(Y, Y);
        check_squares(rep, samples, seed, [&](std::mt19937_64& rng) {
            const Mat a = random_element(end_m, rng), b = random_element(end_y, rng), h = random_element(lhs, rng);
            return fwd(b * h * a) == H_map(s, Y, Y, b) * fwd(h) * a;
        });
        return rep;
    }
    if (left == FunctorTag::Z && right == FunctorTag::K) {
        const auto& X = expect<LeftModule>(x, "an R-module as first argument");
        const auto& G = expect<GModule>(y, "an (X, g) module as second argument");
        const FModule gf = from_left_form(s, G);
        const KObject kg = K_object(s, G);
        const auto lhs = morphism_space(s, Z(s, X), gf);
        const auto rhs = hom_space(X, kg.module);
        const Mat coord = kg.kernel.coordinate_map();
        const MapFn fwd = [&](const Mat& g) { return coord * g; };
        const MapFn bwd = [&](const Mat& h) { return kg.inclusion * h; };
        check_bijection(rep, lhs, rhs, fwd, bwd);
        const auto end_x = hom_space(X, X);
        const auto end_g = morphism_space(s, gf, gf);
        check_squares(rep, samples, seed, [&](std::mt19937_64& rng) {
            const Mat a = random_element(end_x, rng), b = random_element(end_g, rng), g = random_element(lhs, rng);
            return fwd(b * g * a) == K_map(s, G, G, b) * fwd(g) * a;
        });
        return rep;
    }
    throw std::invalid_argument("check_adjunction: " + rep.pair + " is not one of (T,U), (C,Z), (U,H), (Z,K)");
}

}  // namespace ntx
