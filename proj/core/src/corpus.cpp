#include "ntext/corpus.hpp"

#include <stdexcept>

namespace ntx {

RingData base_ring(BaseRing which) {
    switch (which) {
        case BaseRing::f2: {
            PrimeField F(2);
            return {"F2", truncated_polynomial_algebra(F, 1), Subspace::zero(F, 1)};
        }
        case BaseRing::f3: {
            PrimeField F(3);
            return {"F3", truncated_polynomial_algebra(F, 1), Subspace::zero(F, 1)};
        }
        case BaseRing::dual2: {
            PrimeField F(2);
            return {"F2[x]/(x^2)", truncated_polynomial_algebra(F, 2),
                    Subspace::row_span(Mat::from_rows(F, {{0, 1}}))};
        }
    }
    throw std::invalid_argument("unknown base ring");
}

std::string_view to_string(Piece p) noexcept {
    switch (p) {
        case Piece::zero: return "0";
        case Piece::regular: return "R";
        case Piece::top: return "R/rad";
    }
    return "?";
}

Subspace piece_ideal(const RingData& r, Piece p) {
    switch (p) {
        case Piece::zero: return Subspace::full(r.ring.field(), r.ring.dim());
        case Piece::regular: return Subspace::zero(r.ring.field(), r.ring.dim());
        case Piece::top: return r.radical;
    }
    throw std::invalid_argument("unknown piece");
}

Bimodule piece_bimodule(const RingData& r, Piece p) { return Bimodule::quotient(r.ring, piece_ideal(r, p)); }

PhiSystem canonical_phi_system(const RingData& r, const std::vector<Piece>& pieces, bool* fallback) {
    const std::size_t n = pieces.size();
    const auto F = r.ring.field();
    std::vector<Bimodule> mods;
    std::vector<Subspace> ideals;
    std::vector<QuotientMap> quots;
    for (auto p : pieces) {
        ideals.push_back(piece_ideal(r, p));
        quots.push_back(quotient_map(r.ring.dim(), ideals.back()));
        mods.push_back(piece_bimodule(r, p));
    }
    std::map<PhiSystem::Key, Mat> phi;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j) {
            const auto &Ii = ideals[i - 1], &Ij = ideals[j - 1], &Iij = ideals[i + j - 1];
            Mat P(F, mods[i + j - 1].dim, mods[i - 1].dim * mods[j - 1].dim);
            if (Iij.sum(Ii).sum(Ij) == Iij) {
                const auto &qi = quots[i - 1], &qj = quots[j - 1], &qij = quots[i + j - 1];
                for (std::size_t a = 0; a < mods[i - 1].dim; ++a)
                    for (std::size_t b = 0; b < mods[j - 1].dim; ++b) {
                        const Vec v = qij.proj * r.ring.mul(qi.section.col(a), qj.section.col(b));
                        for (std::size_t c = 0; c < v.size(); ++c) P(c, a * mods[j - 1].dim + b) = v[c];
                    }
            }
            phi.emplace(PhiSystem::Key{i, j}, std::move(P));
        }
    PhiSystem ps(n, mods, std::move(phi));
    const bool bad = !validate_phi(r.ring, ps).ok();
    if (fallback) *fallback = bad;
    if (bad) return PhiSystem(n, std::move(mods), {});
    return ps;
}

Instance make_instance(BaseRing which, const std::vector<Piece>& pieces) {
    RingData r = base_ring(which);
    bool fallback = false;
    PhiSystem ps = canonical_phi_system(r, pieces, &fallback);
    std::string label = r.name + " n=" + std::to_string(pieces.size()) + " M=(";
    for (std::size_t i = 0; i < pieces.size(); ++i) label += (i ? "," : "") + std::string(to_string(pieces[i]));
    label += ")";
    ExtensionRing ext = build_extension(r.ring, ps);
    return {std::move(label), std::move(r), pieces, std::move(ext), fallback};
}

std::vector<Instance> default_instances() {
    std::vector<Instance> out;
    for (auto which : {BaseRing::f2, BaseRing::f3, BaseRing::dual2}) {
        const std::vector<Piece> choices = which == BaseRing::dual2
                                               ? std::vector<Piece>{Piece::zero, Piece::regular, Piece::top}
                                               : std::vector<Piece>{Piece::zero, Piece::regular};
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<std::size_t> digit(n, 0);
            while (true) {
                std::vector<Piece> pieces;
                for (auto d : digit) pieces.push_back(choices[d]);
                out.push_back(make_instance(which, pieces));
                std::size_t k = 0;
                while (k < n && ++digit[k] == choices.size()) digit[k++] = 0;
                if (k == n) break;
            }
        }
    }
    return out;
}

ExtensionRing serial_extension(Residue p, std::size_t n) {
    const PrimeField F(p);
    RingData r{"F" + std::to_string(p), truncated_polynomial_algebra(F, 1), Subspace::zero(F, 1)};
    return build_extension(r.ring, canonical_phi_system(r, std::vector<Piece>(n, Piece::regular)));
}

std::vector<LeftModule> normal_form_modules(const RingData& r, std::size_t max_dim) {
    const auto F = r.ring.field();
    std::vector<LeftModule> out;
    if (r.ring.dim() == 1) {
        for (std::size_t d = 0; d <= max_dim; ++d) out.push_back({d, {Mat::identity(F, d)}});
        return out;
    }
    if (r.ring.dim() != 2 || !(r.ring == truncated_polynomial_algebra(F, 2)))
        throw std::invalid_argument("normal_form_modules: only fields and F_p[x]/(x^2) are supported");
    // x acts with Jordan blocks of size <= 2: `pairs` blocks of size 2 then singles.
    for (std::size_t d = 0; d <= max_dim; ++d)
        for (std::size_t pairs = 0; 2 * pairs <= d; ++pairs) {
            Mat N(F, d, d);
            for (std::size_t b = 0; b < pairs; ++b) N(2 * b + 1, 2 * b) = 1;
            out.push_back({d, {Mat::identity(F, d), N}});
        }
    return out;
}

MatrixSpace structure_map_space(const ExtensionRing& s, const LeftModule& x, std::size_t i) {
    const auto F = s.field();
    const auto& Mi = s.phi_system().module(i);
    const std::size_t rows = x.dim, cols = Mi.dim * x.dim;
    const Mat Ix = Mat::identity(F, x.dim), Ii = Mat::identity(F, Mi.dim);
    std::vector<Mat> ops;
    for (std::size_t k = 0; k < s.base().dim(); ++k) {
        const Mat rel = kron(Mi.right[k], Ix) - kron(Ii, x.action[k]);
        ops.push_back(linear_operator_matrix(F, rows, cols, [&](const Mat& f) { return f * rel; }));
        ops.push_back(sylvester_operator(x.action[k], kron(Mi.left[k], Ix)));
    }
    return MatrixSpace::solutions(rows, cols, vstack(F, rows * cols, ops));
}

bool satisfies_compatibility(const ExtensionRing& s, const FModule& m) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const Mat Ix = Mat::identity(F, m.dim());
    for (std::size_t i = 1; i <= s.n(); ++i)
        for (std::size_t j = 1; j <= s.n(); ++j) {
            const Mat rhs = m.fi(i) * kron(Mat::identity(F, ps.dim(i)), m.fi(j));
            if (i + j > s.n()) {
                if (!rhs.is_zero()) return false;
            } else if (!(m.fi(i + j) * kron(ps.phi(i, j), Ix) == rhs)) {
                return false;
            }
        }
    return true;
}

Enumeration enumerate_fmodules(const ExtensionRing& s, const std::vector<LeftModule>& carriers, std::uint64_t limit) {
    const auto F = s.field();
    const std::uint64_t p = F.modulus();
    Enumeration out;
    for (const auto& x : carriers) {
        std::vector<std::vector<Mat>> bases;
        std::size_t total = 0;
        for (std::size_t i = 1; i <= s.n(); ++i) {
            bases.push_back(structure_map_space(s, x, i).basis());
            total += bases.back().size();
        }
        std::uint64_t count = 1;
        bool overflow = false;
        for (std::size_t t = 0; t < total && !overflow; ++t) {
            count *= p;
            overflow = count > limit;
        }
        if (overflow || out.candidates + count > limit) break;
        out.candidates += count;
        ++out.carriers_used;

        std::vector<Residue> digit(total, 0);
        while (true) {
            FModule m{x, {}};
            std::size_t pos = 0;
            for (std::size_t i = 1; i <= s.n(); ++i) {
                Mat f(F, x.dim, s.component_dim(i) * x.dim);
                for (const auto& b : bases[i - 1]) {
                    if (digit[pos]) f.add_block(0, 0, b, digit[pos]);
                    ++pos;
                }
                m.f.push_back(std::move(f));
            }
            if (satisfies_compatibility(s, m)) out.modules.push_back(std::move(m));
            std::size_t k = 0;
            while (k < total && ++digit[k] == p) digit[k++] = 0;
            if (k == total) break;
        }
    }
    return out;
}

Mat random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Residue>(rng() % field.modulus());
    return m;
}

FModule random_fmodule(const ExtensionRing& s, std::mt19937_64& rng, std::size_t max_rank) {
    const auto& S = s.total();
    const std::size_t k = 1 + rng() % max_rank;
    const LeftModule free = free_module(S, k);
    const std::size_t gens = rng() % 3;
    const Mat g = random_matrix(s.field(), free.dim, gens, rng);
    const Subspace sub = generated_submodule(free, g);
    return saction_to_fmodule(s, quotient_by(free, sub));
}

SplitCarrier random_split_carrier(const ExtensionRing& s, const LeftModule& x1, const FModule& top,
                                  std::mt19937_64& rng) {
    const auto F = s.field();
    const auto& ps = s.phi_system();
    const std::size_t n = s.n(), d1 = x1.dim, d2 = top.dim(), d = d1 + d2;
    const Mat I1 = Mat::identity(F, d1);
    std::vector<std::size_t> offset{0};
    for (std::size_t i = 1; i <= n; ++i) offset.push_back(offset.back() + d2 * ps.dim(i) * d1);

    // a_i : M_i (x) x1 -> U(top), all stacked into one unknown vector
    const auto unpack = [&](const Mat& u) {
        std::vector<Mat> a;
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t cols = ps.dim(i) * d1;
            a.push_back(Mat::unvec(u.block(offset[i - 1], 0, d2 * cols, 1), d2, cols));
        }
        return a;
    };
    const auto residual = [&](const std::vector<Mat>& a) {
        std::vector<Mat> parts;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& Mi = ps.module(i);
            const Mat Ii = Mat::identity(F, Mi.dim);
            const Mat& ai = a[i - 1];
            for (std::size_t k = 0; k < s.base().dim(); ++k) {
                parts.push_back((ai * (kron(Mi.right[k], I1) - kron(Ii, x1.action[k]))).vec());
                parts.push_back((top.x.action[k] * ai - ai * kron(Mi.left[k], I1)).vec());
            }
            for (std::size_t j = 1; j <= n; ++j) {
                Mat r = top.fi(i) * kron(Ii, a[j - 1]);
                if (i + j <= n) r -= a[i + j - 1] * kron(ps.phi(i, j), I1);
                parts.push_back(r.vec());
            }
        }
        return vstack(F, 1, parts);
    };
    std::vector<Mat> images;
    for (std::size_t t = 0; t < offset.back(); ++t) images.push_back(residual(unpack(Mat::unit_column(F, offset.back(), t))));
    const Subspace sols = images.empty() ? Subspace::zero(F, 0) : kernel(hstack(F, images[0].rows(), images));
    const Mat u = offset.back() == 0 ? Mat(F, 0, 1) : sols.inclusion() * random_matrix(F, sols.dim(), 1, rng);
    const auto a = unpack(u);

    FModule m{direct_sum(s.base(), x1, top.x), {}};
    for (std::size_t i = 1; i <= n; ++i) {
        Mat f(F, d, ps.dim(i) * d);
        for (std::size_t b = 0; b < ps.dim(i); ++b) {
            f.set_block(d1, b * d, a[i - 1].block(0, b * d1, d2, d1));
            f.set_block(d1, b * d + d1, top.fi(i).block(0, b * d2, d2, d2));
        }
        m.f.push_back(std::move(f));
    }
    const Mat id = Mat::identity(F, d);
    std::vector<std::size_t> first(d1), second(d2);
    for (std::size_t k = 0; k < d1; ++k) first[k] = k;
    for (std::size_t k = 0; k < d2; ++k) second[k] = d1 + k;
    return {std::move(m), Subspace::column_span(id.select_columns(first)),
            Subspace::column_span(id.select_columns(second))};
}

}  // namespace ntx
