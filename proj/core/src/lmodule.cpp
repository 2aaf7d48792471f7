#include "ntext/lmodule.hpp"

#include <random>
#include <stdexcept>

namespace ntx {

Mat act(const LeftModule& x, std::span<const Residue> element) {
    if (element.size() != x.action.size()) throw std::invalid_argument("act: element length mismatch");
    const auto F = x.action.empty() ? PrimeField(2) : x.action.front().field();
    Mat m(F, x.dim, x.dim);
    for (std::size_t k = 0; k < element.size(); ++k)
        if (element[k]) m.add_block(0, 0, x.action[k], element[k]);
    return m;
}

ValidationReport validate_module(const StructureAlgebra& a, const LeftModule& x) {
    ValidationReport rep;
    const auto F = a.field();
    if (x.action.size() != a.dim()) {
        rep.fail("module has " + std::to_string(x.action.size()) + " action matrices, algebra has dimension " +
                 std::to_string(a.dim()));
        return rep;
    }
    for (std::size_t k = 0; k < x.action.size(); ++k)
        if (x.action[k].rows() != x.dim || x.action[k].cols() != x.dim || !(x.action[k].field() == F)) {
            rep.fail("action matrix " + std::to_string(k) + " has the wrong shape");
            return rep;
        }
    if (!(act(x, a.unit()) == Mat::identity(F, x.dim))) rep.fail("unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(x.action[i] * x.action[j] == act(x, a.basis_product(i, j))))
                rep.fail("action is not multiplicative on basis pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ")");
    return rep;
}

LeftModule zero_module(const StructureAlgebra& a) {
    return {0, std::vector<Mat>(a.dim(), Mat(a.field(), 0, 0))};
}

LeftModule regular_module(const StructureAlgebra& a) {
    LeftModule m{a.dim(), {}};
    for (std::size_t k = 0; k < a.dim(); ++k) m.action.push_back(a.left_regular(a.basis_vector(k)));
    return m;
}

LeftModule free_module(const StructureAlgebra& a, std::size_t rank) {
    LeftModule m{a.dim() * rank, {}};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Mat l = a.left_regular(a.basis_vector(k));
        m.action.push_back(kron(Mat::identity(a.field(), rank), l));
    }
    return m;
}

LeftModule direct_sum(const StructureAlgebra& a, const LeftModule& x, const LeftModule& y) {
    LeftModule m{x.dim + y.dim, {}};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Mat parts[] = {x.action[k], y.action[k]};
        m.action.push_back(block_diag(a.field(), parts));
    }
    return m;
}

LeftModule restrict_to(const LeftModule& x, const Subspace& stable) {
    LeftModule m{stable.dim(), {}};
    const Mat inc = stable.inclusion();
    const Mat coord = stable.coordinate_map();
    for (const auto& A : x.action) m.action.push_back(coord * (A * inc));
    return m;
}

LeftModule quotient_by(const LeftModule& x, const Subspace& stable) {
    const auto q = quotient_map(x.dim, stable);
    LeftModule m{q.proj.rows(), {}};
    for (const auto& A : x.action) m.action.push_back(q.proj * (A * q.section));
    return m;
}

LeftModule conjugate(const LeftModule& x, const Mat& g) {
    const auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("conjugate: matrix is not invertible");
    LeftModule m{x.dim, {}};
    for (const auto& A : x.action) m.action.push_back(g * A * *gi);
    return m;
}

Subspace generated_submodule(const LeftModule& x, const Mat& gens) {
    if (gens.rows() != x.dim) throw std::invalid_argument("generated_submodule: generator length mismatch");
    const auto F = gens.field();
    Subspace s = Subspace::column_span(gens);
    while (true) {
        std::vector<Mat> parts{s.inclusion()};
        const Mat inc = s.inclusion();
        for (const auto& A : x.action) parts.push_back(A * inc);
        Subspace next = Subspace::column_span(hstack(F, x.dim, parts));
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

LeftModule dual_module(const LeftModule& x) {
    LeftModule m{x.dim, {}};
    for (const auto& A : x.action) m.action.push_back(A.transpose());
    return m;
}

MatrixSpace hom_space(const LeftModule& x, const LeftModule& y) {
    if (x.action.size() != y.action.size()) throw std::invalid_argument("hom_space: modules over different algebras");
    const auto F = x.action.empty() ? PrimeField(2) : x.action.front().field();
    std::vector<Mat> ops;
    for (std::size_t k = 0; k < x.action.size(); ++k) ops.push_back(sylvester_operator(y.action[k], x.action[k]));
    return MatrixSpace::solutions(y.dim, x.dim, vstack(F, y.dim * x.dim, ops));
}

bool is_homomorphism(const Mat& h, const LeftModule& x, const LeftModule& y) {
    if (h.rows() != y.dim || h.cols() != x.dim) return false;
    for (std::size_t k = 0; k < x.action.size(); ++k)
        if (!(y.action[k] * h == h * x.action[k])) return false;
    return true;
}

IsoResult find_invertible_combination(PrimeField field, const std::vector<Mat>& basis, std::uint64_t budget,
                                      std::uint64_t seed) {
    if (basis.empty()) return {Verdict::no, std::nullopt, "the space of maps is zero"};
    const std::size_t k = basis.size();
    const std::size_t rows = basis.front().rows(), cols = basis.front().cols();
    if (rows != cols) return {Verdict::no, std::nullopt, "dimension mismatch"};
    const auto p = field.modulus();

    auto combine = [&](const Vec& c) {
        Mat m(field, rows, cols);
        for (std::size_t t = 0; t < k; ++t)
            if (c[t]) m.add_block(0, 0, basis[t], c[t]);
        return m;
    };

    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t t = 0; t < k; ++t) {
        if (total > budget / p) {
            exhaustive = false;
            break;
        }
        total *= p;
    }

    if (exhaustive) {
        Vec c(k, 0);
        for (std::uint64_t code = 1; code < total; ++code) {
            // odometer increment
            for (std::size_t t = 0; t < k; ++t) {
                if (++c[t] < p) break;
                c[t] = 0;
            }
            Mat m = combine(c);
            if (is_invertible(m))
                return {Verdict::yes, std::move(m), "exhaustive search over " + std::to_string(total) + " combinations"};
        }
        return {Verdict::no, std::nullopt,
                "no invertible map among all " + std::to_string(total) + " combinations"};
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> dist(0, p - 1);
    Vec c(k);
    for (std::uint64_t t = 0; t < budget; ++t) {
        for (auto& x : c) x = dist(rng);
        Mat m = combine(c);
        if (is_invertible(m)) return {Verdict::yes, std::move(m), "randomized search"};
    }
    return {Verdict::inconclusive, std::nullopt, "search budget exhausted"};
}

IsoResult modules_isomorphic(const LeftModule& x, const LeftModule& y, std::uint64_t budget, std::uint64_t seed) {
    if (x.dim != y.dim) return {Verdict::no, std::nullopt, "dimension mismatch"};
    if (x.dim == 0) {
        const auto F = x.action.empty() ? PrimeField(2) : x.action.front().field();
        return {Verdict::yes, Mat(F, 0, 0), "both modules are zero"};
    }
    const auto hom = hom_space(x, y);
    auto r = find_invertible_combination(hom.field(), hom.basis(), budget, seed);
    if (r.verdict == Verdict::yes && !is_homomorphism(*r.witness, x, y))
        throw std::logic_error("modules_isomorphic: witness failed re-verification");
    return r;
}

Mat map_from_free(const StructureAlgebra& a, const LeftModule& x, const Mat& gens) {
    const std::size_t d = a.dim();
    Mat m(a.field(), x.dim, gens.cols() * d);
    for (std::size_t l = 0; l < gens.cols(); ++l) {
        const Mat g = gens.block(0, l, x.dim, 1);
        for (std::size_t b = 0; b < d; ++b) m.set_block(0, l * d + b, x.action[b] * g);
    }
    return m;
}

namespace {

FreeCover cover_on(const StructureAlgebra& a, const LeftModule& x, Mat gens) {
    FreeCover c;
    c.rank = gens.cols();
    c.free = free_module(a, c.rank);
    c.map = map_from_free(a, x, gens);
    c.generators = std::move(gens);
    return c;
}

}  // namespace

FreeCover basis_cover(const StructureAlgebra& a, const LeftModule& x) {
    return cover_on(a, x, Mat::identity(a.field(), x.dim));
}

FreeCover greedy_cover(const StructureAlgebra& a, const LeftModule& x) {
    const auto F = a.field();
    const Mat id = Mat::identity(F, x.dim);
    std::vector<std::size_t> chosen;
    Subspace generated = Subspace::zero(F, x.dim);
    for (std::size_t k = 0; k < x.dim && generated.dim() < x.dim; ++k) {
        const Vec e = Mat::unit_column(F, x.dim, k).col(0);
        if (generated.contains(e)) continue;
        chosen.push_back(k);
        generated = generated_submodule(x, id.select_columns(chosen));
    }
    // Drop generators the others already produce. Over a local ring the
    // survivors are a minimal generating set (Nakayama), which keeps syzygies small.
    for (std::size_t t = chosen.size(); t-- > 1;) {
        std::vector<std::size_t> rest = chosen;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        if (generated_submodule(x, id.select_columns(rest)).dim() == x.dim) chosen = std::move(rest);
    }
    return cover_on(a, x, id.select_columns(chosen));
}

std::optional<Mat> splitting(const FreeCover& cover, const LeftModule& x) {
    const auto F = cover.map.field();
    if (x.dim == 0) return Mat(F, cover.free.dim, 0);
    if (cover.rank == 0) return std::nullopt;
    // A section is a sum of maps x -> A into the separate free summands, so it
    // is enough to know Hom(x, A) and test the identity on the generators.
    const std::size_t d = cover.free.dim / cover.rank;
    LeftModule reg{d, {}};
    for (const auto& m : cover.free.action) reg.action.push_back(m.block(0, 0, d, d));
    const auto hom = hom_space(x, reg).basis();
    if (hom.empty()) return std::nullopt;
    std::vector<Mat> cols;
    for (std::size_t t = 0; t < cover.rank; ++t) {
        const Mat rho = cover.map.block(0, t * d, x.dim, d);
        for (const auto& h : hom) cols.push_back(rho * h * cover.generators);
    }
    const std::size_t eq = x.dim * cover.rank;
    for (auto& c : cols) c = c.vec();
    const auto c = solve(hstack(F, eq, cols), cover.generators.vec());
    if (!c) return std::nullopt;
    Mat sigma(F, cover.free.dim, x.dim);
    std::size_t pos = 0;
    for (std::size_t t = 0; t < cover.rank; ++t)
        for (const auto& h : hom) {
            if (const Residue w = (*c)(pos++, 0)) sigma.add_block(t * d, 0, h, w);
        }
    return sigma;
}

bool is_projective_module(const StructureAlgebra& a, const LeftModule& x) {
    return splitting(greedy_cover(a, x), x).has_value();
}

Syzygy syzygy(const StructureAlgebra& a, const LeftModule& x) {
    auto cover = greedy_cover(a, x);
    const Subspace k = kernel(cover.map);
    return {restrict_to(cover.free, k), k.inclusion(), std::move(cover)};
}

HomDim projective_dimension(const StructureAlgebra& a, const LeftModule& x, std::size_t cap) {
    LeftModule current = x;
    for (std::size_t step = 0; step < cap; ++step) {
        if (step > 0 && current.dim > kSyzygyGrowthLimit * a.dim()) return {step, true};
        if (is_projective_module(a, current)) return {step, false};
        current = syzygy(a, current).module;
    }
    return {cap, true};
}

HomDim injective_dimension(const StructureAlgebra& a, const LeftModule& x, std::size_t cap) {
    return projective_dimension(a.opposite(), dual_module(x), cap);
}

FreeResolution free_resolution(const StructureAlgebra& a, const LeftModule& x, std::size_t length) {
    FreeResolution res;
    LeftModule current = x;
    Mat into_previous = Mat::identity(a.field(), x.dim);
    for (std::size_t t = 0; t <= length; ++t) {
        auto cover = greedy_cover(a, current);
        res.ranks.push_back(cover.rank);
        res.differentials.push_back(into_previous * cover.map);
        const Subspace k = kernel(cover.map);
        current = restrict_to(cover.free, k);
        into_previous = k.inclusion();
    }
    return res;
}

std::vector<std::size_t> ext_dimensions(const StructureAlgebra& a, const LeftModule& x, const LeftModule& y,
                                        std::size_t max_degree) {
    const auto F = a.field();
    const std::size_t d = a.dim();
    const auto res = free_resolution(a, x, max_degree + 1);
    // dual[t] : Hom(P_(t-1), y) -> Hom(P_t, y), both identified with y^rank.
    std::vector<Mat> dual(max_degree + 2);
    for (std::size_t t = 1; t <= max_degree + 1; ++t) {
        const Mat& dt = res.differentials[t];
        const std::size_t rt = res.ranks[t], rp = res.ranks[t - 1];
        Mat m(F, rt * y.dim, rp * y.dim);
        for (std::size_t l = 0; l < rt; ++l) {
            Vec gen(rt * d, 0);
            for (std::size_t b = 0; b < d; ++b) gen[l * d + b] = a.unit()[b];
            const Vec image = dt * std::span<const Residue>(gen);
            for (std::size_t mblock = 0; mblock < rp; ++mblock) {
                const Vec r(image.begin() + static_cast<std::ptrdiff_t>(mblock * d),
                            image.begin() + static_cast<std::ptrdiff_t>((mblock + 1) * d));
                m.set_block(l * y.dim, mblock * y.dim, act(y, r));
            }
        }
        dual[t] = std::move(m);
    }
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        const std::size_t cochains = res.ranks[k] * y.dim;
        const std::size_t cycles = cochains - rank(dual[k + 1]);
        const std::size_t boundaries = k == 0 ? 0 : rank(dual[k]);
        dims.push_back(cycles - boundaries);
    }
    return dims;
}

}  // namespace ntx
