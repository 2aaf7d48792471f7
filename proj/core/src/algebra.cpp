#include "ntext/algebra.hpp"

#include <random>
#include <stdexcept>

namespace ntx {

StructureAlgebra::StructureAlgebra(PrimeField field, std::size_t dim, Mat mult, Vec unit)
    : field_(field), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (dim_ == 0) throw std::invalid_argument("algebra: dimension must be positive");
    if (mult_.rows() != dim_ || mult_.cols() != dim_ * dim_)
        throw std::invalid_argument("algebra: multiplication matrix must be dim x dim^2");
    if (unit_.size() != dim_) throw std::invalid_argument("algebra: unit vector has wrong length");
    for (auto x : unit_)
        if (x >= field_.modulus()) throw std::invalid_argument("algebra: unit entry out of range");
}

StructureAlgebra StructureAlgebra::from_table(PrimeField field, const std::vector<std::vector<Vec>>& table, Vec unit) {
    const std::size_t d = table.size();
    Mat m(field, d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (table[i].size() != d) throw std::invalid_argument("algebra: table must be dim x dim");
        for (std::size_t j = 0; j < d; ++j) {
            if (table[i][j].size() != d) throw std::invalid_argument("algebra: product vector has wrong length");
            for (std::size_t k = 0; k < d; ++k) m(k, i * d + j) = field.reduce(table[i][j][k]);
        }
    }
    return {field, d, std::move(m), std::move(unit)};
}

Vec StructureAlgebra::mul(std::span<const Residue> x, std::span<const Residue> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("algebra mul: length mismatch");
    Vec xy(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) xy[i * dim_ + j] = field_.mul(x[i], y[j]);
    return mult_ * std::span<const Residue>(xy);
}

Mat StructureAlgebra::left_regular(std::span<const Residue> x) const {
    Mat m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec c = mul(x, basis_vector(j));
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = c[i];
    }
    return m;
}

Mat StructureAlgebra::right_regular(std::span<const Residue> x) const {
    Mat m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec c = mul(basis_vector(j), x);
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = c[i];
    }
    return m;
}

Vec StructureAlgebra::basis_vector(std::size_t k) const {
    Vec v(dim_, 0);
    v.at(k) = 1;
    return v;
}

StructureAlgebra StructureAlgebra::opposite() const {
    Mat m(field_, dim_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m(k, i * dim_ + j) = mult_(k, j * dim_ + i);
    return {field_, dim_, std::move(m), unit_};
}

bool StructureAlgebra::is_commutative() const { return opposite().mult_ == mult_; }

AlgebraElement::AlgebraElement(const StructureAlgebra& parent, Vec coords)
    : parent_(&parent), coords_(std::move(coords)) {
    if (coords_.size() != parent.dim()) throw std::invalid_argument("algebra element: coordinate length mismatch");
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.parent_ != y.parent_) throw std::invalid_argument("algebra element: parent mismatch");
    return {*x.parent_, x.parent_->mul(x.coords_, y.coords_)};
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.parent_ != y.parent_) throw std::invalid_argument("algebra element: parent mismatch");
    Vec s(x.coords_.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = x.parent_->field().add(x.coords_[k], y.coords_[k]);
    return {*x.parent_, std::move(s)};
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

Mat left_regular(const AlgebraElement& x) { return x.parent().left_regular(x.coords()); }

ValidationReport validate(const StructureAlgebra& a) {
    ValidationReport rep;
    const auto F = a.field();
    const std::size_t d = a.dim();
    const Mat I = Mat::identity(F, d);
    const Mat lhs = a.mult() * kron(a.mult(), I);
    const Mat rhs = a.mult() * kron(I, a.mult());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::size_t c = (i * d + j) * d + k;
                for (std::size_t r = 0; r < d; ++r)
                    if (lhs(r, c) != rhs(r, c)) {
                        rep.fail("associativity fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
                        break;
                    }
            }
    const Mat u = Mat::column(F, a.unit());
    const Mat left_unit = a.mult() * kron(u, I);
    const Mat right_unit = a.mult() * kron(I, u);
    for (std::size_t i = 0; i < d; ++i) {
        bool lok = true, rok = true;
        for (std::size_t r = 0; r < d; ++r) {
            lok = lok && left_unit(r, i) == I(r, i);
            rok = rok && right_unit(r, i) == I(r, i);
        }
        if (!lok) rep.fail("unit axiom fails: 1*e_" + std::to_string(i) + " != e_" + std::to_string(i));
        if (!rok) rep.fail("unit axiom fails: e_" + std::to_string(i) + "*1 != e_" + std::to_string(i));
    }
    return rep;
}

bool is_algebra_isomorphism(const Mat& w, const StructureAlgebra& a, const StructureAlgebra& b) {
    if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
    if (w.rows() != b.dim() || w.cols() != a.dim() || !is_invertible(w)) return false;
    if (w * std::span<const Residue>(a.unit()) != b.unit()) return false;
    // w * mult_a == mult_b * (w (x) w)
    return w * a.mult() == b.mult() * kron(w, w);
}

namespace {

/// Subalgebra generated by the unit and the given elements, as a subspace.
Subspace generated_subalgebra(const StructureAlgebra& a, const std::vector<Vec>& gens) {
    const auto F = a.field();
    std::vector<Mat> cols{Mat::column(F, a.unit())};
    for (const auto& g : gens) cols.push_back(Mat::column(F, g));
    Subspace s = Subspace::column_span(hstack(F, a.dim(), cols));
    while (true) {
        const Mat B = s.basis();
        std::vector<Mat> more{s.inclusion()};
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (const auto& g : gens) {
                const auto row = B.row(i);
                more.push_back(Mat::column(F, a.mul(Vec(row.begin(), row.end()), g)));
            }
        Subspace next = Subspace::column_span(hstack(F, a.dim(), more));
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

std::vector<Vec> greedy_generators(const StructureAlgebra& a) {
    std::vector<Vec> gens;
    Subspace s = generated_subalgebra(a, gens);
    for (std::size_t k = 0; k < a.dim() && s.dim() < a.dim(); ++k) {
        const Vec e = a.basis_vector(k);
        if (s.contains(e)) continue;
        gens.push_back(e);
        s = generated_subalgebra(a, gens);
    }
    return gens;
}

/// Extends generator images to a linear map and verifies it; nullopt if the
/// assignment is inconsistent or not an isomorphism.
std::optional<Mat> extend_generators(const StructureAlgebra& a, const StructureAlgebra& b,
                                     const std::vector<Vec>& gens, const std::vector<Vec>& images) {
    const auto F = a.field();
    const std::size_t d = a.dim();
    std::vector<std::pair<Vec, Vec>> queue{{a.unit(), b.unit()}};
    for (std::size_t g = 0; g < gens.size(); ++g) queue.emplace_back(gens[g], images[g]);
    std::vector<Mat> pa, pb;
    Subspace span_a = Subspace::zero(F, d);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [va, vb] = queue[q];
        if (span_a.contains(va)) {
            const Mat A = hstack(F, d, pa);
            const auto c = solve(A, Mat::column(F, va));
            const Mat expect = hstack(F, d, pb) * *c;
            if (!(expect == Mat::column(F, vb))) return std::nullopt;
            continue;
        }
        pa.push_back(Mat::column(F, va));
        pb.push_back(Mat::column(F, vb));
        span_a = span_a.sum(Subspace::column_span(pa.back()));
        for (std::size_t g = 0; g < gens.size(); ++g) queue.emplace_back(a.mul(va, gens[g]), b.mul(vb, images[g]));
    }
    if (pa.size() != d) return std::nullopt;
    const auto inv = inverse(hstack(F, d, pa));
    const Mat w = hstack(F, d, pb) * *inv;
    if (!is_algebra_isomorphism(w, a, b)) return std::nullopt;
    return w;
}

}  // namespace

IsoResult algebras_isomorphic(const StructureAlgebra& a, const StructureAlgebra& b, std::uint64_t budget,
                              std::uint64_t seed) {
    if (!(a.field() == b.field())) return {Verdict::no, std::nullopt, "different base fields"};
    if (a.dim() != b.dim()) return {Verdict::no, std::nullopt, "dimension mismatch"};
    const auto F = a.field();
    const std::size_t d = a.dim();
    const auto gens = greedy_generators(a);
    const std::size_t slots = d * gens.size();

    auto decode = [&](auto next_residue) {
        std::vector<Vec> images(gens.size(), Vec(d));
        for (auto& v : images)
            for (auto& x : v) x = next_residue();
        return images;
    };

    // p^slots <= budget ?
    bool exhaustive = true;
    std::uint64_t total = 1;
    for (std::size_t s = 0; s < slots; ++s) {
        if (total > budget / F.modulus()) {
            exhaustive = false;
            break;
        }
        total *= F.modulus();
    }

    if (exhaustive) {
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            auto images = decode([&] {
                const auto r = static_cast<Residue>(c % F.modulus());
                c /= F.modulus();
                return r;
            });
            if (auto w = extend_generators(a, b, gens, images))
                return {Verdict::yes, std::move(w), "exhaustive search over generator images"};
        }
        return {Verdict::no, std::nullopt,
                "no generator assignment extends to an isomorphism (" + std::to_string(total) + " checked)"};
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> dist(0, F.modulus() - 1);
    for (std::uint64_t t = 0; t < budget; ++t) {
        auto images = decode([&] { return dist(rng); });
        if (auto w = extend_generators(a, b, gens, images))
            return {Verdict::yes, std::move(w), "randomized search over generator images"};
    }
    return {Verdict::inconclusive, std::nullopt, "search budget exhausted"};
}

StructureAlgebra truncated_polynomial_algebra(PrimeField field, std::size_t k) {
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) table[i][j][i + j] = 1;
    Vec unit(k, 0);
    unit[0] = 1;
    return StructureAlgebra::from_table(field, table, unit);
}

}  // namespace ntx
