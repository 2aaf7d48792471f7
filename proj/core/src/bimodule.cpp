#include "ntext/bimodule.hpp"

#include <stdexcept>

namespace ntx {

namespace {

std::string idx(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string idx(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

Bimodule Bimodule::regular(const StructureAlgebra& r) {
    Bimodule m{r.dim(), {}, {}};
    for (std::size_t k = 0; k < r.dim(); ++k) {
        m.left.push_back(r.left_regular(r.basis_vector(k)));
        m.right.push_back(r.right_regular(r.basis_vector(k)));
    }
    return m;
}

Bimodule Bimodule::zero(const StructureAlgebra& r) {
    return {0, std::vector<Mat>(r.dim(), Mat(r.field(), 0, 0)), std::vector<Mat>(r.dim(), Mat(r.field(), 0, 0))};
}

Bimodule Bimodule::quotient(const StructureAlgebra& r, const Subspace& ideal) {
    const auto q = quotient_map(r.dim(), ideal);
    const Bimodule reg = regular(r);
    Bimodule m{q.proj.rows(), {}, {}};
    for (std::size_t k = 0; k < r.dim(); ++k) {
        m.left.push_back(q.proj * reg.left[k] * q.section);
        m.right.push_back(q.proj * reg.right[k] * q.section);
    }
    return m;
}

ValidationReport validate_bimodule(const StructureAlgebra& r, const Bimodule& m) {
    ValidationReport rep;
    const auto F = r.field();
    if (m.left.size() != r.dim() || m.right.size() != r.dim()) {
        rep.fail("bimodule needs one left and one right action matrix per ring basis element");
        return rep;
    }
    for (std::size_t k = 0; k < r.dim(); ++k)
        if (m.left[k].rows() != m.dim || m.left[k].cols() != m.dim || m.right[k].rows() != m.dim ||
            m.right[k].cols() != m.dim) {
            rep.fail("bimodule action matrix " + std::to_string(k) + " has the wrong shape");
            return rep;
        }
    rep.merge(validate_module(r, m.as_left()), "left action: ");
    // A right action is a left action of the opposite ring.
    rep.merge(validate_module(r.opposite(), {m.dim, m.right}), "right action: ");
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i]))
                rep.fail("left and right actions do not commute on basis pair " + idx(i, j));
    (void)F;
    return rep;
}

RightModule dual_right(const LeftModule& x) {
    RightModule m{x.dim, {}};
    for (const auto& A : x.action) m.action.push_back(A.transpose());
    return m;
}

TensorSpace balanced_tensor(const RightModule& m, const LeftModule& x) {
    if (m.action.size() != x.action.size()) throw std::invalid_argument("tensor: modules over different rings");
    const auto F = m.action.front().field();
    const Mat Im = Mat::identity(F, m.dim), Ix = Mat::identity(F, x.dim);
    std::vector<Mat> rel;
    for (std::size_t k = 0; k < m.action.size(); ++k) rel.push_back(kron(m.action[k], Ix) - kron(Im, x.action[k]));
    const std::size_t ambient = m.dim * x.dim;
    Subspace relations = Subspace::column_span(hstack(F, ambient, rel));
    auto q = quotient_map(ambient, relations);
    return {m.dim, x.dim, std::move(relations), std::move(q.proj), std::move(q.section), std::nullopt};
}

TensorSpace tensor_over_R(const Bimodule& m, const LeftModule& x) {
    TensorSpace t = balanced_tensor(m.as_right(), x);
    const auto F = t.proj.field();
    const Mat Ix = Mat::identity(F, x.dim);
    LeftModule induced{t.dim(), {}};
    for (const auto& L : m.left) induced.action.push_back(t.proj * kron(L, Ix) * t.section);
    t.module = std::move(induced);
    return t;
}

HomSpace hom_R(const Bimodule& m, const LeftModule& x) {
    MatrixSpace maps = hom_space(m.as_left(), x);
    LeftModule module{maps.dim(), {}};
    const auto F = maps.field();
    const auto basis = maps.basis();
    for (const auto& R : m.right) {
        Mat a(F, maps.dim(), maps.dim());
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Vec c = maps.coordinates(basis[t] * R);
            for (std::size_t s = 0; s < c.size(); ++s) a(s, t) = c[s];
        }
        module.action.push_back(std::move(a));
    }
    return {std::move(maps), std::move(module)};
}

PhiSystem::PhiSystem(std::size_t n, std::vector<Bimodule> modules, std::map<Key, Mat> phi)
    : n_(n), modules_(std::move(modules)), phi_(std::move(phi)) {
    if (modules_.size() != n_) throw std::invalid_argument("phi system: expected " + std::to_string(n_) + " bimodules");
    for (const auto& [key, m] : phi_)
        if (key.first < 1 || key.second < 1 || key.first + key.second > n_)
            throw std::invalid_argument("phi system: pre-product index " + idx(key.first, key.second) +
                                        " outside 1 <= i, j and i + j <= n");
    if (n_ == 0) return;
    const auto F = modules_.front().left.front().field();
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; i + j <= n_; ++j)
            if (!phi_.count({i, j})) phi_.emplace(Key{i, j}, Mat(F, dim(i + j), dim(i) * dim(j)));
}

const Mat& PhiSystem::phi(std::size_t i, std::size_t j) const {
    auto it = phi_.find({i, j});
    if (it == phi_.end()) throw std::out_of_range("phi system: no pre-product " + idx(i, j));
    return it->second;
}

ValidationReport validate_phi(const StructureAlgebra& r, const PhiSystem& ps) {
    ValidationReport rep;
    const auto F = r.field();
    const std::size_t n = ps.n();
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& M = ps.module(i);
        if (M.left.size() != r.dim() || M.right.size() != r.dim()) {
            rep.fail("M_" + std::to_string(i) + " does not have one action per ring basis element");
            return rep;
        }
    }
    bool shapes_ok = true;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j) {
            const Mat& P = ps.phi(i, j);
            if (P.rows() != ps.dim(i + j) || P.cols() != ps.dim(i) * ps.dim(j)) {
                rep.fail("phi" + idx(i, j) + " has shape " + std::to_string(P.rows()) + "x" + std::to_string(P.cols()) +
                         ", expected " + std::to_string(ps.dim(i + j)) + "x" + std::to_string(ps.dim(i) * ps.dim(j)));
                shapes_ok = false;
            }
        }
    if (!shapes_ok) return rep;

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j) {
            const auto &Mi = ps.module(i), &Mj = ps.module(j), &Mij = ps.module(i + j);
            const Mat& P = ps.phi(i, j);
            const Mat Ii = Mat::identity(F, Mi.dim), Ij = Mat::identity(F, Mj.dim);
            for (std::size_t k = 0; k < r.dim(); ++k) {
                if (!(P * (kron(Mi.right[k], Ij) - kron(Ii, Mj.left[k]))).is_zero())
                    rep.fail("phi" + idx(i, j) + " is not balanced for ring basis element " + std::to_string(k));
                if (!(P * kron(Mi.left[k], Ij) == Mij.left[k] * P))
                    rep.fail("phi" + idx(i, j) + " is not left R-linear for ring basis element " + std::to_string(k));
                if (!(P * kron(Ii, Mj.right[k]) == Mij.right[k] * P))
                    rep.fail("phi" + idx(i, j) + " is not right R-linear for ring basis element " + std::to_string(k));
            }
        }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j)
            for (std::size_t k = 1; i + j + k <= n; ++k) {
                const Mat Ii = Mat::identity(F, ps.dim(i)), Ik = Mat::identity(F, ps.dim(k));
                const Mat lhs = ps.phi(i + j, k) * kron(ps.phi(i, j), Ik);
                const Mat rhs = ps.phi(i, j + k) * kron(Ii, ps.phi(j, k));
                if (!(lhs == rhs)) rep.fail("associativity of pre-products fails for " + idx(i, j, k));
            }
    return rep;
}

}  // namespace ntx
