#include "ntext/extension.hpp"

#include <stdexcept>

namespace ntx {

ExtensionRing::ExtensionRing(StructureAlgebra base, PhiSystem phi_system, StructureAlgebra total,
                             std::vector<std::size_t> offsets)
    : base_(std::move(base)), phi_(std::move(phi_system)), total_(std::move(total)), offsets_(std::move(offsets)) {}

Mat ExtensionRing::inj() const {
    Mat m(field(), dim(), base_.dim());
    for (std::size_t a = 0; a < base_.dim(); ++a) m(a, a) = 1;
    return m;
}

Mat ExtensionRing::proj() const { return inj().transpose(); }

ExtensionRing build_extension(const StructureAlgebra& r, const PhiSystem& ps) {
    ValidationReport rep;
    rep.merge(validate(r), "ring: ");
    for (std::size_t i = 1; i <= ps.n(); ++i)
        rep.merge(validate_bimodule(r, ps.module(i)), "M_" + std::to_string(i) + ": ");
    if (rep.ok()) rep.merge(validate_phi(r, ps), "pre-products: ");
    if (!rep.ok()) throw InvalidInput("cannot build extension from invalid data", rep);

    const auto F = r.field();
    const std::size_t n = ps.n();
    std::vector<std::size_t> offsets{0, r.dim()};
    for (std::size_t i = 1; i <= n; ++i) offsets.push_back(offsets.back() + ps.dim(i));
    const std::size_t D = offsets.back();
    auto dim_of = [&](std::size_t d) { return offsets[d + 1] - offsets[d]; };

    Mat mult(F, D, D * D);
    auto put = [&](std::size_t u, std::size_t v, std::size_t degree, const Vec& value) {
        for (std::size_t k = 0; k < value.size(); ++k) mult(offsets[degree] + k, u * D + v) = value[k];
    };
    for (std::size_t du = 0; du <= n; ++du)
        for (std::size_t b = 0; b < dim_of(du); ++b)
            for (std::size_t dv = 0; dv <= n; ++dv)
                for (std::size_t c = 0; c < dim_of(dv); ++c) {
                    const std::size_t u = offsets[du] + b, v = offsets[dv] + c;
                    if (du + dv > n) continue;
                    if (du == 0 && dv == 0) {
                        put(u, v, 0, r.basis_product(b, c));
                    } else if (du == 0) {
                        put(u, v, dv, ps.module(dv).left[b].col(c));
                    } else if (dv == 0) {
                        put(u, v, du, ps.module(du).right[c].col(b));
                    } else {
                        put(u, v, du + dv, ps.phi(du, dv).col(b * ps.dim(dv) + c));
                    }
                }
    Vec unit(D, 0);
    for (std::size_t a = 0; a < r.dim(); ++a) unit[a] = r.unit()[a];
    return {r, ps, StructureAlgebra(F, D, std::move(mult), std::move(unit)), std::move(offsets)};
}

std::vector<Vec> graded_components(const ExtensionRing& s, std::span<const Residue> x) {
    if (x.size() != s.dim()) throw std::invalid_argument("graded_components: length mismatch");
    std::vector<Vec> parts;
    for (std::size_t d = 0; d <= s.n(); ++d)
        parts.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(s.offset(d)),
                           x.begin() + static_cast<std::ptrdiff_t>(s.offset(d + 1)));
    return parts;
}

Vec assemble_components(const ExtensionRing& s, const std::vector<Vec>& parts) {
    if (parts.size() != s.n() + 1) throw std::invalid_argument("assemble_components: wrong number of components");
    Vec x;
    for (std::size_t d = 0; d <= s.n(); ++d) {
        if (parts[d].size() != s.component_dim(d)) throw std::invalid_argument("assemble_components: bad component");
        x.insert(x.end(), parts[d].begin(), parts[d].end());
    }
    return x;
}

Mat tensor_swap(PrimeField field, std::size_t dim_u, std::size_t dim_v) {
    Mat m(field, dim_u * dim_v, dim_u * dim_v);
    for (std::size_t a = 0; a < dim_u; ++a)
        for (std::size_t b = 0; b < dim_v; ++b) m(b * dim_u + a, a * dim_v + b) = 1;
    return m;
}

ExtensionRing opposite_extension(const ExtensionRing& s) {
    const auto& ps = s.phi_system();
    const auto F = s.field();
    std::vector<Bimodule> mods;
    for (const auto& m : ps.modules()) mods.push_back({m.dim, m.right, m.left});
    std::map<PhiSystem::Key, Mat> phi;
    for (std::size_t i = 1; i <= ps.n(); ++i)
        for (std::size_t j = 1; i + j <= ps.n(); ++j)
            phi.emplace(PhiSystem::Key{i, j}, ps.phi(j, i) * tensor_swap(F, ps.dim(i), ps.dim(j)));
    return build_extension(s.base().opposite(), PhiSystem(ps.n(), std::move(mods), std::move(phi)));
}

}  // namespace ntx
