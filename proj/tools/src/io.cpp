#include "ntext_cli/io.hpp"

#include <cstdio>

namespace ntx::cli {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t count(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Residue residue(const json& j, PrimeField F, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where, "expected an integer");
    const long long v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= F.modulus())
        throw InputError(where, "entry " + std::to_string(v) + " is not a residue mod " + std::to_string(F.modulus()));
    return static_cast<Residue>(v);
}

Mat matrix(const json& j, PrimeField F, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) throw InputError(where, "expected an array of rows");
    if (j.size() != rows)
        throw InputError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Mat m(F, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        const std::string w = where + "[" + std::to_string(r) + "]";
        if (!row.is_array()) throw InputError(w, "expected a row array");
        if (row.size() != cols)
            throw InputError(w, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = residue(row[c], F, w + "[" + std::to_string(c) + "]");
    }
    return m;
}

std::vector<Mat> matrices(const json& j, PrimeField F, std::size_t k, std::size_t rows, std::size_t cols,
                          const std::string& where) {
    if (!j.is_array()) throw InputError(where, "expected an array of matrices");
    if (j.size() != k)
        throw InputError(where, "expected " + std::to_string(k) + " matrices, got " + std::to_string(j.size()));
    std::vector<Mat> out;
    for (std::size_t t = 0; t < k; ++t) out.push_back(matrix(j[t], F, rows, cols, where + "[" + std::to_string(t) + "]"));
    return out;
}

json matrices_to_json(const std::vector<Mat>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(matrix_to_json(m));
    return a;
}

}  // namespace

std::string_view to_string(Form f) noexcept {
    switch (f) {
        case Form::R: return "R";
        case Form::f: return "f";
        case Form::g: return "g";
    }
    return "?";
}

PhiSystem Problem::phi_system() const {
    for (const auto& [key, m] : phi)
        if (key.first < 1 || key.second < 1 || key.first + key.second > n())
            throw InputError("phi", "pre-product (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                        ") is out of range for n = " + std::to_string(n()));
    return PhiSystem(n(), bimodules, phi);
}

const NamedModule* Problem::find(std::string_view name) const {
    for (const auto& m : modules)
        if (m.name == name) return &m;
    return nullptr;
}

Problem parse_problem(const json& j) {
    if (!j.is_object()) throw InputError("", "top level must be an object");
    const auto& layout = field(j, "layout", "");
    if (!layout.is_string() || layout.get<std::string>() != kLayout)
        throw InputError("layout", std::string("unsupported layout; expected \"") + kLayout + "\"");
    const auto& pj = field(j, "p", "");
    if (!pj.is_number_integer() || pj.get<long long>() < 2) throw InputError("p", "expected a prime");
    PrimeField F(2);
    try {
        F = PrimeField(pj.get<std::uint64_t>());
    } catch (const std::exception& e) {
        throw InputError("p", e.what());
    }

    const auto& rj = field(j, "ring", "");
    const std::size_t d = count(field(rj, "dim", "ring"), "ring.dim");
    if (d == 0) throw InputError("ring.dim", "the ring must be nonzero");
    const Mat mult = matrix(field(rj, "mult", "ring"), F, d, d * d, "ring.mult");
    const Mat unit = matrix(json::array({field(rj, "unit", "ring")}), F, 1, d, "ring.unit");
    const auto u = unit.row(0);
    Problem prob{StructureAlgebra(F, d, mult, Vec(u.begin(), u.end())), {}, {}, {}};

    if (const auto it = j.find("bimodules"); it != j.end()) {
        if (!it->is_array()) throw InputError("bimodules", "expected an array");
        for (std::size_t t = 0; t < it->size(); ++t) {
            const auto& bj = (*it)[t];
            const std::string w = "bimodules[" + std::to_string(t) + "]";
            Bimodule b;
            b.dim = count(field(bj, "dim", w), w + ".dim");
            if (bj.contains("action")) {
                if (!prob.ring.is_commutative())
                    throw InputError(w, "a single \"action\" is only allowed over a commutative ring");
                b.left = matrices(bj["action"], F, d, b.dim, b.dim, w + ".action");
                b.right = b.left;
            } else {
                b.left = matrices(field(bj, "left", w), F, d, b.dim, b.dim, w + ".left");
                b.right = matrices(field(bj, "right", w), F, d, b.dim, b.dim, w + ".right");
            }
            prob.bimodules.push_back(std::move(b));
        }
    }
    const std::size_t n = prob.bimodules.size();

    if (const auto it = j.find("phi"); it != j.end()) {
        if (!it->is_array()) throw InputError("phi", "expected an array");
        for (std::size_t t = 0; t < it->size(); ++t) {
            const auto& ej = (*it)[t];
            const std::string w = "phi[" + std::to_string(t) + "]";
            const std::size_t i = count(field(ej, "i", w), w + ".i"), jj = count(field(ej, "j", w), w + ".j");
            if (i < 1 || jj < 1 || i + jj > n)
                throw InputError(w, "pre-product (" + std::to_string(i) + "," + std::to_string(jj) +
                                        ") is out of range for n = " + std::to_string(n));
            const std::size_t rows = prob.bimodules[i + jj - 1].dim;
            const std::size_t cols = prob.bimodules[i - 1].dim * prob.bimodules[jj - 1].dim;
            if (!prob.phi.emplace(PhiSystem::Key{i, jj}, matrix(field(ej, "matrix", w), F, rows, cols, w + ".matrix"))
                     .second)
                throw InputError(w, "duplicate pre-product (" + std::to_string(i) + "," + std::to_string(jj) + ")");
        }
    }

    if (const auto it = j.find("modules"); it != j.end()) {
        if (!it->is_array()) throw InputError("modules", "expected an array");
        for (std::size_t t = 0; t < it->size(); ++t) {
            const auto& mj = (*it)[t];
            const std::string w = "modules[" + std::to_string(t) + "]";
            NamedModule m;
            const auto& nj = field(mj, "name", w);
            if (!nj.is_string()) throw InputError(w + ".name", "expected a string");
            m.name = nj.get<std::string>();
            if (prob.find(m.name)) throw InputError(w + ".name", "duplicate module name \"" + m.name + "\"");
            const auto& fj = field(mj, "form", w);
            const std::string form = fj.is_string() ? fj.get<std::string>() : "";
            if (form == "R") m.form = Form::R;
            else if (form == "f") m.form = Form::f;
            else if (form == "g") m.form = Form::g;
            else throw InputError(w + ".form", "expected \"R\", \"f\" or \"g\"");
            m.x.dim = count(field(mj, "dim", w), w + ".dim");
            m.x.action = matrices(field(mj, "action", w), F, d, m.x.dim, m.x.dim, w + ".action");
            if (m.form == Form::f) {
                const auto& arr = field(mj, "f", w);
                if (!arr.is_array() || arr.size() != n)
                    throw InputError(w + ".f", "expected " + std::to_string(n) + " structure maps");
                for (std::size_t i = 1; i <= n; ++i)
                    m.maps.push_back(matrix(arr[i - 1], F, m.x.dim, prob.bimodules[i - 1].dim * m.x.dim,
                                            w + ".f[" + std::to_string(i - 1) + "]"));
            } else if (m.form == Form::g) {
                const auto& arr = field(mj, "g", w);
                if (!arr.is_array() || arr.size() != n)
                    throw InputError(w + ".g", "expected " + std::to_string(n) + " structure maps");
                for (std::size_t i = 1; i <= n; ++i) {
                    const std::size_t rows = hom_R(prob.bimodules[i - 1], m.x).dim();
                    m.maps.push_back(matrix(arr[i - 1], F, rows, m.x.dim, w + ".g[" + std::to_string(i - 1) + "]"));
                }
            }
            prob.modules.push_back(std::move(m));
        }
    }
    return prob;
}

json matrix_to_json(const Mat& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        a.push_back(std::move(row));
    }
    return a;
}

json algebra_to_json(const StructureAlgebra& a) {
    json unit = json::array();
    for (auto u : a.unit()) unit.push_back(u);
    return json{{"dim", a.dim()}, {"mult", matrix_to_json(a.mult())}, {"unit", std::move(unit)}};
}

json module_to_json(const NamedModule& m) {
    json j{{"name", m.name}, {"form", std::string(to_string(m.form))}, {"dim", m.x.dim},
           {"action", matrices_to_json(m.x.action)}};
    if (m.form != Form::R) j[m.form == Form::f ? "f" : "g"] = matrices_to_json(m.maps);
    return j;
}

json problem_to_json(const Problem& p) {
    json j{{"layout", kLayout}, {"p", p.field().modulus()}, {"ring", algebra_to_json(p.ring)}};
    json bims = json::array();
    for (const auto& b : p.bimodules)
        bims.push_back(json{{"dim", b.dim}, {"left", matrices_to_json(b.left)}, {"right", matrices_to_json(b.right)}});
    j["bimodules"] = std::move(bims);
    json phi = json::array();
    for (const auto& [key, m] : p.phi) phi.push_back(json{{"i", key.first}, {"j", key.second}, {"matrix", matrix_to_json(m)}});
    j["phi"] = std::move(phi);
    json mods = json::array();
    for (const auto& m : p.modules) mods.push_back(module_to_json(m));
    j["modules"] = std::move(mods);
    return j;
}

Problem problem_from_extension(const ExtensionRing& s) {
    const auto& ps = s.phi_system();
    return {s.base(), ps.modules(), ps.phi_table(), {}};
}

NamedModule as_named(std::string name, const FModule& m) { return {std::move(name), Form::f, m.x, m.f}; }
NamedModule as_named(std::string name, const GModule& g) { return {std::move(name), Form::g, g.x, g.g}; }
NamedModule as_named(std::string name, const LeftModule& x) { return {std::move(name), Form::R, x, {}}; }

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ntx::cli
