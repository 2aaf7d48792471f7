#pragma once

// JSON interchange for rings, bimodules, pre-products and modules.
//
// {
//   "layout": kLayout,                   mandatory, checked on load
//   "p": 2,
//   "ring": {"dim": d, "mult": d x d^2, "unit": [...]},
//   "bimodules": [{"dim": m, "left": [...], "right": [...]}, ...],
//   "phi": [{"i": 1, "j": 1, "matrix": [...]}, ...],
//   "modules": [{"name": "X", "form": "R" | "f" | "g", "dim": k,
//                "action": [...], "f": [...] | "g": [...]}, ...]
// }
//
// Matrices are arrays of rows. A bimodule over a commutative ring may give a
// single "action" list used on both sides.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ntext/corpus.hpp"

namespace ntx::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kLayout =
    "row-major matrices; tensors e_a(x)e_b at a*dim_right+b; mult column i*dim+j holds e_i*e_j";

/// Malformed input. `where` is a JSON path such as "bimodules[0].left[1]".
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    [[nodiscard]] const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

enum class Form { R, f, g };
std::string_view to_string(Form f) noexcept;

struct NamedModule {
    std::string name;
    Form form = Form::R;
    LeftModule x;
    std::vector<Mat> maps;  // f_i or g_i, empty for form R

    [[nodiscard]] FModule fmodule() const { return {x, maps}; }
    [[nodiscard]] GModule gmodule() const { return {x, maps}; }
};

struct Problem {
    StructureAlgebra ring;
    std::vector<Bimodule> bimodules;
    std::map<PhiSystem::Key, Mat> phi;
    std::vector<NamedModule> modules;

    [[nodiscard]] PrimeField field() const { return ring.field(); }
    [[nodiscard]] std::size_t n() const noexcept { return bimodules.size(); }
    /// Throws InputError for out-of-range pre-product keys.
    [[nodiscard]] PhiSystem phi_system() const;
    [[nodiscard]] const NamedModule* find(std::string_view name) const;
};

Problem parse_problem(const json& j);
json problem_to_json(const Problem& p);

json matrix_to_json(const Mat& m);
json module_to_json(const NamedModule& m);
json algebra_to_json(const StructureAlgebra& a);

/// The problem describing an extension (its modules list left empty).
Problem problem_from_extension(const ExtensionRing& s);

NamedModule as_named(std::string name, const FModule& m);
NamedModule as_named(std::string name, const GModule& g);
NamedModule as_named(std::string name, const LeftModule& x);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace ntx::cli
