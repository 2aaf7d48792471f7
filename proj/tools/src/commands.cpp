#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ntext/homtests.hpp"
#include "ntext_cli/cli.hpp"
#include "ntext_cli/io.hpp"

#ifndef NTEXT_VERSION
#define NTEXT_VERSION "unknown"
#endif

namespace ntx::cli {

namespace {

struct Options {
    std::string input, module, out, format = "json", tag, direction;
    std::vector<std::string> gen;
    std::uint64_t budget = 1'000'000;
    std::size_t cap = 8;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::size_t enum_dim = 3;
    std::uint64_t limit = 100'000;
    bool oracle = false;
    bool no_timestamp = false;
};

std::string verdict(Verdict v) { return std::string(to_string(v)); }

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void check(const std::string& name, const std::string& status, const std::string& detail = {}) {
        json c{{"name", name}, {"status", status}};
        if (!detail.empty()) c["detail"] = detail;
        checks_.push_back(std::move(c));
        if (status == "fail") failed_ = true;
        if (status == "inconclusive") inconclusive_ = true;
    }
    void check(const std::string& name, const ValidationReport& v) {
        std::string detail;
        for (const auto& f : v.failures()) detail += (detail.empty() ? "" : "; ") + f;
        check(name, std::string(v.ok() ? "pass" : "fail"), detail);
    }
    // Without this, string literals would bind to the bool overload.
    void check(const std::string& name, const char* status, const std::string& detail = {}) {
        check(name, std::string(status), detail);
    }
    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        check(name, std::string(ok ? "pass" : "fail"), detail);
    }

    json& result() { return result_; }
    json& summary() { return summary_; }
    [[nodiscard]] bool failed() const noexcept { return failed_; }

    [[nodiscard]] std::string status() const {
        return failed_ ? "fail" : inconclusive_ ? "inconclusive" : "pass";
    }

    void render(std::ostream& out, const Options& o, const std::string& digest, double elapsed_ms) const {
        json j{{"tool", "ntext"}, {"version", NTEXT_VERSION}, {"command", command_}, {"input_digest", digest},
               {"parameters", {{"budget", o.budget}, {"cap", o.cap}, {"seed", o.seed}}},
               {"status", status()}, {"checks", checks_}, {"summary", summary_}, {"result", result_}};
        if (!o.no_timestamp) {
            j["elapsed_ms"] = elapsed_ms;
            const std::time_t now = std::time(nullptr);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            j["timestamp"] = buf;
        }
        if (o.format == "text") {
            out << command_ << ": " << status() << "\n";
            for (const auto& c : checks_) {
                out << "  " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>();
                if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
                out << "\n";
            }
            for (const auto& [k, v] : summary_.items())
                out << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            if (!o.no_timestamp) out << "  elapsed_ms = " << elapsed_ms << "\n";
            return;
        }
        out << j.dump(2) << "\n";
    }

private:
    std::string command_;
    json checks_ = json::array();
    json summary_ = json::object();
    json result_ = json::object();
    bool failed_ = false;
    bool inconclusive_ = false;
};

struct Loaded {
    Problem prob;
    std::string digest;
};

std::size_t parse_count(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw InputError(where, "expected a non-negative integer, got \"" + s + "\"");
    return static_cast<std::size_t>(v);
}

/// Ring, bimodules and pre-products, each validated; the extension when all pass.
std::optional<ExtensionRing> build_checked(const Problem& p, Report& rep) {
    const auto ring = validate(p.ring);
    rep.check("ring", ring);
    bool ok = ring.ok();
    for (std::size_t i = 0; i < p.bimodules.size(); ++i) {
        if (!ring.ok()) break;
        const auto b = validate_bimodule(p.ring, p.bimodules[i]);
        rep.check("bimodule " + std::to_string(i + 1), b);
        ok = ok && b.ok();
    }
    if (!ok) {
        rep.check("phi", "skipped", "ring or bimodules invalid");
        return std::nullopt;
    }
    const PhiSystem ps = p.phi_system();
    const auto phi = validate_phi(p.ring, ps);
    rep.check("phi", phi);
    if (!phi.ok()) return std::nullopt;
    return build_extension(p.ring, ps);
}

ExtensionRing build_or_throw(const Problem& p) {
    Report scratch("build");
    auto s = build_checked(p, scratch);
    if (!s) throw InputError("", "the ring data does not validate; run `ntext validate` for details");
    return std::move(*s);
}

Loaded load(const Options& o) {
    std::optional<Problem> prob;
    std::string bytes;
    if (!o.input.empty()) {
        std::ifstream in(o.input, std::ios::binary);
        if (!in) throw InputError("--input", "cannot read " + o.input);
        std::stringstream ss;
        ss << in.rdbuf();
        bytes = ss.str();
        json j;
        try {
            j = json::parse(bytes);
        } catch (const json::parse_error& e) {
            throw InputError(o.input, std::string("not valid JSON: ") + e.what());
        }
        prob = parse_problem(j);
    }
    std::vector<std::string> wanted;
    for (std::size_t t = 0; t < o.gen.size();) {
        const std::string& tok = o.gen[t];
        if (tok == "serial") {
            if (t + 2 >= o.gen.size()) throw InputError("--gen", "usage: --gen serial N P");
            if (prob) throw InputError("--gen", "serial replaces the ring; do not combine it with --input or twice");
            const std::size_t n = parse_count(o.gen[t + 1], "--gen serial N");
            const std::size_t p = parse_count(o.gen[t + 2], "--gen serial P");
            try {
                prob = problem_from_extension(serial_extension(static_cast<Residue>(p), n));
            } catch (const std::invalid_argument& e) {
                throw InputError("--gen serial", e.what());
            }
            t += 3;
        } else if (tok == "TR" || tok == "ZR" || tok == "regular" || tok == "R") {
            wanted.push_back(tok);
            ++t;
        } else {
            throw InputError("--gen", "unknown generator \"" + tok + "\" (R, TR, ZR, regular, serial N P)");
        }
    }
    if (!prob) throw InputError("--input", "no input: give --input FILE or --gen serial N P");
    if (!wanted.empty()) {
        const ExtensionRing s = build_or_throw(*prob);
        const LeftModule r = regular_module(s.base());
        for (const auto& w : wanted) {
            if (prob->find(w)) throw InputError("--gen", "module \"" + w + "\" already exists");
            if (w == "R") prob->modules.push_back(as_named("R", r));
            if (w == "TR") prob->modules.push_back(as_named("TR", T(s, r)));
            if (w == "ZR") prob->modules.push_back(as_named("ZR", Z(s, r)));
            if (w == "regular") prob->modules.push_back(as_named("regular", saction_to_fmodule(s, regular_module(s.total()))));
        }
    }
    std::string key = bytes + "\n--gen";
    for (const auto& g : o.gen) key += " " + g;
    return {std::move(*prob), fnv1a_hex(key)};
}

const NamedModule& select(const Options& o, const Problem& p) {
    if (o.module.empty()) {
        if (p.modules.size() == 1) return p.modules.front();
        std::string names;
        for (const auto& m : p.modules) names += (names.empty() ? "" : ", ") + m.name;
        throw InputError("--module", p.modules.empty() ? "the input declares no modules"
                                                       : "several modules declared, choose one of: " + names);
    }
    if (const auto* m = p.find(o.module)) return *m;
    throw InputError("--module", "unknown module \"" + o.module + "\"");
}

ValidationReport validate_named(const ExtensionRing& s, const NamedModule& m) {
    switch (m.form) {
        case Form::R: return validate_module(s.base(), m.x);
        case Form::f: return validate_fmodule(s, m.fmodule());
        case Form::g: return validate_gmodule(s, m.gmodule());
    }
    return {};
}

/// The module as (X, f), or nullopt (with a failed check) when it does not validate.
std::optional<FModule> s_module(const ExtensionRing& s, const NamedModule& m, Report& rep, const char* command) {
    if (m.form == Form::R)
        throw InputError("--module", std::string(command) + " needs an S-module (form f or g); \"" + m.name +
                                         "\" is an R-module, lift it with `ntext functor --tag T` or `--tag Z`");
    const auto v = validate_named(s, m);
    rep.check("module " + m.name, v);
    if (!v.ok()) return std::nullopt;
    return m.form == Form::f ? m.fmodule() : from_left_form(s, m.gmodule());
}

void write_out(const Options& o, const json& j) {
    if (o.out.empty()) return;
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("--out", "cannot write " + o.out);
    f << j.dump(2) << "\n";
}

json homdim_json(const HomDim& h) { return json{{"value", h.value}, {"capped", h.capped}, {"text", h.to_string()}}; }

json criterion_json(const CriterionResult& c) {
    json j{{"verdict", verdict(c.verdict)}, {"base_condition", c.base_condition}, {"iso", verdict(c.iso)},
           {"reason", c.reason}};
    if (c.base_witness) j["base_witness"] = matrix_to_json(*c.base_witness);
    if (c.iso_witness) j["iso_witness"] = matrix_to_json(*c.iso_witness);
    return j;
}

json sequence_json(const SequenceDiagnostics& d) {
    return json{{"complex", d.complex}, {"exact", d.exact}, {"middle_dim", d.middle_dim}, {"rank_h", d.rank_h},
                {"rank_f", d.rank_f}};
}

/// Names of the middle maps for which "C flat and (**) exact" gives the flat verdict.
json matching_sequences(const FlatnessResult& f) {
    json names = json::array();
    const bool flat = f.verdict == Verdict::yes;
    if ((f.cokernel_flat && f.h_paper.exact) == flat) names.push_back("h_paper");
    if ((f.cokernel_flat && f.h_corrected.exact) == flat) names.push_back("h_corrected");
    return names;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, const Loaded& in, Report& rep) {
    const auto s = build_checked(in.prob, rep);
    for (const auto& m : in.prob.modules) {
        if (!s) {
            rep.check("module " + m.name, "skipped", "ring data invalid");
            continue;
        }
        rep.check("module " + m.name, validate_named(*s, m));
    }
    rep.summary()["n"] = in.prob.n();
    rep.summary()["modules"] = in.prob.modules.size();
    if (s) rep.summary()["dim_S"] = s->dim();
    (void)o;
    return rep.failed() ? kFail : kPass;
}

int cmd_build(const Options& o, const Loaded& in, Report& rep) {
    const auto s = build_checked(in.prob, rep);
    if (!s) return kFail;
    json offsets = json::array();
    for (auto v : s->offsets()) offsets.push_back(v);
    rep.summary()["dim_S"] = s->dim();
    rep.summary()["offsets"] = offsets;
    const json algebra{{"layout", kLayout}, {"p", s->field().modulus()}, {"ring", algebra_to_json(s->total())},
                       {"offsets", offsets}};
    rep.result()["algebra"] = algebra;
    write_out(o, algebra);
    return kPass;
}

int cmd_classify(const Options& o, const Loaded& in, Report& rep) {
    const ExtensionRing s = build_or_throw(in.prob);
    const auto& named = select(o, in.prob);
    const auto m = s_module(s, named, rep, "classify");
    if (!m) return kFail;
    const auto c = classify(s, *m, o.budget, o.cap, o.seed, o.oracle);
    json flat{{"verdict", verdict(c.flat.verdict)}, {"cokernel_flat", c.flat.cokernel_flat},
              {"tc_iso", verdict(c.flat.tc_iso)}, {"h_paper", sequence_json(c.flat.h_paper)},
              {"h_corrected", sequence_json(c.flat.h_corrected)}, {"matching_sequences", matching_sequences(c.flat)},
              {"reason", c.flat.reason}};
    json& r = rep.result();
    r["module"] = named.name;
    r["projective"] = criterion_json(c.projective);
    r["injective"] = criterion_json(c.injective);
    r["flat"] = flat;
    r["pd"] = homdim_json(c.pd);
    r["injd"] = homdim_json(c.injd);
    rep.check("flat agrees with projective", c.flat.verdict == c.projective.verdict);
    rep.check("pd = 0 iff projective",
              (c.pd.value == 0 && !c.pd.capped) == (c.projective.verdict == Verdict::yes));
    if (c.lifting) {
        r["lifting_oracle"] = c.lifting->holds;
        rep.check("lifting oracle agrees", c.lifting->holds == (c.projective.verdict == Verdict::yes));
    }
    if (c.duality) {
        r["duality_oracle"] = c.duality->holds;
        rep.check("duality oracle agrees", c.duality->holds == (c.injective.verdict == Verdict::yes));
    }
    rep.summary()["projective"] = verdict(c.projective.verdict);
    rep.summary()["injective"] = verdict(c.injective.verdict);
    rep.summary()["flat"] = verdict(c.flat.verdict);
    rep.summary()["pd"] = c.pd.to_string();
    rep.summary()["injd"] = c.injd.to_string();
    return rep.failed() ? kFail : kPass;
}

int cmd_functor(const Options& o, const Loaded& in, Report& rep) {
    FunctorTag tag{};
    try {
        tag = parse_functor_tag(o.tag);
    } catch (const std::invalid_argument&) {
        throw InputError("--tag", "expected one of T, C, U, Z, H, K");
    }
    const ExtensionRing s = build_or_throw(in.prob);
    const auto& named = select(o, in.prob);
    const std::string t(to_string(tag));
    const Form needed = (tag == FunctorTag::T || tag == FunctorTag::Z || tag == FunctorTag::H) ? Form::R
                        : tag == FunctorTag::K                                                 ? Form::g
                                                                                                : Form::f;
    if (named.form != needed) {
        std::string hint;
        if (needed == Form::g) hint = "; run `ntext convert --direction left` first";
        if (needed == Form::f && named.form == Form::g) hint = "; run `ntext convert --direction right` first";
        throw InputError("--module", t + " applies to modules of form " + std::string(to_string(needed)) + ", \"" +
                                         named.name + "\" has form " + std::string(to_string(named.form)) + hint);
    }
    const auto v = validate_named(s, named);
    rep.check("module " + named.name, v);
    if (!v.ok()) return kFail;

    const std::string name = t + "(" + named.name + ")";
    NamedModule image;
    json& r = rep.result();
    switch (tag) {
        case FunctorTag::T: {
            const auto to = T_object(s, named.x);
            image = as_named(name, to.module);
            r["blocks"] = to.offsets;
            json kappa = json::array();
            for (const auto& k : to.module.f) kappa.push_back(matrix_to_json(k));
            r["kappa"] = std::move(kappa);
            rep.check("C(T(X)) = X", C(s, to.module) == named.x);
            break;
        }
        case FunctorTag::Z: {
            image = as_named(name, Z(s, named.x));
            const NamedModule back = as_named(named.name, U(image.fmodule()));
            rep.check("U(Z(X)) = X", module_to_json(back).dump() == module_to_json(named).dump());
            break;
        }
        case FunctorTag::H: {
            const auto ho = H_object(s, named.x);
            image = as_named(name, ho.module);
            r["blocks"] = ho.offsets;
            json lambda = json::array();
            for (const auto& g : ho.module.g) lambda.push_back(matrix_to_json(g));
            r["lambda"] = std::move(lambda);
            const auto iso = modules_isomorphic(K(s, ho.module), named.x, o.budget, o.seed);
            rep.check("K(H(X)) ~ X", iso.verdict == Verdict::yes  ? "pass"
                                     : iso.verdict == Verdict::no ? "fail"
                                                                  : "inconclusive");
            break;
        }
        case FunctorTag::C: image = as_named(name, C(s, named.fmodule())); break;
        case FunctorTag::U: image = as_named(name, U(named.fmodule())); break;
        case FunctorTag::K: image = as_named(name, K(s, named.gmodule())); break;
    }
    r["module"] = module_to_json(image);
    rep.summary()["image"] = name;
    rep.summary()["dim"] = image.x.dim;
    Problem out = in.prob;
    out.modules = {image};
    write_out(o, problem_to_json(out));
    return rep.failed() ? kFail : kPass;
}

int cmd_convert(const Options& o, const Loaded& in, Report& rep) {
    if (o.direction != "left" && o.direction != "right")
        throw InputError("--direction", "expected \"left\" ((X, f) to (X, g)) or \"right\" ((X, g) to (X, f))");
    const ExtensionRing s = build_or_throw(in.prob);
    const auto& named = select(o, in.prob);
    const Form from = o.direction == "left" ? Form::f : Form::g;
    if (named.form != from)
        throw InputError("--module", "--direction " + o.direction + " converts a module of form " +
                                         std::string(to_string(from)) + ", \"" + named.name + "\" has form " +
                                         std::string(to_string(named.form)));
    const auto v = validate_named(s, named);
    rep.check("module " + named.name, v);
    if (!v.ok()) return kFail;
    NamedModule image;
    std::size_t end_f = 0, end_g = 0;
    if (from == Form::f) {
        const GModule g = to_left_form(s, named.fmodule());
        image = as_named(named.name, g);
        rep.check("round trip", from_left_form(s, g) == named.fmodule());
        end_f = morphism_space(s, named.fmodule(), named.fmodule()).dim();
        end_g = gmorphism_space(s, g, g).dim();
    } else {
        const FModule f = from_left_form(s, named.gmodule());
        image = as_named(named.name, f);
        rep.check("round trip", to_left_form(s, f) == named.gmodule());
        end_f = morphism_space(s, f, f).dim();
        end_g = gmorphism_space(s, named.gmodule(), named.gmodule()).dim();
    }
    rep.check("endomorphism dimensions agree", end_f == end_g,
              "(X, f): " + std::to_string(end_f) + ", (X, g): " + std::to_string(end_g));
    rep.result()["module"] = module_to_json(image);
    rep.summary()["form"] = std::string(to_string(image.form));
    rep.summary()["dim_End"] = end_f;
    Problem out = in.prob;
    out.modules = {image};
    write_out(o, problem_to_json(out));
    return rep.failed() ? kFail : kPass;
}

int cmd_dimension(const Options& o, const Loaded& in, Report& rep, bool projective) {
    const ExtensionRing s = build_or_throw(in.prob);
    const auto& named = select(o, in.prob);
    HomDim d;
    std::string over;
    if (named.form == Form::R) {
        const auto v = validate_named(s, named);
        rep.check("module " + named.name, v);
        if (!v.ok()) return kFail;
        d = projective ? projective_dimension(s.base(), named.x, o.cap) : injective_dimension(s.base(), named.x, o.cap);
        over = "R";
    } else {
        const auto m = s_module(s, named, rep, projective ? "pd" : "id");
        if (!m) return kFail;
        d = projective ? proj_dimension(s, *m, o.cap) : inj_dimension(s, *m, o.cap);
        over = "S";
    }
    rep.result()["module"] = named.name;
    rep.result()["over"] = over;
    rep.result()[projective ? "pd" : "injd"] = homdim_json(d);
    rep.summary()[projective ? "pd" : "injd"] = d.to_string();
    return kPass;
}

int cmd_selfinj(const Options& o, const Loaded& in, Report& rep) {
    const ExtensionRing s = build_or_throw(in.prob);
    const auto r = check_selfinj_theorem(s, o.cap, o.budget);
    json hyp = json::array();
    for (const auto& e : r.hypothesis) {
        hyp.push_back(json{{"i", e.i}, {"hom_iso", verdict(e.hom_iso)}, {"ext_dims", e.ext_dims},
                           {"ext_vanishes", e.ext_vanishes}, {"induced_iso", e.induced_iso}});
    }
    json& res = rep.result();
    res["hypothesis"] = std::move(hyp);
    res["hypothesis_status"] = verdict(r.hypothesis_status);
    res["induced_maps_iso"] = r.induced_maps_iso;
    res["conclusion"] = std::string(to_string(r.conclusion));
    if (r.id_s) res["id_S"] = homdim_json(*r.id_s);
    if (r.id_mn) res["id_Mn"] = homdim_json(*r.id_mn);
    res["note"] = r.note;
    rep.check("hypothesis (*)", r.hypothesis_status == Verdict::yes  ? "pass"
                                : r.hypothesis_status == Verdict::no ? "not-satisfied"
                                                                     : "inconclusive");
    switch (r.conclusion) {
        case TheoremStatus::holds: rep.check("conclusion", "pass"); break;
        case TheoremStatus::violated: rep.check("conclusion", "fail", r.note); break;
        case TheoremStatus::hypothesis_not_satisfied: rep.check("conclusion", "not-applicable", r.note); break;
        case TheoremStatus::inconclusive: rep.check("conclusion", "inconclusive", r.note); break;
    }
    rep.summary()["conclusion"] = std::string(to_string(r.conclusion));
    return rep.failed() ? kFail : kPass;
}

int cmd_perfect(const Options& o, const Loaded& in, Report& rep) {
    const ExtensionRing s = build_or_throw(in.prob);
    std::vector<FModule> corpus;
    for (const auto& m : in.prob.modules) {
        if (m.form == Form::R) continue;
        const auto v = validate_named(s, m);
        rep.check("module " + m.name, v);
        if (v.ok()) corpus.push_back(m.form == Form::f ? m.fmodule() : from_left_form(s, m.gmodule()));
    }
    const std::size_t declared = corpus.size();
    std::string enumeration = "none";
    try {
        const RingData r{"input", s.base(), Subspace::zero(s.field(), s.base().dim())};
        const auto en = enumerate_fmodules(s, normal_form_modules(r, o.enum_dim), o.limit);
        corpus.insert(corpus.end(), en.modules.begin(), en.modules.end());
        enumeration = std::to_string(en.modules.size()) + " modules over " + std::to_string(en.carriers_used) + " carriers";
    } catch (const std::invalid_argument&) {
        enumeration = "not available for this base ring";
    }
    const auto r = perfect_desk_check(s, corpus, o.budget, o.cap);
    json& res = rep.result();
    res["declared"] = declared;
    res["enumeration"] = enumeration;
    res["modules"] = r.modules;
    res["flat"] = r.flat;
    res["violations"] = r.violations;
    res["failures"] = r.failures;
    res["note"] = r.note;
    rep.check("flat modules have pd 0 over S and C(m) pd 0 over R", r.ok());
    rep.summary()["modules"] = r.modules;
    rep.summary()["flat"] = r.flat;
    return rep.failed() ? kFail : kPass;
}

int cmd_corpus(const Options& o, Report& rep) {
    const auto instances = default_instances();
    std::vector<json> rows(instances.size());
    std::vector<std::array<std::size_t, 3>> disagreements(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < instances.size(); t = next++) {
            const auto& inst = instances[t];
            const auto en = enumerate_fmodules(inst.ext, normal_form_modules(inst.base, o.enum_dim), o.limit);
            std::size_t proj = 0, inj = 0, lift = 0, dual = 0, flat = 0;
            for (const auto& m : en.modules) {
                const bool p = is_projective(inst.ext, m, o.budget, o.seed).verdict == Verdict::yes;
                const bool i = is_injective(inst.ext, m, o.budget, o.seed).verdict == Verdict::yes;
                proj += p;
                inj += i;
                lift += lifting_oracle(inst.ext, m).holds != p;
                dual += injectivity_duality_oracle(inst.ext, m).holds != i;
                flat += (is_flat(inst.ext, m, o.budget, o.seed).verdict == Verdict::yes) != p;
            }
            disagreements[t] = {lift, dual, flat};
            rows[t] = json{{"instance", inst.label}, {"dim_S", inst.ext.dim()}, {"modules", en.modules.size()},
                           {"candidates", en.candidates}, {"carriers", en.carriers_used}, {"projective", proj},
                           {"injective", inj}, {"lifting_disagreements", lift}, {"duality_disagreements", dual},
                           {"flat_disagreements", flat}};
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(o.jobs, 1); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::size_t total = 0, lift = 0, dual = 0, flat = 0;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        total += rows[t]["modules"].get<std::size_t>();
        lift += disagreements[t][0];
        dual += disagreements[t][1];
        flat += disagreements[t][2];
    }
    rep.result()["instances"] = rows;
    rep.check("is_projective agrees with the lifting oracle", lift == 0, std::to_string(lift) + " disagreements");
    rep.check("is_injective agrees with the duality oracle", dual == 0, std::to_string(dual) + " disagreements");
    rep.check("is_flat agrees with is_projective", flat == 0, std::to_string(flat) + " disagreements");
    rep.summary()["instances"] = rows.size();
    rep.summary()["modules"] = total;
    return rep.failed() ? kFail : kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rings R x|_n M built from bimodules and pre-products, and their modules", "ntext"};
    app.require_subcommand(1);
    app.set_version_flag("--version", NTEXT_VERSION);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) {
            sub->add_option("--input,-i", o.input, "input JSON file");
            sub->add_option("--gen", o.gen, "generators: serial N P | R | TR | ZR | regular");
            sub->add_option("--module,-m", o.module, "module name");
            sub->add_option("--out,-o", o.out, "output file");
        }
        sub->add_option("--budget", o.budget, "isomorphism search budget")->capture_default_str();
        sub->add_option("--cap", o.cap, "cap for homological dimensions and Ext")->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for sampled searches")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--oracle", o.oracle, "cross-check with the independent oracles");
        sub->add_flag("--no-timestamp", o.no_timestamp, "omit timing fields from the report");
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"validate", "check ring, bimodules, pre-products and modules"},
             {"build", "assemble the extension ring as a structure-constant algebra"},
             {"classify", "projective / injective / flat verdicts and dimensions of a module"},
             {"functor", "apply T, C, U, Z, H or K to a module"},
             {"convert", "convert a module between (X, f) and (X, g) form"},
             {"pd", "projective dimension (capped)"},
             {"id", "injective dimension (capped)"},
             {"selfinj", "check the self-injective dimension theorem and its hypothesis"},
             {"perfect", "every flat module has projective dimension 0"},
             {"corpus", "run the checks over the built-in instances"}}) {
        auto* sub = app.add_subcommand(name, help);
        common(sub, name != "corpus");
        subs[name] = sub;
    }
    subs["functor"]->add_option("--tag,-t", o.tag, "T, C, U, Z, H or K")->required();
    subs["convert"]->add_option("--direction,-d", o.direction, "left: (X, f) -> (X, g); right: (X, g) -> (X, f)")
        ->required();
    for (const char* name : {"perfect", "corpus"}) {
        subs[name]->add_option("--enum-dim", o.enum_dim, "largest carrier dimension to enumerate")->capture_default_str();
        subs[name]->add_option("--limit", o.limit, "candidate limit per instance")->capture_default_str();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    Report rep(command);
    int code = kPass;
    std::string digest = fnv1a_hex("corpus");
    try {
        if (command == "corpus") {
            code = cmd_corpus(o, rep);
        } else {
            const Loaded in = load(o);
            digest = in.digest;
            if (command == "validate") code = cmd_validate(o, in, rep);
            else if (command == "build") code = cmd_build(o, in, rep);
            else if (command == "classify") code = cmd_classify(o, in, rep);
            else if (command == "functor") code = cmd_functor(o, in, rep);
            else if (command == "convert") code = cmd_convert(o, in, rep);
            else if (command == "pd") code = cmd_dimension(o, in, rep, true);
            else if (command == "id") code = cmd_dimension(o, in, rep, false);
            else if (command == "selfinj") code = cmd_selfinj(o, in, rep);
            else if (command == "perfect") code = cmd_perfect(o, in, rep);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.render(out, o, digest, ms);
    return code;
}

}  // namespace ntx::cli
