#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ntext_cli/cli.hpp"
#include "ntext_cli/io.hpp"

using namespace ntx;
using namespace ntx::cli;

namespace {

const std::string kGolden = std::string(NTEXT_TEST_DATA) + "/f2_serial2.json";

struct Run {
    int code;
    std::string out, err;
    [[nodiscard]] json report() const { return json::parse(out); }
};

Run ntext(std::vector<std::string> args) {
    args.insert(args.begin(), "ntext");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ntext_test_" + name)).string();
}

std::string write_json(const std::string& name, const json& j) {
    const auto path = temp_file(name);
    std::ofstream(path) << j.dump(2);
    return path;
}

json golden() {
    std::ifstream in(kGolden);
    return json::parse(in);
}

std::string check_status(const json& report, const std::string& name) {
    for (const auto& c : report["checks"])
        if (c["name"] == name) return c["status"];
    return "missing";
}

}  // namespace

TEST_CASE("validate") {
    auto r = ntext({"validate", "-i", kGolden, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["status"] == "pass");
    CHECK(r.report()["summary"]["dim_S"] == 3);

    // broken associativity: phi(1,2) = 0 in F_2 x|_3 (F_2, F_2, F_2)
    json j = problem_to_json(problem_from_extension(serial_extension(2, 3)));
    for (auto& e : j["phi"])
        if (e["i"] == 1 && e["j"] == 2) e["matrix"] = json::parse("[[0]]");
    r = ntext({"validate", "-i", write_json("broken.json", j), "--no-timestamp"});
    CHECK(r.code == kFail);
    CHECK(check_status(r.report(), "phi") == "fail");
    CHECK(r.out.find("(1,1,1)") != std::string::npos);

    j = golden();
    j["modules"] = json::array();
    CHECK(ntext({"validate", "-i", write_json("empty.json", j)}).code == kPass);

    j = golden();
    j["modules"][1]["f"][1] = json::parse("[[0,0],[1,0]]");  // f_2 != f_1 f_1
    r = ntext({"validate", "-i", write_json("badmod.json", j), "--no-timestamp"});
    CHECK(r.code == kFail);
    CHECK(check_status(r.report(), "module N") == "fail");

    j = golden();
    j["ring"]["mult"][0][0] = 0;  // no longer unital
    r = ntext({"validate", "-i", write_json("badring.json", j), "--no-timestamp"});
    CHECK(r.code == kFail);
    CHECK(check_status(r.report(), "ring") == "fail");
    CHECK(check_status(r.report(), "phi") == "skipped");
}

TEST_CASE("build") {
    const auto out = temp_file("algebra.json");
    auto r = ntext({"build", "-i", kGolden, "-o", out, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["dim_S"] == 3);
    CHECK(r.report()["summary"]["offsets"] == json::parse("[0,1,2,3]"));
    r = ntext({"validate", "-i", out, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["dim_S"] == 3);

    const auto zero = make_instance(BaseRing::dual2, {Piece::zero, Piece::zero});
    r = ntext({"build", "-i", write_json("zero.json", problem_to_json(problem_from_extension(zero.ext))),
               "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["result"]["algebra"]["ring"] == algebra_to_json(zero.base.ring));
}

TEST_CASE("classify") {
    auto r = ntext({"classify", "--gen", "serial", "2", "2", "TR", "--oracle", "--no-timestamp"});
    CHECK(r.code == kPass);
    auto rep = r.report();
    CHECK(rep["result"]["projective"]["verdict"] == "yes");
    CHECK(rep["result"]["flat"]["verdict"] == "yes");
    CHECK(rep["result"]["lifting_oracle"] == true);

    r = ntext({"classify", "-i", kGolden, "-m", "ZR", "--no-timestamp"});
    CHECK(r.code == kPass);
    rep = r.report();
    CHECK(rep["result"]["projective"]["verdict"] == "no");
    CHECK(rep["result"]["projective"]["reason"].get<std::string>().find("dimension") != std::string::npos);
    CHECK(rep["result"]["flat"]["matching_sequences"] == json::parse(R"(["h_paper","h_corrected"])"));

    const auto text = ntext({"classify", "-i", kGolden, "-m", "ZR", "--no-timestamp", "--format", "text"});
    CHECK(text.out.find("projective = no") != std::string::npos);
    CHECK(text.out.find("flat = no") != std::string::npos);

    CHECK(ntext({"classify", "-i", kGolden, "-m", "nope"}).code == kInputError);
    CHECK(ntext({"classify", "-i", kGolden}).code == kInputError);  // several modules, none chosen
    const auto rmod = ntext({"classify", "-i", kGolden, "-m", "X"});
    CHECK(rmod.code == kInputError);
    CHECK(rmod.err.find("functor") != std::string::npos);
}

TEST_CASE("functor") {
    const auto t_out = temp_file("tx.json");
    auto r = ntext({"functor", "-t", "T", "-i", kGolden, "-m", "X", "-o", t_out, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(check_status(r.report(), "C(T(X)) = X") == "pass");
    CHECK(r.report()["result"]["blocks"] == json::parse("[0,2,4,6]"));
    CHECK(r.report()["result"]["kappa"].size() == 2);
    r = ntext({"functor", "-t", "C", "-i", t_out, "--no-timestamp"});
    CHECK(r.code == kPass);
    auto c = r.report()["result"]["module"];
    CHECK(c["dim"] == 2);
    CHECK(c["action"] == golden()["modules"][0]["action"]);

    const auto z_out = temp_file("zx.json");
    r = ntext({"functor", "-t", "Z", "-i", kGolden, "-m", "X", "-o", z_out, "--no-timestamp"});
    CHECK(check_status(r.report(), "U(Z(X)) = X") == "pass");
    r = ntext({"functor", "-t", "U", "-i", z_out, "--no-timestamp"});
    auto u = r.report()["result"]["module"];
    u["name"] = "X";
    CHECK(u.dump() == golden()["modules"][0].dump());

    json j = golden();
    j["modules"] = json::parse(R"([{"name": "zero", "form": "R", "dim": 0, "action": [[]]}])");
    r = ntext({"functor", "-t", "H", "-i", write_json("zero_mod.json", j), "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["dim"] == 0);

    r = ntext({"functor", "-t", "H", "-i", kGolden, "-m", "X", "--no-timestamp"});
    CHECK(check_status(r.report(), "K(H(X)) ~ X") == "pass");
    CHECK(r.report()["summary"]["dim"] == 6);

    r = ntext({"functor", "-t", "K", "-i", kGolden, "-m", "N"});
    CHECK(r.code == kInputError);
    CHECK(r.err.find("convert --direction left") != std::string::npos);
    CHECK(ntext({"functor", "-t", "Q", "-i", kGolden, "-m", "N"}).code == kInputError);
}

TEST_CASE("convert") {
    auto r = ntext({"convert", "-d", "left", "-i", kGolden, "-m", "ZR", "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(check_status(r.report(), "round trip") == "pass");
    const auto g_out = temp_file("trg.json");
    r = ntext({"convert", "-d", "left", "-i", kGolden, "-m", "TR", "-o", g_out, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(check_status(r.report(), "endomorphism dimensions agree") == "pass");
    CHECK(r.report()["summary"]["dim_End"] == 3);
    r = ntext({"convert", "-d", "right", "-i", g_out, "--no-timestamp"});
    CHECK(r.code == kPass);
    auto back = r.report()["result"]["module"];
    CHECK(back.dump() == golden()["modules"][2].dump());
    r = ntext({"functor", "-t", "K", "-i", g_out, "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["dim"] == 1);
    CHECK(ntext({"convert", "-d", "right", "-i", kGolden, "-m", "TR"}).code == kInputError);
}

TEST_CASE("dimensions, theorems and corpus") {
    auto r = ntext({"pd", "-i", kGolden, "-m", "ZR", "--cap", "3", "--no-timestamp"});
    CHECK(r.report()["summary"]["pd"] == ">=3");
    r = ntext({"id", "-i", kGolden, "-m", "TR", "--no-timestamp"});
    CHECK(r.report()["summary"]["injd"] == "0");
    r = ntext({"pd", "-i", kGolden, "-m", "X", "--no-timestamp"});
    CHECK(r.report()["result"]["over"] == "R");

    r = ntext({"selfinj", "--gen", "serial", "3", "3", "--cap", "4", "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["conclusion"] == "holds");
    const auto zero = make_instance(BaseRing::f2, {Piece::zero});
    r = ntext({"selfinj", "-i", write_json("m0.json", problem_to_json(problem_from_extension(zero.ext))),
               "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["summary"]["conclusion"] == "hypothesis-not-satisfied");
    CHECK_FALSE(r.report()["result"].contains("id_S"));
    CHECK(check_status(r.report(), "conclusion") == "not-applicable");

    r = ntext({"perfect", "-i", kGolden, "--enum-dim", "2", "--no-timestamp"});
    CHECK(r.code == kPass);
    CHECK(r.report()["result"]["note"].get<std::string>().find("not desk-reproducible") != std::string::npos);

    const auto one = ntext({"corpus", "--enum-dim", "1", "--no-timestamp"});
    const auto four = ntext({"corpus", "--enum-dim", "1", "--jobs", "4", "--no-timestamp"});
    CHECK(one.code == kPass);
    CHECK(one.out == four.out);
    CHECK(one.report()["summary"]["instances"] == 67);
}

TEST_CASE("determinism and input errors") {
    const auto a = ntext({"classify", "-i", kGolden, "-m", "N", "--no-timestamp"});
    const auto b = ntext({"classify", "-i", kGolden, "-m", "N", "--no-timestamp"});
    CHECK(a.out == b.out);
    CHECK(ntext({"classify", "-i", kGolden, "-m", "N"}).report().contains("elapsed_ms"));

    std::ofstream(temp_file("garbage.json")) << "{ not json";
    CHECK(ntext({"validate", "-i", temp_file("garbage.json")}).code == kInputError);
    json j = golden();
    j.erase("layout");
    CHECK(ntext({"validate", "-i", write_json("nolayout.json", j)}).code == kInputError);
    j = golden();
    j["modules"][0]["action"][0][0][0] = 2;
    auto r = ntext({"validate", "-i", write_json("residue.json", j)});
    CHECK(r.code == kInputError);
    CHECK(r.err.find("modules[0].action[0][0][0]") != std::string::npos);
    j = golden();
    j["phi"][0]["i"] = 2;
    CHECK(ntext({"validate", "-i", write_json("range.json", j)}).code == kInputError);
    CHECK(ntext({"validate", "-i", "/nonexistent.json"}).code == kInputError);
    CHECK(ntext({"frobnicate"}).code == kInputError);
    CHECK(ntext({"validate"}).code == kInputError);
    CHECK(ntext({"validate", "--gen", "serial", "2", "4"}).code == kInputError);
}
