// End-to-end checks of the command-line tool: exit codes, determinism, and
// the golden presentation block.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HKQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(HKQ_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "hkq_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("hypertoric subcommand emits the golden presentation block") {
    auto dir = scratch_dir();
    std::string stem = (dir / "ma").string();
    auto res = run("hypertoric --arrangement " + fixture("triplet_a.json") + " --flavor HTdS1 --flow --out " + stem);
    CHECK(res.exit_code == 0);
    std::string text = slurp(stem + ".txt");
    CHECK(text.find("t2*t3") != std::string::npos);
    CHECK(text.find("-t1*t2*t4 + t1*t4*x") != std::string::npos);
    CHECK(text.find("t1*t3*t4") != std::string::npos);
    CHECK(fs::exists(stem + ".json"));
    CHECK(fs::exists(stem + ".dot"));
    std::string dot = slurp(stem + ".dot");
    CHECK(dot.find("digraph") != std::string::npos);

    // determinism: byte-identical artifacts across runs
    std::string stem2 = (dir / "ma2").string();
    auto res2 = run("hypertoric --arrangement " + fixture("triplet_a.json") + " --flavor HTdS1 --flow --out " + stem2);
    CHECK(res2.exit_code == 0);
    CHECK(slurp(stem + ".json") == slurp(stem2 + ".json"));
    CHECK(slurp(stem + ".txt") == slurp(stem2 + ".txt"));
    CHECK(slurp(stem + ".dot") == slurp(stem2 + ".dot"));
}

TEST_CASE("error paths carry distinct exit codes") {
    auto dir = scratch_dir();
    // malformed JSON -> 1
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{ not json";
    auto res = run("hypertoric --arrangement " + bad.string() + " --out " + (dir / "x").string());
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error:") != std::string::npos);

    // non-generic alpha -> 2, naming the tying subset
    fs::path tie = dir / "tie.json";
    std::ofstream(tie) << R"({"alphas":["1","1","1","1"]})";
    auto res2 = run("polygon --polygon " + tie.string() + " --short-sets --out " + (dir / "y").string());
    CHECK(res2.exit_code == 2);
    CHECK(res2.output.find("not generic") != std::string::npos);
    CHECK(res2.output.find("{") != std::string::npos);  // the subset is printed

    // non-simple arrangement -> 2
    fs::path conc = dir / "concurrent.json";
    std::ofstream(conc) << R"({"d":2,"normals":[[1,0],[0,1],[1,1]],"offsets":["0","0","0"]})";
    auto res3 = run("hypertoric --arrangement " + conc.string() + " --out " + (dir / "z").string());
    CHECK(res3.exit_code == 2);

    // unknown option -> 1
    auto res4 = run("hypertoric --arrangement " + fixture("triplet_a.json") + " --no-such-flag");
    CHECK(res4.exit_code == 1);

    // missing file -> 1
    auto res5 = run("hypertoric --arrangement /nonexistent.json --out " + (dir / "w").string());
    CHECK(res5.exit_code == 1);
}

TEST_CASE("os2 and polygon subcommands run the documented flags") {
    auto dir = scratch_dir();
    auto res = run("os2 --arrangement " + fixture("triplet_a.json") +
                   " --specialize 0 --fingerprint-degree 1 --out " + (dir / "os").string());
    CHECK(res.exit_code == 0);
    std::string js = slurp((dir / "os").string() + ".json");
    CHECK(js.find("\"hilbert\"") != std::string::npos);
    CHECK(js.find("\"fingerprint\"") != std::string::npos);

    auto res2 = run("polygon --polygon " + fixture("alpha_1_1_3_3_3.json") +
                    " --short-sets --ring core:1,3 --intersection-form 1,3 --out " +
                    (dir / "pg").string());
    CHECK(res2.exit_code == 0);
    std::string pj = slurp((dir / "pg").string() + ".json");
    CHECK(pj.find("\"intersection_form\"") != std::string::npos);
    std::string pt = slurp((dir / "pg").string() + ".txt");
    CHECK(pt.find("-1") != std::string::npos);

    auto res3 = run("polygon --polygon " + fixture("alpha_2_3_4_8.json") + " --verify hp --out " +
                    (dir / "v").string());
    CHECK(res3.exit_code == 0);
    CHECK(slurp((dir / "v").string() + ".txt").find("pass") != std::string::npos);

    auto res4 = run("cogen --arrangement " + fixture("triangle.json") + " --verify-int --out " +
                    (dir / "cg").string());
    CHECK(res4.exit_code == 0);
    std::string cj = slurp((dir / "cg").string() + ".json");
    CHECK(cj.find("\"verdict_int\": true") != std::string::npos);

    // empty result set is valid empty-array JSON
    auto res5 = run("polygon --polygon " + fixture("alpha_2_3_4_8.json") + " --out " +
                    (dir / "empty").string());
    CHECK(res5.exit_code == 0);
    CHECK(slurp((dir / "empty").string() + ".json").find("{") == 0);
}

TEST_CASE("flow DOT sidecar for the five-line fixture") {
    auto dir = scratch_dir();
    std::string stem = (dir / "fiveline").string();
    auto res = run("hypertoric --arrangement " + fixture("five_line.json") + " --flow --out " + stem);
    CHECK(res.exit_code == 0);
    std::string dot = slurp(stem + ".dot");
    // three fixed components, flow lines into the X node
    CHECK(dot.find("n0") != std::string::npos);
    CHECK(dot.find("n1") != std::string::npos);
    CHECK(dot.find("n2") != std::string::npos);
    CHECK(dot.find("n3") == std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("HKQ_SEED environment override keeps runs deterministic") {
    auto dir = scratch_dir();
    std::string stem = (dir / "seeded").string();
    std::string cmd = "HKQ_SEED=5 " + std::string(HKQ_CLI_PATH) + " cogen --arrangement " +
                      fixture("triangle.json") + " --out " + stem + " 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    std::string first = slurp(stem + ".json");
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(stem + ".json") == first);
}
