#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SIMPLIE_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::string out;
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string fx(const std::string& name) {
    return std::string(SIMPLIE_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate accepts the golden module and names violated laws") {
    RunResult ok = run_cli("validate " + fx("cm_golden.json"));
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "\"status\": \"ok\""));

    RunResult jac = run_cli("validate " + fx("bad_jacobi.json"));
    CHECK(jac.exit_code == 1);
    CHECK(contains(jac.out, "jacobi"));
    CHECK(contains(jac.out, "0,"));

    RunResult crossed = run_cli("validate " + fx("bad_crossed.json"));
    CHECK(crossed.exit_code == 1);
    CHECK(contains(crossed.out, "equivariance"));

    RunResult simp = run_cli("validate " + fx("bad_simplicial.json"));
    CHECK(simp.exit_code == 1);
    CHECK(contains(simp.out, "face_degen"));
}

TEST_CASE("malformed rationals are input errors") {
    RunResult r = run_cli("validate " + fx("bad_rational.json"));
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "input error"));
}

TEST_CASE("usage mistakes are input errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("dgla").exit_code == 2);
    CHECK(run_cli("dgla /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("dgla " + fx("cm_golden.json") + " --format yaml").exit_code == 2);
    CHECK(run_cli("frobnicate " + fx("cm_golden.json")).exit_code == 2);
    CHECK(run_cli("dgla " + fx("simplicial_a.json") + " --truncation 5").exit_code == 2);
}

TEST_CASE("assembly pipeline succeeds on every valid fixture") {
    for (const char* name : {"cm_golden.json", "tcm_peiffer.json", "tcm_weighted.json",
                             "simplicial_a.json", "simplicial_b.json", "simplicial_c.json"}) {
        CAPTURE(name);
        RunResult r = run_cli("dgla " + fx(name));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "\"status\": \"ok\""));
        CHECK(!contains(r.out, "\"sign\": -1"));
    }
}

TEST_CASE("pipeline failures name the stage") {
    RunResult r = run_cli("dgla " + fx("bad_crossed.json"));
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "\"failed_stage\": \"validate\""));
}

TEST_CASE("reports are byte-identical across runs") {
    std::string a = "/tmp/simplie_det_a.json", b = "/tmp/simplie_det_b.json";
    CHECK(run_cli("dgla " + fx("tcm_peiffer.json") + " --out " + a).exit_code == 0);
    CHECK(run_cli("dgla " + fx("tcm_peiffer.json") + " --out " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("a previous report rechecks clean and tampering is caught") {
    std::string out = "/tmp/simplie_recheck.json";
    REQUIRE(run_cli("dgla " + fx("cm_golden.json") + " --out " + out).exit_code == 0);
    CHECK(run_cli("dgla " + out + " --recheck").exit_code == 0);

    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(slurp(out));
    for (auto& e : doc["dgla"]["brackets"])
        if (e["degrees"] == nlohmann::ordered_json::array({0, 1})) e["values"][0][0] = "7";
    std::string bad = "/tmp/simplie_recheck_bad.json";
    {
        std::ofstream f(bad, std::ios::binary);
        f << doc.dump(2) << "\n";
    }
    RunResult r = run_cli("dgla " + bad + " --recheck");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "antisymmetry"));
    CHECK(contains(r.out, "leibniz"));
    std::remove(out.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("oracle emits tables and rejects out-of-range levels") {
    RunResult r = run_cli("oracle " + fx("cm_golden.json") + " --level 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"differential\""));
    CHECK(contains(r.out, "\"3\""));

    RunResult bad = run_cli("oracle " + fx("cm_golden.json") + " --level 5");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "length 1"));
}

TEST_CASE("moore summary reports the chain data of a direct tower") {
    RunResult r = run_cli("moore " + fx("simplicial_b.json") + " --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "length 3"));
    CHECK(contains(r.out, "dims [2, 1, 1, 1]"));
    CHECK(contains(r.out, "status: ok"));
}

TEST_CASE("deeper generation depths still verify") {
    CHECK(run_cli("dgla " + fx("cm_golden.json") + " --truncation 3").exit_code == 0);
    CHECK(run_cli("dgla " + fx("tcm_weighted.json") + " --truncation 4").exit_code == 0);
}
