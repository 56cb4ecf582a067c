#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LEVYVAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
}

// Second line of an `index` invocation, split into fields.
std::vector<std::string> index_row(const std::string& full_args, int expect_code = 0) {
    const auto r = run_cli(full_args);
    REQUIRE(r.code == expect_code);
    const auto nl = r.out.find('\n');
    REQUIRE(nl != std::string::npos);
    REQUIRE(first_line(r.out) == "model,kind,estimate,slope,residual,unbounded");
    return csv_fields(first_line(r.out.substr(nl + 1)));
}

fs::path fresh_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("symbol command prints the complex value with provenance") {
    auto r = run_cli("symbol gbm --x 1 --xi 2");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "2 + 0i");
    CHECK(r.out.find("# model=gbm") != std::string::npos);

    r = run_cli("symbol gbm --x 5 --xi 0");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0 + 0i");

    r = run_cli("symbol poisson-bm --x 0,0 --xi 1,1");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.5 + 0i");
}

TEST_CASE("symbol command validation failures exit with the usage code") {
    CHECK(run_cli("symbol no-such-model --xi 1").code == 2);
    CHECK(run_cli("symbol gbm --xi 1,2").code == 2);
    CHECK(run_cli("symbol gbm --xi 1x").code == 2);
    CHECK(run_cli("symbol gbm").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("index command emits one CSV verdict row") {
    auto row = index_row("index stablelike --kind unif");
    REQUIRE(row.size() == 6);
    CHECK(row[0] == "stablelike");
    CHECK(row[1] == "unif");
    CHECK(std::abs(std::stod(row[2]) - 1.0) <= 0.05);
    CHECK(row[5] == "0");

    row = index_row("index gbm --kind loc --at 0");
    CHECK(std::stod(row[2]) == 0.0);

    row = index_row("index gbm --kind unif");
    CHECK(row[2] == "inf");
    CHECK(row[5] == "1");

    row = index_row("index stable-1.2 --kind beta1");
    CHECK(row[2] == "1.2");
    row = index_row("index bm --kind beta2");
    CHECK(row[2] == "2");
    row = index_row("index cp --kind spot --at 0");
    CHECK(row[2] == "0");
}

TEST_CASE("index command rejects unusable kinds") {
    CHECK(run_cli("index gbm --kind beta1").code == 2);       // no Levy representation
    CHECK(run_cli("index gbm --kind spot").code == 2);        // missing --at
    CHECK(run_cli("index gbm --kind wobble --at 0").code == 2);
}

TEST_CASE("simulate writes identical files under a fixed seed") {
    const auto a = fresh_dir("levyvar-cli-sim-a");
    const auto b = fresh_dir("levyvar-cli-sim-b");
    auto r = run_cli("--out " + a.string() + " --seed 7 simulate gbm --level 6 --paths 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("wrote 2 path(s)") != std::string::npos);
    CHECK(run_cli("--out " + b.string() + " --seed 7 simulate gbm --level 6 --paths 2").code == 0);

    const auto path_a = a / "simulate" / "gbm" / "path_000.csv";
    const auto path_b = b / "simulate" / "gbm" / "path_000.csv";
    REQUIRE(fs::exists(path_a));
    const std::string text = slurp(path_a);
    CHECK(text == slurp(path_b));
    CHECK(text.rfind("time,v1", 0) == 0);
    CHECK(slurp(a / "simulate" / "gbm" / "path_001.csv") != text);

    CHECK(run_cli("--out " + a.string() + " simulate poisson-bm").code == 2);
    CHECK(run_cli("--out " + a.string() + " simulate bm --level 99").code == 2);
}

TEST_CASE("pvar of a constant path is zero at every exponent") {
    const auto dir = fresh_dir("levyvar-cli-pvar");
    const auto csv = dir / "const.csv";
    std::ofstream(csv) << "time,v1\n0,3\n0.25,3\n0.5,3\n1,3\n";
    const auto r = run_cli("pvar --input " + csv.string() + " --p 1 --p 2.5");
    CHECK(r.code == 0);
    CHECK(r.out == "p,value\n1,0\n2.5,0\n");

    CHECK(run_cli("pvar --input " + csv.string() + " --p 1 --model bm").code == 2);
    CHECK(run_cli("pvar --input " + (dir / "absent.csv").string() + " --p 1").code == 3);
}

TEST_CASE("pvar estimate mode writes the variation report") {
    const auto dir = fresh_dir("levyvar-cli-pvar-est");
    const auto r = run_cli("--out " + dir.string() +
                           " pvar --model stable-1.2 --p 1 --p 1.5 --levels 5,8,11 --paths 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("p=1 verdict=infinite") != std::string::npos);
    CHECK(r.out.find("p=1.5 verdict=finite") != std::string::npos);
    CHECK(r.out.find("v_hat=1.25") != std::string::npos);
    const auto report = dir / "pvar" / "stable-1.2" / "variation.csv";
    REQUIRE(fs::exists(report));
    CHECK(slurp(report).rfind("p,level,median_V,ratio,verdict", 0) == 0);

    CHECK(run_cli("--out " + dir.string() + " pvar --model gbm --p 1").code == 2);
}

TEST_CASE("experiment command maps verdicts to exit codes") {
    const auto dir = fresh_dir("levyvar-cli-exp");
    auto r = run_cli("--out " + dir.string() + " experiment d-dichotomy");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS d-dichotomy", 0) == 0);
    CHECK(fs::exists(dir / "d-dichotomy" / "report.json"));

    r = run_cli("--out " + dir.string() + " experiment cantor-divergence");
    CHECK(r.code == 4);
    CHECK(r.out.rfind("FAIL cantor-divergence", 0) == 0);

    CHECK(run_cli("--out " + dir.string() + " experiment no-such-id").code == 2);
    CHECK(run_cli("--out " + dir.string() + " experiment gou-gaussian --set nope=1").code == 2);
}

TEST_CASE("config files extend the registry and are schema checked") {
    const auto dir = fresh_dir("levyvar-cli-config");
    const auto conf = dir / "conf.json";
    std::ofstream(conf) << R"({
      "seed": 11,
      "grid": {"directions": 16, "radii": 8, "x_points": 33},
      "models": {
        "my-stable": {"type": "stable", "alpha": 0.7, "drift": [1.0]},
        "pair": {"type": "product", "parts": ["my-stable", "bm"]},
        "rough": {"type": "stable-like", "base": 0.6, "amplitude": 0.2, "half_width": 3.0}
      }
    })";
    auto row = index_row("--config " + conf.string() + " index my-stable --kind beta1");
    CHECK(row[2] == "1");
    row = index_row("--config " + conf.string() + " index pair --kind beta1");
    CHECK(row[2] == "2");
    row = index_row("--config " + conf.string() + " index rough --kind loc --at 0");
    CHECK(row[2] == "1.2");

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"modles": {}})";
    CHECK(run_cli("--config " + bad.string() + " symbol gbm --xi 1").code == 2);
    std::ofstream(bad) << R"({"models": {"x": {"type": "warp"}}})";
    CHECK(run_cli("--config " + bad.string() + " symbol gbm --xi 1").code == 2);
    std::ofstream(bad) << "not json";
    CHECK(run_cli("--config " + bad.string() + " symbol gbm --xi 1").code == 2);
    CHECK(run_cli("--config " + (dir / "absent.json").string() + " symbol gbm --xi 1").code == 3);
}
