// Copyright 2026 The ppsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

int counter = 0;

RunResult run_cli(const std::string &args) {
    fs::path dir = fs::temp_directory_path() / "ppsim_cli_tests";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    counter++;
    std::string cmd = std::string(PPSIM_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int raw = std::system(cmd.c_str());
#ifdef __unix__
    int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
    int code = raw;
#endif
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("gen: emits the set and an honest gram report") {
    RunResult r = run_cli("gen --s 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"format\": \"ppsim.pps.v1\"") != std::string::npos);
    CHECK(r.out.find("\"N\": 16") != std::string::npos);
    CHECK(r.err.find("balance") != std::string::npos);
    CHECK(r.err.find("gram check") != std::string::npos);
    CHECK(r.err.find("0.5") != std::string::npos);
}

TEST_CASE("gen: smallest degree yields four sequences of length four") {
    RunResult r = run_cli("gen --s 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"N\": 4") != std::string::npos);
}

TEST_CASE("gen: non-primitive polynomial fails with the measured period") {
    RunResult r = run_cli("gen --s 2 --poly 1 0");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("period 2") != std::string::npos);
    CHECK(r.err.find("15") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("sweep --kind psi+ --grid 1").exit_code == 2);
    CHECK(run_cli("chsh --variant nonsense").exit_code == 2);
    CHECK(run_cli("ghz --n 3 --indices 1 1 2").exit_code == 2);
    CHECK(run_cli("ghz --s 1 --n 9").exit_code == 2);
}

TEST_CASE("chsh: default angles reproduce the maximal violation") {
    RunResult r = run_cli("chsh --s 2 --variant psi+");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2.828427124746") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("chsh: every variant passes at its own angles, json form works") {
    for (const char *variant : {"psi+", "psi-", "phi+", "phi-"}) {
        RunResult r = run_cli(std::string("chsh --s 2 --variant ") + variant + " --format json");
        CAPTURE(variant);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"pass\": true") != std::string::npos);
    }
}

TEST_CASE("chsh: product stays under the classical bound") {
    RunResult r = run_cli("chsh --s 2 --variant product");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("|B| <= 2: PASS") != std::string::npos);
}

TEST_CASE("chsh: pi-expression angles are accepted") {
    RunResult r = run_cli("chsh --s 2 --variant psi+ --angles pi/4,-pi/4,0,pi/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("ghz: chosen indices satisfy every printed claim at n=3") {
    RunResult r = run_cli("ghz --s 2 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("indices: 0 1 2") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("ghz: explicit naive indices expose the unbalanced marginal") {
    RunResult r = run_cli("ghz --s 2 --n 3 --indices 1 2 3");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("entropy: product and bell tables") {
    RunResult prod = run_cli("entropy --s 2 --kind product");
    CHECK(prod.exit_code == 0);
    CHECK(prod.out.find("S(a|b") != std::string::npos);
    CHECK(prod.out.find("0.000000000000") != std::string::npos);

    RunResult bell = run_cli("entropy --s 2 --kind psi+");
    CHECK(bell.exit_code == 0);
    CHECK(bell.out.find("1.000000000000") != std::string::npos);

    RunResult ghz = run_cli("entropy --s 2 --kind ghz-3");
    CHECK(ghz.exit_code == 0);
    CHECK(ghz.out.find("S(a|bc") != std::string::npos);
    CHECK(ghz.out.find("1.000000000000") != std::string::npos);
}

TEST_CASE("sweep: csv schema with tiny max error") {
    RunResult r = run_cli("sweep --s 2 --kind psi+ --party 0 --grid 64 --fixed 0,0.9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("theta,E_empirical,E_analytic,abs_error\n", 0) == 0);
    CHECK(r.out.find("# max_abs_error = ") != std::string::npos);
    size_t footer = r.out.find("# max_abs_error = ");
    double worst = std::stod(r.out.substr(footer + 18));
    CHECK(worst < 1e-9);
}

TEST_CASE("correlate: json record for a ghz triple") {
    RunResult r = run_cli("correlate --s 2 --kind ghz-3 --angles 0.1,0.2,0.3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"kind\": \"ghz\"") != std::string::npos);
    CHECK(r.out.find("\"E\":") != std::string::npos);
    CHECK(r.out.find("\"C\": 0.25") != std::string::npos);
    CHECK(r.out.find("\"N\": 16") != std::string::npos);
}

TEST_CASE("ensembles pipe between subcommands through JSON files") {
    fs::path dir = fs::temp_directory_path() / "ppsim_cli_tests";
    fs::create_directories(dir);
    fs::path state = dir / "ghz3.json";
    RunResult made = run_cli("ghz --s 2 --n 3 --export " + state.string());
    CHECK(made.exit_code == 0);
    REQUIRE(fs::exists(state));

    RunResult corr = run_cli("correlate --in " + state.string() + " --angles 0.1,0.2,0.3");
    CHECK(corr.exit_code == 0);
    CHECK(corr.out.find("0.82533561490967") != std::string::npos);  // cos(0.6)

    RunResult ent = run_cli("entropy --in " + state.string() + " --kind ghz-3");
    CHECK(ent.exit_code == 0);
    CHECK(ent.out.find("S(a|bc") != std::string::npos);
    CHECK(ent.out.find("1.000000000000") != std::string::npos);
}

TEST_CASE("entropy --print-rho shows the four-corner bell matrix") {
    RunResult r = run_cli("entropy --s 2 --kind psi+ --print-rho");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rho:") != std::string::npos);
    CHECK(r.out.find("0.5000") != std::string::npos);
}

TEST_CASE("ghz --grid appends a sweep csv to --out") {
    fs::path dir = fs::temp_directory_path() / "ppsim_cli_tests";
    fs::create_directories(dir);
    fs::path csv = dir / "ghz_sweep.csv";
    RunResult r = run_cli("ghz --s 2 --n 3 --grid 8 --party 1 --out " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "theta,E_empirical,E_analytic,abs_error");
}

TEST_CASE("sweep --format json carries rows and the max error") {
    RunResult r = run_cli("sweep --s 2 --kind phi- --party 1 --grid 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"max_abs_error\":") != std::string::npos);
    CHECK(r.out.find("\"rows\":") != std::string::npos);
}

TEST_CASE("gen --out writes the file exactly once") {
    fs::path dir = fs::temp_directory_path() / "ppsim_cli_tests";
    fs::create_directories(dir);
    fs::path target = dir / "set.json";
    fs::remove(target);
    RunResult r = run_cli("gen --s 1 --out " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(target));
    CHECK(!fs::exists(target.string() + ".tmp"));
}
