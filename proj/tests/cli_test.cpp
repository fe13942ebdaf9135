#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AALPHA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = std::move(out);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

} // namespace

TEST_CASE("version and usage") {
    CHECK(run_cli("--version").output == "aalpha 1.0.0\n");
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("").exit_code == 1); // a subcommand is required
    RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("analyze") != std::string::npos);
    CHECK(help.output.find("verify") != std::string::npos);
}

TEST_CASE("gen emits canonical edge lists") {
    CHECK(run_cli("gen cycle 4").output == "4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(run_cli("gen intree-path 3").output == "3\n0 1\n1 2\n");
    CHECK(run_cli("gen outstar 4").output == "4\n0 1\n0 2\n0 3\n");
    CHECK(run_cli("gen complete-symmetric 3").output == "3\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n");
    CHECK(run_cli("gen c-a-k 5 2").output == "5\n0 1\n0 2\n0 3\n0 4\n1 0\n");
    CHECK(run_cli("gen d-member 6 3").output == "6\n0 1\n1 2\n2 0\n3 0\n4 3\n5 4\n");

    RunResult unknown = run_cli("gen moebius 5");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.output.find("input error:") != std::string::npos);
    CHECK(run_cli("gen cycle").exit_code == 2);      // missing parameter
    CHECK(run_cli("gen cycle 4 4").exit_code == 2);  // extra parameter
    CHECK(run_cli("gen cycle 1").exit_code == 2);    // generator rejects n
}

TEST_CASE("analyze json carries the full contract") {
    const std::string c4 = write_temp("aalpha_cli_c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult r = run_cli("analyze " + c4 + " --alpha 1/2 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    for (const char* key : {"meta", "degrees", "connectivity", "spectrum", "radiusBounds",
                            "energy", "energyBounds", "families"})
        REQUIRE(doc.contains(key));

    CHECK(doc["meta"]["n"] == 4);
    CHECK(doc["meta"]["m"] == 4);
    CHECK(doc["meta"]["alphaExact"] == "1/2");
    CHECK(doc["connectivity"]["stronglyConnected"] == true);
    CHECK(std::abs(doc["spectrum"]["spectralRadius"].get<double>() - 1.0) < 1e-9);
    REQUIRE(doc["spectrum"]["eigenvalues"].size() == 4);
    CHECK(doc["energy"]["energyExact"] == "1");
    CHECK(doc["radiusBounds"]["applicable"] == true);
    CHECK(doc["radiusBounds"]["equalityFlags"]["degrees"] == true);
    const auto& fams = doc["families"];
    CHECK(std::find(fams.begin(), fams.end(), "directed-cycle(a=4)") != fams.end());

    // Reading the same digraph from stdin gives the same report body.
    RunResult piped = run_cli("analyze - --alpha 1/2 --json < " + c4);
    REQUIRE(piped.exit_code == 0);
    nlohmann::json doc2 = nlohmann::json::parse(piped.output);
    CHECK(doc2["spectrum"] == doc["spectrum"]);
    CHECK(doc2["meta"]["input"] == "-");
}

TEST_CASE("analyze marks radius bounds not applicable off the strong case") {
    const std::string star = write_temp("aalpha_cli_star.txt", "4\n0 1\n0 2\n0 3\n");
    RunResult r = run_cli("analyze " + star + " --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["radiusBounds"]["applicable"] == false);
    CHECK(doc["radiusBounds"]["reason"] == "not applicable: not strongly connected");
    CHECK(doc["connectivity"]["stronglyConnected"] == false);
    CHECK(doc["connectivity"]["connected"] == true);
}

TEST_CASE("input and argument errors exit with code 2") {
    RunResult missing = run_cli("analyze /nonexistent/digraph.txt");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("cannot open input file") != std::string::npos);

    const std::string c4 = write_temp("aalpha_cli_c4b.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult bad_alpha = run_cli("analyze " + c4 + " --alpha 1");
    CHECK(bad_alpha.exit_code == 2);
    CHECK(bad_alpha.output.find("alpha must lie in [0,1)") != std::string::npos);

    const std::string dup = write_temp("aalpha_cli_dup.txt", "3\n0 1\n0 1\n");
    RunResult r = run_cli("analyze " + dup);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(r.output.find("duplicate arc") != std::string::npos);

    const std::string path = write_temp("aalpha_cli_path.txt", "3\n0 1\n1 2\n");
    CHECK(run_cli("bounds " + path).exit_code == 2);
    CHECK(run_cli("bounds " + path).output.find("not strongly connected") != std::string::npos);

    CHECK(run_cli("verify --n 9").exit_code == 2);
    CHECK(run_cli("verify --claims thm99-nope").exit_code == 2);
    CHECK(run_cli("verify --alpha-grid ''").exit_code == 2);
}

TEST_CASE("bounds and energy reports") {
    const std::string c4 = write_temp("aalpha_cli_c4c.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult b = run_cli("bounds " + c4 + " --alpha 1/2 --json");
    REQUIRE(b.exit_code == 0);
    nlohmann::json bounds = nlohmann::json::parse(b.output)["radiusBounds"];
    CHECK(std::abs(bounds["spectralRadius"].get<double>() - 1.0) < 1e-9);
    for (const char* k : {"degrees", "arcsCount", "arcwise", "weighted", "corollary"})
        CHECK(bounds["equalityFlags"][k] == true);
    CHECK(bounds["structural"]["regular"] == true);

    RunResult w = run_cli("bounds " + c4 + " --alpha 1/2 --weights 1,2,1,2 --json");
    nlohmann::json wb = nlohmann::json::parse(w.output)["radiusBounds"];
    CHECK(std::abs(wb["boundWeighted"].get<double>() - 1.5) < 1e-12);
    CHECK(wb["equalityFlags"]["weighted"] == false);
    CHECK(run_cli("bounds " + c4 + " --weights 1,2,1").exit_code == 2);

    RunResult e = run_cli("energy " + c4 + " --alpha 1/2 --json");
    REQUIRE(e.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(e.output);
    CHECK(doc["energy"]["energy"] == 1.0);
    CHECK(doc["energy"]["energyExact"] == "1");
    CHECK(doc["energyBounds"]["unicyclic"]["applicable"] == true);
    CHECK(doc["energyBounds"]["tree"]["applicable"] == false);
}

TEST_CASE("verify certifies and reports") {
    RunResult one = run_cli("verify --n 3 --claims thm6-bracket --json");
    REQUIRE(one.exit_code == 0);
    nlohmann::json arr = nlohmann::json::parse(one.output);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["claimId"] == "thm6-bracket");
    CHECK(arr[0]["checked"] == 54);
    CHECK(arr[0]["certified"] == true);
    CHECK(arr[0]["violationTotal"] == 0);

    RunResult table = run_cli("verify --n 3 --claims lemma-lower,thm9-max");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("PASS  lemma-lower") != std::string::npos);
    CHECK(table.output.find("PASS  thm9-max") != std::string::npos);
    CHECK(table.output.find("all claims certified") != std::string::npos);
}
