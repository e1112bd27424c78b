// Drives the g2cl binary (path passed as argv[1]) through its subcommands
// and checks exit codes and output shapes.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_binary;
int g_counter = 0;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/g2cl_cli_" + std::to_string(g_counter++) + ".out";
    std::string cmd = g_binary + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::vector<nlohmann::json> json_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<nlohmann::json> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("construct: reference seed succeeds with all flags") {
    auto r = run("construct -t 2/3 -u -1/3 -z 25 --json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["seed"]["t"] == "2/3");
    CHECK(j["flags"]["quad_factor_divides"] == true);
    CHECK(j["flags"]["sextic_separable"] == true);
    CHECK(j["sextic"].is_array());
    CHECK(j.contains("igusa"));
    CHECK(j.contains("manifest"));
    CHECK(j["manifest"]["subcommand"] == "construct");
    // the z = 25 square gives rational Weierstrass roots +-1/5
    bool has_fifth = false;
    for (const auto& root : j["weierstrass_roots"]) has_fifth |= (root == "1/5");
    CHECK(has_fifth);
}

TEST_CASE("construct: hypothesis failures exit 2") {
    CHECK(run("construct -t 1/2 -u 2 -z 1").code == 2);   // excluded parameter
    CHECK(run("construct -t 2/3 -u -1/3 -z 7").code == 2);  // matching equation fails
    CHECK(run("construct -t 5 -u 5 -z 1").code == 2);     // degenerate a = 0
}

TEST_CASE("construct: parse failures exit 3") {
    CHECK(run("construct -t abc -u 2 -z 1").code == 3);
    CHECK(run("construct -t 1/0 -u 2 -z 1").code == 3);
    CHECK(run("--no-such-flag").code == 3);
    CHECK(run("construct").code == 3);  // missing required options
}

TEST_CASE("search emits JSON lines plus a summary, and classify consumes them") {
    std::string path = "/tmp/g2cl_cli_search.jsonl";
    auto r = run("search --height 3 --emit-curves --out " + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("solutions") != std::string::npos);

    auto lines = json_lines(path);
    REQUIRE(!lines.empty());
    const auto& summary = lines.back();
    CHECK(summary.contains("conventions"));
    CHECK(summary["manifest"]["subcommand"] == "search");
    CHECK(summary["height_bound"] == 3);
    long curve_lines = static_cast<long>(lines.size()) - 1;
    CHECK(curve_lines == summary["rwp_models"].get<long>());
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        CHECK(lines[i].contains("seed"));
        CHECK(lines[i].contains("sextic"));
        CHECK(!lines[i]["roots"].empty());
    }

    auto c = run("classify " + path);
    REQUIRE(c.code == 0);
    auto cj = nlohmann::json::parse(c.out);
    CHECK(cj["records"] == curve_lines);
    CHECK(cj["classes"].get<long>() >= 1);
    CHECK(cj["classes"].get<long>() <= curve_lines);
    std::remove(path.c_str());
}

TEST_CASE("classify reports malformed records with line numbers") {
    std::string path = "/tmp/g2cl_cli_bad.jsonl";
    {
        std::ofstream f(path);
        f << "{\"sextic\": [\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"1\"]}\n";
        f << "this is not json\n";
    }
    auto r = run("classify " + path);
    CHECK(r.code == 3);
    CHECK(r.out.find(":2:") != std::string::npos);  // failing line number
    std::remove(path.c_str());
}

TEST_CASE("classgroup subcommand") {
    auto r = run("classgroup -D -23");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h"] == 3);
    CHECK(j["rank5"] == 0);
    CHECK(j["forms"].size() == 3);
    CHECK(run("classgroup -D 5").code == 2);   // invalid discriminant
    CHECK(run("classgroup -D -7 -D").code == 3);
}

TEST_CASE("harvest subcommand") {
    std::string curve = "/tmp/g2cl_cli_curve.json";
    {
        std::ofstream f(curve);
        f << "{\"sextic\": [\"2576\",\"8392\",\"11729\",\"8878\",\"3641\",\"640\"]}\n";
    }
    std::string out = "/tmp/g2cl_cli_harvest.jsonl";
    auto r = run("harvest --curve " + curve + " --range -40..40 --cap 10000000 --out " + out);
    REQUIRE(r.code == 0);
    auto lines = json_lines(out);
    REQUIRE(!lines.empty());
    CHECK(lines.back()["manifest"]["subcommand"] == "harvest");
    CHECK(lines.back()["manifest"]["input_hashes"].size() == 1);
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        CHECK(lines[i].contains("report"));
        CHECK(lines[i]["report"]["h"].get<long>() >= 1);
    }
    CHECK(run("harvest --curve /no/such/file --range -5..5").code == 3);
    CHECK(run("harvest --curve " + curve + " --range bogus").code == 3);
    std::remove(curve.c_str());
    std::remove(out.c_str());
}

TEST_CASE("config file resolution: flags beat file values, unknown keys rejected") {
    std::string cfg = "/tmp/g2cl_cli_cfg.ini";
    {
        std::ofstream f(cfg);
        f << "workers=3\n";
    }
    auto r = run("--config " + cfg + " --dump-config");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["workers"] == 3);

    auto r2 = run("--config " + cfg + " --workers 5 --dump-config");
    REQUIRE(r2.code == 0);
    CHECK(nlohmann::json::parse(r2.out)["workers"] == 5);

    {
        std::ofstream f(cfg);
        f << "no_such_key=1\n";
    }
    CHECK(run("--config " + cfg + " --dump-config").code == 3);
    std::remove(cfg.c_str());
}

TEST_CASE("version and defaults") {
    CHECK(run("--version").code == 0);
    auto r = run("--dump-config");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["workers"] == 1);
    CHECK(j["seed"] == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path to g2cl binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
