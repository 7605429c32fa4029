#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "xbtool/graph6.hpp"

#ifndef XBTOOL_BIN
#error "XBTOOL_BIN must point at the built binary"
#endif

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cmd(const std::string& args) {
    std::string cmd = std::string(XBTOOL_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("cli compute renders invariants") {
    auto xb = run_cmd("compute --graph6 Bw --invariant xb");
    CHECK(xb.exit_code == 0);
    CHECK(xb.out == "p[1,1,1] + 3t p[2,1] + (3t^2+t^3) p[3]\n");

    auto x = run_cmd("compute --graph6 A_ --invariant x");
    CHECK(x.exit_code == 0);
    CHECK(x.out == "p[1,1] - p[2]\n");

    auto tutte = run_cmd("compute --graph6 Bw --invariant tutte");
    CHECK(tutte.out == "x^2 + x + y\n");

    auto evaluated = run_cmd("compute --graph6 Bw --invariant xb --eval 1,1,1");
    CHECK(evaluated.out == "28/1\n");

    auto b = run_cmd("compute --graph6 A_ --invariant b --eval 2,1,1");
    CHECK(b.out == "24\n");

    auto w = run_cmd("compute --graph6 A_ --invariant w");
    CHECK(w.out == "x[1,1] + x[2]\n");
}

TEST_CASE("cli compute with weights and edge lists") {
    std::string path = temp_path("xbtool_cli_edgelist.txt");
    {
        std::ofstream f(path);
        f << "2 1\n1 2\n0 1\n";
    }
    auto r = run_cmd("compute --edgelist " + path + " --invariant xb");
    CHECK(r.out == "p[2,1] + t p[3]\n");

    auto wr = run_cmd("compute --graph6 A_ --weights 2,1 --invariant xb");
    CHECK(wr.out == "p[2,1] + t p[3]\n");
    std::remove(path.c_str());
}

TEST_CASE("cli usage errors exit 1") {
    CHECK(run_cmd("compute --graph6 Bw").exit_code == 1);                    // no invariant
    CHECK(run_cmd("compute --invariant xb").exit_code == 1);                 // no input
    CHECK(run_cmd("compute --graph6 \"!bad!\" --invariant xb").exit_code == 1);
    CHECK(run_cmd("compute --graph6 Bw --invariant b").exit_code == 1);      // b needs --eval
    CHECK(run_cmd("bogus-subcommand").exit_code == 1);
    CHECK(run_cmd("census").exit_code == 1);                                 // missing --input
}

TEST_CASE("cli construct and verify round-trip") {
    std::string dir = temp_path("xbtool_cli_pair");
    std::filesystem::remove_all(dir);
    // triangle-swap seed: 6-cycle has the path structure and the mirror
    // automorphism after cutting the middle edge
    auto scan = run_cmd("construct --method ore --seed-graph6 EhEG --scan");
    CHECK(scan.exit_code == 0);

    std::string seed = temp_path("xbtool_cli_seed.txt");
    {
        std::ofstream f(seed);
        f << "4 3\n1 1 1 1\n0 1\n1 2\n2 3\n";
    }
    auto made = run_cmd("construct --method ore --seed-edgelist " + seed +
                        " --vertices 0,1,2,3 --out " + dir);
    CHECK(made.exit_code == 0);
    REQUIRE(std::filesystem::exists(dir + "/pair.txt"));
    REQUIRE(std::filesystem::exists(dir + "/manifest.json"));

    // symmetric seed gives an isomorphic pair: verify exits 2
    auto verify = run_cmd("verify --pair " + dir + "/pair.txt");
    CHECK(verify.exit_code == 2);
    CHECK(verify.out.find("equal_x: true") != std::string::npos);
    CHECK(verify.out.find("isomorphic: true") != std::string::npos);

    // a genuinely nonisomorphic equal-X pair exits 0
    std::string pair2 = temp_path("xbtool_cli_pair2.txt");
    {
        using namespace xbtool;
        VWGraph tl(8, {1, 2, 1, 3, 2, 1, 1, 1},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {2, 6}, {3, 7}});
        VWGraph tr(8, {1, 3, 2, 1, 2, 1, 1, 1},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 6}, {3, 7}});
        std::ofstream f(pair2);
        f << write_edge_list(tl) << "\n" << write_edge_list(tr);
    }
    auto verify2 = run_cmd("verify --pair " + pair2);
    CHECK(verify2.exit_code == 0);
    CHECK(verify2.out.find("equal_x: true") != std::string::npos);
    CHECK(verify2.out.find("equal_xb: true") != std::string::npos);
    CHECK(verify2.out.find("isomorphic: false") != std::string::npos);

    std::filesystem::remove_all(dir);
    std::remove(seed.c_str());
    std::remove(pair2.c_str());
}

TEST_CASE("cli gen and census") {
    std::string g6 = temp_path("xbtool_cli_gen5.g6");
    auto gen = run_cmd("gen --max-vertices 5 --output " + g6);
    CHECK(gen.exit_code == 0);
    {
        std::ifstream f(g6);
        std::string line;
        int lines = 0;
        while (std::getline(f, line)) ++lines;
        CHECK(lines == 53);
    }

    std::string report = temp_path("xbtool_cli_report.json");
    auto cen = run_cmd("census --input " + g6 + " --jobs 2 --report " + report);
    CHECK(cen.exit_code == 0);
    std::ifstream rf(report);
    std::string json((std::istreambuf_iterator<char>(rf)), std::istreambuf_iterator<char>());
    CHECK(json.find("\"equal_x_pairs_all\": 1") != std::string::npos);
    CHECK(json.find("\"graph_classes\": 53") != std::string::npos);

    // XBTOOL_CACHE environment variable supplies the default cache path
    std::string cache = temp_path("xbtool_cli_cache.tsv");
    std::remove(cache.c_str());
    std::string cmd = "XBTOOL_CACHE=" + cache + " " + XBTOOL_BIN + " census --input " + g6 +
                      " >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(cache));

    std::remove(g6.c_str());
    std::remove(report.c_str());
    std::remove(cache.c_str());
}
