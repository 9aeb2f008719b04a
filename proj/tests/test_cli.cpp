#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>

#include "helpers.hpp"

namespace {

std::string g_cli;  // path of the binary under test, from the command line

testutil::CommandResult run_cli(const std::string& args) {
    return testutil::run_command("'" + g_cli + "' " + args + " 2>/dev/null");
}

}  // namespace

TEST_CASE("eta prints prefixes of the fixed point") {
    CHECK(run_cli("eta --length 1").output == "a\n");
    CHECK(run_cli("eta --length 7").output == "axayaxa\n");
    CHECK(run_cli("eta --length 15").output == "axayaxazaxayaxa\n");
    CHECK(run_cli("eta --length 7").exit_code == 0);
}

TEST_CASE("eta writes files") {
    const auto path = std::filesystem::temp_directory_path() / "subshift_cli_eta.txt";
    std::filesystem::remove(path);
    const auto res = run_cli("eta --length 15 --out '" + path.string() + "'");
    CHECK(res.exit_code == 0);
    CHECK(res.output.empty());
    CHECK(testutil::slurp(path) == "axayaxazaxayaxa\n");
    std::filesystem::remove(path);
    CHECK(run_cli("eta --length 15 --out /nonexistent-dir/eta.txt").exit_code == 4);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run_cli("eta --length 0").exit_code == 2);
    CHECK(run_cli("eta").exit_code == 2);
    CHECK(run_cli("complexity --max-length 0").exit_code == 2);
    CHECK(run_cli("complexity").exit_code == 2);
    CHECK(run_cli("complexity --max-length 8 --format yaml").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("special --length 4 --side upward").exit_code == 2);
    CHECK(run_cli("--capacity-cap 10 eta --length 5").exit_code == 2);
    CHECK(run_cli("rauzy --order 0").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("complexity --help").exit_code == 0);
}

TEST_CASE("capacity exhaustion exits with code 3") {
    CHECK(run_cli("--capacity-cap 1024 eta --length 4096").exit_code == 3);
    CHECK(run_cli("--capacity-cap 1024 relators --family ad4 --max-k 12").exit_code == 3);
    CHECK(run_cli("--capacity-cap 2048 eta --length 2048").exit_code == 0);
}

TEST_CASE("complexity table output") {
    const auto res = run_cli("complexity --max-length 4 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "L,C_formula,C_oracle,delta,regime_n,regime_k\n"
          "1,4,4,2,0,0\n"
          "2,6,6,2,1,0\n"
          "3,8,8,2,1,1\n"
          "4,10,10,3,2,0\n");

    const auto tsv = run_cli("complexity --max-length 2 --format tsv");
    CHECK(tsv.output ==
          "L\tC_formula\tC_oracle\tdelta\tregime_n\tregime_k\n"
          "1\t4\t4\t2\t0\t0\n"
          "2\t6\t6\t2\t1\t0\n");

    const auto table = run_cli("complexity --max-length 2");
    CHECK(table.output.rfind("L  C_formula", 0) == 0);
}

TEST_CASE("complexity --check verifies and is deterministic") {
    const auto first = run_cli("complexity --max-length 64 --check --format csv");
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("VERIFY pass L_max=64\n") != std::string::npos);
    const auto second = run_cli("complexity --max-length 64 --check --format csv");
    CHECK(first.output == second.output);

    const auto full = run_cli("complexity --max-length 4096 --check --format csv");
    CHECK(full.exit_code == 0);
    CHECK(full.output.find("VERIFY pass L_max=4096\n") != std::string::npos);

    const auto out_path =
        std::filesystem::temp_directory_path() / "subshift_cli_profile.csv";
    std::filesystem::remove(out_path);
    const auto to_file =
        run_cli("complexity --max-length 64 --check --format csv --out '" +
                out_path.string() + "'");
    CHECK(to_file.exit_code == 0);
    CHECK(testutil::slurp(out_path) == first.output);
    std::filesystem::remove(out_path);
}

TEST_CASE("special lists special words with their extensions") {
    CHECK(run_cli("special --length 4").output == "xaxa\txy\nyaxa\txyz\n");
    CHECK(run_cli("special --length 4 --side right").output == "xaxa\txy\nyaxa\txyz\n");
    CHECK(run_cli("special --length 6 --side right").output == "xayaxa\txyz\n");
    CHECK(run_cli("special --length 4 --side left").output == "axax\txy\naxay\txyz\n");
    CHECK(run_cli("special --length 3 --side bi").output == "axa\txyz\txyz\n");
    CHECK(run_cli("special --length 1 --side bi").output == "a\txyz\txyz\n");
}

TEST_CASE("rauzy prints stats and writes DOT files") {
    const auto res = run_cli("rauzy --order 1 --stats");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("order 1: V=4 E=6 right_branch=1 left_branch=1\n", 0) == 0);
    CHECK(res.output.find("strongly connected: yes") != std::string::npos);

    CHECK(run_cli("rauzy --order 3").output ==
          "order 3: V=8 E=10 right_branch=1 left_branch=1\n");

    const auto path = std::filesystem::temp_directory_path() / "subshift_cli_rauzy.dot";
    std::filesystem::remove(path);
    const auto dot1 = run_cli("rauzy --order 2 --dot '" + path.string() + "'");
    CHECK(dot1.exit_code == 0);
    const std::string bytes1 = testutil::slurp(path);
    CHECK(bytes1.rfind("digraph rauzy_2 {", 0) == 0);
    const auto dot2 = run_cli("rauzy --order 2 --dot '" + path.string() + "'");
    CHECK(testutil::slurp(path) == bytes1);
    CHECK(dot1.output == dot2.output);
    std::filesystem::remove(path);

    CHECK(run_cli("rauzy --order 2 --dot /nonexistent-dir/graph.dot").exit_code == 4);
}

TEST_CASE("relators command") {
    CHECK(run_cli("relators --family ad4 --max-k 0").output == "adadadad\n");
    CHECK(run_cli("relators --family ad4 --max-k 1").output ==
          "adadadad\nacacacacacacacac\n");
    CHECK(run_cli("relators --family adacac4 --max-k 0").output ==
          "adacacadacacadacacadacac\n");

    const auto all = run_cli("relators --max-k 0");
    CHECK(all.output ==
          "aa\nbb\ncc\ndd\nbcd\nadadadad\nadacacadacacadacacadacac\n");

    const auto annotated = run_cli("relators --family all --max-k 2 --annotate");
    CHECK(annotated.exit_code == 0);
    CHECK(std::count(annotated.output.begin(), annotated.output.end(), '\n') == 11);
    CHECK(annotated.output.rfind("static:aa\n", 0) == 0);
    CHECK(annotated.output.find("\nstatic:bcd\n") != std::string::npos);
    CHECK(annotated.output.find("\nad4:0:adadadad\n") != std::string::npos);
    CHECK(annotated.output.find("\nadacac4:0:adacacadacacadacacadacac\n") !=
          std::string::npos);
    CHECK(annotated.output.find("\nad4:2:") != std::string::npos);
    CHECK(annotated.output.find("\nadacac4:2:") != std::string::npos);
}

int main(int argc, char** argv) {
    doctest::Context context;
    // ctest invokes this binary with the tool path as the last argument.
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_cli = argv[argc - 1];
        --argc;
    }
    context.applyCommandLine(argc, argv);
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-subshift-binary>\n");
        return 1;
    }
    return context.run();
}
