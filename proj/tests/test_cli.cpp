#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gifc/cli_app.hpp"

using namespace gifc;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int data_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    bool seen_columns = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_columns) {
            seen_columns = true;  // column header line
            continue;
        }
        ++rows;
    }
    return rows;
}

int count_label(const std::string& csv, const std::string& prefix) {
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++rows;
    return rows;
}

}  // namespace

TEST_CASE("trellis dump of the mixed pair has 32 branch rows") {
    const CliRun r = run({"trellis", "--seed", "1"});
    REQUIRE(r.code == kExitOk);
    CHECK(data_rows(r.out) == 32);
    CHECK(r.out.find("branch,s_minus,s_plus,drive1,drive2,x1,x2") != std::string::npos);
}

TEST_CASE("trellis dump of one sender") {
    const CliRun r = run({"trellis", "--seed", "1", "--part", "1"});
    REQUIRE(r.code == kExitOk);
    CHECK(data_rows(r.out) == 8);
}

TEST_CASE("estimate is reproducible byte for byte") {
    const std::vector<std::string> args{"estimate", "--seed", "77", "--n_sections", "200",
                                        "--blocks", "4"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(data_rows(a.out) == 1);
}

TEST_CASE("worker count never changes the output bytes") {
    auto with_workers = [&](const std::string& w) {
        return run({"estimate", "--seed", "123", "--n_sections", "300", "--blocks", "8",
                    "--workers", w});
    };
    const CliRun w1 = with_workers("1");
    const CliRun w2 = with_workers("2");
    const CliRun w8 = with_workers("8");
    REQUIRE(w1.code == kExitOk);
    CHECK(w1.out == w2.out);
    CHECK(w1.out == w8.out);
}

TEST_CASE("region table carries the named corners and both frontiers") {
    const CliRun r = run({"region", "--seed", "9", "--n_sections", "200", "--blocks", "3"});
    REQUIRE(r.code == kExitOk);
    CHECK(count_label(r.out, "A,") == 1);
    CHECK(count_label(r.out, "B,") == 1);
    CHECK(count_label(r.out, "C,") == 1);
    CHECK(count_label(r.out, "hull:") >= 2);
    CHECK(count_label(r.out, "stair:") >= 1);
}

TEST_CASE("baseline passes its internal cross-validation") {
    const CliRun r = run({"baseline", "--seed", "1", "--p1_db", "7", "--p2_db", "7", "--a", "0.5"});
    REQUIRE(r.code == kExitOk);
    CHECK(count_label(r.out, "bpsk_awgn,") == 1);
    CHECK(count_label(r.out, "C,") == 1);
}

TEST_CASE("lemma reports execute end to end") {
    const CliRun l1 = run({"lemma1", "--seed", "5", "--lab_n", "4", "--trials", "20"});
    REQUIRE(l1.code == kExitOk);
    CHECK(data_rows(l1.out) == 1);

    const CliRun l2 = run({"lemma2", "--seed", "5", "--lab_n", "3", "--codes", "5"});
    REQUIRE(l2.code == kExitOk);
    CHECK(data_rows(l2.out) == 5);
    CHECK(l2.out.find(",1") != std::string::npos);  // holds column
}

TEST_CASE("a channel table file replaces the built-in lab channel") {
    const std::string path = "/tmp/gifc_test_table.txt";
    {
        const DiscreteIC ic = DiscreteIC::flip_interference(0.1);
        std::ofstream f(path);
        f << "# flip interference, 0.1\n2 2 2 2\n";
        for (int row = 0; row < 4; ++row) {
            for (int col = 0; col < 4; ++col)
                f << ic.table[static_cast<std::size_t>(row) * 4 + col] << ' ';
            f << "\n";
        }
    }
    const CliRun builtin = run({"lemma1", "--seed", "5", "--lab_n", "4", "--trials", "10"});
    const CliRun filed =
        run({"lemma1", "--seed", "5", "--lab_n", "4", "--trials", "10", "--ic_file", path});
    REQUIRE(filed.code == kExitOk);
    // identical apart from the ic_file header line
    auto body = [](const std::string& s) { return s.substr(s.find("gamma,")); };
    CHECK(body(filed.out) == body(builtin.out));
    std::remove(path.c_str());

    CHECK(run({"lemma1", "--seed", "5", "--ic_file", "/nonexistent/ic.txt"}).code ==
          kExitBadConfig);
}

TEST_CASE("precise output carries full-precision values") {
    const CliRun coarse = run({"baseline", "--seed", "1", "--p1_db", "7"});
    const CliRun fine = run({"baseline", "--seed", "1", "--p1_db", "7", "--precise"});
    REQUIRE(fine.code == kExitOk);
    CHECK(coarse.out.find("0.950681,") != std::string::npos);
    CHECK(fine.out.find("0.95068111494832852") != std::string::npos);
}

TEST_CASE("the output header reconstructs the experiment") {
    const CliRun r = run({"estimate", "--seed", "424242", "--n_sections", "150", "--blocks", "3",
                          "--p1_db", "6.25", "--a", "0.75", "--scheme2", "iud:2"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string banner;
    std::getline(in, banner);
    CHECK(banner == "# gifc estimate");
    const ExperimentConfig parsed = parse_output_header(in);
    ExperimentConfig expect;
    expect.seed = 424242;
    expect.n_sections = 150;
    expect.blocks = 3;
    expect.p1_db = 6.25;
    expect.a = 0.75;
    expect.scheme2 = "iud:2";
    CHECK(same_experiment(parsed, expect));
}

TEST_CASE("config file values apply and flags win") {
    const std::string path = "/tmp/gifc_test_config.txt";
    {
        std::ofstream f(path);
        f << "# comment\n";
        f << "seed = 11\n";
        f << "n_sections = 150\n";
        f << "blocks = 3\n";
    }
    const CliRun file_only = run({"estimate", "--config", path});
    REQUIRE(file_only.code == kExitOk);
    CHECK(file_only.out.find("# seed = 11") != std::string::npos);

    const CliRun with_flag = run({"estimate", "--config", path, "--seed", "12"});
    REQUIRE(with_flag.code == kExitOk);
    CHECK(with_flag.out.find("# seed = 12") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("error paths have distinct exit codes") {
    CHECK(run({"estimate", "--seed", "1", "--scheme1", "turbo:7"}).code == kExitUnknownScheme);
    CHECK(run({"estimate", "--seed", "1", "--scheme1", "conv:9,5"}).code == kExitBadPolynomial);
    CHECK(run({"estimate", "--seed", "1", "--scheme1", "conv:0"}).code == kExitBadPolynomial);
    CHECK(run({"estimate", "--n_sections", "100"}).code == kExitMissingSeed);
    CHECK(run({"estimate", "--seed", "1", "--bogus_key", "3"}).code == kExitBadConfig);
    CHECK(run({"estimate", "--seed", "abc"}).code == kExitBadConfig);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"help"}).code == kExitOk);
}

TEST_CASE("the output file option writes the same bytes") {
    const std::string path = "/tmp/gifc_test_out.csv";
    const CliRun direct = run({"trellis", "--seed", "3"});
    const CliRun filed = run({"trellis", "--seed", "3", "--out", path});
    REQUIRE(filed.code == kExitOk);
    CHECK(filed.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

#ifdef GIFC_CLI_PATH
TEST_CASE("the installed binary reports the same exit codes") {
    const std::string bin = GIFC_CLI_PATH;
    CHECK(std::system((bin + " help > /dev/null").c_str()) == 0);
    const int missing_seed = std::system((bin + " estimate --n_sections 100 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(missing_seed) == kExitMissingSeed);
    const int env_seed = std::system(
        ("GIFC_SEED=17 " + bin + " trellis > /dev/null 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(env_seed) == kExitOk);
    const int flag_beats_env = std::system(
        ("GIFC_SEED=17 " + bin + " trellis --seed 5 | grep -q '^# seed = 5$'").c_str());
    CHECK(WEXITSTATUS(flag_beats_env) == 0);
    const int bad_scheme = std::system(
        (bin + " estimate --seed 1 --scheme1 wat:1 > /dev/null 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(bad_scheme) == kExitUnknownScheme);
}
#endif
