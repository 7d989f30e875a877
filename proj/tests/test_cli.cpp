#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("padezeta_test_cli_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the tool through the shell with a scrubbed cache variable unless the
// caller sets one explicitly via env_prefix (shell VAR=value syntax).
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    const fs::path out = work_dir() / ("out" + std::to_string(seq));
    const fs::path err = work_dir() / ("err" + std::to_string(seq));
    ++seq;
    std::string cmd = "env -u PADEZETA_CACHE " + env_prefix + " '" + PADEZETA_CLI_PATH + "' " +
                      args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify: exit 0, pass=true, byte-identical across runs") {
    const RunResult a = run_cli("verify --a 3 --r 1 --N 1 --n 4");
    REQUIRE(a.exit_code == 0);
    CHECK(contains(a.out, "\"command\": \"verify\""));
    CHECK(contains(a.out, "\"pass\": true"));
    CHECK(a.err.empty());

    const RunResult b = run_cli("verify --a 3 --r 1 --N 1 --n 4");
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);  // deterministic to the byte
}

TEST_CASE("invalid instances and flags exit 2 with machine-readable errors") {
    const RunResult bad = run_cli("construct --a 3 --r 1 --N 2 --n 4");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.err, "invalid_params"));
    CHECK(bad.out.empty());

    const RunResult flag = run_cli("verify --bogus 1");
    CHECK(flag.exit_code == 2);
    CHECK(contains(flag.err, "invalid_params"));

    const RunResult nocmd = run_cli("--a 3");
    CHECK(nocmd.exit_code == 2);

    const RunResult lowprec = run_cli("lambda --a 3 --n 4 --prec-bits 32");
    CHECK(lowprec.exit_code == 2);

    const RunResult csvverify = run_cli("verify --a 3 --n 4 --format csv");
    CHECK(csvverify.exit_code == 2);
    CHECK(contains(csvverify.err, "invalid_params"));
}

TEST_CASE("derive: CSV table output") {
    const RunResult r = run_cli("derive --a 3 --r 1 --N 1 --n 1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "k,i,s\n"
          "1,1,0\n1,2,14\n1,3,0\n1,4,0\n"
          "2,1,0\n2,2,7\n2,3,2\n2,4,5\n"
          "3,1,0\n3,2,-4\n3,3,0\n3,4,0\n");
}

TEST_CASE("derive: cold run fills the cache, warm runs read it back") {
    const fs::path cache = work_dir() / "cache_a";
    fs::remove_all(cache);
    const std::string args =
        "derive --a 3 --r 1 --N 1 --n 4 --cache-dir '" + cache.string() + "'";

    const RunResult cold = run_cli(args);
    REQUIRE(cold.exit_code == 0);
    CHECK(contains(cold.out, "\"from_cache\": false"));

    long entries = 0;
    for (const auto& ent : fs::directory_iterator(cache)) {
        CHECK(ent.path().extension() == ".json");
        ++entries;
    }
    CHECK(entries == 1);

    const RunResult warm1 = run_cli(args);
    CHECK(warm1.exit_code == 0);
    CHECK(contains(warm1.out, "\"from_cache\": true"));
    const RunResult warm2 = run_cli(args);
    CHECK(warm1.out == warm2.out);

    // Same table either way, apart from the provenance flag.
    std::string cold_body = cold.out;
    std::string warm_body = warm1.out;
    const std::string f = "\"from_cache\": false";
    const std::string t = "\"from_cache\": true";
    cold_body.replace(cold_body.find(f), f.size(), t);
    CHECK(cold_body == warm_body);
}

TEST_CASE("derive: the cache directory environment variable is honored") {
    const fs::path cache = work_dir() / "cache_env";
    fs::remove_all(cache);
    const RunResult r = run_cli("derive --a 3 --r 1 --N 1 --n 2",
                                "PADEZETA_CACHE='" + cache.string() + "'");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(cache));
    long entries = 0;
    for (const auto& ent : fs::directory_iterator(cache)) {
        (void)ent;
        ++entries;
    }
    CHECK(entries == 1);
}

TEST_CASE("lambda: dual-route comparison passes") {
    const RunResult r = run_cli("lambda --a 3 --r 1 --N 1 --n 4 --kmax 3 --prec-bits 192");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"pass\": true"));
    CHECK(contains(r.out, "\"tolerance\": \"2^-64 * max(1, |delta * Lambda_k|)\""));
}

TEST_CASE("rank: differential-system section") {
    const RunResult r = run_cli("rank --a 3 --r 1 --N 1 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"det_M_nonzero\": true"));
    CHECK(contains(r.out, "\"rank_at_one\": 4"));
    CHECK(contains(r.out, "\"expected_rank\": 4"));
}

TEST_CASE("select: greedy certificate with exact determinant") {
    const RunResult r = run_cli("select --a 3 --r 1 --N 1 --n 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"det_nonzero\": true"));
    CHECK(contains(r.out, "\"columns\""));
}

TEST_CASE("bound: slopes within the growth envelopes, honest vacuous bound") {
    const RunResult r = run_cli("bound --a 3 --r 1 --N 1 --n 8 --prec-bits 192");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"s_within\": true"));
    CHECK(contains(r.out, "\"lambda_within\": true"));
    CHECK(contains(r.out, "\"dimension_bound\": 0"));
    CHECK(contains(r.out, "\"asymptotic\": true"));
}

TEST_CASE("characters: enumeration with conductors") {
    const RunResult r = run_cli("characters --chi-mod 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"count\": 4"));
    CHECK(contains(r.out, "\"conductor\": 1"));
    CHECK(contains(r.out, "\"conductor\": 3"));
    CHECK(contains(r.out, "\"conductor\": 4"));
    CHECK(contains(r.out, "\"conductor\": 12"));
}

TEST_CASE("lvalue: Catalan's constant to the printed digits") {
    const RunResult r = run_cli("lvalue --chi-mod 4 --chi-index 1 --s 2");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "\"primitive\": true"));
    CHECK(contains(r.out, "0.91596559417721901505"));
}

TEST_CASE("report: full dossier on a twisted instance") {
    const RunResult r = run_cli(
        "report --chi-mod 4 --chi-index 1 --z0 half_root --a 5 --r 1 --n 8 --p 0 "
        "--kmax 2 --prec-bits 128");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"command\": \"report\""));
    CHECK(contains(r.out, "\"pass\": true"));
    CHECK(contains(r.out, "\"table\""));
}
