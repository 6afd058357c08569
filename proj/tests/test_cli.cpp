// End-to-end checks of the command-line tool, shelling out to the built
// binary (path injected as IGR_CLI_PATH by the build).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "igr-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const std::string cmd = std::string(IGR_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = read_file(out);
    return r;
}

} // namespace

TEST_CASE("degeneracy subcommand on K4") {
    const auto k4 = work_dir() / "k4.txt";
    write_file(k4, "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    const auto r = run("degeneracy --in " + k4.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"degeneracy\": 3") != std::string::npos);
    CHECK(r.output.find("\"command\": \"degeneracy\"") != std::string::npos);
}

TEST_CASE("exit codes: usage errors are 1, cap refusals are 2") {
    CHECK(run("no-such-command").exit_code == 1);
    CHECK(run("sample-bipartite --n 4 --m 5").exit_code == 1);  // missing --seed
    CHECK(run("degeneracy --in /nonexistent/graph.txt").exit_code == 1);
    CHECK(run("count-degenerate --n 6 --c 1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("replays are byte-identical") {
    const auto a = run("lemma21 --n 8 --m 12 --c 2 --cap 5 --trials 20 --seed 3");
    const auto b = run("lemma21 --n 8 --m 12 --c 2 --cap 5 --trials 20 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"bad_count\"") != std::string::npos);

    const auto s1 = run("sample-bipartite --n 4 --m 5 --seed 0 --raw");
    const auto s2 = run("sample-bipartite --n 4 --m 5 --seed 0 --raw");
    CHECK(s1.exit_code == 0);
    CHECK(s1.output == s2.output);
    // Frozen golden graph for this (n, m, seed).
    CHECK(s1.output == "B 4 5\n1 5\n1 6\n1 7\n3 8\n4 8\n");
}

TEST_CASE("label and verify-label round trip through files") {
    const auto g = work_dir() / "p4.txt";
    const auto lab = work_dir() / "p4.labels";
    write_file(g, "4 3\n1 2\n2 3\n3 4\n");

    const auto l = run("label --in " + g.string() + " --scheme forest --raw --out " + lab.string());
    REQUIRE(l.exit_code == 0);

    const auto v = run("verify-label --in " + g.string() + " --labels " + lab.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("\"ok\": true") != std::string::npos);

    // Corrupt one bit; verification must now answer false.
    auto text = read_file(lab);
    const auto pos = text.rfind('1');
    text[pos] = '0';
    write_file(lab, text);
    const auto bad = run("verify-label --in " + g.string() + " --labels " + lab.string());
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("\"ok\": false") != std::string::npos);
}

TEST_CASE("ledger report carries both sides of the inequality") {
    const auto r = run("ledger --n 64 --u 16 --k 16 --eps 0.75 --eps-prime 0.25");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"verdict\": true") != std::string::npos);
    CHECK(r.output.find("\"lhs_log2_num\": \"4352\"") != std::string::npos);
    CHECK(r.output.find("\"rhs_log2_num\"") != std::string::npos);
    CHECK(r.output.find("\"pool_size_lower\"") != std::string::npos);
}

TEST_CASE("ledger-sweep emits csv rows") {
    const auto r = run("ledger-sweep --n-max 12 --eps 0.75 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("n,u,k,pool_mode,", 0) == 0);
    // At least one data row with the allBipartite pool.
    CHECK(r.output.find("allBipartite") != std::string::npos);
}

TEST_CASE("embed and min-universal read multi-graph files") {
    const auto f = work_dir() / "p3.txt";
    const auto u = work_dir() / "c4.txt";
    const auto fam = work_dir() / "family.txt";
    write_file(f, "3 2\n1 2\n2 3\n");
    write_file(u, "4 4\n1 2\n1 4\n2 3\n3 4\n");
    write_file(fam, "2 1\n1 2\n\n2 0\n");

    const auto e = run("embed --f " + f.string() + " --u " + u.string());
    CHECK(e.exit_code == 0);
    CHECK(e.output.find("\"found\": true") != std::string::npos);

    const auto m = run("min-universal --in " + fam.string() + " --umax 4");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("\"size\": 3") != std::string::npos);
}
