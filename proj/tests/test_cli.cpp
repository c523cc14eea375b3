#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string binary() {
    const char* p = std::getenv("RGGLAB_BIN");
    REQUIRE_MESSAGE(p != nullptr, "RGGLAB_BIN must point at the rgglab executable");
    return p;
}

int run(const std::string& cmdline) {
    const int rc = std::system(cmdline.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int line_count(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("help exits zero on every subcommand") {
    for (const char* sub : {"", " connectivity", " betweenness", " geodesics", " percolation",
                            " strauss", " rerun"})
        CHECK(run(binary() + std::string(sub) + " --help > /dev/null") == 0);
}

TEST_CASE("connectivity sweep row count and determinism") {
    const std::string out = "cli_conn.csv";
    const std::string cmd = binary() +
                            " connectivity --domain disk:R=3 --beta 1 --rho-grid 2:10:9"
                            " --trials 40 --seed 7 --out " + out;
    REQUIRE(run(cmd) == 0);
    const std::string first = slurp(out);
    CHECK(line_count(first) == 10);  // header + 9 rows
    CHECK(first.rfind("rho,pfc_mc,se,pfc_analytic\n", 0) == 0);
    REQUIRE(run(cmd) == 0);
    CHECK(slurp(out) == first);
}

TEST_CASE("jobs flag never changes output bytes") {
    const std::string base = binary() +
                             " connectivity --domain disk:R=3 --beta 1 --rho-grid 3:6:2"
                             " --trials 60 --seed 11 --out cli_jobs";
    REQUIRE(run(base + "1.csv --jobs 1") == 0);
    REQUIRE(run(base + "4.csv --jobs 4") == 0);
    CHECK(slurp("cli_jobs1.csv") == slurp("cli_jobs4.csv"));
}

TEST_CASE("missing required flag and bad tokens exit 2") {
    CHECK(run(binary() + " connectivity --domain disk:R=3 --rho-grid 1:2:2 2> /dev/null") == 2);
    CHECK(run(binary() + " connectivity --domain blob:R=3 --beta 1 --rho-grid 1:2:2 2> /dev/null") ==
          2);
    CHECK(run(binary() +
              " connectivity --domain disk:R=3 --beta 1 --rho-grid 1-2-3 2> /dev/null") == 2);
    CHECK(run(binary() + " betweenness --eps-grid 0:2:5 2> /dev/null") == 2);
    CHECK(run(binary() + " strauss --omega 1.5 --interaction-range 0.1 2> /dev/null") == 2);
}

TEST_CASE("regime violation exits 3") {
    // inner radius of one is neither small nor large next to r0 = 1
    CHECK(run(binary() +
              " connectivity --domain annulus:r=1,R=20 --beta 1 --rho-grid 4:4:1 --trials 5"
              " 2> /dev/null > /dev/null") == 3);
}

TEST_CASE("analytic betweenness curve endpoints") {
    REQUIRE(run(binary() + " betweenness --analytic-only --eps-grid 0:1:101 --out cli_g.csv") == 0);
    const std::string csv = slurp("cli_g.csv");
    CHECK(line_count(csv) == 102);
    CHECK(csv.find("\n0,1\n") != std::string::npos);
    CHECK(csv.rfind("\n1,0\n") == csv.size() - 5);
}

TEST_CASE("geodesics emits both observed and predicted columns") {
    REQUIRE(run(binary() +
                " geodesics --d 2 --rho 5 --r-grid 1.05:1.95:10 --trials 30 --seed 2"
                " --out cli_geo.csv") == 0);
    const std::string csv = slurp("cli_geo.csv");
    CHECK(line_count(csv) == 11);
    CHECK(csv.rfind("r,count_mc,se,count_analytic\n", 0) == 0);
}

TEST_CASE("percolation sweep is coupled and monotone") {
    REQUIRE(run(binary() +
                " percolation --L 30 --p-grid 0.3:0.8:6 --trials 60 --seed 4 --out cli_perc.csv") ==
            0);
    std::ifstream in("cli_perc.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,theta_hat,se,mean_cluster,largest_fraction,spanning_prob");
    double prev_span = -1.0;
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto last_comma = line.rfind(',');
        const double span = std::stod(line.substr(last_comma + 1));
        CHECK(span >= prev_span);
        prev_span = span;
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("strauss writes a point csv") {
    REQUIRE(run(binary() +
                " strauss --n 40 --omega 0.2 --interaction-range 0.08 --steps 2000 --seed 9"
                " --out cli_strauss.csv 2> /dev/null") == 0);
    const std::string csv = slurp("cli_strauss.csv");
    CHECK(csv.rfind("x0,x1\n", 0) == 0);
    CHECK(line_count(csv) == 41);
}

TEST_CASE("seed falls back to the environment variable") {
    const std::string flags = " percolation --L 20 --p-grid 0.4:0.6:2 --trials 30 --out ";
    REQUIRE(run(binary() + flags + "cli_env1.csv --seed 42") == 0);
    REQUIRE(run("RGGLAB_SEED=42 " + binary() + flags + "cli_env2.csv") == 0);
    REQUIRE(run("RGGLAB_SEED=43 " + binary() + flags + "cli_env3.csv") == 0);
    CHECK(slurp("cli_env1.csv") == slurp("cli_env2.csv"));
    CHECK(slurp("cli_env1.csv") != slurp("cli_env3.csv"));
}

TEST_CASE("manifest replays to identical bytes") {
    const std::string out = "cli_rerun.csv";
    REQUIRE(run(binary() +
                " connectivity --domain disk:R=3 --beta 1 --rho-grid 4:6:3 --trials 30 --seed 13"
                " --out " + out) == 0);
    const std::string first = slurp(out);
    CHECK(slurp(out + ".manifest.json").find("\"seed\": 13") != std::string::npos);
    REQUIRE(run(binary() + " rerun --manifest " + out + ".manifest.json") == 0);
    CHECK(slurp(out) == first);
}
