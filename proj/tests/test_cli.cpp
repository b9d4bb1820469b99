#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(SQT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    for (size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("verify golden").code, 0);
    EXPECT_EQ(cli("orbit --seed '((1,2),(3'").code, 4);
    EXPECT_EQ(cli("butterfly '(1,24,2'").code, 4);
    EXPECT_EQ(cli("butterfly '(1,24,2,2)' --q 3").code, 1);
    EXPECT_EQ(cli("orbit --seed '((1,2,3,4,5),(1,2))' --max-vertices 4").code, 3);
    EXPECT_EQ(cli("verify nope").code, 1);
    EXPECT_EQ(cli("sweep --stratum h5 --n-min 1 --n-max 2").code, 4);
    EXPECT_EQ(cli("frobnicate").code, 4);
    EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, Outputs) {
    const auto b = cli("butterfly '(1,24,2,2)' --q 2");
    EXPECT_NE(b.out.find("\"image\": \"(1,12,2,-10)\""), std::string::npos);
    const auto o = cli("orbit --seed '((1,2,3,4,5),(1,2))'");
    EXPECT_NE(o.out.find("\"vertices\": 18"), std::string::npos);
    const auto p = cli("path --stratum h2 '(0,6,1,-1)' '(0,6,1,1)'");
    EXPECT_EQ(p.code, 1);
    const auto s = cli("sweep --stratum prym4 --n-min 8 --n-max 12 --step 2");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "n,stratum,orbit,label_hlk,vertices,edges,diameter,bound,ratio,ms");
    EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 5);
    EXPECT_NE(cli("census --stratum prym6 --n 8").out.find("\"orbits\""), std::string::npos);
}

TEST(Cli, ExportFiles) {
    const std::string dot = ::testing::TempDir() + "orbit.dot";
    EXPECT_EQ(cli("export --seed '((1,2,3,4,5),(1,2))' --format dot --out " + dot).code, 0);
    std::ifstream f(dot);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    EXPECT_EQ(text.rfind("digraph orbit", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 18 + 36 + 1);
    const std::string svg = ::testing::TempDir() + "sweep.svg";
    EXPECT_EQ(cli("sweep --n-min 5 --n-max 11 --format svg --out " + svg).code, 0);
    std::ifstream g(svg);
    std::string first;
    std::getline(g, first);
    EXPECT_EQ(first.rfind("<svg", 0), 0u);
}
