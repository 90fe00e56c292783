#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome cms(const std::string& args) {
    const char* bin = std::getenv("CMS_BIN");
    std::string cmd = std::string(bin ? bin : "./cms") + " --no-timing " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Outcome& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, JackInMonomials) {
    Outcome r = cms("family jack --partition [2] --basis m --json");
    ASSERT_EQ(r.code, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["results"]["value"], "m[2] + (2/(alpha + 1))*m[1,1]");
    for (const char* key : {"command", "params", "results", "verdicts", "elapsed_ms"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["elapsed_ms"].is_null());
}

TEST(Cli, HermiteOfEmptyPartition) {
    Outcome r = cms("family hermite --partition [0] --json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["results"]["value"], "1");
}

TEST(Cli, VerifyPasses) {
    Outcome r = cms("verify commutators --max-degree 4 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["command"], "verify");
    EXPECT_EQ(cms("verify ideals --n 1 --m 1 --max-weight 3").code, 0);
    EXPECT_EQ(cms("verify hyper --degree 3").code, 0);
}

TEST(Cli, ConjectureIsInformational) {
    Outcome r = cms("verify conjecture --max-weight 3 --json");
    EXPECT_EQ(r.code, 0);
    for (const auto& v : json_of(r)["verdicts"]) EXPECT_TRUE(v.value("informational", false));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cms("verify nope").code, 2);
    EXPECT_EQ(cms("family jack --partition [1,2]").code, 2);
    EXPECT_EQ(cms("frobnicate").code, 2);
    EXPECT_EQ(cms("family jack --partition [2] --set beta=1").code, 2);
    EXPECT_EQ(cms("convert \"(1/(p0-2))*p[1]\" --to m --set p0=2").code, 1);
}

TEST(Cli, Deterministic) {
    for (const char* args : {"family laguerre --partition [2,1] --json", "pieri hermite --partition [1] --r 2 --json",
                             "super --n 1 --m 1 family hermite --partition [2] --json"}) {
        Outcome a = cms(args), b = cms(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, Formats) {
    Outcome t = cms("convert p[1,1] --to m --format text");
    ASSERT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("value: m[2] + 2*m[1,1]"), std::string::npos);
    Outcome l = cms("family jack --partition [1,1] --format latex");
    ASSERT_EQ(l.code, 0);
    EXPECT_NE(l.out.find("\\begin{align*}"), std::string::npos);
    EXPECT_EQ(cms("convert p[1] --to m --format yaml").code, 2);
}

TEST(Cli, SuperFamily) {
    Outcome r = cms("super --n 1 --m 1 family jack --partition [2,2] --json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["results"]["value"], "0");
}
