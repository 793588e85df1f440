#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace
{

struct Run
{
    int code = -1;
    std::string out;
};

Run run(std::string const& args)
{
    std::string const cmd = std::string(PRYMTYURIN_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int const status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, TableSym3)
{
    auto const r = run("table --group 'sym(3)' --format json");
    ASSERT_EQ(r.code, 0);
    auto const j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    ASSERT_EQ(j.at("characters").size(), 3u);
    EXPECT_EQ(j.at("characters")[2].at("degree"), 2);
}

TEST(Cli, TablePermMatchesSym3)
{
    auto a = nlohmann::json::parse(run("table --group 'sym(3)' --format json").out);
    auto b = nlohmann::json::parse(run("table --group 'perm(3;(1,2);(1,2,3))' --format json").out);
    EXPECT_EQ(a.at("characters"), b.at("characters"));
    EXPECT_EQ(a.at("classes"), b.at("classes"));
}

TEST(Cli, TableDihedral5)
{
    auto const r = run("table --group 'dihedral(5)' --format json");
    ASSERT_EQ(r.code, 0);
    auto const j = nlohmann::json::parse(r.out);
    bool zeta = false;
    for (auto const& chi : j.at("characters")) {
        if (chi.at("degree") == 2) {
            for (auto const& v : chi.at("values"))
                zeta = zeta || v.get<std::string>().find("z10") != std::string::npos;
        }
    }
    EXPECT_TRUE(zeta);
}

TEST(Cli, ScanAlt5)
{
    auto const r = run("scan --group 'alt(5)' --format json");
    ASSERT_EQ(r.code, 0);
    auto const j = nlohmann::json::parse(r.out);
    bool found = false;
    for (auto const& t : j.at("triples"))
        found = found || (t.at("subgroup").at("order") == 6 && t.at("n") == 4 && t.at("hecke").at("q") == 3);
    EXPECT_TRUE(found);
}

TEST(Cli, ScanSym3AllExponentOne)
{
    auto const r = run("scan --group 'sym(3)' --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("group,subgroup_order"), std::string::npos);
    auto const j = nlohmann::json::parse(run("scan --group 'sym(3)' --format json").out);
    for (auto const& t : j.at("triples"))
        EXPECT_EQ(t.at("hecke").at("q"), 1);
}

TEST(Cli, SignaturesAlt5)
{
    std::string const base = "signatures --group 'alt(5)' --subgroup 'gens:(1,2)(3,4);(3,4,5)' --format json";
    // Both the degree-4 and the degree-5 irreducible give q > 1 here.
    EXPECT_EQ(nlohmann::json::parse(run(base).out).size(), 2u);
    auto const r = run(base + " --reps deg:4");
    ASSERT_EQ(r.code, 0) << r.out;
    auto const j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    auto const& sigs = j[0].at("signatures");
    ASSERT_FALSE(sigs.empty());
    EXPECT_EQ(sigs[0].at("dim_P"), 1);
    EXPECT_EQ(sigs[0].at("entries")[0].at("multiplicity"), 5);
}

TEST(Cli, AdmissibleByOrder)
{
    auto const r = run("admissible --group 'alt(5)' --subgroup order:6 --reps deg:4 --format json");
    ASSERT_EQ(r.code, 0);
    auto const j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0].at("hecke").at("q"), 3);
}

TEST(Cli, ThreadsDoNotChangeOutput)
{
    auto const a = run("signatures --group 'alt(5)' --format json --threads 1");
    auto const b = run("signatures --group 'alt(5)' --format json --threads 4");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("table --group 'sym(3'").code, 2);
    EXPECT_EQ(run("table").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("table --group 'sym(3)' --format xml").code, 2);
    EXPECT_EQ(run("table --group 'sym(8)' --order-cap 1000").code, 3);
    EXPECT_EQ(run("admissible --group 'sym(3)' --subgroup 'gens:(1,2' ").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifySmallCases)
{
    EXPECT_EQ(run("verify-paper --case s3-oracle").code, 0);
    EXPECT_EQ(run("verify-paper --case prop5.1-small").code, 0);
    EXPECT_EQ(run("verify-paper --case prop5.3 --p 3").code, 0);
    EXPECT_EQ(run("verify-paper --case micro-oracles --format json").code, 0);
    EXPECT_EQ(run("verify-paper --case prop5.3 --p 9").code, 2);
}
