#include "e8alg/export_io.hpp"
#include "e8alg/json_io.hpp"
#include "e8alg/structure_table.hpp"

#include "process_util.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

namespace e8alg {
namespace {

namespace fs = std::filesystem;
using testutil::CmdResult;
using testutil::run_command;

const char* cli_path() { return E8ALG_CLI_PATH; }

std::string f4_basis_json(int k) { return jsonio::encode(f4::basis_element(k)).dump(); }

TEST(CliBracket, MatchesTable) {
    // [u:e0, v:e0] in f4 (indices 28 and 36)
    const CmdResult r = run_command(
        {cli_path(), "bracket", "--algebra", "f4", f4_basis_json(28), f4_basis_json(36)});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const F4Element out = jsonio::decode_f4(Json::parse(r.out));
    EXPECT_EQ(out, bracket(f4::basis_element(28), f4::basis_element(36)));

    // against the structure table entry
    const StructureTable t = build_structure_table(AlgebraId::f4);
    const TableRows rows(t);
    auto coords = f4::coords(out);
    for (const auto& [k, c] : rows(28, 36)) {
        EXPECT_EQ(coords[k], c);
        coords[k] = 0;
    }
    for (const auto& c : coords) EXPECT_TRUE(c.is_zero());
}

TEST(CliBracket, SelfBracketIsZeroAndDeterministic) {
    const std::string arg = f4_basis_json(3);
    const CmdResult a = run_command({cli_path(), "bracket", "--algebra", "f4", arg, arg});
    const CmdResult b = run_command({cli_path(), "bracket", "--algebra", "f4", arg, arg});
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_TRUE(jsonio::decode_f4(Json::parse(a.out)).is_zero());
    EXPECT_EQ(a.out, b.out);
}

TEST(CliBracket, ReadsFilesAndStdin) {
    const auto dir = testutil::fresh_temp_dir("e8alg-cli");
    const auto lhs = dir / "lhs.json";
    {
        std::ofstream f(lhs);
        f << f4_basis_json(0);
    }
    const CmdResult r = run_command({cli_path(), "bracket", "--algebra", "f4",
                                     lhs.string(), "-"},
                                    "", f4_basis_json(7));
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(jsonio::decode_f4(Json::parse(r.out)),
              bracket(f4::basis_element(0), f4::basis_element(7)));
    fs::remove_all(dir);
}

TEST(CliBracket, MalformedInputExitsTwo) {
    const CmdResult r =
        run_command({cli_path(), "bracket", "--algebra", "f4", "{not json", "{}"});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);

    const CmdResult miss = run_command({cli_path(), "bracket", "--algebra", "f4",
                                        R"({"A": 3})", f4_basis_json(0)});
    EXPECT_EQ(miss.exit_code, 2);

    const CmdResult alg = run_command(
        {cli_path(), "bracket", "--algebra", "g2", f4_basis_json(0), f4_basis_json(1)});
    EXPECT_EQ(alg.exit_code, 2);
    EXPECT_NE(alg.err.find("unknown algebra"), std::string::npos);
}

TEST(CliBracket, NonSkewMatrixExitsTwoNamingInvariant) {
    Json bad = jsonio::encode(e8::basis_element(56));
    bad["P"][0][1] = "1"; // (1,0) stays 0
    const CmdResult r = run_command({cli_path(), "bracket", "--algebra", "e8", bad.dump(),
                                     jsonio::encode(e8::basis_element(57)).dump()});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("not skew-symmetric"), std::string::npos);
}

TEST(CliVerify, F4JacobiExhaustivePasses) {
    const CmdResult r = run_command({cli_path(), "verify", "f4", "jacobi"});
    ASSERT_EQ(r.exit_code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("result=PASS"), std::string::npos);
    EXPECT_NE(r.out.find("check=jacobi"), std::string::npos);
    // timing goes to stderr, not stdout
    EXPECT_NE(r.err.find("verify f4 jacobi"), std::string::npos);
}

TEST(CliVerify, SampledModeIsSeededAndDeterministic) {
    const std::vector<std::string> args = {cli_path(), "verify", "f4",      "jacobi",
                                           "--mode",   "sample", "--samples", "100",
                                           "--seed",   "7"};
    const CmdResult a = run_command(args);
    const CmdResult b = run_command(args);
    ASSERT_EQ(a.exit_code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("sampled(N=100,seed=7)"), std::string::npos);
}

TEST(CliVerify, JsonReportFormat) {
    const CmdResult r = run_command(
        {cli_path(), "verify", "so16", "simplicity", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0) << r.out;
    const Json j = Json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j[0]["check"], "simplicity");
    EXPECT_TRUE(j[0]["passed"].get<bool>());
}

TEST(CliVerify, AllChecksOnF4) {
    const CmdResult r = run_command({cli_path(), "verify", "f4", "all"});
    ASSERT_EQ(r.exit_code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("check=jacobi"), std::string::npos);
    EXPECT_NE(r.out.find("invariance"), std::string::npos);
    EXPECT_NE(r.out.find("automorphism"), std::string::npos);
    EXPECT_NE(r.out.find("simplicity"), std::string::npos);
}

TEST(CliVerify, CorruptedCachedTableFailsWithExitOne) {
    const auto cache = testutil::fresh_temp_dir("e8alg-cache");
    StructureTable bad = corrupt_entry(build_structure_table(AlgebraId::f4), 0);
    write_file(cache / cache_file_name(AlgebraId::f4), dump_json(table_to_json(bad)));

    const CmdResult r = run_command({cli_path(), "verify", "f4", "jacobi"},
                                    "E8_CACHE_DIR=" + testutil::shell_quote(cache.string()));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("result=FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("first counterexample"), std::string::npos);
    fs::remove_all(cache);
}

TEST(CliVerify, CacheRoundTripKeepsResults) {
    const auto cache = testutil::fresh_temp_dir("e8alg-cache");
    const std::string env = "E8_CACHE_DIR=" + testutil::shell_quote(cache.string());
    const CmdResult first = run_command({cli_path(), "verify", "so16", "jacobi"}, env);
    ASSERT_EQ(first.exit_code, 0) << first.err;
    EXPECT_TRUE(fs::exists(cache / cache_file_name(AlgebraId::so16)));
    const CmdResult second = run_command({cli_path(), "verify", "so16", "jacobi"}, env);
    EXPECT_EQ(second.exit_code, 0);
    EXPECT_EQ(first.out, second.out);
    fs::remove_all(cache);
}

TEST(CliExport, StructureConstantsAndDeterminism) {
    const auto dir = testutil::fresh_temp_dir("e8alg-export");
    const auto out1 = dir / "f4-1.json";
    const auto out2 = dir / "f4-2.json";
    const CmdResult a = run_command(
        {cli_path(), "export", "structure-constants", "f4", "json", "--out", out1.string()});
    const CmdResult b = run_command(
        {cli_path(), "export", "structure-constants", "f4", "json", "--out", out2.string()});
    ASSERT_EQ(a.exit_code, 0) << a.err;
    ASSERT_EQ(b.exit_code, 0);
    const std::string s1 = testutil::read_file(out1);
    EXPECT_EQ(s1, testutil::read_file(out2));
    const Json j = Json::parse(s1);
    EXPECT_EQ(j["dim"], 52);
    EXPECT_EQ(j["algebra"], "f4");
    const StructureTable t = table_from_json(j);
    EXPECT_EQ(t.entries.size(), build_structure_table(AlgebraId::f4).entries.size());

    const auto csv = dir / "f4.csv";
    const CmdResult c = run_command(
        {cli_path(), "export", "structure-constants", "f4", "csv", "--out", csv.string()});
    ASSERT_EQ(c.exit_code, 0);
    EXPECT_EQ(testutil::read_file(csv).rfind("i,j,k,c\n", 0), 0u);
    fs::remove_all(dir);
}

TEST(CliExport, KillingCsv) {
    const auto dir = testutil::fresh_temp_dir("e8alg-export");
    const auto out = dir / "killing.csv";
    const CmdResult r =
        run_command({cli_path(), "export", "killing", "f4", "csv", "--out", out.string()});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const std::string csv = testutil::read_file(out);
    EXPECT_EQ(static_cast<int>(std::count(csv.begin(), csv.end(), '\n')), 52);
    // first diagonal entry of the f4 Killing form
    EXPECT_EQ(csv.rfind("-18,", 0), 0u);
    fs::remove_all(dir);
}

TEST(CliExport, BasisJson) {
    const auto dir = testutil::fresh_temp_dir("e8alg-export");
    const auto out = dir / "basis.json";
    const CmdResult r =
        run_command({cli_path(), "export", "basis", "so16", "json", "--out", out.string()});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const Json j = Json::parse(testutil::read_file(out));
    EXPECT_EQ(j["dim"], 120);
    EXPECT_EQ(j["basis"].size(), 120u);
    EXPECT_EQ(j["basis"][56], "x:e0@e0");
    fs::remove_all(dir);
}

TEST(CliExport, ErrorsExitTwo) {
    const CmdResult no_out = run_command({cli_path(), "export", "killing", "f4", "csv"});
    EXPECT_EQ(no_out.exit_code, 2);
    const CmdResult bad_dir = run_command({cli_path(), "export", "killing", "f4", "csv",
                                           "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(bad_dir.exit_code, 2);
    const CmdResult bad_what =
        run_command({cli_path(), "export", "everything", "f4", "json", "--out", "/tmp/x"});
    EXPECT_EQ(bad_what.exit_code, 2);
}

TEST(CliInfo, F4AndSo16) {
    const CmdResult f4i = run_command({cli_path(), "info", "f4"});
    ASSERT_EQ(f4i.exit_code, 0);
    EXPECT_NE(f4i.out.find("dim: 52"), std::string::npos);
    EXPECT_NE(f4i.out.find("killing signature: (0,52,0)"), std::string::npos);
    EXPECT_NE(f4i.out.find("so8[28] u[8] v[8] w[8]"), std::string::npos);

    const CmdResult so = run_command({cli_path(), "info", "so16"});
    ASSERT_EQ(so.exit_code, 0);
    EXPECT_NE(so.out.find("dim: 120"), std::string::npos);

    const CmdResult rerun = run_command({cli_path(), "info", "f4"});
    EXPECT_EQ(f4i.out, rerun.out);
}

TEST(CliUsage, BadSubcommandOrFlags) {
    EXPECT_EQ(run_command({cli_path()}).exit_code, 2);
    EXPECT_EQ(run_command({cli_path(), "frobnicate"}).exit_code, 2);
    EXPECT_EQ(run_command({cli_path(), "verify", "f4", "nonsense"}).exit_code, 2);
    EXPECT_EQ(
        run_command({cli_path(), "verify", "f4", "jacobi", "--mode", "sample", "--samples", "0"})
            .exit_code,
        2);
    EXPECT_EQ(run_command({cli_path(), "--help"}).exit_code, 0);
}

} // namespace
} // namespace e8alg
