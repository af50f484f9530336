#include "e8alg/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace e8alg {
namespace {

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    Rational rational() {
        return Rational(static_cast<std::int64_t>(next() % 17) - 8, std::int64_t{1} << (next() % 3));
    }
};

TEST(RationalText, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("+4/2"), Rational(2));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
    EXPECT_EQ(to_string(Rational(7)), "7");
    EXPECT_EQ(to_string(Rational(0)), "0");

    EXPECT_THROW(parse_rational(""), FormatError);
    EXPECT_THROW(parse_rational("1.5"), FormatError);
    EXPECT_THROW(parse_rational("1/0"), FormatError);
    EXPECT_THROW(parse_rational("1/-2"), FormatError);
    EXPECT_THROW(parse_rational("a/b"), FormatError);
    EXPECT_THROW(parse_rational("1/2/3"), FormatError);
}

TEST(RationalText, RoundTripArbitraryPrecision) {
    const std::string big = "123456789012345678901234567890/7";
    EXPECT_EQ(to_string(parse_rational(big)), big);
    Rng rng{909};
    for (int n = 0; n < 100; ++n) {
        const Rational r = rng.rational();
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(JsonElements, OctonionRoundTrip) {
    Rng rng{1};
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[i] = rng.rational();
    EXPECT_EQ(jsonio::decode_octonion(jsonio::encode(o), "t"), o);
    EXPECT_THROW(jsonio::decode_octonion(Json::array({"1", "2"}), "t"), DecodeError);
    EXPECT_THROW(jsonio::decode_octonion(Json::parse("[1,2,3,4,5,6,7,8]"), "t"), DecodeError);
}

TEST(JsonElements, SkewValidatorRejectsNonSkew) {
    Json rows = Json::array();
    for (int i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 8; ++j) row.push_back("0");
        rows.push_back(row);
    }
    rows[0][1] = "1"; // no matching -1 at (1,0)
    try {
        jsonio::decode_skew8(rows, "P");
        FAIL() << "expected DecodeError";
    } catch (const DecodeError& e) {
        EXPECT_NE(std::string(e.what()).find("not skew-symmetric"), std::string::npos);
    }
    rows[1][0] = "-1";
    EXPECT_EQ(jsonio::decode_skew8(rows, "P"), wedge(Octonion::unit(0), Octonion::unit(1)));
}

TEST(JsonElements, F4RoundTrip) {
    Rng rng{2};
    F4Element x;
    {
        Mat8 m;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                m.a[i][j] = rng.rational();
                m.a[j][i] = -m.a[i][j];
            }
        x.a = Skew8(std::move(m));
    }
    for (int i = 0; i < 8; ++i) {
        x.u.c[i] = rng.rational();
        x.v.c[i] = rng.rational();
        x.w.c[i] = rng.rational();
    }
    EXPECT_EQ(jsonio::decode_f4(jsonio::encode(x)), x);
    Json j = jsonio::encode(x);
    j.erase("w");
    EXPECT_THROW(jsonio::decode_f4(j), DecodeError);
}

TEST(JsonElements, E8RoundTrip) {
    Rng rng{15};
    std::array<Rational, e8::kDim> c;
    for (auto& v : c) v = rng.rational();
    const E8Element x = e8::from_coords(c);
    EXPECT_EQ(jsonio::decode_e8(jsonio::encode(x)), x);

    // flattened P/Q layout
    const Json j = jsonio::encode(x);
    EXPECT_TRUE(j.contains("P"));
    EXPECT_TRUE(j.contains("Q"));
    EXPECT_TRUE(j.contains("u"));
    EXPECT_FALSE(j.contains("A"));
}

TEST(JsonElements, So16RoundTrip) {
    Rng rng{25};
    So16Element x;
    {
        Mat8 m;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                m.a[i][j] = rng.rational();
                m.a[j][i] = -m.a[i][j];
            }
        x.a.p = Skew8(m);
        x.a.q = Skew8{};
    }
    Mat8 xm;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) xm.a[i][j] = rng.rational();
    x.x = OctOct(xm);
    EXPECT_EQ(jsonio::decode_so16(jsonio::encode(x)), x);
}

TEST(JsonReports, SerializationOmitsTiming) {
    VerificationReport r;
    r.check = "jacobi";
    r.algebra = "f4";
    r.mode = "exhaustive";
    r.cases = 7;
    r.wall_seconds = 1.25;
    r.notes.push_back("note");
    const Json j = jsonio::encode(r);
    EXPECT_EQ(j.at("check"), "jacobi");
    EXPECT_EQ(j.at("cases"), 7);
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_FALSE(j.contains("wall_seconds"));
    EXPECT_FALSE(j.dump().find("1.25") != std::string::npos);
}

} // namespace
} // namespace e8alg
