#include <doctest.h>

#include <cmath>

#include "cantor/equivalence.hpp"
#include "cantor/intervals.hpp"
#include "cantor/measure.hpp"

using namespace cantor;

namespace {

DimensionValue dim_of(const DigitSet& ds, const char* code_text) {
    PeriodicCode c = parse_code(code_text, ds.base(), alphabet_tag::nary);
    SigmaTrace tr = sigma_trace(ds, c, 8);
    return dimension(ds, c, tr);
}

// covering-sum oracle: Σ lengths^s over the level-L tightening, which squeezes
// the s-dimensional measure from above as L grows
double covering_sum(const DigitSet& ds, const PeriodicCode& c, int L, double s) {
    IntersectResult r = intersect_level(ds, c, L);
    double total = 0;
    for (const auto& [a, b] : r.tight.intervals) total += std::pow(to_double(b - a), s);
    return total;
}

} // namespace

TEST_CASE("dimension golden values") {
    CHECK(dim_of(DigitSet(3, {0, 2}), "(20)").exact() == "log_9(2)");
    CHECK(dim_of(DigitSet(3, {0, 2}), "(0)").exact() == "log_3(2)");
    CHECK(dim_of(DigitSet(8, {0, 5, 7}), "(07)").exact() == "log_64(3)");
    CHECK(dim_of(DigitSet(8, {0, 5, 7}), "(0)").exact() == "log_8(3)");
}

TEST_CASE("dimension equals the product form") {
    DigitSet ds(17, {0, 3, 6, 12});
    PeriodicCode c = parse_code("(3)", 17, alphabet_tag::nary);
    DimensionValue d = dimension(ds, c, sigma_trace(ds, c, 6));
    CHECK(d.exact() == "log_17(2)");
    CHECK(d.value() == doctest::Approx(std::log(2) / std::log(17)).epsilon(1e-14));
}

TEST_CASE("dimension reduces common powers") {
    DimensionValue d = make_dimension(4, 81);
    CHECK(d.exact() == "log_9(2)");
    CHECK(make_dimension(8, 27).exact() == "log_3(2)");
    CHECK(make_dimension(5, 25).exact() == "log_25(5)"); // no common power
    CHECK(make_dimension(9, 9).exact() == "1");
    CHECK(make_dimension(1, 7).exact() == "0");
}

TEST_CASE("two digit measure") {
    MeasureValue m = measure_two_digit(9, 6, 8);
    CHECK(m.exact() == "(1/4)^log_9(2)");
    CHECK(m.value() == doctest::Approx(std::pow(4.0, -std::log(2) / std::log(9))).epsilon(1e-14));

    for (int n = 3; n <= 20; ++n) {
        MeasureValue full = measure_two_digit(n, 0, n - 1);
        CHECK(full.exact() == "1");
        CHECK(full.value() == doctest::Approx(1.0));
    }

    MeasureValue m17 = measure_two_digit(17, 3, 6);
    CHECK(m17.exact() == "(3/16)^log_17(2)");
}

TEST_CASE("scaled measures reproduce the golden intersections") {
    SUBCASE("two copies of C/9 give exactly 1/2") {
        DimensionValue s = make_dimension(2, 3);
        MeasureValue base = measure_two_digit(3, 0, 2);
        CHECK(base.exact() == "1");
        MeasureValue m = measure_scaled(2, 3, 2, s, base);
        CHECK(m.exact() == "1/2");
        CHECK(m.value() == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("two copies of C_{9,{6,8}}/9 give 4^{-s}") {
        DimensionValue s = make_dimension(2, 9);
        MeasureValue base = measure_two_digit(9, 6, 8);
        MeasureValue m = measure_scaled(2, 3, 2, s, base);
        CHECK(m.exact() == "(1/4)^log_9(2)");
    }
    SUBCASE("a single copy keeps the base measure") {
        DimensionValue s = make_dimension(2, 9);
        MeasureValue base = measure_two_digit(9, 6, 8);
        MeasureValue m = measure_scaled(1, 3, 0, s, base);
        CHECK(m.exact() == base.exact());
    }
}

TEST_CASE("covering sums bound the closed forms from above") {
    // the level-L covering sum decreases toward H^s; the closed form must
    // never exceed it
    DigitSet mtc(3, {0, 2});
    SUBCASE("t = 3/4") {
        PeriodicCode t = parse_code("(20)", 3, alphabet_tag::nary);
        double s = make_dimension(2, 9).value();
        double expect = std::pow(4.0, -s);
        double prev = 1e300;
        for (int L = 4; L <= 12; L += 2) {
            double cs = covering_sum(mtc, t, L, s);
            CHECK(cs <= prev + 1e-12);
            CHECK(cs >= expect - 1e-9);
            prev = cs;
        }
        CHECK(prev == doctest::Approx(expect).epsilon(0.02));
    }
    SUBCASE("strongly periodic golden value 1/2") {
        PeriodicCode a = parse_code("02(0)", 3, alphabet_tag::delta_plus);
        double s = std::log(2) / std::log(3);
        double prev = 1e300;
        for (int L = 4; L <= 12; L += 2) {
            double cs = covering_sum(mtc, a, L, s);
            CHECK(cs <= prev + 1e-12);
            CHECK(cs >= 0.5 - 1e-9);
            prev = cs;
        }
        CHECK(prev == doctest::Approx(0.5).epsilon(0.02));
    }
}

TEST_CASE("box count slope tracks the dimension on the goldens") {
    struct Row {
        DigitSet ds;
        const char* code;
        alphabet_tag alpha;
        double dim;
    };
    std::vector<Row> rows{
        {DigitSet(3, {0, 2}), "(20)", alphabet_tag::nary, std::log(2) / std::log(9)},
        {DigitSet(8, {0, 5, 7}), "(07)", alphabet_tag::nary, std::log(3) / std::log(64)},
        {DigitSet(3, {0, 2}), "02(0)", alphabet_tag::delta_plus, std::log(2) / std::log(3)},
        {DigitSet(3, {0, 2}), "02(20)", alphabet_tag::delta_plus, std::log(2) / std::log(9)},
        {DigitSet(17, {0, 3, 6, 12}), "(3)", alphabet_tag::delta_plus, std::log(2) / std::log(17)},
    };
    for (const Row& row : rows) {
        PeriodicCode c = parse_code(row.code, row.ds.base(), row.alpha);
        BoxCurve bc = boxcount_curve(row.ds, c, 12);
        CHECK(std::abs(bc.regression_slope - row.dim) < 0.05);
    }
}

TEST_CASE("direct dimension and measure reach non-sparse systems") {
    DigitSet ds(10, {0, 1, 2, 6, 8});
    PeriodicCode t = parse_code("(2)", 10, alphabet_tag::nary);
    DimensionValue d = dimension_of(ds, t);
    CHECK(d.exact() == "log_10(2)");
    MeasureValue m = measure_of(ds, t);
    REQUIRE(m.defined);
    // intersection is C_{10,{2,8}}: measure ((8-2)/9)^s = (2/3)^s
    CHECK(m.exact() == "(2/3)^log_10(2)");
    CHECK(m.value() == doctest::Approx(std::pow(2.0 / 3.0, std::log(2) / std::log(10)))
                           .epsilon(1e-13));
}

TEST_CASE("direct path agrees with the report on sparse systems") {
    DigitSet mtc(3, {0, 2});
    for (const char* text : {"(20)", "02(20)", "(2002)"}) {
        PeriodicCode c = parse_code(text, 3, alphabet_tag::delta_plus);
        SelfSimilarReport r = self_similar_report(mtc, c);
        CHECK(dimension_of(mtc, c) == r.dim);
        MeasureValue m = measure_of(mtc, c);
        CHECK(m.defined == r.measure.defined);
        if (m.defined) CHECK(m.exact() == r.measure.exact());
    }
    // recode route: sigma alternates for 0.(21), both paths must agree
    PeriodicCode t = parse_code("(21)", 3, alphabet_tag::nary);
    SelfSimilarReport r = self_similar_report(mtc, t);
    CHECK(dimension_of(mtc, t) == r.dim);
}
