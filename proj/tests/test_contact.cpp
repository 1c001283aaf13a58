#include "szego/contact_embed.hpp"
#include "szego/embed_json.hpp"

#include <doctest.h>

#include <cmath>

using namespace szego::contact;

namespace {

const std::vector<std::string> kUV{"u", "v"};

Expr uv(const std::string& s)
{
    return Expr::parse(s, kUV);
}

} // namespace

TEST_CASE("expression parsing and dual evaluation")
{
    Expr e = uv("u*v + sin(u)^2 + cos(u)^2");
    double vals[] = {0.3, 0.7};
    CHECK(e.eval(vals) == doctest::Approx(0.3 * 0.7 + 1.0).epsilon(1e-14));

    Dual d = uv("u*u*v").eval_dual(vals, 0); // d/du u^2 v
    CHECK(d.v == doctest::Approx(0.063));
    CHECK(d.d == doctest::Approx(2 * 0.3 * 0.7));

    Dual ds = uv("sqrt(u + 1)").eval_dual(vals, 0);
    CHECK(ds.d == doctest::Approx(0.5 / std::sqrt(1.3)));

    CHECK_THROWS_AS(uv("w + 1"), ExprParseError);
    CHECK_THROWS_AS(uv("sin u"), ExprParseError);
    try {
        uv("u + ");
    } catch (const ExprParseError& e2) {
        CHECK(e2.column == 5);
    }
}

TEST_CASE("antisymmetrize prepends the cross pair")
{
    ContactPresentation p;
    p.params = kUV;
    p.form = FormKind::two_xdy;
    p.pairs.emplace_back(uv("u"), uv("v"));

    ContactPresentation anti = antisymmetrize(p);
    REQUIRE(anti.pairs.size() == 2);
    CHECK(anti.form == FormKind::antisymmetric);
    // first pair is (1, u v)
    double vals[] = {0.3, 0.7};
    CHECK(anti.pairs[0].first.eval(vals) == 1.0);
    CHECK(anti.pairs[0].second.eval(vals) == doctest::Approx(0.21));

    // both forms agree at the sample along each coordinate direction
    for (size_t dir = 0; dir < 2; ++dir) {
        double before = form_value(p, {0.3, 0.7}, dir);
        double after = form_value(anti, {0.3, 0.7}, dir);
        CHECK(std::abs(before - after) < 1e-12);
    }

    ContactPresentation empty;
    empty.params = kUV;
    empty.form = FormKind::two_xdy;
    CHECK_THROWS_AS(antisymmetrize(empty), EmptyPresentation);
    // already antisymmetric: rejected, never applied twice
    CHECK_THROWS_AS(antisymmetrize(anti), std::invalid_argument);
}

TEST_CASE("padding onto a sphere")
{
    ContactPresentation anti;
    anti.params = kUV;
    anti.form = FormKind::antisymmetric;
    anti.pairs.emplace_back(uv("1"), uv("u*v"));
    anti.pairs.emplace_back(uv("u"), uv("v"));

    auto grid = grid_samples(2, 101);
    SUBCASE("auto radius picks the smallest integer with unit margin")
    {
        Embedding e = pad_to_sphere(anti, std::nullopt, grid);
        CHECK(e.radius == szego::Rational(3));
        REQUIRE(e.target_pairs.size() == 3);
        // padded pair has y = 0
        double at[] = {0.2, -0.4};
        CHECK(e.target_pairs[2].second.eval(at) == 0.0);
    }
    SUBCASE("a too-small radius is rejected")
    {
        CHECK_THROWS_AS(pad_to_sphere(anti, 1, grid), RadicandNonpositive);
    }
    SUBCASE("two_xdy input is rejected before antisymmetrization")
    {
        ContactPresentation raw;
        raw.params = kUV;
        raw.form = FormKind::two_xdy;
        raw.pairs.emplace_back(uv("u"), uv("v"));
        CHECK_THROWS_AS(pad_to_sphere(raw, std::nullopt, grid), std::invalid_argument);
    }
}

TEST_CASE("an exact sphere chart needs no padding")
{
    ContactPresentation s3;
    s3.params = kUV;
    s3.form = FormKind::antisymmetric;
    s3.pairs.emplace_back(uv("cos(u)*cos(v)"), uv("sin(u)*cos(v)"));
    s3.pairs.emplace_back(uv("sin(v)"), uv("0"));

    auto grid = grid_samples(2, 21);
    Embedding e = pad_to_sphere(s3, 1, grid);
    CHECK(e.target_pairs.size() == 2);
    CHECK(e.radius == szego::Rational(1));

    auto report = verify_embedding(e, s3, grid, 1e-12);
    CHECK(report.pass);
    CHECK(report.max_form_deviation == 0.0);
    CHECK(report.max_sphere_deviation < 1e-14);
}

TEST_CASE("padded embedding passes pullback and sphere checks")
{
    ContactPresentation p;
    p.params = kUV;
    p.form = FormKind::two_xdy;
    p.pairs.emplace_back(uv("u"), uv("v"));

    ContactPresentation anti = antisymmetrize(p);
    auto grid = grid_samples(2, 101);
    Embedding e = pad_to_sphere(anti, std::nullopt, grid);

    auto samples = random_samples(2, 1000, 42);
    auto report = verify_embedding(e, p, samples, 1e-9);
    CHECK(report.pass);
    CHECK(report.samples_checked == 1000);
    CHECK(report.max_form_deviation < 1e-12);
    CHECK(report.max_sphere_deviation < 1e-12);
}

TEST_CASE("a corrupted pair is caught with the worst sample attached")
{
    ContactPresentation p;
    p.params = kUV;
    p.form = FormKind::two_xdy;
    p.pairs.emplace_back(uv("u"), uv("v"));

    ContactPresentation anti = antisymmetrize(p);
    auto grid = grid_samples(2, 51);
    Embedding e = pad_to_sphere(anti, std::nullopt, grid);
    e.target_pairs[1].second = uv("1.0001*v");

    auto samples = random_samples(2, 500, 7);
    try {
        verify_embedding(e, p, samples, 1e-9);
        FAIL("expected ToleranceExceeded");
    } catch (const ToleranceExceeded& ex) {
        CHECK(ex.worst_sample.size() == 2);
    }
}

TEST_CASE("embed input schema errors carry JSON pointers")
{
    nlohmann::json good;
    good["params"] = nlohmann::json::array({"u", "v"});
    good["pairs"] = nlohmann::json::array({nlohmann::json::array({"u", "v"})});
    good["form"] = "two_xdy";
    good["samples"] = {{"random", 100}, {"seed", 1}};
    auto parsed = szego::embed_input_from_json(good);
    CHECK(parsed.presentation.pairs.size() == 1);
    CHECK(parsed.samples.kind == szego::SamplePlan::Kind::random);

    nlohmann::json bad = good;
    bad["pairs"][0][1] = 17; // not an expression string
    try {
        szego::embed_input_from_json(bad);
        FAIL("expected SchemaError");
    } catch (const szego::SchemaError& e) {
        CHECK(e.pointer == "/pairs/0/1");
    }

    nlohmann::json no_form = good;
    no_form.erase("form");
    CHECK_THROWS_AS(szego::embed_input_from_json(no_form), szego::SchemaError);
}

TEST_CASE("random samples are deterministic for a fixed seed")
{
    auto a = random_samples(3, 10, 99);
    auto b = random_samples(3, 10, 99);
    CHECK(a == b);
    auto c = random_samples(3, 10, 100);
    CHECK(a != c);
    for (const auto& s : a)
        for (double v : s) {
            CHECK(v >= -1.0);
            CHECK(v < 1.0);
        }
}
