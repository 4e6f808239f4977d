#include <doctest.h>

#include <cmath>

#include "llip/operators.hpp"
#include "test_util.hpp"

using namespace llip;
using llip::testing::Rng;
using llip::testing::random_function;
using llip::testing::random_pwl;
using llip::testing::uniform;

TEST_CASE("multiplication operator evaluation") {
    GridPtr g = make_interval_grid(-1.0, 1.0, 3);
    GridFunction h = tabulate1(g, [](double w) { return w; });
    MultiplicationOperator op = multiplication_operator(g, h);

    GridFunction one = constant_function(g, 1.0);
    CHECK(eval(op, one).values == h.values);

    GridFunction two = constant_function(g, 2.0);
    CHECK(eval(op, two).values == std::vector<double>{-2.0, 0.0, 2.0});

    MultiplicationOperator zero = multiplication_operator(g, constant_function(g, 0.0));
    CHECK(eval(zero, two).values == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("grid mismatch is rejected") {
    GridPtr g = make_interval_grid(-1.0, 1.0, 3);
    GridPtr h = make_interval_grid(-1.0, 1.0, 4);
    MultiplicationOperator op = multiplication_operator(g, constant_function(g, 1.0));
    CHECK_THROWS_WITH_AS(eval(op, constant_function(h, 1.0)),
                         doctest::Contains("grid-mismatch"), Error);
}

TEST_CASE("sample operator is exact lookup") {
    GridPtr g = make_interval_grid(0.0, 1.0, 5);
    GridFunction f1 = constant_function(g, 1.0);
    GridFunction f2 = constant_function(g, 2.0);
    SampleOperator s = make_sample_operator(g, {{f1, f2}});
    CHECK(eval(s, f1).values == f2.values);
    CHECK_THROWS_WITH_AS(eval(s, f2), doctest::Contains("not-in-domain"), Error);
}

TEST_CASE("identity slices make the identity operator") {
    GridPtr g = make_interval_grid(-1.0, 1.0, 9);
    SuperpositionField field{g, std::vector<ScalarPWL>(g->size(), ScalarPWL::identity())};
    Rng rng(3);
    GridFunction f = random_function(rng, g);
    CHECK(eval(field, f).values == f.values);
}

TEST_CASE("tensor evaluation by hand") {
    GridPtr g = make_interval_grid(-1.0, 1.0, 3);
    ScalarPWL abs_pwl({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, -1.0, 1.0);
    TensorOperator t = make_tensor_operator(g, {{constant_function(g, 1.0), abs_pwl}});
    GridFunction f = tabulate1(g, [](double w) { return w; });
    CHECK(eval(t, f).values == std::vector<double>{1.0, 0.0, 1.0});
}

TEST_CASE("saturating operator slice") {
    GridPtr g = make_interval_grid(0.0, 1.0, 2);
    CHECK_THROWS_WITH_AS(saturating_operator(g, -1.0, -10.0, 10.0, 101),
                         doctest::Contains("invalid-k"), Error);
    for (double k : {0.5, 1.0, 2.0}) {
        SuperpositionField field = saturating_operator(g, k, -10.0, 10.0, 201);
        const ScalarPWL& s = field.slices[0];
        CHECK(s(0.0) == 1.0);
        // true max chord slope via dense finite differences
        double fd = 0.0;
        for (int i = 0; i < 5000; ++i) {
            double a = -10.0 + 20.0 * i / 5000.0;
            double b = a + 20.0 / 5000.0;
            fd = std::max(fd, std::abs(s(a) - s(b)) / (b - a));
        }
        CHECK(s.lip_constant() <= 1.0 / k + 1e-9);
        CHECK(fd <= s.lip_constant() * (1.0 + 1e-12));
        CHECK(s.lip_constant() >= 1.0 / k - 1e-3);
    }
}

TEST_CASE("tensor_to_superposition agrees with direct evaluation") {
    Rng rng(21);
    GridPtr g = make_interval_grid(-1.0, 1.0, 11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<GridFunction, ScalarPWL>> terms;
        for (int i = 0; i < 3; ++i) terms.emplace_back(random_function(rng, g), random_pwl(rng));
        TensorOperator t = make_tensor_operator(g, std::move(terms));
        SuperpositionField field = tensor_to_superposition(t);
        for (int k = 0; k < 100; ++k) {
            GridFunction f = random_function(rng, g);
            GridFunction a = eval(t, f);
            GridFunction b = eval(field, f);
            for (std::size_t w = 0; w < g->size(); ++w)
                CHECK(std::abs(a.values[w] - b.values[w]) <= 1e-10);
        }
    }
}

TEST_CASE("tensor_to_superposition unit coefficient copies the factor") {
    GridPtr g = make_interval_grid(0.0, 1.0, 4);
    ScalarPWL phi({0.0, 1.0}, {0.0, 2.0}, 1.0, -1.0);
    TensorOperator t = make_tensor_operator(g, {{constant_function(g, 1.0), phi}});
    SuperpositionField field = tensor_to_superposition(t);
    for (const auto& s : field.slices)
        for (double r : {-1.0, 0.2, 0.8, 3.0}) CHECK(s(r) == doctest::Approx(phi(r)));
}

TEST_CASE("tensor cancellation yields the zero field") {
    GridPtr g = make_interval_grid(0.0, 1.0, 4);
    ScalarPWL phi({0.0, 1.0}, {0.5, 2.0}, 1.0, -1.0);
    ScalarPWL neg({0.0, 1.0}, {-0.5, -2.0}, -1.0, 1.0);
    GridFunction f1 = constant_function(g, 1.0);
    TensorOperator t = make_tensor_operator(g, {{f1, phi}, {f1, neg}});
    SuperpositionField field = tensor_to_superposition(t);
    for (const auto& s : field.slices) CHECK(s.lip_constant() == 0.0);
}

TEST_CASE("sample_to_superposition interpolates multiplication samples") {
    GridPtr g = make_interval_grid(-1.0, 1.0, 21);
    GridFunction h = tabulate1(g, [](double w) { return w; });
    MultiplicationOperator mh = multiplication_operator(g, h);
    Rng rng(31);
    std::vector<std::pair<GridFunction, GridFunction>> samples;
    for (int i = 0; i < 4; ++i) {
        GridFunction f = random_function(rng, g);
        samples.emplace_back(f, eval(mh, f));
    }
    SampleOperator s = make_sample_operator(g, samples);
    GridFunction phi = tabulate1(g, [](double w) { return std::abs(w); });
    SuperpositionField field = sample_to_superposition(s, phi, 1e-9);
    for (std::size_t w = 0; w < g->size(); ++w)
        for (const auto& [f, Tf] : samples)
            CHECK(field.slices[w](f.values[w]) == doctest::Approx(Tf.values[w]).epsilon(1e-10));
}

TEST_CASE("sample_to_superposition single sample has exact slope") {
    GridPtr g = make_interval_grid(0.0, 1.0, 5);
    GridFunction f = constant_function(g, 2.0);
    SampleOperator s = make_sample_operator(g, {{f, constant_function(g, 3.0)}});
    GridFunction phi = tabulate1(g, [](double w) { return 1.0 + w; });
    SuperpositionField field = sample_to_superposition(s, phi, 1e-9);
    for (std::size_t w = 0; w < g->size(); ++w)
        CHECK(field.slices[w].lip_constant() == phi.values[w]);
}

TEST_CASE("sample_to_superposition rejects non-diagonal data") {
    GridPtr g = make_interval_grid(0.0, 1.0, 5);
    GridFunction g1 = constant_function(g, 0.0);
    GridFunction g2 = tabulate1(g, [](double w) { return w == 0.25 ? 0.0 : 2.0; });
    SampleOperator s = make_sample_operator(
        g, {{g1, constant_function(g, 0.0)}, {g2, constant_function(g, 5.0)}});
    try {
        sample_to_superposition(s, constant_function(g, 1.0), 1e-9);
        FAIL("expected ill-defined-at-point");
    } catch (const Error& e) {
        CHECK(e.code() == errc::ill_defined_at_point);
        CHECK(e.point() == std::size_t{1});
    }
    CHECK_THROWS_WITH_AS(sample_to_superposition(s, constant_function(g, -1.0), 1e-9),
                         doctest::Contains("negative-bound"), Error);
}

TEST_CASE("superposition slices obey their Lipschitz constants on constants") {
    Rng rng(41);
    GridPtr g = make_interval_grid(-1.0, 1.0, 7);
    for (int trial = 0; trial < 20; ++trial) {
        SuperpositionField field = llip::testing::random_field(rng, g);
        double r = uniform(rng, -6.0, 6.0);
        double s = uniform(rng, -6.0, 6.0);
        GridFunction a = eval(field, constant_function(g, r));
        GridFunction b = eval(field, constant_function(g, s));
        for (std::size_t w = 0; w < g->size(); ++w)
            CHECK(std::abs(a.values[w] - b.values[w]) <=
                  field.slices[w].lip_constant() * std::abs(r - s) * (1.0 + 1e-12));
    }
}
