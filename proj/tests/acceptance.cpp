// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS/FAIL line. Exit status is the number of failures.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "llip/algebra.hpp"
#include "llip/bounds.hpp"
#include "llip/extension.hpp"
#include "llip/operators.hpp"
#include "test_util.hpp"

using namespace llip;
using llip::testing::Rng;
using llip::testing::random_field;
using llip::testing::random_function;
using llip::testing::random_pwl;
using llip::testing::uniform;

namespace {

struct Gate {
    int failures = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            std::cout << "PASS " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
        }
    }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// --- criterion 1: piecewise step envelope ---------------------------------

void step_example() {
    double t0 = now_seconds();
    GridPtr grid = make_interval_grid(0.0, 1.0, 401);
    GridFunction g = constant_function(grid, 0.0);
    GridFunction f = tabulate1(grid, [](double w) {
        if (w < 0.25) return 0.25 - w;
        if (w < 0.75) return 0.0;
        return w - 0.75;
    });
    GridFunction Tf = tabulate1(grid, [](double w) {
        if (w < 0.25) return 0.5 - 2.0 * w;
        if (w < 0.75) return 0.0;
        return w - 0.75;
    });
    SampleOperator s = make_sample_operator(grid, {{f, Tf}, {g, g}});
    BoundReport rep = minimal_envelope(s);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        double w = grid->point(i)[0];
        double want = w < 0.25 ? 2.0 : (w <= 0.75 ? 0.0 : 1.0);
        require(rep.phi.values[i] == want, "envelope value off at w=" + std::to_string(w));
    }
    require(rep.continuity.is_flagged_discontinuous, "discontinuity not flagged");
    bool near_q1 = false, near_q3 = false;
    for (auto [i, j] : rep.continuity.flagged_pairs) {
        double w = 0.5 * (grid->point(i)[0] + grid->point(j)[0]);
        if (std::abs(w - 0.25) < 0.01) near_q1 = true;
        if (std::abs(w - 0.75) < 0.01) near_q3 = true;
    }
    require(near_q1 && near_q3, "flagged pairs miss a jump location");
    require(now_seconds() - t0 < 1.0, "runtime >= 1s");
}

// --- criteria 2 & 3: extension failure and repair -------------------------

SampleOperator half_ramp(const GridPtr& grid) {
    GridFunction zero = constant_function(grid, 0.0);
    GridFunction id = tabulate1(grid, [](double w) { return w; });
    GridFunction Tid = tabulate1(grid, [](double w) { return w >= 0.0 ? w : 0.0; });
    return make_sample_operator(grid, {{id, Tid}, {zero, zero}});
}

void extension_failure() {
    double t0 = now_seconds();
    GridPtr grid = make_interval_grid(-1.0, 1.0, 401);
    GridFunction phi = tabulate1(grid, [](double w) { return w >= 0.0 ? 1.0 : 0.0; });
    ExtensionSpec spec{ExtensionMethod::mcshane, phi, half_ramp(grid)};
    GridFunction one = constant_function(grid, 1.0);
    ExtensionDiagnostics diag = extend_and_diagnose(spec, one);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        double w = grid->point(i)[0];
        double want = w >= 0.0 ? 2.0 * w - 1.0 : 0.0;
        require(std::abs(diag.extension.values[i] - want) <= 1e-12,
                "extension value off at w=" + std::to_string(w));
    }
    require(diag.continuity.is_flagged_discontinuous, "discontinuity not flagged");
    double w0 = grid->point(diag.continuity.worst_pair.second)[0];
    require(std::abs(w0) <= 0.01, "worst pair not at the jump");
    require(now_seconds() - t0 < 1.0, "runtime >= 1s");
}

void extension_repair() {
    GridPtr grid = make_interval_grid(-1.0, 1.0, 401);
    GridFunction phi = tabulate1(grid, [](double w) { return w >= 0.0 ? 1.0 : 1.0 + w; });
    ExtensionSpec spec{ExtensionMethod::mcshane, phi, half_ramp(grid)};
    GridFunction one = constant_function(grid, 1.0);
    ExtensionDiagnostics diag = extend_and_diagnose(spec, one);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        double w = grid->point(i)[0];
        double want = w >= 0.0 ? 2.0 * w - 1.0 : -1.0 - w;
        require(std::abs(diag.extension.values[i] - want) <= 1e-12,
                "extension value off at w=" + std::to_string(w));
    }
    require(!diag.continuity.is_flagged_discontinuous, "continuous extension flagged");
    require(diag.bound.max_violation <= 1e-12, "augmented bound violated");
}

// --- criterion 4: extension property suite --------------------------------

void extension_properties() {
    Rng rng(1004);
    const std::array<ExtensionMethod, 3> methods{
        ExtensionMethod::mcshane, ExtensionMethod::midpoint, ExtensionMethod::whitney};
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 51 + rng() % 351;
        GridPtr grid = make_interval_grid(-1.0, 1.0, n);
        SuperpositionField truth = random_field(rng, grid);
        std::size_t n_samples = 3 + rng() % 8;
        std::vector<std::pair<GridFunction, GridFunction>> samples;
        for (std::size_t i = 0; i < n_samples; ++i) {
            GridFunction g = random_function(rng, grid);
            samples.emplace_back(g, eval(truth, g));
        }
        SampleOperator s;
        try {
            s = make_sample_operator(grid, samples);
        } catch (const Error&) {
            continue;  // duplicate random draw
        }
        GridFunction phi = tabulate(grid, [&](const std::vector<double>&) { return 0.0; });
        for (std::size_t w = 0; w < grid->size(); ++w)
            phi.values[w] = truth.slices[w].lip_constant();

        for (ExtensionMethod m : methods) {
            ExtensionSpec spec{m, phi, s};
            for (const auto& [g, Tg] : s.samples)
                require(extend(spec, g).values == Tg.values,
                        "extension does not reproduce a sample exactly");
        }
        GridFunction probe = random_function(rng, grid);
        GridFunction lo = extend({ExtensionMethod::mcshane, phi, s}, probe);
        GridFunction mid = extend({ExtensionMethod::midpoint, phi, s}, probe);
        GridFunction hi = extend({ExtensionMethod::whitney, phi, s}, probe);
        for (std::size_t w = 0; w < grid->size(); ++w)
            require(lo.values[w] <= mid.values[w] + 1e-14 &&
                        mid.values[w] <= hi.values[w] + 1e-14,
                    "mcshane <= midpoint <= whitney violated");
        // bound preservation over random probe pairs, per method
        for (int pair = 0; pair < 50; ++pair) {
            GridFunction f1 = random_function(rng, grid);
            GridFunction f2 = random_function(rng, grid);
            for (ExtensionMethod m : methods) {
                ExtensionSpec spec{m, phi, s};
                GridFunction a = extend(spec, f1);
                GridFunction b = extend(spec, f2);
                for (std::size_t w = 0; w < grid->size(); ++w) {
                    double resid = std::abs(a.values[w] - b.values[w]) -
                                   phi.values[w] * std::abs(f1.values[w] - f2.values[w]);
                    require(resid <= 1e-9, "bound preservation residual > 1e-9");
                }
            }
        }
    }
}

// --- criterion 5: norm identity witness -----------------------------------

void norm_identity() {
    Rng rng(1005);
    GridPtr grid = make_interval_grid(-1.0, 1.0, 11);
    for (int trial = 0; trial < 100; ++trial) {
        SuperpositionField field = random_field(rng, grid);
        OperatorRep op{field};
        double norm = llip_norm(op);
        auto [r, s] = witness_probe(field);
        std::vector<std::pair<GridFunction, GridFunction>> witness{
            {constant_function(grid, r), constant_function(grid, s)}};
        double est = lip_norm_estimate(op, witness);
        require(std::abs(est - norm) <= 1e-9 * std::max(1.0, norm),
                "witness probe misses the norm");
        std::vector<std::pair<GridFunction, GridFunction>> probes;
        for (int k = 0; k < 20; ++k) {
            GridFunction f1 = random_function(rng, grid);
            GridFunction f2 = random_function(rng, grid);
            double diff = 0.0;
            for (std::size_t w = 0; w < f1.size(); ++w)
                diff = std::max(diff, std::abs(f1.values[w] - f2.values[w]));
            if (diff > 0.0) probes.emplace_back(f1, f2);
        }
        require(lip_norm_estimate(op, probes) <= norm * (1.0 + 1e-12),
                "estimate exceeds llip_norm");
    }
}

// --- criterion 6: example-operator bounds ---------------------------------

void example_operator_bounds() {
    GridPtr grid = make_interval_grid(-1.0, 1.0, 101);
    GridFunction h = tabulate1(grid, [](double w) { return std::sin(5.0 * w) - 0.3; });
    double norm = llip_norm(OperatorRep{multiplication_operator(grid, h)});
    require(norm == sup_norm(h), "multiplication norm is not max|h|");

    for (double k : {0.5, 1.0, 2.0}) {
        SuperpositionField tk = saturating_operator(grid, k, -10.0, 10.0, 201);
        double n = llip_norm(OperatorRep{tk});
        require(n <= 1.0 / k + 1e-9, "saturating norm above 1/k");
        require(n >= 1.0 / k - 1e-3, "saturating norm not tight at r=0");
    }
}

// --- criterion 7: algebra suite -------------------------------------------

void algebra_suite() {
    Rng rng(1007);
    GridPtr grid = make_interval_grid(-1.0, 1.0, 7);
    SuperpositionField id = identity_field(grid);
    for (int trial = 0; trial < 1000; ++trial) {
        SuperpositionField a = random_field(rng, grid);
        SuperpositionField b = random_field(rng, grid);
        SuperpositionField ab = compose(a, b);
        for (int k = 0; k < 100; ++k) {
            GridFunction f = random_function(rng, grid);
            GridFunction want = eval(a, eval(b, f));
            GridFunction got = eval(ab, f);
            for (std::size_t w = 0; w < grid->size(); ++w)
                require(std::abs(got.values[w] - want.values[w]) <= 1e-10,
                        "compose disagrees with two-step eval");
        }
        SubmultReport sub = submultiplicativity_check(a, b);
        require(sub.pointwise_ok && sub.global_ok, "submultiplicativity fails");
        if (trial % 100 == 0) {
            GridFunction f = random_function(rng, grid);
            GridFunction u = eval(compose(id, a), f);
            GridFunction v = eval(compose(a, id), f);
            GridFunction w0 = eval(a, f);
            for (std::size_t w = 0; w < grid->size(); ++w)
                require(std::abs(u.values[w] - w0.values[w]) <= 1e-12 &&
                            std::abs(v.values[w] - w0.values[w]) <= 1e-12,
                        "identity is not a unit");
        }
    }
    // stored non-commuting pair: |.| and (.+1)
    ScalarPWL abs_pwl({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, -1.0, 1.0);
    ScalarPWL shift({0.0}, {1.0}, 1.0, 1.0);
    SuperpositionField a{grid, std::vector<ScalarPWL>(grid->size(), abs_pwl)};
    SuperpositionField b{grid, std::vector<ScalarPWL>(grid->size(), shift)};
    GridFunction f = constant_function(grid, -1.0);
    double gap = std::abs(eval(compose(a, b), f).values[0] -
                          eval(compose(b, a), f).values[0]);
    require(gap >= 0.1, "non-commutativity witness too small");
}

// --- criterion 8: tensor identification -----------------------------------

void tensor_identification() {
    Rng rng(1008);
    GridPtr grid = make_interval_grid(-1.0, 1.0, 11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<GridFunction, ScalarPWL>> terms;
        std::size_t n_terms = 1 + rng() % 4;
        for (std::size_t i = 0; i < n_terms; ++i)
            terms.emplace_back(random_function(rng, grid), random_pwl(rng));
        TensorOperator t = make_tensor_operator(grid, terms);
        double norm = llip_norm(OperatorRep{t});

        // exact slice slopes, computed independently of tensor_to_superposition
        double exact = 0.0;
        for (std::size_t w = 0; w < grid->size(); ++w) {
            std::vector<ScalarPWL> parts;
            std::vector<double> coeffs;
            for (const auto& [fi, phii] : terms) {
                parts.push_back(phii);
                coeffs.push_back(fi.values[w]);
            }
            exact = std::max(exact, weighted_sum(parts, coeffs).lip_constant());
        }
        require(std::abs(norm - exact) <= 1e-12 * std::max(1.0, exact),
                "norm differs from exact slice slopes");

        // finite-difference oracle on ~1e4 probes including all breakpoints
        double fd = 0.0;
        std::vector<double> probes;
        for (const auto& [fi, phii] : terms)
            probes.insert(probes.end(), phii.breakpoints().begin(), phii.breakpoints().end());
        for (int k = 0; k <= 10000; ++k) probes.push_back(-8.0 + 16.0 * k / 10000.0);
        std::sort(probes.begin(), probes.end());
        for (std::size_t w = 0; w < grid->size(); ++w) {
            auto direct = [&](double r) {
                double s = 0.0;
                for (const auto& [fi, phii] : terms) s += fi.values[w] * phii(r);
                return s;
            };
            for (std::size_t k = 0; k + 1 < probes.size(); ++k) {
                double dr = probes[k + 1] - probes[k];
                if (dr < 1e-10) continue;
                fd = std::max(fd, std::abs(direct(probes[k + 1]) - direct(probes[k])) / dr);
            }
        }
        require(std::abs(fd - norm) <= 1e-6 * std::max(1.0, norm),
                "finite-difference oracle disagrees");
    }
}

// --- criterion 9: well-definedness rejection ------------------------------

void well_definedness() {
    Rng rng(1009);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 5 + rng() % 20;
        GridPtr grid = make_interval_grid(0.0, 1.0, n);
        std::size_t w0 = rng() % n;
        GridFunction g1 = random_function(rng, grid);
        GridFunction g2 = g1;
        for (std::size_t w = 0; w < n; ++w)
            if (w != w0) g2.values[w] += 1.0 + uniform(rng, 0.0, 1.0);
        GridFunction T1 = random_function(rng, grid);
        GridFunction T2 = T1;
        T2.values[w0] += 1e-3;  // far above consistency_tol
        SampleOperator s = make_sample_operator(grid, {{g1, T1}, {g2, T2}});
        try {
            sample_to_superposition(s, constant_function(grid, 10.0), 1e-9);
            require(false, "inconsistent data accepted");
        } catch (const Error& e) {
            require(e.code() == errc::ill_defined_at_point, "wrong error code");
            require(e.point() == w0, "wrong point reported");
        }
    }
}

// --- criterion 10: CLI determinism ----------------------------------------

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(LLIP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "failed to launch CLI");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {status, out};
}

void cli_determinism() {
    auto [s1, out1] = run_cli("selftest");
    auto [s2, out2] = run_cli("selftest");
    require(s1 == 0 && s2 == 0, "selftest exited nonzero");
    require(!out1.empty(), "selftest produced no output");
    require(out1 == out2, "stdout differs between runs");
}

}  // namespace

int main() {
    Gate gate;
    gate.run("criterion-01 step-example envelope exact and flagged", step_example);
    gate.run("criterion-02 extension failure case reproduced", extension_failure);
    gate.run("criterion-03 extension repaired case reproduced", extension_repair);
    gate.run("criterion-04 extension property suite", extension_properties);
    gate.run("criterion-05 norm identity witness probes", norm_identity);
    gate.run("criterion-06 example-operator norm bounds", example_operator_bounds);
    gate.run("criterion-07 composition algebra suite", algebra_suite);
    gate.run("criterion-08 tensor identification", tensor_identification);
    gate.run("criterion-09 well-definedness rejection", well_definedness);
    gate.run("criterion-10 deterministic selftest output", cli_determinism);
    if (gate.failures == 0) std::cout << "all criteria passed\n";
    return gate.failures;
}
