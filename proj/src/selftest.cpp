#include "llip/selftest.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "llip/algebra.hpp"
#include "llip/bounds.hpp"
#include "llip/extension.hpp"
#include "llip/operators.hpp"

namespace llip {

namespace {

struct Runner {
    std::ostream& out;
    int failures = 0;

    void run(const char* name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception&) {
            ok = false;
        }
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

// The two-sample operator on [0,1] whose minimal bound is the piecewise
// 2/0/1 step function.
SampleOperator step_bound_operator(const GridPtr& grid) {
    GridFunction g = constant_function(grid, 0.0);
    GridFunction f = tabulate1(grid, [](double w) {
        if (w < 0.25) return 0.25 - w;
        if (w < 0.75) return 0.0;
        return w - 0.75;
    });
    GridFunction Tg = constant_function(grid, 0.0);
    GridFunction Tf = tabulate1(grid, [](double w) {
        if (w < 0.25) return 0.5 - 2.0 * w;
        if (w < 0.75) return 0.0;
        return w - 0.75;
    });
    return make_sample_operator(grid, {{f, Tf}, {g, Tg}});
}

// S = {0, Id} on [-1,1] with T(0) = 0 and T(Id) = Id on [0,1], 0 elsewhere.
SampleOperator half_ramp_operator(const GridPtr& grid) {
    GridFunction zero = constant_function(grid, 0.0);
    GridFunction id = tabulate1(grid, [](double w) { return w; });
    GridFunction Tid = tabulate1(grid, [](double w) { return w >= 0.0 ? w : 0.0; });
    return make_sample_operator(grid, {{zero, zero}, {id, Tid}});
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int run_selftest(std::ostream& out) {
    Runner r{out};

    r.run("minimal-envelope-step", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 401);
        BoundReport rep = minimal_envelope(step_bound_operator(grid));
        for (std::size_t i = 0; i < grid->size(); ++i) {
            double w = grid->point(i)[0];
            double expect = w < 0.25 ? 2.0 : (w <= 0.75 ? 0.0 : 1.0);
            if (rep.phi.values[i] != expect) return false;
        }
        if (!rep.continuity.is_flagged_discontinuous) return false;
        bool near_q1 = false, near_q3 = false;
        for (const auto& [a, b] : rep.continuity.flagged_pairs) {
            double mid = 0.5 * (grid->point(a)[0] + grid->point(b)[0]);
            if (std::abs(mid - 0.25) < 0.01) near_q1 = true;
            if (std::abs(mid - 0.75) < 0.01) near_q3 = true;
        }
        return near_q1 && near_q3;
    });

    r.run("constant-bound-step", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 401);
        BoundReport rep = constant_bound(step_bound_operator(grid));
        for (double v : rep.phi.values)
            if (v != 2.0) return false;
        return !rep.continuity.is_flagged_discontinuous;
    });

    r.run("verify-step-with-2", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 401);
        BoundReport rep =
            verify_bound(step_bound_operator(grid), constant_function(grid, 2.0));
        return rep.max_violation == 0.0;
    });

    r.run("verify-step-with-half", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 401);
        BoundReport rep =
            verify_bound(step_bound_operator(grid), constant_function(grid, 0.5));
        // max of (1/2 - 2w) - (1/8 - w/2) attained at w = 0.
        return near(rep.max_violation, 0.375, 1e-12);
    });

    r.run("extension-discontinuous-bound", [] {
        GridPtr grid = make_interval_grid(-1.0, 1.0, 401);
        ExtensionSpec spec{ExtensionMethod::mcshane,
                           tabulate1(grid, [](double w) { return w >= 0.0 ? 1.0 : 0.0; }),
                           half_ramp_operator(grid)};
        auto diag = extend_and_diagnose(spec, constant_function(grid, 1.0));
        for (std::size_t i = 0; i < grid->size(); ++i) {
            double w = grid->point(i)[0];
            double expect = w < 0.0 ? 0.0 : 2.0 * w - 1.0;
            if (!near(diag.extension.values[i], expect, 1e-12)) return false;
        }
        if (!diag.continuity.is_flagged_discontinuous) return false;
        double jump = 0.5 * (grid->point(diag.continuity.worst_pair.first)[0] +
                             grid->point(diag.continuity.worst_pair.second)[0]);
        return std::abs(jump) < 0.01;
    });

    r.run("extension-repaired-bound", [] {
        GridPtr grid = make_interval_grid(-1.0, 1.0, 401);
        ExtensionSpec spec{ExtensionMethod::mcshane,
                           tabulate1(grid, [](double w) { return w < 0.0 ? 1.0 + w : 1.0; }),
                           half_ramp_operator(grid)};
        auto diag = extend_and_diagnose(spec, constant_function(grid, 1.0));
        for (std::size_t i = 0; i < grid->size(); ++i) {
            double w = grid->point(i)[0];
            double expect = w < 0.0 ? -1.0 - w : 2.0 * w - 1.0;
            if (!near(diag.extension.values[i], expect, 1e-12)) return false;
        }
        return !diag.continuity.is_flagged_discontinuous &&
               diag.bound.max_violation <= 1e-12;
    });

    r.run("saturating-operator-values", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 5);
        SuperpositionField t1 = saturating_operator(grid, 1.0, -10.0, 10.0, 201);
        if (t1.slices[0](0.0) != 1.0) return false;
        for (double rr : {-9.5, -1.0, 0.5, 3.0, 9.9}) {
            double v = t1.slices[0](rr);
            if (!(v > 0.0 && v <= 1.0)) return false;
        }
        SuperpositionField t2 = saturating_operator(grid, 2.0, -10.0, 10.0, 201);
        return t2.slices[0].lip_constant() <= 0.5 + 1e-9;
    });

    r.run("multiplication-operator-bound", [] {
        GridPtr grid = make_interval_grid(-1.0, 1.0, 101);
        GridFunction h = tabulate1(grid, [](double w) { return w; });
        OperatorRep op = multiplication_operator(grid, h);
        GridFunction f = constant_function(grid, 2.0);
        GridFunction g = constant_function(grid, -1.0);
        GridFunction ratio = ratio_function(op, f, g);
        for (std::size_t i = 0; i < grid->size(); ++i)
            if (!near(ratio.values[i], std::abs(h.values[i]), 1e-15)) return false;
        return llip_norm(op) == 1.0;
    });

    r.run("identity-field-unit", [] {
        GridPtr grid = make_interval_grid(-1.0, 1.0, 11);
        SuperpositionField id = identity_field(grid);
        GridFunction f = tabulate1(grid, [](double w) { return std::sin(3.0 * w); });
        GridFunction g = eval(id, f);
        return g.values == f.values && llip_norm(OperatorRep{id}) == 1.0;
    });

    r.run("diagonality-rejection", [] {
        GridPtr grid = make_interval_grid(0.0, 1.0, 5);
        GridFunction g1 = constant_function(grid, 0.0);
        GridFunction g2 = tabulate1(grid, [](double w) { return w == 0.5 ? 0.0 : 1.0; });
        GridFunction Tg1 = constant_function(grid, 0.0);
        GridFunction Tg2 = constant_function(grid, 1.0);
        SampleOperator s = make_sample_operator(grid, {{g1, Tg1}, {g2, Tg2}});
        try {
            sample_to_superposition(s, constant_function(grid, 1.0), 1e-9);
        } catch (const Error& e) {
            return e.code() == errc::ill_defined_at_point && e.point() == std::size_t{2};
        }
        return false;
    });

    r.run("tensor-superposition-agreement", [] {
        GridPtr grid = make_interval_grid(-1.0, 1.0, 11);
        GridFunction f1 = constant_function(grid, 1.0);
        ScalarPWL abs_pwl({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, -1.0, 1.0);
        TensorOperator t = make_tensor_operator(grid, {{f1, abs_pwl}});
        SuperpositionField field = tensor_to_superposition(t);
        GridFunction f = tabulate1(grid, [](double w) { return w; });
        GridFunction a = eval(t, f);
        GridFunction b = eval(field, f);
        for (std::size_t i = 0; i < grid->size(); ++i)
            if (!near(a.values[i], b.values[i], 1e-10)) return false;
        return near(a.values[0], 1.0, 1e-15) && near(b.values[5], 0.0, 1e-15);
    });

    return r.failures;
}

}  // namespace llip
