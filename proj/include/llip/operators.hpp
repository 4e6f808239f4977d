#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "llip/grid.hpp"
#include "llip/pwl.hpp"

namespace llip {

/// Finite graph of an operator on a sample set S: pairs (g, Tg).
struct SampleOperator {
    GridPtr grid;
    std::vector<std::pair<GridFunction, GridFunction>> samples;  // (g, Tg)
};

/// Field w -> psi(w, .) with one Lip(R) slice per grid point; evaluates as
/// the superposition T(f)(w) = psi(w, f(w)).
struct SuperpositionField {
    GridPtr grid;
    std::vector<ScalarPWL> slices;
};

/// Finite tensor sum_i f_i (x) phi_i acting as f -> sum_i f_i(w)*phi_i(f(w)).
struct TensorOperator {
    GridPtr grid;
    std::vector<std::pair<GridFunction, ScalarPWL>> terms;  // (f_i, phi_i)
};

/// The linear prototype f -> h*f.
struct MultiplicationOperator {
    GridPtr grid;
    GridFunction h;
};

using OperatorRep =
    std::variant<SampleOperator, SuperpositionField, TensorOperator, MultiplicationOperator>;

const GridPtr& grid_of(const OperatorRep& op);

SampleOperator make_sample_operator(GridPtr grid,
                                    std::vector<std::pair<GridFunction, GridFunction>> samples);
SuperpositionField make_superposition_field(GridPtr grid, std::vector<ScalarPWL> slices);
TensorOperator make_tensor_operator(GridPtr grid,
                                    std::vector<std::pair<GridFunction, ScalarPWL>> terms);
MultiplicationOperator multiplication_operator(GridPtr grid, GridFunction h);

GridFunction eval(const SampleOperator& op, const GridFunction& f);
GridFunction eval(const SuperpositionField& op, const GridFunction& f);
GridFunction eval(const TensorOperator& op, const GridFunction& f);
GridFunction eval(const MultiplicationOperator& op, const GridFunction& f);
GridFunction eval(const OperatorRep& op, const GridFunction& f);

/// PWL interpolant of the saturation map r -> k/(k+|r|) as a constant field
/// over the grid. Breakpoints are graded geometrically towards the point of
/// [r_lo, r_hi] closest to 0, where the true slope 1/k is attained, so the
/// interpolant's Lipschitz constant stays within [1/k - O(h0/k^2), 1/k].
SuperpositionField saturating_operator(const GridPtr& grid, double k, double r_lo,
                                       double r_hi, std::size_t n_break);

/// Exact slice-wise identification of a tensor with a superposition field.
SuperpositionField tensor_to_superposition(const TensorOperator& t);

/// Per point w, the 1-d McShane extension of the scattered data
/// {(g_j(w), Tg_j(w))} with constant phi(w). Samples whose abscissas
/// coincide must agree to consistency_tol (the operator is diagonal at w);
/// coincident abscissas are merged by averaging.
SuperpositionField sample_to_superposition(const SampleOperator& s, const GridFunction& phi,
                                           double consistency_tol, double zero_tol = 1e-12);

}  // namespace llip
