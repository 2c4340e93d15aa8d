// Recovery of the Pythagorean pair (b, a) from the symbol phi = b/a.
#pragma once

#include <vector>

#include "hblab/series.hpp"

namespace hblab {

/// Outer function a (with a(0) > 0) and b = a*phi, plus the scalar a(0).
struct PythagoreanPair {
    CoeffSeries a;
    CoeffSeries b;
    double a0 = 1.0;
    int grid_size = 0;  // boundary samples used for the construction
};

/// Sampling grid for boundary data: theta_m = 2*pi*(m + 1/2) / K.
/// The half-step offset keeps grid points away from the symbol's
/// boundary singularity for the built-in families.
double boundary_angle(int m, int grid_size);

/// Coefficients of the outer function with boundary modulus exp(logmod)
/// and positive value at the origin. logmod holds K samples taken at
/// boundary_angle(m, K); K must be a power of two with K >= 4*trunc.
CoeffSeries outer_from_log_modulus(const std::vector<double>& logmod, int trunc);

/// Analytic completion only: the series g with Re g = logmod on the
/// boundary and Im g(0) = 0, so that exp_series(g) is the outer function.
CoeffSeries analytic_completion(const std::vector<double>& logmod, int trunc);

/// log |phi(e^{i theta})|, evaluated per family in log space.
double log_abs_phi(const PhiSpec& spec, double theta);

/// Boundary angles where |phi| blows up (empty for UserRational).
std::vector<double> singular_angles(const PhiSpec& spec);

/// Unique Pythagorean pair with b/a = phi: a is the outer function with
/// |a| = (1+|phi|^2)^{-1/2} on the boundary, b = a*phi.
///
/// log|a| is split into a closed-form singular factor and a smooth
/// remainder; only the remainder goes through the sampled analytic
/// completion, so the recovered coefficients converge spectrally in the
/// grid size instead of stalling at the O(1/K) aliasing floor of raw
/// log-modulus samples.
PythagoreanPair pair_from_phi(const PhiSpec& spec, int grid_size, int trunc);

/// Horner evaluation of the materialized series at z.
Complex eval_series(const CoeffSeries& s, Complex z);

/// max over a boundary check grid of | |a|^2 (1 + |phi|^2) - 1 |, skipping
/// points within exclusion_halfwidth (radians) of a singular angle.
/// Uses the closed-form boundary modulus of phi, so it is meaningful even
/// where the Taylor tail of b converges slowly.
double boundary_identity_defect(const PythagoreanPair& pair, const PhiSpec& spec,
                                double exclusion_halfwidth, int check_points = 2048);

/// Same identity evaluated as |a|^2 + |b|^2 - 1 from the two stored
/// series; appropriate when both truncated series converge on the circle.
double boundary_identity_defect_series(const PythagoreanPair& pair, const PhiSpec& spec,
                                       double exclusion_halfwidth, int check_points = 2048);

}  // namespace hblab
