#pragma once

#include <Eigen/Dense>

namespace qcorr {

// Eigenvalues of a symmetric real 3x3 matrix, ascending.
//
// Uses the trigonometric (Cardano-type) closed form. When the discriminant
// of the normalized characteristic cubic falls within 1e-14 of zero the
// roots are nearly degenerate and the closed form loses accuracy, so the
// routine falls back to Eigen's iterative solver.
Eigen::Vector3d sym3_eigenvalues(const Eigen::Matrix3d& a);

}  // namespace qcorr
