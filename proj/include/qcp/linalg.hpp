// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// kron(a, b)(i*rb + k, j*cb + l) = a(i, j) * b(k, l)
Matrix kron(const Matrix& a, const Matrix& b);

// Max elementwise deviation from the conjugate transpose.
double hermiticity_defect(const Matrix& m);

// exp(i * scale * h) for Hermitian h, via eigendecomposition.
Matrix expi_hermitian(const Matrix& h, double scale);

// <psi| rho |psi>
double state_fidelity(const Matrix& rho, const Vector& psi);

}  // namespace qcp
