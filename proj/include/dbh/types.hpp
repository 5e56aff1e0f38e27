#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dbh {

using Real = double;
using Complex = std::complex<double>;

using Operator = Eigen::MatrixXcd;   // dense operator on a truncated Fock space
using DensityMatrix = Eigen::MatrixXcd;
using StateVec = Eigen::VectorXcd;   // amplitude vector over a product Fock basis
using RealVec = Eigen::VectorXd;

// Error classes map onto distinct CLI exit codes.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dbh
