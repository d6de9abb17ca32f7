#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gme {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

}  // namespace gme
