#ifndef SPATREG_COMMON_HPP
#define SPATREG_COMMON_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace spatreg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Thrown on bad user input: files, schemas, dimensions, parameter ranges.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a numerical procedure cannot produce a result
/// (singular matrices, diverging optimizers, size caps).
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Process-wide cap on worker threads used by the parallel loops
/// (factor construction, prediction, pair enumeration). 0 = hardware default.
void set_max_workers(int workers);
int max_workers();

} // namespace spatreg

#endif
