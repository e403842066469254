// bosim: shared aliases and the error type used across the library.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace bosim {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;

// All library failures throw Error. The category is a stable, machine-readable
// slug; the CLI prints it as the stderr prefix ("error: <category>: <what>").
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& msg)
        : std::runtime_error(msg), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

inline void require(bool cond, const char* category, const std::string& msg) {
    if (!cond) throw Error(category, msg);
}

} // namespace bosim
