#ifndef QCD_ERRORS_HPP
#define QCD_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "qcd/types.hpp"

namespace qcd {

// An iterative solver stopped without reaching the requested tolerance.
// Carries the residual it did achieve.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double achieved_residual)
        : std::runtime_error(what + " (achieved residual " +
                             std::to_string(achieved_residual) + ")"),
          residual_(achieved_residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Branch selection is ambiguous; both candidate values are reported.
class branch_error : public std::runtime_error {
public:
    branch_error(const std::string& what, complex a, complex b)
        : std::runtime_error(what + " (candidates " + format(a) + " and " +
                             format(b) + ")"),
          a_(a), b_(b) {}

    complex candidate_a() const noexcept { return a_; }
    complex candidate_b() const noexcept { return b_; }

private:
    static std::string format(complex v) {
        return std::to_string(v.real()) + (v.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(v.imag())) + "i";
    }
    complex a_, b_;
};

} // namespace qcd

#endif
