#ifndef QCD_TYPES_HPP
#define QCD_TYPES_HPP

#include <complex>

namespace qcd {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Square root of z choosing the sign closest to a reference value.
// Used whenever a locally continuous branch is needed across the
// principal cut (finite differencing of two-valued lifts).
inline complex sqrt_near(complex z, complex ref) {
    const complex r = std::sqrt(z);
    return std::norm(r - ref) <= std::norm(-r - ref) ? r : -r;
}

} // namespace qcd

#endif
