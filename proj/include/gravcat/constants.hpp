#ifndef GRAVCAT_CONSTANTS_HPP
#define GRAVCAT_CONSTANTS_HPP

namespace gravcat {

/// CODATA 2018 values, SI. Fixed here and never re-entered elsewhere.
struct PhysicalConstants {
    static constexpr double G    = 6.67430e-11;        // m^3 kg^-1 s^-2
    static constexpr double hbar = 1.054571817e-34;    // J s
    static constexpr double amu  = 1.66053906660e-27;  // kg
    static constexpr double kB   = 1.380649e-23;       // J/K
};

} // namespace gravcat

#endif
