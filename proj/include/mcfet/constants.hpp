#pragma once

namespace mcfet {

// CODATA 2018 exact values. Fixed, not configurable.
struct PhysicalConstants {
    double q;     // elementary charge (C)
    double k_B;   // Boltzmann constant (J/K)
    double N_A;   // Avogadro number (1/mol)
    double eps0;  // vacuum permittivity (F/m)
};

inline constexpr PhysicalConstants phys{
    1.602176634e-19,
    1.380649e-23,
    6.02214076e23,
    8.8541878128e-12,
};

inline constexpr double pi = 3.14159265358979323846;

// 1 eV^-1 cm^-3 in 1/(J m^3)
inline constexpr double per_eV_cm3 = 1.0e6 / phys.q;

}  // namespace mcfet
