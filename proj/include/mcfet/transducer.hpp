#pragma once

#include "mcfet/params.hpp"

namespace mcfet {

// Electrostatic quantities of the nanowire FET stage, all SI.
struct TransducerDerived {
    double lambda_D;   // Debye screening length in the electrolyte (m)
    double q_eff;      // screened charge per bound ligand (C)
    double C_dl;       // double-layer capacitance (F)
    double C_ox;       // total oxide capacitance (F)
    double C_nw;       // nanowire depletion capacitance (F)
    double C_eq;       // equivalent capacitance seen by bound charge (F)
    double C_ox_s;     // oxide capacitance per unit area (F/m^2)
    double lambda_nw;  // screening length inside the wire (m)
    double g_FET;      // transconductance (A/V)
    double psi_L;      // surface potential per bound ligand (V)
    double w_R;        // effective gate width, half circumference times two (m)
};

double debye_length(double eps_M, double c_ion, double T);

// Electron charge after exponential screening across the receptor layer.
double effective_charge(double l_SR, double lambda_D);

TransducerDerived capacitances(const TransducerParams& p);

double transconductance(const TransducerParams& p);

// Full derived set: screening, capacitances, transconductance, potential step.
TransducerDerived transducer_derived(const SystemParams& params);

// Mean receiver output current for a transmitted count Ntx.
double mean_output_current(const SystemParams& params, double Ntx);

}  // namespace mcfet
