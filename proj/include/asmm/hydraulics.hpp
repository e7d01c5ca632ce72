#pragma once

// Single-rod hydraulic cylinder behind a proportional valve, with a
// position-tracking command loop.  The valve law meters flow by the square
// root of the pressure drop and gates each path on the command sign; chamber
// pressures integrate the continuity equation with the oil bulk modulus.
// States advance with a classical fourth-order Runge-Kutta step; the command
// is re-evaluated at every substage so the loop behaves as continuous control.

#include <stdexcept>
#include <string>

namespace asmm {

struct ChamberDegenerate : std::domain_error {
  double fill;  // offending chamber length
  explicit ChamberDegenerate(double fill_)
      : std::domain_error("hydraulic chamber collapsed: fill = " + std::to_string(fill_)),
        fill(fill_) {}
};

struct HydraulicParams {
  double bulk_modulus = 1.0e9;  // Pa
  double p_supply = 21.0e6;     // Pa
  double p_return = 0.1e6;      // Pa
  double area_a = 0;            // piston-side bore area, m^2
  double area_b = 0;            // rod-side annulus area, m^2
  double stroke = 0;            // chamber length, m
  double chamber_offset = 0;    // actuator coordinate of a centred piston, m
  double c_p1 = 0, c_p2 = 0;    // supply-path flow gains, m^3 s^-1 Pa^-1/2
  double c_n1 = 0, c_n2 = 0;    // return-path flow gains
  double x_eps = 1e-4;          // minimum admissible chamber fill, m
};

// 70 mm bore / 40 mm rod, 0.45 m stroke, gains sized for 40 L/min at a
// 3.5 MPa drop under full command.
HydraulicParams default_hydraulics();

struct HydraulicState {
  double x = 0, xd = 0;     // actuator coordinate and rate
  double p_a = 0, p_b = 0;  // chamber pressures
};

struct ValveFlows {
  double q_a = 0, q_b = 0;  // signed flow into each chamber, m^3/s
};

ValveFlows valve_flows(const HydraulicParams& par, double u, double p_a, double p_b);

struct PressureRates {
  double pa_dot = 0, pb_dot = 0;
};

// Continuity in both chambers; throws ChamberDegenerate when a fill drops
// below the guard.
PressureRates pressure_rates(const HydraulicParams& par, const HydraulicState& s,
                             const ValveFlows& q);

double piston_force(const HydraulicParams& par, const HydraulicState& s);

// Proportional tracking command, clamped to [-1, 1].
double track_command(double k_p, double x_ref, double x);

// Equivalent single-DOF plant the cylinder drives:
//   m_eq xdd = f_p - f_load - damping xd
struct ActuatorPlant {
  HydraulicParams par = default_hydraulics();
  double m_eq = 1000.0;     // reflected mechanism inertia, kg
  double damping = 1.0e5;   // seal and oil friction, N s/m
  double k_p = 10.0;        // command gain, 1/m
};

struct StepResult {
  HydraulicState next;
  double u = 0;         // command at the step start
  double f_p = 0;       // piston force at the step start
  bool clamped = false; // |raw command| exceeded 1 at some substage
  bool pressure_clamped = false;  // a chamber hit the return/supply rail
};

// One RK4 step of (x, xd, p_a, p_b) under constant x_ref and f_load.
StepResult hydraulic_step(const ActuatorPlant& plant, const HydraulicState& s, double x_ref,
                          double f_load, double dt);

// Pressures in static force balance with the load at the given position.
HydraulicState init_state(const HydraulicParams& par, double x0, double f_load);

}  // namespace asmm
