#pragma once

namespace maslov {

// Every numerical threshold used by the library lives here so that tests can
// tighten or loosen them in one place.
struct Tolerances {
  double unitary = 1e-10;          // ||U*U - I||_F for a UnitaryMatrix
  double unitary_drift = 1e-9;     // accepted drift of transported matrices
  double symmetric = 1e-10;        // ||M - M^T||_F for a SymmetricUnitary
  double min_singular = 0.5;       // unitarize precondition
  double branch_cut = 1e-8;        // eigenphase distance from +-pi for log
  double takagi = 1e-9;            // Takagi reconstruction residual
  double takagi_separation = 1e-10;
  double same_lagrangian = 1e-8;   // ||B(F) - B(G)||_F
  double intersection = 1e-7;      // eigenphase multiplicity at 0
  double transversality = 1e-7;    // lifted angle distance from 0 mod pi
  double winding_guard = 1.5707963267948966;  // max |d arg| per sample
  double winding_residual = 1e-9;
  double face_angle_guard = 1.5707963267948966;
  double skew_hermitian = 1e-10;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace maslov
