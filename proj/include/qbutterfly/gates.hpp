// Copyright 2026 The qbutterfly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qbutterfly {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Single-qubit operator in the computational basis.
template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

/// Two-qubit operator; basis index = b0 + 2*b1 (first qubit is the low bit).
template <typename Scalar>
using Mat4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;

/// Single-qubit pure state (a0, a1).
template <typename Scalar>
using Amplitudes = Eigen::Matrix<Complex<Scalar>, 2, 1>;

template <typename Scalar>
using StateVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

enum class GateKind { X, Y, Z, H, CNOT, RX, RY };

/// A gate application request. `angle` is only meaningful for RX/RY.
struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;

  static constexpr Gate x() { return {GateKind::X, 0.0}; }
  static constexpr Gate y() { return {GateKind::Y, 0.0}; }
  static constexpr Gate z() { return {GateKind::Z, 0.0}; }
  static constexpr Gate h() { return {GateKind::H, 0.0}; }
  static constexpr Gate cnot() { return {GateKind::CNOT, 0.0}; }
  static constexpr Gate rx(double theta) { return {GateKind::RX, theta}; }
  static constexpr Gate ry(double theta) { return {GateKind::RY, theta}; }

  constexpr int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
};

inline std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
  }
  return "?";
}

template <typename Scalar>
Mat2<Scalar> pauli_x() {
  Mat2<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar>
Mat2<Scalar> pauli_y() {
  const Complex<Scalar> i(0, 1);
  Mat2<Scalar> m;
  m << Complex<Scalar>(0), -i, i, Complex<Scalar>(0);
  return m;
}

template <typename Scalar>
Mat2<Scalar> pauli_z() {
  Mat2<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

template <typename Scalar>
Mat2<Scalar> hadamard() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Mat2<Scalar> m;
  m << s, s, s, -s;
  return m;
}

// RX(theta) = exp(-i theta X / 2)
template <typename Scalar>
Mat2<Scalar> rx(Scalar theta) {
  const Scalar c = std::cos(theta / 2);
  const Scalar s = std::sin(theta / 2);
  const Complex<Scalar> mis(0, -s);
  Mat2<Scalar> m;
  m << Complex<Scalar>(c), mis, mis, Complex<Scalar>(c);
  return m;
}

// RY(theta) = exp(-i theta Y / 2)
template <typename Scalar>
Mat2<Scalar> ry(Scalar theta) {
  const Scalar c = std::cos(theta / 2);
  const Scalar s = std::sin(theta / 2);
  Mat2<Scalar> m;
  m << c, -s, s, c;
  return m;
}

/// CNOT with the first (low-bit) qubit as control.
template <typename Scalar>
Mat4<Scalar> cnot_matrix() {
  Mat4<Scalar> m = Mat4<Scalar>::Zero();
  m(0, 0) = 1;  // |00> -> |00>
  m(3, 1) = 1;  // control=1,target=0 -> control=1,target=1
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

/// Matrix of a single-qubit gate. Throws for CNOT.
template <typename Scalar>
Mat2<Scalar> single_qubit_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::X: return pauli_x<Scalar>();
    case GateKind::Y: return pauli_y<Scalar>();
    case GateKind::Z: return pauli_z<Scalar>();
    case GateKind::H: return hadamard<Scalar>();
    case GateKind::RX: return rx<Scalar>(static_cast<Scalar>(gate.angle));
    case GateKind::RY: return ry<Scalar>(static_cast<Scalar>(gate.angle));
    case GateKind::CNOT: break;
  }
  throw std::invalid_argument("single_qubit_matrix: CNOT is a two-qubit gate");
}

/// |<a|b>|^2 for single-qubit states.
template <typename Scalar>
Scalar overlap_probability(const Amplitudes<Scalar>& a, const Amplitudes<Scalar>& b) {
  return std::norm(a.dot(b));
}

template <typename Scalar>
Amplitudes<Scalar> basis_state(int bit) {
  Amplitudes<Scalar> v = Amplitudes<Scalar>::Zero();
  v(bit ? 1 : 0) = 1;
  return v;
}

template <typename Scalar>
Amplitudes<Scalar> plus_state() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Amplitudes<Scalar> v;
  v << s, s;
  return v;
}

}  // namespace qbutterfly
