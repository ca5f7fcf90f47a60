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

// Pure-state qubit registry. Qubits are grouped into clusters; each cluster
// owns a dense amplitude vector over its members and clusters only merge when
// a two-qubit gate couples them, so K independent Bell pairs cost K vectors of
// 4 amplitudes rather than one of 4^K.
//
// Member j of a cluster is bit j of the amplitude index.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qbutterfly/gates.hpp"

namespace qbutterfly {

class QStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Opaque qubit handle. Ids are never reused, so a consumed id stays invalid.
struct QubitId {
  std::uint64_t value = 0;
  auto operator<=>(const QubitId&) const = default;
};

/// Opaque owner tag used for per-holder qubit accounting (network nodes).
using Holder = std::uint32_t;
inline constexpr Holder kNoHolder = std::numeric_limits<Holder>::max();

enum class NoiseModel {
  /// One Bernoulli(p) draw per gate application; when it fires, every target
  /// receives an independent uniformly random Pauli.
  kPerGate,
  /// One Bernoulli(p) draw per target qubit.
  kPerTarget,
};

inline constexpr double kNormTolerance = 1e-9;

template <typename Scalar>
class BasicStateRegistry {
 public:
  using Cplx = Complex<Scalar>;
  using Vector = StateVector<Scalar>;
  using State1 = Amplitudes<Scalar>;

  BasicStateRegistry(double noise_prob, std::uint64_t seed,
                     NoiseModel model = NoiseModel::kPerGate)
      : noise_prob_(noise_prob), seed_(seed), model_(model), rng_(seed) {
    if (!(noise_prob >= 0.0 && noise_prob <= 1.0)) {
      throw QStateError("noise probability must lie in [0, 1], got " +
                        std::to_string(noise_prob));
    }
  }

  BasicStateRegistry(const BasicStateRegistry&) = delete;
  BasicStateRegistry& operator=(const BasicStateRegistry&) = delete;
  BasicStateRegistry(BasicStateRegistry&&) noexcept = default;
  BasicStateRegistry& operator=(BasicStateRegistry&&) noexcept = default;

  QubitId alloc_qubit(const State1& amplitudes, Holder holder = kNoHolder) {
    const Scalar norm2 = amplitudes.squaredNorm();
    if (!(std::abs(norm2 - Scalar(1)) <= Scalar(kNormTolerance))) {
      throw QStateError("alloc_qubit: amplitudes are not normalized");
    }
    const QubitId id{next_qubit_++};
    const std::uint64_t cid = next_cluster_++;
    Cluster& c = clusters_[cid];
    c.members.push_back(id.value);
    c.amps = amplitudes;
    live_.emplace(id.value, Slot{cid, holder});
    ++alloc_counter_;
    peak_alloc_ = std::max(peak_alloc_, live_.size());
    holder_gain(holder);
    note_dimension(c);
    return id;
  }

  QubitId alloc_qubit(Cplx a0, Cplx a1, Holder holder = kNoHolder) {
    State1 v;
    v << a0, a1;
    return alloc_qubit(v, holder);
  }

  void apply_gate(const Gate& gate, std::span<const QubitId> targets) {
    if (static_cast<int>(targets.size()) != gate.arity()) {
      throw QStateError("apply_gate: " + to_string(gate.kind) + " expects " +
                        std::to_string(gate.arity()) + " target(s), got " +
                        std::to_string(targets.size()));
    }
    if ((gate.kind == GateKind::RX || gate.kind == GateKind::RY) &&
        !std::isfinite(gate.angle)) {
      throw QStateError("apply_gate: rotation angle must be finite");
    }
    for (const QubitId q : targets) require_live(q, "apply_gate");
    if (gate.kind == GateKind::CNOT) {
      if (targets[0] == targets[1]) {
        throw QStateError("apply_gate: CNOT control and target must differ");
      }
      apply_cnot_unitary(targets[0], targets[1]);
    } else {
      apply_single_unitary(single_qubit_matrix<Scalar>(gate), targets[0]);
    }
    inject_noise(targets);
  }

  void apply_gate(const Gate& gate, QubitId q) {
    if (gate.arity() != 1) {
      throw QStateError("apply_gate: " + to_string(gate.kind) + " needs two targets");
    }
    const std::array<QubitId, 1> t{q};
    apply_gate(gate, t);
  }

  void apply_gate(const Gate& gate, QubitId control, QubitId target) {
    const std::array<QubitId, 2> t{control, target};
    apply_gate(gate, t);
  }

  /// (|00> + |11>)/sqrt(2) built from two fresh |0> qubits with H and CNOT,
  /// so the noise hook sees both gates.
  std::pair<QubitId, QubitId> create_bell_pair(Holder holder = kNoHolder) {
    const QubitId a = alloc_qubit(basis_state<Scalar>(0), holder);
    const QubitId b = alloc_qubit(basis_state<Scalar>(0), holder);
    apply_gate(Gate::h(), a);
    apply_gate(Gate::cnot(), a, b);
    return {a, b};
  }

  int measure(QubitId q) {
    require_live(q, "measure");
    const std::uint64_t cid = live_.at(q.value).cluster;
    Cluster& c = clusters_.at(cid);
    const int pos = position_of(c, q.value);
    const std::size_t mask = std::size_t{1} << pos;
    Scalar p1 = 0;
    for (Eigen::Index i = 0; i < c.amps.size(); ++i) {
      if (static_cast<std::size_t>(i) & mask) p1 += std::norm(c.amps(i));
    }
    const int bit = uniform() < static_cast<double>(p1) ? 1 : 0;
    remove_member(cid, pos, bit);
    consume(q);
    return bit;
  }

  /// Bell-basis measurement equivalent to CNOT(q1->q2), H(q1), measure q1,
  /// measure q2. Returns (b1, b2); both qubits are consumed.
  std::pair<int, int> bell_measure(QubitId q1, QubitId q2) {
    require_live(q1, "bell_measure");
    require_live(q2, "bell_measure");
    if (q1 == q2) throw QStateError("bell_measure: qubits must be distinct");
    const std::uint64_t c1 = live_.at(q1.value).cluster;
    const std::uint64_t c2 = live_.at(q2.value).cluster;
    if (c1 == c2) {
      apply_gate(Gate::cnot(), q1, q2);
      apply_gate(Gate::h(), q1);
      const int b1 = measure(q1);
      const int b2 = measure(q2);
      return {b1, b2};
    }
    return fused_bell_measure(q1, q2, c1, c2);
  }

  /// <ref| rho_q |ref> on the reduced state of q; equals |<ref|q>|^2 when q is
  /// unentangled. Non-destructive.
  Scalar fidelity(QubitId q, const State1& reference) const {
    require_live(q, "fidelity");
    if (!(std::abs(reference.squaredNorm() - Scalar(1)) <= Scalar(kNormTolerance))) {
      throw QStateError("fidelity: reference state is not normalized");
    }
    const Mat2<Scalar> rho = reduced_density(q);
    Cplx f(0);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) f += std::conj(reference(r)) * rho(r, c) * reference(c);
    }
    return std::clamp(std::real(f), Scalar(0), Scalar(1));
  }

  Mat2<Scalar> reduced_density(QubitId q) const {
    require_live(q, "reduced_density");
    const Cluster& c = clusters_.at(live_.at(q.value).cluster);
    const std::size_t mask = std::size_t{1} << position_of(c, q.value);
    Mat2<Scalar> rho = Mat2<Scalar>::Zero();
    for (Eigen::Index i = 0; i < c.amps.size(); ++i) {
      if (static_cast<std::size_t>(i) & mask) continue;
      const Cplx a0 = c.amps(i);
      const Cplx a1 = c.amps(static_cast<Eigen::Index>(static_cast<std::size_t>(i) | mask));
      rho(0, 0) += a0 * std::conj(a0);
      rho(0, 1) += a0 * std::conj(a1);
      rho(1, 0) += a1 * std::conj(a0);
      rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
  }

  /// Traces q out of its cluster and consumes the handle. A separable qubit is
  /// dropped from the amplitude vector; an entangled one stays behind as a
  /// dead coordinate so partners keep their exact reduced state.
  void release(QubitId q) {
    require_live(q, "release");
    const std::uint64_t cid = live_.at(q.value).cluster;
    Cluster& c = clusters_.at(cid);
    const int pos = position_of(c, q.value);
    const Mat2<Scalar> rho = reduced_density(q);
    const Scalar purity = std::real((rho * rho).trace());
    if (std::abs(purity - Scalar(1)) <= Scalar(1e-12)) {
      const int k = std::real(rho(0, 0)) >= std::real(rho(1, 1)) ? 0 : 1;
      State1 phi = rho.col(k);
      phi.normalize();
      project_out(cid, pos, phi);
    }
    consume(q);
    collect_if_dead(cid);
  }

  bool is_live(QubitId q) const { return live_.contains(q.value); }
  std::size_t live_count() const { return live_.size(); }
  std::size_t peak_alloc() const { return peak_alloc_; }
  std::size_t alloc_counter() const { return alloc_counter_; }
  std::size_t cluster_count() const { return clusters_.size(); }
  std::size_t noise_events() const { return noise_events_; }
  double noise_prob() const { return noise_prob_; }
  std::uint64_t seed() const { return seed_; }
  NoiseModel noise_model() const { return model_; }

  /// Largest amplitude-vector length any cluster has reached.
  std::size_t max_cluster_dimension() const { return max_dimension_; }

  std::size_t cluster_dimension(QubitId q) const {
    require_live(q, "cluster_dimension");
    return static_cast<std::size_t>(clusters_.at(live_.at(q.value).cluster).amps.size());
  }

  bool same_cluster(QubitId a, QubitId b) const {
    require_live(a, "same_cluster");
    require_live(b, "same_cluster");
    return live_.at(a.value).cluster == live_.at(b.value).cluster;
  }

  /// Amplitudes of the cluster holding `order`, with order[k] as bit k. The
  /// cluster must consist of exactly these qubits.
  Vector cluster_state(std::span<const QubitId> order) const {
    if (order.empty()) throw QStateError("cluster_state: empty qubit list");
    for (const QubitId q : order) require_live(q, "cluster_state");
    const std::uint64_t cid = live_.at(order[0].value).cluster;
    const Cluster& c = clusters_.at(cid);
    if (c.members.size() != order.size()) {
      throw QStateError("cluster_state: qubit list does not cover the cluster");
    }
    std::vector<int> src_pos;
    for (const QubitId q : order) {
      if (live_.at(q.value).cluster != cid) {
        throw QStateError("cluster_state: qubits belong to different clusters");
      }
      src_pos.push_back(position_of(c, q.value));
    }
    Vector out(c.amps.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      std::size_t src = 0;
      for (std::size_t k = 0; k < src_pos.size(); ++k) {
        if ((static_cast<std::size_t>(i) >> k) & 1U) src |= std::size_t{1} << src_pos[k];
      }
      out(i) = c.amps(static_cast<Eigen::Index>(src));
    }
    return out;
  }

  Holder holder(QubitId q) const {
    require_live(q, "holder");
    return live_.at(q.value).holder;
  }

  void set_holder(QubitId q, Holder h) {
    require_live(q, "set_holder");
    Slot& s = live_.at(q.value);
    if (s.holder == h) return;
    holder_lose(s.holder);
    s.holder = h;
    holder_gain(h);
  }

  std::size_t holder_live(Holder h) const {
    const auto it = holders_.find(h);
    return it == holders_.end() ? 0 : it->second.live;
  }

  std::size_t holder_peak(Holder h) const {
    const auto it = holders_.find(h);
    return it == holders_.end() ? 0 : it->second.peak;
  }

  /// Sum over holders of each holder's own peak simultaneous qubit count.
  std::size_t holder_peak_sum() const {
    std::size_t total = 0;
    for (const auto& [h, stats] : holders_) total += stats.peak;
    return total;
  }

  /// Throws QStateError if any structural invariant is broken.
  void check_invariants() const {
    std::size_t members_live = 0;
    for (const auto& [cid, c] : clusters_) {
      if (static_cast<std::size_t>(c.amps.size()) != (std::size_t{1} << c.members.size())) {
        throw QStateError("invariant: cluster dimension mismatch");
      }
      if (std::abs(c.amps.squaredNorm() - Scalar(1)) > Scalar(kNormTolerance)) {
        throw QStateError("invariant: cluster norm drifted");
      }
      for (const std::uint64_t m : c.members) {
        const auto it = live_.find(m);
        if (it == live_.end()) continue;
        if (it->second.cluster != cid) throw QStateError("invariant: member/cluster mismatch");
        ++members_live;
      }
    }
    if (members_live != live_.size()) {
      throw QStateError("invariant: live qubit not in exactly one cluster");
    }
    if (peak_alloc_ < live_.size()) throw QStateError("invariant: peak below live count");
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  struct Cluster {
    std::vector<std::uint64_t> members;
    Vector amps;
  };
  struct Slot {
    std::uint64_t cluster;
    Holder holder;
  };
  struct HolderStats {
    std::size_t live = 0;
    std::size_t peak = 0;
  };

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  void require_live(QubitId q, const char* op) const {
    if (!live_.contains(q.value)) {
      throw QStateError(std::string(op) + ": qubit " + std::to_string(q.value) +
                        " is not live (consumed or never allocated)");
    }
  }

  static int position_of(const Cluster& c, std::uint64_t id) {
    const auto it = std::find(c.members.begin(), c.members.end(), id);
    return static_cast<int>(it - c.members.begin());
  }

  void note_dimension(const Cluster& c) {
    max_dimension_ = std::max(max_dimension_, static_cast<std::size_t>(c.amps.size()));
  }

  void holder_gain(Holder h) {
    HolderStats& s = holders_[h];
    ++s.live;
    s.peak = std::max(s.peak, s.live);
  }

  void holder_lose(Holder h) { --holders_.at(h).live; }

  void consume(QubitId q) {
    holder_lose(live_.at(q.value).holder);
    live_.erase(q.value);
  }

  void collect_if_dead(std::uint64_t cid) {
    const Cluster& c = clusters_.at(cid);
    const bool any_live = std::any_of(c.members.begin(), c.members.end(),
                                      [&](std::uint64_t m) { return live_.contains(m); });
    if (!any_live) clusters_.erase(cid);
  }

  void apply_single_unitary(const Mat2<Scalar>& u, QubitId q) {
    Cluster& c = clusters_.at(live_.at(q.value).cluster);
    const std::size_t mask = std::size_t{1} << position_of(c, q.value);
    for (Eigen::Index i = 0; i < c.amps.size(); ++i) {
      if (static_cast<std::size_t>(i) & mask) continue;
      const auto j = static_cast<Eigen::Index>(static_cast<std::size_t>(i) | mask);
      const Cplx a0 = c.amps(i);
      const Cplx a1 = c.amps(j);
      c.amps(i) = u(0, 0) * a0 + u(0, 1) * a1;
      c.amps(j) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }

  // Kronecker product of two clusters; b's members follow a's.
  std::uint64_t merge(std::uint64_t a, std::uint64_t b) {
    Cluster& ca = clusters_.at(a);
    Cluster& cb = clusters_.at(b);
    const Eigen::Index da = ca.amps.size();
    Vector amps(da * cb.amps.size());
    for (Eigen::Index j = 0; j < cb.amps.size(); ++j) {
      amps.segment(j * da, da) = ca.amps * cb.amps(j);
    }
    for (const std::uint64_t m : cb.members) {
      ca.members.push_back(m);
      if (auto it = live_.find(m); it != live_.end()) it->second.cluster = a;
    }
    ca.amps = std::move(amps);
    clusters_.erase(b);
    note_dimension(clusters_.at(a));
    return a;
  }

  void apply_cnot_unitary(QubitId control, QubitId target) {
    std::uint64_t cc = live_.at(control.value).cluster;
    const std::uint64_t ct = live_.at(target.value).cluster;
    if (cc != ct) cc = merge(cc, ct);
    Cluster& c = clusters_.at(cc);
    const std::size_t cm = std::size_t{1} << position_of(c, control.value);
    const std::size_t tm = std::size_t{1} << position_of(c, target.value);
    for (Eigen::Index i = 0; i < c.amps.size(); ++i) {
      const auto u = static_cast<std::size_t>(i);
      if ((u & cm) && !(u & tm)) std::swap(c.amps(i), c.amps(static_cast<Eigen::Index>(u | tm)));
    }
  }

  // Pauli index per target: -1 none, 0 X, 1 Y, 2 Z.
  std::array<int, 2> draw_noise(std::size_t n_targets) {
    std::array<int, 2> paulis{-1, -1};
    if (noise_prob_ <= 0.0) return paulis;
    std::uniform_int_distribution<int> pick(0, 2);
    if (model_ == NoiseModel::kPerGate) {
      if (uniform() < noise_prob_) {
        ++noise_events_;
        for (std::size_t k = 0; k < n_targets; ++k) paulis[k] = pick(rng_);
      }
    } else {
      for (std::size_t k = 0; k < n_targets; ++k) {
        if (uniform() < noise_prob_) {
          ++noise_events_;
          paulis[k] = pick(rng_);
        }
      }
    }
    return paulis;
  }

  void inject_noise(std::span<const QubitId> targets) {
    const auto paulis = draw_noise(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k) {
      switch (paulis[k]) {
        case 0: apply_single_unitary(pauli_x<Scalar>(), targets[k]); break;
        case 1: apply_single_unitary(pauli_y<Scalar>(), targets[k]); break;
        case 2: apply_single_unitary(pauli_z<Scalar>(), targets[k]); break;
        default: break;
      }
    }
  }

  // Removes the member at `pos`, keeping the branch where it equals `bit`.
  void remove_member(std::uint64_t cid, int pos, int bit) {
    Cluster& c = clusters_.at(cid);
    const std::size_t low = (std::size_t{1} << pos) - 1;
    Vector reduced(c.amps.size() / 2);
    for (Eigen::Index r = 0; r < reduced.size(); ++r) {
      const auto u = static_cast<std::size_t>(r);
      const std::size_t src = (u & low) | (static_cast<std::size_t>(bit) << pos) | ((u & ~low) << 1);
      reduced(r) = c.amps(static_cast<Eigen::Index>(src));
    }
    reduced.normalize();
    c.amps = std::move(reduced);
    c.members.erase(c.members.begin() + pos);
    collect_if_dead(cid);
  }

  // Contracts the member at `pos` with <phi| and renormalizes.
  void project_out(std::uint64_t cid, int pos, const State1& phi) {
    Cluster& c = clusters_.at(cid);
    const std::size_t low = (std::size_t{1} << pos) - 1;
    Vector reduced(c.amps.size() / 2);
    for (Eigen::Index r = 0; r < reduced.size(); ++r) {
      const auto u = static_cast<std::size_t>(r);
      const std::size_t i0 = (u & low) | ((u & ~low) << 1);
      const std::size_t i1 = i0 | (std::size_t{1} << pos);
      reduced(r) = std::conj(phi(0)) * c.amps(static_cast<Eigen::Index>(i0)) +
                   std::conj(phi(1)) * c.amps(static_cast<Eigen::Index>(i1));
    }
    reduced.normalize();
    c.amps = std::move(reduced);
    c.members.erase(c.members.begin() + pos);
  }

  std::pair<int, int> fused_bell_measure(QubitId q1, QubitId q2, std::uint64_t c1,
                                         std::uint64_t c2) {
    // Noise from the CNOT (targets q1, q2) and the H (target q1), pushed
    // through to the computational-basis measurement as bit flips.
    const auto cnot_noise = draw_noise(2);
    const auto h_noise = draw_noise(1);
    const auto has_x = [](int p) { return p == 0 || p == 1; };
    const auto has_z = [](int p) { return p == 1 || p == 2; };
    const int flip1 = (has_z(cnot_noise[0]) ? 1 : 0) ^ (has_x(h_noise[0]) ? 1 : 0);
    const int flip2 = has_x(cnot_noise[1]) ? 1 : 0;

    const Cluster& a = clusters_.at(c1);
    const Cluster& b = clusters_.at(c2);
    const int p1 = position_of(a, q1.value);
    const int p2 = position_of(b, q2.value);
    const Eigen::Index da = a.amps.size() / 2;
    const Eigen::Index db = b.amps.size() / 2;
    const std::size_t low1 = (std::size_t{1} << p1) - 1;
    const std::size_t low2 = (std::size_t{1} << p2) - 1;
    const auto expand = [](std::size_t r, std::size_t low, int pos, int bit) {
      return static_cast<Eigen::Index>((r & low) | (static_cast<std::size_t>(bit) << pos) |
                                       ((r & ~low) << 1));
    };
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));

    // <m1 m2| H_1 CNOT_12 = <Bell(m1,m2)| with
    // |Bell(m1,m2)> = (|0,m2> + (-1)^m1 |1,1-m2>)/sqrt(2).
    std::array<Vector, 4> branch;
    std::array<double, 4> prob{};
    for (int m1 = 0; m1 < 2; ++m1) {
      for (int m2 = 0; m2 < 2; ++m2) {
        Vector v(da * db);
        const Scalar sign = m1 ? Scalar(-1) : Scalar(1);
        for (Eigen::Index r2 = 0; r2 < db; ++r2) {
          const auto u2 = static_cast<std::size_t>(r2);
          const Cplx b_same = b.amps(expand(u2, low2, p2, m2));
          const Cplx b_flip = b.amps(expand(u2, low2, p2, 1 - m2));
          for (Eigen::Index r1 = 0; r1 < da; ++r1) {
            const auto u1 = static_cast<std::size_t>(r1);
            v(r1 + da * r2) = inv_sqrt2 * (a.amps(expand(u1, low1, p1, 0)) * b_same +
                                           sign * a.amps(expand(u1, low1, p1, 1)) * b_flip);
          }
        }
        prob[2 * m1 + m2] = static_cast<double>(v.squaredNorm());
        branch[2 * m1 + m2] = std::move(v);
      }
    }
    const double u = uniform();
    int outcome = 3;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      acc += prob[k];
      if (u < acc) {
        outcome = k;
        break;
      }
    }
    while (prob[outcome] <= 0.0) --outcome;

    Cluster merged;
    for (std::size_t k = 0; k < a.members.size(); ++k) {
      if (static_cast<int>(k) != p1) merged.members.push_back(a.members[k]);
    }
    for (std::size_t k = 0; k < b.members.size(); ++k) {
      if (static_cast<int>(k) != p2) merged.members.push_back(b.members[k]);
    }
    merged.amps = branch[outcome].normalized();

    consume(q1);
    consume(q2);
    clusters_.erase(c1);
    clusters_.erase(c2);
    const std::uint64_t cid = next_cluster_++;
    for (const std::uint64_t m : merged.members) {
      if (auto it = live_.find(m); it != live_.end()) it->second.cluster = cid;
    }
    note_dimension(merged);
    clusters_.emplace(cid, std::move(merged));
    collect_if_dead(cid);
    return {(outcome >> 1) ^ flip1, (outcome & 1) ^ flip2};
  }

  double noise_prob_;
  std::uint64_t seed_;
  NoiseModel model_;
  std::mt19937_64 rng_;
  std::unordered_map<std::uint64_t, Cluster> clusters_;
  std::unordered_map<std::uint64_t, Slot> live_;
  std::unordered_map<Holder, HolderStats> holders_;
  std::uint64_t next_qubit_ = 1;
  std::uint64_t next_cluster_ = 1;
  std::size_t alloc_counter_ = 0;
  std::size_t peak_alloc_ = 0;
  std::size_t max_dimension_ = 0;
  std::size_t noise_events_ = 0;
};

using StateRegistry = BasicStateRegistry<double>;

inline StateRegistry new_registry(double noise_prob, std::uint64_t seed,
                                  NoiseModel model = NoiseModel::kPerGate) {
  return StateRegistry(noise_prob, seed, model);
}

}  // namespace qbutterfly
