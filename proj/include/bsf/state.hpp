// Copyright 2026 The bsf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/phase.hpp"

namespace bsf {

inline constexpr double kProbabilityFloor = 1e-12;

/// n-photon state as a sparse amplitude map over Fock states, kept sorted
/// by occupation tuple. Fixed photon number across the support.
class StateVector {
 public:
  using Entry = std::pair<FockState, Complex>;

  StateVector(std::size_t modes, std::vector<Entry> entries)
      : modes_(modes), entries_(std::move(entries)) {
    photons_ = entries_.empty() ? 0 : entries_.front().first.total();
    for (const auto& [state, amp] : entries_) {
      (void)amp;
      if (state.modes() != modes_) {
        throw PhotonNumberMismatch("state entry has wrong mode count");
      }
      if (state.total() != photons_) {
        throw PhotonNumberMismatch("mixed photon numbers in one state");
      }
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    // Merge duplicates and drop exact zeros.
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == Complex{}; });
    entries_ = std::move(merged);
  }

  static StateVector basis_state(FockState s) {
    std::size_t m = s.modes();
    return StateVector(m, {{std::move(s), Complex{1.0, 0.0}}});
  }

  std::size_t modes() const { return modes_; }
  int photons() const { return photons_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  Complex amplitude(const FockState& s) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), s,
        [](const Entry& e, const FockState& key) { return e.first < key; });
    if (it == entries_.end() || !(it->first == s)) return {0.0, 0.0};
    return it->second;
  }

  double norm_squared() const {
    double n = 0;
    for (const auto& [state, amp] : entries_) {
      (void)state;
      n += std::norm(amp);
    }
    return n;
  }

  bool is_normalized(double tol = 1e-9) const {
    return std::abs(norm_squared() - 1.0) <= tol;
  }

  StateVector& normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0) throw InvalidPhotonCount("cannot normalize the zero vector");
    for (auto& e : entries_) e.second /= n;
    return *this;
  }

  StateVector scaled(Complex s) const {
    StateVector r = *this;
    for (auto& e : r.entries_) e.second *= s;
    return r;
  }

  /// Pointwise sum; both operands must share modes and photon number.
  StateVector operator+(const StateVector& o) const {
    std::vector<Entry> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    return StateVector(modes_, std::move(all));
  }

 private:
  std::size_t modes_;
  int photons_;
  std::vector<Entry> entries_;
};

/// Tensor product of sparse states living on disjoint global mode sets.
/// Each factor comes with the list of global modes it occupies.
inline StateVector product_state(
    std::size_t total_modes,
    const std::vector<std::pair<StateVector, std::vector<std::size_t>>>& factors) {
  std::vector<bool> used(total_modes, false);
  for (const auto& [state, modes] : factors) {
    if (modes.size() != state.modes()) {
      throw IndexOutOfRange("product factor mode list has wrong length");
    }
    for (std::size_t m : modes) {
      if (m >= total_modes) throw IndexOutOfRange("product mode out of range");
      if (used[m]) throw DuplicateMode("product factors overlap on a mode");
      used[m] = true;
    }
  }

  std::vector<StateVector::Entry> acc = {
      {FockState(std::vector<int>(total_modes, 0)), Complex{1.0, 0.0}}};
  for (const auto& [state, modes] : factors) {
    std::vector<StateVector::Entry> next;
    next.reserve(acc.size() * state.support_size());
    for (const auto& [base, base_amp] : acc) {
      for (const auto& [local, amp] : state.entries()) {
        std::vector<int> occ = base.occupations();
        for (std::size_t i = 0; i < modes.size(); ++i) occ[modes[i]] = local[i];
        next.emplace_back(FockState(std::move(occ)), base_amp * amp);
      }
    }
    acc = std::move(next);
  }
  return StateVector(total_modes, std::move(acc));
}

/// Detection probabilities |c_n|^2 above the print floor, sorted by
/// decreasing probability (ties broken by occupation tuple).
inline std::vector<std::pair<FockState, double>> outcome_distribution(
    const StateVector& state) {
  std::vector<std::pair<FockState, double>> out;
  for (const auto& [s, amp] : state.entries()) {
    double p = std::norm(amp);
    if (p > kProbabilityFloor) out.emplace_back(s, p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace bsf
