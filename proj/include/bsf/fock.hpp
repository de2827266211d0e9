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
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/rational.hpp"

namespace bsf {

/// Photon occupation numbers per mode.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occ) : occ_(std::move(occ)) {
    for (int v : occ_) {
      if (v < 0) throw InvalidPhotonCount("negative occupation number");
    }
  }

  std::size_t modes() const { return occ_.size(); }
  int total() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }
  int operator[](std::size_t i) const { return occ_[i]; }
  const std::vector<int>& occupations() const { return occ_; }

  bool operator==(const FockState& o) const { return occ_ == o.occ_; }
  bool operator!=(const FockState& o) const { return occ_ != o.occ_; }
  bool operator<(const FockState& o) const { return occ_ < o.occ_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(occ_[i]);
    }
    return s;
  }

 private:
  std::vector<int> occ_;
};

inline std::uint64_t fock_dimension(std::size_t modes, int photons) {
  int128 d = binomial(static_cast<int>(modes) + photons - 1, photons);
  if (d > int128{1} << 62) throw SizeLimit("Fock dimension overflows the guard");
  return static_cast<std::uint64_t>(d);
}

inline std::uint64_t max_basis_size() {
  if (const char* env = std::getenv("BSF_MAX_BASIS")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

/// All n-photon occupation tuples over m modes, lexicographically
/// ascending; size C(m+n-1, n).
class FockBasis {
 public:
  FockBasis(std::size_t modes, int photons) : modes_(modes), photons_(photons) {
    if (modes < 1) throw IndexOutOfRange("basis needs at least one mode");
    if (photons < 0) throw InvalidPhotonCount("negative photon number");
    std::uint64_t dim = fock_dimension(modes, photons);
    if (dim > max_basis_size()) {
      throw SizeLimit("Fock basis of size " + std::to_string(dim) +
                      " exceeds the guard (override with BSF_MAX_BASIS)");
    }
    states_.reserve(dim);
    std::vector<int> occ(modes, 0);
    occ.back() = photons;
    for (;;) {
      states_.emplace_back(occ);
      // Next composition in lexicographic order: find the rightmost
      // position before the last that can absorb one photon from the tail.
      std::size_t j = modes - 1;
      while (j > 0 && occ[j] == 0) --j;
      if (j == 0) break;
      int tail = occ[j] - 1;
      occ[j] = 0;
      occ[j - 1] += 1;
      occ[modes - 1] = tail;
    }
  }

  std::size_t modes() const { return modes_; }
  int photons() const { return photons_; }
  std::size_t size() const { return states_.size(); }
  const FockState& operator[](std::size_t i) const { return states_[i]; }
  const std::vector<FockState>& states() const { return states_; }

  /// Position of a state in the basis; states are sorted, so this is a
  /// binary search.
  std::size_t index_of(const FockState& s) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || !(*it == s)) {
      throw IndexOutOfRange("state not in basis: " + s.str());
    }
    return static_cast<std::size_t>(it - states_.begin());
  }

 private:
  std::size_t modes_;
  int photons_;
  std::vector<FockState> states_;
};

inline FockBasis enumerate_basis(std::size_t modes, int photons) {
  return FockBasis(modes, photons);
}

}  // namespace bsf
