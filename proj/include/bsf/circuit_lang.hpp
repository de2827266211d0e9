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

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsf/bell.hpp"
#include "bsf/errors.hpp"
#include "bsf/matrix.hpp"
#include "bsf/monomial.hpp"
#include "bsf/state.hpp"

namespace bsf {

/// Tiny textual circuit language.
///
///   circuit := stage (';' stage)*
///   stage   := expr ('@' modes)?
///   expr    := fourier(d) | pauli_x(d) | pauli_z(d) | phase(p/q)
///            | permute(i0,i1,...) | id(d)
///            | tensor(expr, expr) | dsum(expr, expr)
///
/// Stages apply in listed order. A bare stage must span all modes; '@'
/// embeds it on the listed modes.
class CircuitParser {
 public:
  explicit CircuitParser(std::string text) : text_(std::move(text)) {}

  TransferMatrix compile(std::size_t total_modes) {
    pos_ = 0;
    Matrix acc = Matrix::identity(total_modes);
    for (;;) {
      TransferMatrix stage = parse_stage(total_modes);
      acc = stage.matrix() * acc;
      skip_ws();
      if (!consume(';')) break;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return TransferMatrix(std::move(acc), kUnitaryTolExternal);
  }

  /// A single bare expression (no stages, no '@'); its natural dimension
  /// defines the mode count. Used for group generators.
  TransferMatrix compile_expression() {
    pos_ = 0;
    TransferMatrix m = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line 1, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
      fail("expected an integer");
    }
    return std::stoll(text_.substr(start, pos_ - start));
  }

  std::vector<std::size_t> parse_index_list() {
    std::vector<std::size_t> out;
    do {
      std::int64_t v = parse_int();
      if (v < 0) fail("mode indices must be non-negative");
      out.push_back(static_cast<std::size_t>(v));
    } while (consume(','));
    return out;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a primitive name");
    return text_.substr(start, pos_ - start);
  }

  TransferMatrix parse_expr() {
    std::string name = parse_name();
    expect('(');
    TransferMatrix result = TransferMatrix::identity(1);
    if (name == "fourier" || name == "id" || name == "pauli_x" || name == "pauli_z") {
      std::int64_t d = parse_int();
      if (d < 1) fail("dimension must be >= 1");
      auto dd = static_cast<std::size_t>(d);
      if (name == "fourier") {
        result = fourier_matrix(dd);
      } else if (name == "id") {
        result = TransferMatrix::identity(dd);
      } else if (name == "pauli_x") {
        result = pauli_x(dd).to_transfer();
      } else {
        result = pauli_z(dd).to_transfer();
      }
    } else if (name == "phase") {
      std::int64_t num = parse_int();
      std::int64_t den = 1;
      if (consume('/')) den = parse_int();
      if (den < 1) fail("phase denominator must be positive");
      result = phase_shift(1, 0, ExactPhase(num, den)).to_transfer();
    } else if (name == "permute") {
      auto perm = parse_index_list();
      std::vector<Phase> phases(perm.size());
      try {
        result = MonomialMatrix(perm, phases).to_transfer();
      } catch (const NotMonomial&) {
        fail("permute() needs a permutation of 0..d-1");
      }
    } else if (name == "tensor" || name == "dsum") {
      TransferMatrix a = parse_expr();
      expect(',');
      TransferMatrix b = parse_expr();
      result = (name == "tensor") ? tensor(a, b) : direct_sum(a, b);
    } else {
      fail("unknown primitive '" + name + "'");
    }
    expect(')');
    return result;
  }

  TransferMatrix parse_stage(std::size_t total_modes) {
    TransferMatrix expr = parse_expr();
    if (consume('@')) {
      auto modes = parse_index_list();
      try {
        return embed(expr, modes, total_modes);
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (expr.dim() != total_modes) {
      fail("stage spans " + std::to_string(expr.dim()) + " modes but the circuit has " +
           std::to_string(total_modes) + "; use '@' to place it");
    }
    return expr;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline TransferMatrix compile_circuit(const std::string& text, std::size_t total_modes) {
  return CircuitParser(text).compile(total_modes);
}

inline TransferMatrix compile_generator(const std::string& text) {
  return CircuitParser(text).compile_expression();
}

/// Named states understood on the command line.
inline StateVector named_state(const std::string& name) {
  if (name == "psi+") return bell_state(BellKind::psi_plus);
  if (name == "psi-") return bell_state(BellKind::psi_minus);
  if (name == "phi+") return bell_state(BellKind::phi_plus);
  if (name == "phi-") return bell_state(BellKind::phi_minus);
  if (name == "beta+") return beta_state(+1);
  if (name == "beta-") return beta_state(-1);
  if (name == "alpha") return alpha_state();
  throw ParseError("unknown state name '" + name + "'");
}

/// Input-state syntax: either a bare occupation list "1,0,2" or
/// semicolon-separated factors "beta+@0,2;beta-@1,3" / "psi-;1,1".
/// Factors without '@' occupy the next consecutive mode block.
struct ParsedInput {
  StateVector state;
  std::string canonical;  // echo of the parsed text
};

inline ParsedInput parse_input_state(const std::string& text,
                                     std::size_t total_modes_hint = 0) {
  std::vector<std::pair<StateVector, std::vector<std::size_t>>> factors;
  std::size_t next_mode = 0;
  std::size_t max_mode = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    // trim
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) {
      part.erase(part.begin());
    }
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) {
      part.pop_back();
    }
    if (part.empty()) throw ParseError("empty state factor");

    std::string spec = part;
    std::vector<std::size_t> modes;
    if (auto at = part.find('@'); at != std::string::npos) {
      spec = part.substr(0, at);
      std::string list = part.substr(at + 1);
      std::size_t p = 0;
      while (p < list.size()) {
        std::size_t q = list.find(',', p);
        if (q == std::string::npos) q = list.size();
        try {
          modes.push_back(std::stoul(list.substr(p, q - p)));
        } catch (...) {
          throw ParseError("bad mode index in '" + part + "'");
        }
        p = q + 1;
      }
    }

    StateVector factor = [&]() -> StateVector {
      if (!spec.empty() && (std::isdigit(static_cast<unsigned char>(spec[0])))) {
        std::vector<int> occ;
        std::size_t p = 0;
        while (p < spec.size()) {
          std::size_t q = spec.find(',', p);
          if (q == std::string::npos) q = spec.size();
          try {
            occ.push_back(std::stoi(spec.substr(p, q - p)));
          } catch (...) {
            throw ParseError("bad occupation number in '" + spec + "'");
          }
          p = q + 1;
        }
        return StateVector::basis_state(FockState(std::move(occ)));
      }
      return named_state(spec);
    }();

    if (modes.empty()) {
      modes.resize(factor.modes());
      for (std::size_t i = 0; i < modes.size(); ++i) modes[i] = next_mode + i;
    } else if (modes.size() != factor.modes()) {
      throw ParseError("factor '" + spec + "' spans " + std::to_string(factor.modes()) +
                       " modes but " + std::to_string(modes.size()) + " were listed");
    }
    for (std::size_t mm : modes) max_mode = std::max(max_mode, mm);
    next_mode = std::max(next_mode, max_mode + 1);
    factors.emplace_back(std::move(factor), std::move(modes));
    start = end + 1;
    if (end == text.size()) break;
  }

  std::size_t total = std::max(total_modes_hint, max_mode + 1);
  return {product_state(total, factors), text};
}

}  // namespace bsf
