// Copyright 2026 The eqb Authors
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

#include <cstdint>
#include <string>
#include <vector>

namespace eqb {

/// Order parameter of the dihedral group D_n (group order 2n).
class DihedralParams {
 public:
  explicit DihedralParams(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t order() const { return 2 * n_; }

  friend bool operator==(const DihedralParams&, const DihedralParams&) = default;

 private:
  std::int64_t n_;
};

/// Normal form a^rot g^refl with rot in [0, n).
class GroupElement {
 public:
  GroupElement(std::int64_t rot, bool refl, const DihedralParams& p);

  static GroupElement identity(const DihedralParams& p) { return {0, false, p}; }
  static GroupElement rotation(const DihedralParams& p) { return {1, false, p}; }
  static GroupElement reflection(const DihedralParams& p) { return {0, true, p}; }

  std::int64_t rot() const { return rot_; }
  bool refl() const { return refl_; }
  bool is_identity() const { return rot_ == 0 && !refl_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::int64_t rot_;
  bool refl_;
};

/// image[i] is the rail that rail i is sent to.
struct RailPermutation {
  std::vector<std::int64_t> image;

  /// This permutation followed by `next`.
  RailPermutation then(const RailPermutation& next) const;
  bool is_bijection() const;

  friend bool operator==(const RailPermutation&, const RailPermutation&) = default;
};

/// Residue of v mod m in [0, m).
std::int64_t floor_mod(std::int64_t v, std::int64_t m);

/// Representative of v mod m in (-m/2, m/2].
std::int64_t signed_residue(std::int64_t v, std::int64_t m);

/// Product "e1 then e2": a^i g^s * a^j g^t = a^(i + (-1)^s j) g^(s xor t).
GroupElement mul(const GroupElement& e1, const GroupElement& e2, const DihedralParams& p);

GroupElement inv(const GroupElement& e, const DihedralParams& p);

/// Rail action: rot applications of i -> i+1 (mod n), then i -> n-i (mod n) if refl.
RailPermutation to_permutation(const GroupElement& e, const DihedralParams& p);

/// All 2n elements of D_n, rotations first.
std::vector<GroupElement> elements(const DihedralParams& p);

/// "I", "g", "a^k" or "a^k g" with k the signed representative.
std::string to_string(const GroupElement& e, const DihedralParams& p);

}  // namespace eqb
