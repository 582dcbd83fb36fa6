// Copyright 2026 The ksctx developers
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

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksctx/rad_scalar.hpp"

namespace ksctx {

/// A projective ray: a nonzero vector of RadScalar components, identified up
/// to a real scale factor.
///
/// Construction canonicalizes: when every component is a single radical term
/// the common radical is divided out of the leading component, denominators
/// are cleared, the gcd of all integer coefficients is divided out, and the
/// first nonzero component is made positive. For such rays the rendered
/// canonical_key is a unique name of the projective class and is used for
/// hashing; rays with multi-term components fall back to exact
/// proportionality scans (see RaySet).
class Ray {
 public:
  explicit Ray(std::vector<RadScalar> components);

  /// Decodes the signed squared-magnitude notation: component_i is
  /// sign(a_i) * sqrt(|a_i|), then the ray is canonicalized. The squared
  /// cosines of the result are |a_i| / sum|a_j|. For example (4, 1, -1)
  /// decodes to (2, 1, -1) with squared cosines (2/3, 1/6, 1/6).
  ///
  /// Note: sqmag triples are sometimes glossed elsewhere as the vector
  /// (a,b,c)/||(a,b,c)||; that reading is inconsistent with the squared
  /// cosine convention and is not used here.
  static Ray from_sqmag(const std::vector<long long>& sqmag);

  std::size_t dim() const { return components_.size(); }
  const std::vector<RadScalar>& components() const { return components_; }
  const RadScalar& operator[](std::size_t i) const { return components_[i]; }
  const std::string& canonical_key() const { return canonical_key_; }

  /// True when every component is zero or a single radical term; canonical
  /// keys of such rays identify projective classes uniquely.
  bool all_single_term() const { return all_single_term_; }

  /// Projective identity: proportional over the reals.
  bool operator==(const Ray& rhs) const;
  bool operator!=(const Ray& rhs) const { return !(*this == rhs); }

 private:
  void canonicalize();

  std::vector<RadScalar> components_;
  std::string canonical_key_;
  bool all_single_term_ = false;
};

/// Exact inner product sum_i a_i * b_i. Throws DimError on mismatch.
RadScalar dot(const Ray& a, const Ray& b);

/// True iff all 2x2 minors a_i*b_j - a_j*b_i vanish exactly.
bool proportional(const Ray& a, const Ray& b);

/// The unique third ray completing an orthogonal, non-proportional pair to a
/// triad: the cross product, canonicalized. Dimension 3 only (DimError),
/// invalid pairs throw NotAPair.
Ray complete(const Ray& a, const Ray& b);

/// Ordered, duplicate-free set of projective rays of a fixed dimension.
class RaySet {
 public:
  explicit RaySet(std::size_t dim = 3);

  /// Appends the ray unless an equal (proportional) ray is present; returns
  /// {index of the representative, whether it was newly inserted}. Duplicate
  /// inserts are dropped silently and counted for reporting.
  std::pair<std::size_t, bool> insert(Ray ray);

  std::optional<std::size_t> find(const Ray& ray) const;
  bool contains(const Ray& ray) const { return find(ray).has_value(); }

  const Ray& operator[](std::size_t i) const { return rays_[i]; }
  std::size_t size() const { return rays_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  std::vector<Ray>::const_iterator begin() const { return rays_.begin(); }
  std::vector<Ray>::const_iterator end() const { return rays_.end(); }

 private:
  std::size_t dim_;
  std::vector<Ray> rays_;
  std::unordered_map<std::string, std::size_t> key_to_index_;  // single-term rays
  std::vector<std::size_t> multi_term_;  // indices needing proportionality scans
  std::size_t duplicates_dropped_ = 0;
};

/// Smallest superset closed under completing orthogonal pairs to triads.
/// Insertion is breadth-first over pairs in input order, so the output order
/// (input rays first, then completions in discovery order) is stable across
/// runs. Dimension 3 only. max_rays guards against non-terminating closures
/// of generic inputs (TooLarge).
RaySet triad_closure(const RaySet& s, std::size_t max_rays = 10000);

}  // namespace ksctx
