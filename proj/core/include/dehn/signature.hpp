// Copyright 2026 The dehn Authors
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

// Isomorphism signatures.
//
// Every (start cell, frame) pair determines a breadth-first relabelling in
// which each newly reached cell takes the frame that makes its tree gluing
// trivial (for cubes: onto the opposite face with the identity corner map;
// for tetrahedra: the identity permutation). The signature is the
// lexicographically smallest serialised gluing table over all 48k (cubes)
// or 24n (tetrahedra) starts, so it depends only on the isomorphism class.
//
// Format: "c<k>:" or "t<n>:" followed by one token per (cell, face) in
// relabelled order; a token is the decimal partner label and one letter
// coding the rest (face*8 + corner map for cubes, permutation index for
// tetrahedra). The alphabet avoids ',', '(', ')' and whitespace so the
// signature can be embedded in expression files.

#ifndef DEHN_SIGNATURE_HPP_
#define DEHN_SIGNATURE_HPP_

#include <string>

#include "dehn/cubulation.hpp"
#include "dehn/triangulation.hpp"

namespace dehn {

// Both throw std::invalid_argument unless the complex is total,
// involutive, connected and (for cubes) has dihedral corner maps.
std::string isomorphism_signature(const IdealCubulation& c);
std::string isomorphism_signature(const IdealTriangulation& t);

// Throw std::invalid_argument on malformed input.
IdealCubulation cubulation_from_signature(const std::string& sig);
IdealTriangulation triangulation_from_signature(const std::string& sig);

}  // namespace dehn

#endif  // DEHN_SIGNATURE_HPP_
