// Copyright 2026 The locol Authors
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

// Certificate records, one per line:
//
//   spec=path:5 colors=1,2,1,2,3 mode=nl verdict=invalid witness=v1,v3
//
// Fields appear in this order separated by single spaces. Colors are listed
// in vertex order. The witness is "-" for valid records, "vI,vJ" (I < J,
// 1-based) for two vertices the mode cannot distinguish, or "edge:vI,vJ"
// for a monochromatic edge. Parsing accepts only this canonical form, so
// FormatCertificate(ParseCertificate(line)) == line.

#ifndef LOCOL_CERTIFICATE_H_
#define LOCOL_CERTIFICATE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "locol/coloring.h"
#include "locol/graph_spec.h"

namespace locol {

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Certificate {
  GraphSpec spec;
  Coloring coloring;
  Mode mode;
  bool valid;
  // Present exactly when !valid.
  std::optional<Witness> witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Checks `coloring` on the graph of `spec` and records the verdict.
Certificate Certify(const GraphSpec& spec, const Coloring& coloring,
                    Mode mode);

// Recomputes the verdict of `cert` from scratch.
Certificate Recheck(const Certificate& cert);

std::string FormatCertificate(const Certificate& cert);
Certificate ParseCertificate(std::string_view line);

std::string FormatWitness(const std::optional<Witness>& witness);

// "1,2,3" <-> {1,2,3}; strict decimal, no empty items.
std::vector<Color> ParseColorList(std::string_view text);
std::string FormatColorList(std::span<const Color> colors);

}  // namespace locol

#endif  // LOCOL_CERTIFICATE_H_
