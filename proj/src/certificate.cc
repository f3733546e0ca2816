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

#include "locol/certificate.h"

#include <array>
#include <charconv>
#include <sstream>
#include <vector>

#include "locol/graph.h"

namespace locol {

Certificate Certify(const GraphSpec& spec, const Coloring& coloring,
                    Mode mode) {
  const Graph g = BuildGraph(spec);
  if (g.order() != coloring.size()) {
    throw ColoringError("coloring has " + std::to_string(coloring.size()) +
                        " entries but " + ToString(spec) + " has " +
                        std::to_string(g.order()) + " vertices");
  }
  if (mode == Mode::kLocating && !IsConnected(g)) {
    throw PreconditionError("locating mode is undefined for the disconnected "
                            "graph " + ToString(spec));
  }
  const Verdict verdict = Check(g, coloring, mode);
  return Certificate{spec, coloring, mode, verdict.valid, verdict.witness};
}

Certificate Recheck(const Certificate& cert) {
  return Certify(cert.spec, cert.coloring, cert.mode);
}

namespace {

[[noreturn]] void Fail(std::string_view line, const std::string& what) {
  throw CertificateError("malformed certificate '" + std::string(line) +
                         "': " + what);
}

int StrictNumber(std::string_view text, std::string_view context) {
  if (text.empty() || (text[0] == '0' && text.size() > 1)) {
    Fail(context, "bad number '" + std::string(text) + "'");
  }
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Fail(context, "bad number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Vertex ParseVertex(std::string_view text, std::string_view line) {
  if (!text.starts_with('v')) Fail(line, "vertex must be written vN");
  const int index = StrictNumber(text.substr(1), line);
  if (index < 1) Fail(line, "vertices are numbered from v1");
  return index - 1;
}

std::optional<Witness> ParseWitness(std::string_view text,
                                    std::string_view line) {
  if (text == "-") return std::nullopt;
  Witness::Kind kind = Witness::Kind::kCollision;
  if (text.starts_with("edge:")) {
    kind = Witness::Kind::kImproperEdge;
    text.remove_prefix(5);
  }
  const auto parts = Split(text, ',');
  if (parts.size() != 2) Fail(line, "witness needs two vertices");
  const Vertex u = ParseVertex(parts[0], line);
  const Vertex v = ParseVertex(parts[1], line);
  if (u >= v) Fail(line, "witness vertices must be increasing");
  return Witness{kind, u, v};
}

}  // namespace

std::vector<Color> ParseColorList(std::string_view text) {
  std::vector<Color> colors;
  for (std::string_view item : Split(text, ',')) {
    colors.push_back(StrictNumber(item, text));
  }
  return colors;
}

std::string FormatColorList(std::span<const Color> colors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    os << (i ? "," : "") << colors[i];
  }
  return os.str();
}

std::string FormatWitness(const std::optional<Witness>& witness) {
  if (!witness) return "-";
  std::ostringstream os;
  if (witness->kind == Witness::Kind::kImproperEdge) os << "edge:";
  os << 'v' << witness->u + 1 << ",v" << witness->v + 1;
  return os.str();
}

std::string FormatCertificate(const Certificate& cert) {
  std::ostringstream os;
  os << "spec=" << ToString(cert.spec)
     << " colors=" << FormatColorList(cert.coloring.colors())
     << " mode=" << ModeName(cert.mode)
     << " verdict=" << (cert.valid ? "valid" : "invalid")
     << " witness=" << FormatWitness(cert.witness);
  return os.str();
}

Certificate ParseCertificate(std::string_view line) {
  static constexpr std::array<std::string_view, 5> kKeys{
      "spec=", "colors=", "mode=", "verdict=", "witness="};
  const auto fields = Split(line, ' ');
  if (fields.size() != kKeys.size()) {
    Fail(line, "expected 5 space-separated fields");
  }
  std::array<std::string_view, 5> values;
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (!fields[i].starts_with(kKeys[i])) {
      Fail(line, "field " + std::to_string(i + 1) + " must start with " +
                     std::string(kKeys[i]));
    }
    values[i] = fields[i].substr(kKeys[i].size());
  }
  GraphSpec spec = GraphSpec::Path(1);
  try {
    spec = ParseGraphSpec(values[0]);
  } catch (const SpecError& e) {
    Fail(line, e.what());
  }
  std::optional<Coloring> coloring;
  try {
    coloring.emplace(ParseColorList(values[1]));
  } catch (const ColoringError& e) {
    Fail(line, e.what());
  }
  if (coloring->size() != spec.order()) {
    Fail(line, "coloring length differs from the graph order");
  }
  const auto mode = ParseMode(values[2]);
  if (!mode) Fail(line, "mode must be 'locating' or 'nl'");
  if (values[3] != "valid" && values[3] != "invalid") {
    Fail(line, "verdict must be 'valid' or 'invalid'");
  }
  const bool valid = values[3] == "valid";
  auto witness = ParseWitness(values[4], line);
  if (valid == witness.has_value()) {
    Fail(line, "a witness is required exactly for invalid verdicts");
  }
  if (witness && witness->v >= coloring->size()) {
    Fail(line, "witness vertex out of range");
  }
  return Certificate{std::move(spec), std::move(*coloring), *mode, valid,
                     witness};
}

}  // namespace locol
