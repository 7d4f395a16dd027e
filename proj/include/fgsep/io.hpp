// Copyright 2026 The fgsep Authors
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

// JSON file formats. Complex numbers are [re, im] pairs, matrices are
// row-major nested arrays, and every document carries a "kind" tag.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fgsep/composer.hpp"
#include "fgsep/measurements.hpp"
#include "fgsep/states.hpp"

namespace fgsep::io {

using Json = nlohmann::json;

enum class FileKind { State, Ket, Povm, MubSet, MumSet, Partition };

std::string_view to_string(FileKind kind) noexcept;
FileKind parse_file_kind(std::string_view name);
/// Reads the "kind" tag; ParseError if missing or unknown.
FileKind kind_of(const Json& doc);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json to_json(const DensityMatrix& rho);
Json to_json(const Ket& ket, BipartiteDims dims);
Json to_json(const Povm& povm, std::optional<BipartiteDims> dims = std::nullopt, std::string_view id = {});
Json to_json(const ComposedMeasurement& m);
Json to_json(const MubSet& mubs);
Json to_json(const MumSet& mums);
Json to_json(const PartitionFamily& family);

// Loaders check structure (ParseError) and then the domain invariants,
// which throw the module's own error kinds.
DensityMatrix state_from_json(const Json& doc);
Ket ket_from_json(const Json& doc);
Povm povm_from_json(const Json& doc);
ComposedMeasurement measurement_from_json(const Json& doc);
MubSet mubset_from_json(const Json& doc);
MumSet mumset_from_json(const Json& doc);
PartitionFamily partition_from_json(const Json& doc, bool enforce = true);

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Invariant-by-invariant report for a parsed document. Throws ParseError
/// only when the structure itself is unreadable.
std::vector<Check> validate(const Json& doc, std::optional<FileKind> expected = std::nullopt);

}  // namespace fgsep::io
