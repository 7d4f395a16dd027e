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

#include "fgsep/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fgsep/error.hpp"

namespace fgsep::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex number must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) {
  return Json::array({z.real(), z.imag()});
}

BipartiteDims dims_from_doc(const Json& doc, int dim) {
  if (doc.contains("dims")) {
    const Json& d = doc.at("dims");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
      parse_fail("'dims' must be [dim_a, dim_b]");
    }
    return {d[0].get<int>(), d[1].get<int>()};
  }
  return {dim, 1};
}

Json dims_to_json(BipartiteDims dims) {
  return Json::array({dims.a, dims.b});
}

void require_kind(const Json& doc, FileKind kind) {
  if (kind_of(doc) != kind) {
    parse_fail("expected kind '" + std::string(to_string(kind)) + "', found '" +
               std::string(to_string(kind_of(doc))) + "'");
  }
}

std::vector<ComplexMatrix> elements_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("'elements' must be a non-empty array");
  std::vector<ComplexMatrix> out;
  for (const auto& e : j) out.push_back(matrix_from_json(e));
  return out;
}

std::vector<std::string> labels_from_json(const Json& doc) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) return labels;
  const Json& j = doc.at("labels");
  if (!j.is_array()) parse_fail("'labels' must be an array");
  for (const auto& l : j) {
    if (!l.is_string()) parse_fail("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

std::vector<Basis> bases_from_json(const Json& doc) {
  const Json& j = field(doc, "bases");
  if (!j.is_array() || j.empty()) parse_fail("'bases' must be a non-empty array");
  std::vector<Basis> bases;
  for (const auto& b : j) {
    if (!b.is_array()) parse_fail("each basis must be an array of kets");
    Basis basis;
    for (const auto& k : b) basis.emplace_back(vector_from_json(k));
    bases.push_back(std::move(basis));
  }
  return bases;
}

std::vector<Povm> povms_from_json(const Json& doc) {
  const Json& j = field(doc, "povms");
  if (!j.is_array() || j.empty()) parse_fail("'povms' must be a non-empty array");
  std::vector<Povm> povms;
  for (const auto& p : j) povms.emplace_back(elements_from_json(field(p, "elements")), labels_from_json(p));
  return povms;
}

Check check(std::string name, double residual, double threshold) {
  return Check{std::move(name), residual, threshold, std::isfinite(residual) && residual <= threshold};
}

}  // namespace

std::string_view to_string(FileKind kind) noexcept {
  switch (kind) {
    case FileKind::State: return "state";
    case FileKind::Ket: return "ket";
    case FileKind::Povm: return "povm";
    case FileKind::MubSet: return "mubset";
    case FileKind::MumSet: return "mumset";
    case FileKind::Partition: return "partition";
  }
  return "unknown";
}

FileKind parse_file_kind(std::string_view name) {
  for (auto k : {FileKind::State, FileKind::Ket, FileKind::Povm, FileKind::MubSet, FileKind::MumSet,
                 FileKind::Partition}) {
    if (to_string(k) == name) return k;
  }
  parse_fail("unknown kind '" + std::string(name) + "'");
}

FileKind kind_of(const Json& doc) {
  const Json& k = field(doc, "kind");
  if (!k.is_string()) parse_fail("'kind' must be a string");
  return parse_file_kind(k.get<std::string>());
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) parse_fail("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(i, c) = complex_from_json(row[c]);
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("vector must be a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json to_json(const DensityMatrix& rho) {
  return Json{{"kind", "state"}, {"dim", rho.dim()}, {"dims", dims_to_json(rho.dims())},
              {"matrix", matrix_to_json(rho.matrix())}};
}

Json to_json(const Ket& ket, BipartiteDims dims) {
  return Json{{"kind", "ket"}, {"dim", ket.dim()}, {"dims", dims_to_json(dims)},
              {"amplitudes", vector_to_json(ket.amplitudes())}};
}

Json to_json(const Povm& povm, std::optional<BipartiteDims> dims, std::string_view id) {
  Json doc{{"kind", "povm"}, {"dim", povm.dim()}, {"labels", povm.labels()}};
  if (dims) doc["dims"] = dims_to_json(*dims);
  if (!id.empty()) doc["id"] = std::string(id);
  Json elements = Json::array();
  for (const auto& e : povm.elements()) elements.push_back(matrix_to_json(e));
  doc["elements"] = std::move(elements);
  return doc;
}

Json to_json(const ComposedMeasurement& m) {
  return to_json(m.povm, m.dims, m.id);
}

Json to_json(const MubSet& mubs) {
  Json bases = Json::array();
  for (const auto& basis : mubs.bases()) {
    Json b = Json::array();
    for (const auto& k : basis) b.push_back(vector_to_json(k.amplitudes()));
    bases.push_back(std::move(b));
  }
  return Json{{"kind", "mubset"}, {"dim", mubs.dim()}, {"bases", std::move(bases)}};
}

Json to_json(const MumSet& mums) {
  Json povms = Json::array();
  for (const auto& p : mums.povms()) {
    Json elements = Json::array();
    for (const auto& e : p.elements()) elements.push_back(matrix_to_json(e));
    povms.push_back(Json{{"labels", p.labels()}, {"elements", std::move(elements)}});
  }
  return Json{{"kind", "mumset"}, {"dim", mums.dim()}, {"kappa", mums.kappa()}, {"povms", std::move(povms)}};
}

Json to_json(const PartitionFamily& family) {
  Json subsets = Json::array();
  for (const auto& s : family.subsets()) {
    Json pairs = Json::array();
    for (const auto& [i, j] : s) pairs.push_back(Json::array({i, j}));
    subsets.push_back(std::move(pairs));
  }
  return Json{{"kind", "partition"}, {"shape", Json::array({family.rows(), family.cols()})},
              {"subsets", std::move(subsets)}};
}

DensityMatrix state_from_json(const Json& doc) {
  require_kind(doc, FileKind::State);
  ComplexMatrix m = matrix_from_json(field(doc, "matrix"));
  const BipartiteDims dims = dims_from_doc(doc, static_cast<int>(m.rows()));
  return DensityMatrix(std::move(m), dims);
}

Ket ket_from_json(const Json& doc) {
  require_kind(doc, FileKind::Ket);
  return Ket(vector_from_json(field(doc, "amplitudes")));
}

Povm povm_from_json(const Json& doc) {
  require_kind(doc, FileKind::Povm);
  return Povm(elements_from_json(field(doc, "elements")), labels_from_json(doc));
}

ComposedMeasurement measurement_from_json(const Json& doc) {
  Povm povm = povm_from_json(doc);
  const BipartiteDims dims = dims_from_doc(doc, povm.dim());
  if (dims.total() != povm.dim()) throw Error(ErrorKind::DimensionMismatch, "POVM 'dims' do not match its size");
  std::string id = doc.contains("id") && doc.at("id").is_string() ? doc.at("id").get<std::string>() : "M";
  return ComposedMeasurement{std::move(id), std::move(povm), dims};
}

MubSet mubset_from_json(const Json& doc) {
  require_kind(doc, FileKind::MubSet);
  return MubSet(bases_from_json(doc));
}

MumSet mumset_from_json(const Json& doc) {
  require_kind(doc, FileKind::MumSet);
  const Json& kappa = field(doc, "kappa");
  if (!kappa.is_number()) parse_fail("'kappa' must be a number");
  return MumSet(povms_from_json(doc), kappa.get<double>());
}

PartitionFamily partition_from_json(const Json& doc, bool enforce) {
  require_kind(doc, FileKind::Partition);
  const Json& shape = field(doc, "shape");
  if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_integer() || !shape[1].is_number_integer()) {
    parse_fail("'shape' must be [m, n]");
  }
  const Json& subsets_json = field(doc, "subsets");
  if (!subsets_json.is_array()) parse_fail("'subsets' must be an array");
  std::vector<std::vector<OutcomePair>> subsets;
  for (const auto& s : subsets_json) {
    if (!s.is_array()) parse_fail("each subset must be an array of pairs");
    std::vector<OutcomePair> pairs;
    for (const auto& p : s) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        parse_fail("pairs must be [i, j] integers");
      }
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    subsets.push_back(std::move(pairs));
  }
  return make_partition(shape[0].get<int>(), shape[1].get<int>(), std::move(subsets), enforce);
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

std::vector<Check> validate(const Json& doc, std::optional<FileKind> expected) {
  const FileKind kind = kind_of(doc);
  if (expected && *expected != kind) {
    parse_fail("file is of kind '" + std::string(to_string(kind)) + "', not '" +
               std::string(to_string(*expected)) + "'");
  }
  std::vector<Check> checks;
  switch (kind) {
    case FileKind::State: {
      const ComplexMatrix m = matrix_from_json(field(doc, "matrix"));
      const BipartiteDims dims = dims_from_doc(doc, static_cast<int>(m.rows()));
      const StateResiduals r = state_residuals(m);
      checks.push_back(check("dims", dims.total() == m.rows() ? 0.0 : 1.0, 0.0));
      checks.push_back(check("hermitian", r.hermiticity, kTolerance));
      checks.push_back(check("positive semidefinite", std::max(0.0, -r.min_eigenvalue), kTolerance));
      checks.push_back(check("unit trace", r.trace_error, kTolerance));
      break;
    }
    case FileKind::Ket: {
      const ComplexVector v = vector_from_json(field(doc, "amplitudes"));
      checks.push_back(check("unit norm", std::abs(v.norm() - 1.0), kTolerance));
      break;
    }
    case FileKind::Povm: {
      const auto elements = elements_from_json(field(doc, "elements"));
      for (const auto& e : elements)
        if (e.rows() != elements.front().rows()) parse_fail("POVM elements differ in dimension");
      const PovmResiduals r = povm_residuals(elements);
      checks.push_back(check("hermitian elements", r.hermiticity, kTolerance));
      checks.push_back(check("positive elements", std::max(0.0, -r.min_eigenvalue), kTolerance));
      checks.push_back(check("completeness", r.completeness, kTolerance));
      break;
    }
    case FileKind::MubSet: {
      std::vector<Basis> bases;
      try {
        bases = bases_from_json(doc);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotNormalized) throw;
        checks.push_back(check("unit-norm kets", 1.0, kTolerance));
        break;
      }
      const int d = bases.front().front().dim();
      bool shape_ok = true;
      for (const auto& b : bases) {
        shape_ok = shape_ok && static_cast<int>(b.size()) == d;
        for (const auto& k : b) shape_ok = shape_ok && k.dim() == d;
      }
      if (!shape_ok) parse_fail("every basis must hold d kets of dimension d");
      const MubResiduals r = mub_residuals(bases);
      checks.push_back(check("orthonormal bases", r.orthonormality, kTolerance));
      checks.push_back(check("mutually unbiased (|<e|f>|^2 = 1/d)", r.unbiasedness, kTolerance));
      break;
    }
    case FileKind::MumSet: {
      const Json& kappa_json = field(doc, "kappa");
      if (!kappa_json.is_number()) parse_fail("'kappa' must be a number");
      const double kappa = kappa_json.get<double>();
      const Json& povms_json = field(doc, "povms");
      if (!povms_json.is_array() || povms_json.empty()) parse_fail("'povms' must be a non-empty array");
      std::vector<Povm> povms;
      try {
        povms = povms_from_json(doc);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidPovm && e.kind() != ErrorKind::ShapeMismatch) throw;
        checks.push_back(check("valid POVMs", 1.0, kTolerance));
        break;
      }
      const int d = povms.front().dim();
      for (const auto& p : povms)
        if (p.dim() != d || static_cast<int>(p.size()) != d) parse_fail("every MUM POVM needs d elements of dimension d");
      const MumResiduals r = mum_residuals(povms, kappa);
      checks.push_back(check("completeness", r.completeness, kTolerance));
      checks.push_back(check("unit trace elements", r.trace_one, kTolerance));
      checks.push_back(check("cross-POVM overlap Tr(P_i Q_j) = 1/d", r.cross_overlap, kTolerance));
      checks.push_back(check("same-POVM overlap matches kappa", r.same_overlap, kTolerance));
      checks.push_back(check("kappa in (1/d, 1]", r.kappa_in_range ? 0.0 : 1.0, 0.0));
      break;
    }
    case FileKind::Partition: {
      try {
        const PartitionFamily family = partition_from_json(doc, false);
        checks.push_back(check("partition of outcome grid", 0.0, 0.0));
        checks.push_back(check("non-intersecting pairs", family.compliant() ? 0.0 : 1.0, 0.0));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAPartition) throw;
        checks.push_back(check("partition of outcome grid", 1.0, 0.0));
      }
      break;
    }
  }
  return checks;
}

}  // namespace fgsep::io
