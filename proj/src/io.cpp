#include "pmalcev/io.hpp"

#include <fstream>
#include <sstream>

#include "pmalcev/errors.hpp"
#include "pmalcev/yangbaxter.hpp"

#include "json.hpp"

namespace pmalcev {

namespace {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// json -> values

Scalar scalar_from_json(const ojson& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("expected a rational entry (integer or string)");
}

std::size_t index_from_json(const ojson& j, std::size_t dim) {
  if (!j.is_number_integer() || j.get<long long>() < 1 ||
      static_cast<std::size_t>(j.get<long long>()) > dim)
    throw ParseError("basis index must be an integer in 1.." +
                     std::to_string(dim));
  return static_cast<std::size_t>(j.get<long long>()) - 1;
}

Matrix matrix_from_json(const ojson& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ParseError("expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw DimensionError("ragged matrix: row " + std::to_string(i + 1) +
                           " has a different length");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

Algebra algebra_from_json(const ojson& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<long long>() < 1)
    throw ParseError("algebra requires a positive integer dim");
  Algebra a(static_cast<std::size_t>(j["dim"].get<long long>()));
  if (j.contains("products")) {
    if (!j["products"].is_array())
      throw ParseError("products must be an array");
    for (const auto& p : j["products"]) {
      const std::size_t i = index_from_json(p.at("left"), a.dim);
      const std::size_t k = index_from_json(p.at("right"), a.dim);
      for (const auto& t : p.at("terms"))
        a.c.at(i, k, index_from_json(t.at("basis"), a.dim)) +=
            scalar_from_json(t.at("coeff"));
    }
  }
  return a;
}

std::vector<Matrix> matrix_list_from_json(const ojson& j, std::size_t count,
                                          std::size_t dim,
                                          const std::string& what) {
  if (!j.is_array() || j.size() != count)
    throw ParseError(what + " must list one matrix per basis element");
  std::vector<Matrix> out;
  for (const auto& e : j) {
    Matrix m = matrix_from_json(e);
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError(what + " matrices must be " + std::to_string(dim) +
                           "x" + std::to_string(dim));
    out.push_back(std::move(m));
  }
  return out;
}

Bimodule bimodule_from_json(const ojson& j) {
  Bimodule b;
  b.base = algebra_from_json(j.at("algebra"));
  if (!j.contains("vdim") || !j["vdim"].is_number_integer() ||
      j["vdim"].get<long long>() < 1)
    throw ParseError("bimodule requires a positive integer vdim");
  b.vdim = static_cast<std::size_t>(j["vdim"].get<long long>());
  b.ell = matrix_list_from_json(j.at("ell"), b.base.dim, b.vdim, "ell");
  b.rr = matrix_list_from_json(j.at("rr"), b.base.dim, b.vdim, "rr");
  return b;
}

ONStructure structure_from_json(const ojson& j) {
  ONStructure x;
  const std::string flavor = j.at("flavor").get<std::string>();
  if (flavor == "nijenhuis-pair")
    x.flavor = PairFlavor::NijenhuisPair;
  else if (flavor == "dual-nijenhuis-pair")
    x.flavor = PairFlavor::DualNijenhuisPair;
  else
    throw ParseError("flavor must be nijenhuis-pair or dual-nijenhuis-pair");
  x.t.bimodule = bimodule_from_json(j.at("bimodule"));
  x.t.map = matrix_from_json(j.at("t"));
  x.n = matrix_from_json(j.at("n"));
  x.s = matrix_from_json(j.at("s"));
  return x;
}

DeformationData deformation_from_json(const ojson& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<long long>() < 1)
    throw ParseError("deformation requires a positive integer dim");
  const std::size_t n = static_cast<std::size_t>(j["dim"].get<long long>());
  if (!j.contains("vdim") || !j["vdim"].is_number_integer() ||
      j["vdim"].get<long long>() < 1)
    throw ParseError("deformation requires a positive integer vdim");
  const std::size_t m = static_cast<std::size_t>(j["vdim"].get<long long>());
  DeformationData d;
  const ojson& om = j.at("omega");
  if (!om.is_array() || om.size() != n)
    throw DimensionError("omega must have dim slices");
  d.omega = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!om[i].is_array() || om[i].size() != n)
      throw DimensionError("ragged omega tensor");
    for (std::size_t k = 0; k < n; ++k) {
      if (!om[i][k].is_array() || om[i][k].size() != n)
        throw DimensionError("ragged omega tensor");
      for (std::size_t l = 0; l < n; ++l)
        d.omega.at(i, k, l) = scalar_from_json(om[i][k][l]);
    }
  }
  d.varpi_ell = matrix_list_from_json(j.at("varpi_ell"), n, m, "varpi_ell");
  d.varpi_rr = matrix_list_from_json(j.at("varpi_rr"), n, m, "varpi_rr");
  return d;
}

Job job_from_json(const ojson& j) {
  Job job;
  job.cmd = j.at("cmd").get<std::string>();
  if (j.contains("inputs"))
    for (const auto& e : j["inputs"]) job.inputs.push_back(e.get<std::string>());
  if (j.contains("witness")) job.witness = j["witness"].get<bool>();
  if (j.contains("kmax")) {
    if (!j["kmax"].is_number_integer() || j["kmax"].get<long long>() < 0)
      throw ParseError("kmax must be a non-negative integer");
    job.kmax = static_cast<unsigned>(j["kmax"].get<long long>());
  }
  if (j.contains("t_samples")) {
    job.t_samples.clear();
    for (const auto& e : j["t_samples"]) job.t_samples.push_back(scalar_from_json(e));
  }
  return job;
}

// ---------------------------------------------------------------------------
// values -> json

ojson matrix_to_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(format_scalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson algebra_to_json(const Algebra& a) {
  ojson j;
  j["dim"] = a.dim;
  ojson products = ojson::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      ojson terms = ojson::array();
      for (std::size_t l = 0; l < a.dim; ++l)
        if (a.c.at(i, k, l) != 0)
          terms.push_back(
              {{"coeff", format_scalar(a.c.at(i, k, l))}, {"basis", l + 1}});
      if (!terms.empty())
        products.push_back(
            {{"left", i + 1}, {"right", k + 1}, {"terms", std::move(terms)}});
    }
  j["products"] = std::move(products);
  return j;
}

ojson bimodule_to_json(const Bimodule& b) {
  ojson j;
  j["algebra"] = algebra_to_json(b.base);
  j["vdim"] = b.vdim;
  ojson ell = ojson::array(), rr = ojson::array();
  for (const auto& m : b.ell) ell.push_back(matrix_to_json(m));
  for (const auto& m : b.rr) rr.push_back(matrix_to_json(m));
  j["ell"] = std::move(ell);
  j["rr"] = std::move(rr);
  return j;
}

ojson structure_to_json(const ONStructure& x) {
  ojson j;
  j["flavor"] = x.flavor == PairFlavor::NijenhuisPair ? "nijenhuis-pair"
                                                      : "dual-nijenhuis-pair";
  j["bimodule"] = bimodule_to_json(x.t.bimodule);
  j["t"] = matrix_to_json(x.t.map);
  j["n"] = matrix_to_json(x.n);
  j["s"] = matrix_to_json(x.s);
  return j;
}

ojson deformation_to_json(const DeformationData& d, std::size_t vdim) {
  ojson j;
  const std::size_t n = d.omega.dim();
  j["dim"] = n;
  j["vdim"] = vdim;
  ojson om = ojson::array();
  for (std::size_t i = 0; i < n; ++i) {
    ojson slice = ojson::array();
    for (std::size_t k = 0; k < n; ++k) {
      ojson row = ojson::array();
      for (std::size_t l = 0; l < n; ++l)
        row.push_back(format_scalar(d.omega.at(i, k, l)));
      slice.push_back(std::move(row));
    }
    om.push_back(std::move(slice));
  }
  j["omega"] = std::move(om);
  ojson ve = ojson::array(), vr = ojson::array();
  for (const auto& m : d.varpi_ell) ve.push_back(matrix_to_json(m));
  for (const auto& m : d.varpi_rr) vr.push_back(matrix_to_json(m));
  j["varpi_ell"] = std::move(ve);
  j["varpi_rr"] = std::move(vr);
  return j;
}

ojson job_to_json(const Job& job) {
  ojson j;
  j["cmd"] = job.cmd;
  j["inputs"] = job.inputs;
  j["witness"] = job.witness;
  j["kmax"] = job.kmax;
  ojson samples = ojson::array();
  for (const auto& t : job.t_samples) samples.push_back(format_scalar(t));
  j["t_samples"] = std::move(samples);
  return j;
}

void merge_into(ojson& j, ojson body) {
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
}

void position_of(const std::string& text, std::size_t byte, std::size_t& line,
                 std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

Document parse(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    std::size_t line = 1, column = 1;
    position_of(text, e.byte, line, column);
    throw ParseError("syntax error", line, column);
  }
  try {
    Document doc;
    if (!j.is_object() || !j.contains("kind"))
      throw ParseError("document must be an object with a kind field");
    doc.kind = j["kind"].get<std::string>();
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (doc.kind == "algebra")
      doc.payload = algebra_from_json(j);
    else if (doc.kind == "bimodule")
      doc.payload = bimodule_from_json(j);
    else if (doc.kind == "map" || doc.kind == "tensor2") {
      Matrix m = matrix_from_json(j.at("entries"));
      if (doc.kind == "tensor2" && !m.is_square())
        throw DimensionError("tensor2 entries must be square");
      doc.payload = std::move(m);
    } else if (doc.kind == "structure")
      doc.payload = structure_from_json(j);
    else if (doc.kind == "deformation")
      doc.payload = deformation_from_json(j);
    else if (doc.kind == "job")
      doc.payload = job_from_json(j);
    else
      throw ParseError("unknown document kind: " + doc.kind);
    return doc;
  } catch (const ojson::exception& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Document& doc) {
  ojson j;
  j["kind"] = doc.kind;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (doc.kind == "algebra")
    merge_into(j, algebra_to_json(std::get<Algebra>(doc.payload)));
  else if (doc.kind == "bimodule")
    merge_into(j, bimodule_to_json(std::get<Bimodule>(doc.payload)));
  else if (doc.kind == "map" || doc.kind == "tensor2")
    j["entries"] = matrix_to_json(std::get<Matrix>(doc.payload));
  else if (doc.kind == "structure")
    merge_into(j, structure_to_json(std::get<ONStructure>(doc.payload)));
  else if (doc.kind == "deformation") {
    const auto& d = std::get<DeformationData>(doc.payload);
    const std::size_t vdim = d.varpi_ell.empty() ? 0 : d.varpi_ell[0].rows();
    merge_into(j, deformation_to_json(d, vdim));
  } else if (doc.kind == "job")
    merge_into(j, job_to_json(std::get<Job>(doc.payload)));
  else
    throw ParseError("unknown document kind: " + doc.kind);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

Algebra paper4_algebra() {
  // e1.e2 = -e2, e1.e3 = -e3, e1.e4 = e4, e2.e3 = 2 e4
  Algebra a(4);
  a.c.at(0, 1, 1) = -1;
  a.c.at(0, 2, 2) = -1;
  a.c.at(0, 3, 3) = 1;
  a.c.at(1, 2, 3) = 2;
  return a;
}

Matrix example2_2_map(const Scalar& a, const Scalar& b) {
  // T(eps1) = a e1, T(eps2) = b e4, T(eps4) = b e2
  Matrix t(4, 4);
  t.at(0, 0) = a;
  t.at(1, 3) = b;
  t.at(3, 1) = b;
  return t;
}

Tensor2 example2_7_tensor(const Scalar& a, const Scalar& b) {
  Tensor2 r(4, 4);
  r.at(0, 0) = a;
  r.at(1, 3) = b;
  r.at(3, 1) = b;
  return r;
}

Matrix example3_5_map(const Scalar& c, const Scalar& d, const Scalar& e) {
  // the matrix as printed: rows are images' coordinates
  Matrix n(4, 4);
  n.at(0, 0) = c;
  n.at(1, 1) = d;
  n.at(2, 1) = e;
  n.at(2, 2) = d;
  n.at(3, 3) = d;
  return n;
}

Matrix example3_6_map(const Scalar& c, const Scalar& d, const Scalar& e) {
  // the listed action: N(e1) = c e1, N(e2) = d e2 + e e3, N(e3) = d e3,
  // N(e4) = d e4
  return example3_5_map(c, d, e).transpose();
}

Bimodule coregular_l_bimodule(const Algebra& a) {
  // (A*, L*, 0) with <L*_x(xi), v> = -<xi, L_x(v)>
  Bimodule b;
  b.base = a;
  b.vdim = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.ell.push_back(-left_mult(a, basis_vec(a.dim, i)).transpose());
    b.rr.push_back(Matrix(a.dim, a.dim));
  }
  return b;
}

Tensor2 canonical_pairing_tensor(std::size_t n) {
  // sum_i e_i (x) eps_i + eps_i (x) e_i on the 2n-dim semi-direct algebra
  Tensor2 s(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.at(i, n + i) = 1;
    s.at(n + i, i) = 1;
  }
  return s;
}

Document make_doc(std::string kind, std::string name,
                  std::variant<std::monostate, Algebra, Bimodule, Matrix,
                               ONStructure, DeformationData, Job>
                      payload) {
  Document d;
  d.kind = std::move(kind);
  d.name = std::move(name);
  d.payload = std::move(payload);
  return d;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"paper4",
          "zero4",
          "id4",
          "example2_2_a1_b1",
          "example2_2_a2_b3",
          "example2_7_a1_b1",
          "example3_5_c2_d3_e5",
          "example3_6_n_c2_d3_e5",
          "example3_6_composite_a1_b1_c2_d3_e5",
          "example3_6_structure_a1_b1_c2_d3_e5",
          "cor2_8_algebra",
          "cor2_8_tensor"};
}

Document load_fixture(const std::string& name) {
  if (name == "paper4") return make_doc("algebra", name, paper4_algebra());
  if (name == "zero4") return make_doc("algebra", name, Algebra(4));
  if (name == "id4") return make_doc("map", name, Matrix::identity(4));
  if (name == "example2_2_a1_b1")
    return make_doc("map", name, example2_2_map(1, 1));
  if (name == "example2_2_a2_b3")
    return make_doc("map", name, example2_2_map(2, 3));
  if (name == "example2_7_a1_b1")
    return make_doc("tensor2", name, example2_7_tensor(1, 1));
  if (name == "example3_5_c2_d3_e5")
    return make_doc("map", name, example3_5_map(2, 3, 5));
  if (name == "example3_6_n_c2_d3_e5")
    return make_doc("map", name, example3_6_map(2, 3, 5));
  if (name == "example3_6_composite_a1_b1_c2_d3_e5")
    return make_doc("map", name,
                    example3_6_map(2, 3, 5) * example2_2_map(1, 1));
  if (name == "example3_6_structure_a1_b1_c2_d3_e5") {
    ONStructure x;
    x.t.bimodule = dual_bimodule(regular_bimodule(paper4_algebra()));
    x.t.map = example2_2_map(1, 1);
    x.n = example3_6_map(2, 3, 5);
    x.s = dual_map(x.n);
    x.flavor = PairFlavor::DualNijenhuisPair;
    return make_doc("structure", name, std::move(x));
  }
  if (name == "cor2_8_algebra")
    return make_doc("algebra", name,
                    semidirect(coregular_l_bimodule(paper4_algebra())));
  if (name == "cor2_8_tensor")
    return make_doc("tensor2", name, canonical_pairing_tensor(4));
  throw ParseError("unknown fixture: " + name);
}

// ---------------------------------------------------------------------------
// job runner

namespace {

Document resolve_input(const std::string& spec) {
  auto strip = [&](const char* prefix) -> std::string {
    const std::string p = prefix;
    if (spec.rfind(p, 0) == 0) return spec.substr(p.size());
    return {};
  };
  if (std::string rest = strip("fixture:"); !rest.empty())
    return load_fixture(rest);
  if (std::string rest = strip("regular:"); !rest.empty()) {
    Document inner = resolve_input(rest);
    if (inner.kind != "algebra")
      throw ParseError("regular: expects an algebra input");
    return make_doc("bimodule", spec,
                    regular_bimodule(std::get<Algebra>(inner.payload)));
  }
  if (std::string rest = strip("dual-regular:"); !rest.empty()) {
    Document inner = resolve_input(rest);
    if (inner.kind != "algebra")
      throw ParseError("dual-regular: expects an algebra input");
    return make_doc(
        "bimodule", spec,
        dual_bimodule(regular_bimodule(std::get<Algebra>(inner.payload))));
  }
  if (std::string rest = strip("commutator:"); !rest.empty()) {
    Document inner = resolve_input(rest);
    if (inner.kind != "algebra")
      throw ParseError("commutator: expects an algebra input");
    return make_doc("algebra", spec,
                    commutator_algebra(std::get<Algebra>(inner.payload)));
  }
  std::ifstream in(spec, std::ios::binary);
  if (!in) throw ParseError("cannot read input file: " + spec);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Algebra& expect_algebra(const Document& d) {
  if (d.kind != "algebra") throw ParseError("expected an algebra input");
  return std::get<Algebra>(d.payload);
}

const Bimodule& expect_bimodule(const Document& d) {
  if (d.kind != "bimodule") throw ParseError("expected a bimodule input");
  return std::get<Bimodule>(d.payload);
}

const Matrix& expect_matrix(const Document& d) {
  if (d.kind != "map" && d.kind != "tensor2")
    throw ParseError("expected a map or tensor2 input");
  return std::get<Matrix>(d.payload);
}

const ONStructure& expect_structure(const Document& d) {
  if (d.kind != "structure") throw ParseError("expected a structure input");
  return std::get<ONStructure>(d.payload);
}

const DeformationData& expect_deformation(const Document& d) {
  if (d.kind != "deformation")
    throw ParseError("expected a deformation input");
  return std::get<DeformationData>(d.payload);
}

std::string header_of(const Job& job) {
  std::string h = job.cmd;
  for (const auto& in : job.inputs) h += " " + in;
  return h;
}

void emit_report(std::ostream& out, const std::string& header,
                 const CheckReport& r, bool witness, int& exit_code) {
  switch (r.status) {
    case Status::Pass:
      out << header << ": PASS\n";
      break;
    case Status::Fail:
      out << header << ": FAIL\n";
      exit_code = std::max(exit_code, 1);
      break;
    case Status::Error:
      out << header << ": ERROR\n";
      exit_code = std::max(exit_code, 1);
      break;
  }
  if (witness && r.status == Status::Fail && !r.witness.empty()) {
    out << "  witness:";
    for (std::size_t w : r.witness) out << " " << w;
    out << "\n";
    for (const auto& d : r.defect) out << "  defect: " << d << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

CheckReport report_of_bimodule(const Bimodule& b) {
  auto defects = bimodule_defects(b);
  if (defects.empty()) return CheckReport::pass();
  const auto& d = defects.front();
  return CheckReport::fail({d.i, d.j, d.k}, {}, "axiom " + d.axiom + " fails");
}

CheckReport report_of_pair(const std::vector<PairDefect>& defects) {
  if (defects.empty()) return CheckReport::pass();
  const auto& d = defects.front();
  return CheckReport::fail(d.where, {}, "condition " + d.id + " fails");
}

CheckReport report_of_structure(const std::vector<StructureDefect>& defects) {
  if (defects.empty()) return CheckReport::pass();
  const auto& d = defects.front();
  return CheckReport::fail(d.where, {}, "condition " + d.kind + " fails");
}

}  // namespace

JobResult run_job(const Job& job) {
  std::ostringstream out;
  int exit_code = 0;
  const std::string header = header_of(job);
  try {
    std::vector<Document> docs;
    for (const auto& spec : job.inputs) docs.push_back(resolve_input(spec));
    auto need = [&](std::size_t n) {
      if (docs.size() != n)
        throw UnknownCommand(job.cmd + " expects " + std::to_string(n) +
                             " input(s), got " + std::to_string(docs.size()));
    };
    const std::string& cmd = job.cmd;

    if (cmd == "list-fixtures") {
      need(0);
      for (const auto& n : fixture_names()) out << n << "\n";
    } else if (cmd == "check-algebra") {
      need(1);
      emit_report(out, header, is_pre_malcev(expect_algebra(docs[0])),
                  job.witness, exit_code);
    } else if (cmd == "check-malcev") {
      need(1);
      emit_report(out, header, is_malcev(expect_algebra(docs[0])), job.witness,
                  exit_code);
    } else if (cmd == "check-bimodule") {
      need(1);
      emit_report(out, header, report_of_bimodule(expect_bimodule(docs[0])),
                  job.witness, exit_code);
    } else if (cmd == "build-semidirect") {
      need(1);
      out << serialize(
          make_doc("algebra", "", semidirect(expect_bimodule(docs[0]))));
    } else if (cmd == "build-dual") {
      need(1);
      out << serialize(
          make_doc("bimodule", "", dual_bimodule(expect_bimodule(docs[0]))));
    } else if (cmd == "check-operator") {
      need(2);
      emit_report(
          out, header,
          is_o_operator({expect_matrix(docs[0]), expect_bimodule(docs[1])}),
          job.witness, exit_code);
    } else if (cmd == "check-rota-baxter") {
      need(2);
      emit_report(out, header,
                  is_rota_baxter(expect_algebra(docs[0]), expect_matrix(docs[1])),
                  job.witness, exit_code);
    } else if (cmd == "induced-product") {
      need(2);
      out << serialize(make_doc(
          "algebra", "",
          induced_product({expect_matrix(docs[0]), expect_bimodule(docs[1])})));
    } else if (cmd == "check-compat") {
      need(3);
      const Bimodule& b = expect_bimodule(docs[2]);
      emit_report(out, header,
                  are_compatible({expect_matrix(docs[0]), b},
                                 {expect_matrix(docs[1]), b}),
                  job.witness, exit_code);
    } else if (cmd == "check-nijenhuis") {
      need(2);
      emit_report(out, header,
                  is_nijenhuis(expect_algebra(docs[0]), expect_matrix(docs[1])),
                  job.witness, exit_code);
    } else if (cmd == "check-pair" || cmd == "check-dual-pair") {
      need(3);
      NijenhuisPair p{expect_matrix(docs[0]), expect_matrix(docs[1]),
                      expect_bimodule(docs[2])};
      auto defects = cmd == "check-pair" ? nijenhuis_pair_defects(p)
                                         : dual_nijenhuis_pair_defects(p);
      emit_report(out, header, report_of_pair(defects), job.witness, exit_code);
    } else if (cmd == "deform") {
      need(3);
      NijenhuisPair p{expect_matrix(docs[0]), expect_matrix(docs[1]),
                      expect_bimodule(docs[2])};
      out << serialize(make_doc("deformation", "", deformation_from_pair(p)));
    } else if (cmd == "check-deformation") {
      need(2);
      emit_report(out, header,
                  deformation_check(expect_bimodule(docs[0]),
                                    expect_deformation(docs[1]), job.t_samples),
                  job.witness, exit_code);
    } else if (cmd == "lift") {
      need(2);
      auto [ambient, s] = lift_o_operator(
          {expect_matrix(docs[0]), expect_bimodule(docs[1])});
      out << serialize(make_doc("algebra", "", std::move(ambient)));
      out << serialize(make_doc("tensor2", "", std::move(s)));
    } else if (cmd == "cybe-check") {
      need(2);
      Tensor3 res = cybe_residual(expect_algebra(docs[0]), expect_matrix(docs[1]));
      CheckReport r = CheckReport::pass();
      if (!res.is_zero()) {
        for (std::size_t i = 0; i < res.dim() && r.passed(); ++i)
          for (std::size_t j = 0; j < res.dim() && r.passed(); ++j)
            for (std::size_t k = 0; k < res.dim(); ++k)
              if (res.at(i, j, k) != 0) {
                r = CheckReport::fail({i, j, k},
                                      {format_scalar(res.at(i, j, k))},
                                      "residual is nonzero");
                break;
              }
      }
      emit_report(out, header, r, job.witness, exit_code);
    } else if (cmd == "theorem11") {
      need(2);
      emit_report(out, header,
                  theorem11_check(expect_algebra(docs[0]), expect_matrix(docs[1])),
                  job.witness, exit_code);
    } else if (cmd == "theorem12") {
      need(2);
      emit_report(
          out, header,
          theorem12_check({expect_matrix(docs[0]), expect_bimodule(docs[1])}),
          job.witness, exit_code);
    } else if (cmd == "bilinear-equiv") {
      need(2);
      BilinearEquivalences eq =
          bilinear_equivalences(expect_algebra(docs[0]), expect_matrix(docs[1]));
      auto line = [&](const char* name, const BilinearCase& c) {
        out << "  " << name << ": operator=" << (c.lhs ? "true" : "false")
            << " bilinear=" << (c.rhs ? "true" : "false")
            << (c.lhs == c.rhs ? " agree" : " disagree") << "\n";
      };
      const bool ok = eq.case1.lhs == eq.case1.rhs &&
                      eq.case2.lhs == eq.case2.rhs &&
                      eq.case3.lhs == eq.case3.rhs;
      out << header << ": " << (ok ? "PASS" : "FAIL") << "\n";
      line("case1", eq.case1);
      line("case2", eq.case2);
      line("case3", eq.case3);
      if (!ok) exit_code = std::max(exit_code, 1);
    } else if (cmd == "check-on-structure") {
      need(1);
      emit_report(out, header,
                  report_of_structure(on_structure_defects(expect_structure(docs[0]))),
                  job.witness, exit_code);
    } else if (cmd == "hierarchy") {
      need(1);
      HierarchyResult h = hierarchy(expect_structure(docs[0]), job.kmax);
      bool all = h.ladder.passed();
      std::size_t bad_k = 0, bad_l = 0;
      for (std::size_t k = 0; k < h.compat.size(); ++k)
        for (std::size_t l = 0; l < h.compat[k].size(); ++l)
          if (!h.compat[k][l].passed() && all) {
            all = false;
            bad_k = k;
            bad_l = l;
          }
      out << header << ": " << (all ? "PASS" : "FAIL") << "\n";
      out << "  operators: " << h.operators.size() << "\n";
      if (all) {
        out << "  compat: all-pass\n  ladder: PASS\n";
      } else {
        if (!h.ladder.passed())
          emit_report(out, "  ladder", h.ladder, job.witness, exit_code);
        else
          out << "  compat " << bad_k << " " << bad_l << ": FAIL\n";
        exit_code = std::max(exit_code, 1);
      }
    } else if (cmd == "check-rn") {
      need(3);
      emit_report(out, header,
                  rn_structure_check(expect_algebra(docs[0]),
                                     expect_matrix(docs[1]),
                                     expect_matrix(docs[2])),
                  job.witness, exit_code);
    } else if (cmd == "check-hessian") {
      need(2);
      emit_report(out, header,
                  pseudo_hessian_check(expect_algebra(docs[0]),
                                       expect_matrix(docs[1])),
                  job.witness, exit_code);
    } else if (cmd == "check-bn") {
      need(3);
      emit_report(out, header,
                  bn_structure_check(expect_algebra(docs[0]),
                                     expect_matrix(docs[1]),
                                     expect_matrix(docs[2])),
                  job.witness, exit_code);
    } else {
      throw UnknownCommand("unknown command: " + cmd);
    }
  } catch (const ParseError& e) {
    out << header << ": ERROR\n  note: " << e.what() << "\n";
    exit_code = 2;
  } catch (const UnknownCommand& e) {
    out << header << ": ERROR\n  note: " << e.what() << "\n";
    exit_code = 2;
  } catch (const TooFewSamples& e) {
    out << header << ": ERROR\n  note: " << e.what() << "\n";
    exit_code = 2;
  } catch (const Error& e) {
    out << header << ": ERROR\n  note: " << e.what() << "\n";
    exit_code = 1;
  }
  return {exit_code, out.str()};
}

}  // namespace pmalcev
