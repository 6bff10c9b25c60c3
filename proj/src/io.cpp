#include "gstruct/io.hpp"

#include <fstream>
#include <sstream>

namespace gstruct {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t index_from_json(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound) {
    throw ParseError(std::string(what) + " out of range 1.." + std::to_string(bound));
  }
  return static_cast<std::size_t>(v - 1);
}

int sign_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1)) {
    throw ParseError(std::string(what) + " must be 1 or -1");
  }
  return j.get<int>();
}

RMatrix sparse_from_json(const json& j, std::size_t m) {
  if (!j.is_object()) throw ParseError("sparse matrix must be an object of \"i,j\": value");
  RMatrix out = zeros(m, m);
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("bad sparse key '" + key + "'");
    std::size_t r = 0;
    std::size_t c = 0;
    try {
      std::size_t used = 0;
      const std::string rs = key.substr(0, comma);
      const std::string cs = key.substr(comma + 1);
      r = std::stoul(rs, &used);
      if (used != rs.size()) throw std::invalid_argument(key);
      c = std::stoul(cs, &used);
      if (used != cs.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw ParseError("bad sparse key '" + key + "'");
    }
    if (r < 1 || r > m || c < 1 || c > m) throw ParseError("sparse key out of range: " + key);
    out(r - 1, c - 1) = rational_from_json(value);
  }
  return out;
}

json sparse_to_json(const RMatrix& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_string(m(i, j));
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string such as \"-3/4\", got " + j.dump());
}

json rational_to_json(const Rational& r) { return to_string(r); }

RMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  RMatrix out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = rational_from_json(j[i][c]);
  }
  return out;
}

json matrix_to_json(const RMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  const std::size_t m = index_from_json(field(j, "dim"), 1000, "dim") + 1;
  if (j.contains("salamon")) {
    if (!j["salamon"].is_string()) throw ParseError("salamon must be a string");
    LieAlgebra L = parse_salamon(j["salamon"].get<std::string>());
    if (L.dim() != m) throw ParseError("salamon string does not have dim entries");
    return L;
  }
  const json& list = field(j, "brackets");
  if (!list.is_array()) throw ParseError("brackets must be an array");
  std::vector<BracketTerm> terms;
  for (const auto& t : list) {
    BracketTerm term{index_from_json(field(t, "i"), m, "i"), index_from_json(field(t, "j"), m, "j"),
                     index_from_json(field(t, "k"), m, "k"), rational_from_json(field(t, "c"))};
    if (term.i == term.j && term.coeff != 0) throw ParseError("bracket [e_i, e_i] must vanish");
    terms.push_back(term);
  }
  LieAlgebra L(m, terms);
  require_jacobi(L);
  return L;
}

json algebra_to_json(const LieAlgebra& L, const std::optional<std::string>& salamon) {
  json out{{"dim", L.dim()}};
  if (salamon) {
    out["salamon"] = *salamon;
    return out;
  }
  json list = json::array();
  for (const auto& t : L.nonzero_terms()) {
    list.push_back({{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"c", to_string(t.coeff)}});
  }
  out["brackets"] = std::move(list);
  return out;
}

PseudoMetric metric_from_json(const json& j) {
  if (j.is_object() && j.contains("gram")) return PseudoMetric::from_gram(matrix_from_json(j["gram"]));
  const json& b = field(j, "gram_in_basis");
  return PseudoMetric::from_basis(matrix_from_json(field(b, "C")), matrix_from_json(field(b, "P")));
}

json metric_to_json(const PseudoMetric& g) { return {{"gram", matrix_to_json(g.gram())}}; }

json metric_to_json(const RMatrix& C, const RMatrix& P) {
  return {{"gram_in_basis", {{"C", matrix_to_json(C)}, {"P", matrix_to_json(P)}}}};
}

StructureFile structure_from_json(const json& j, std::size_t m) {
  StructureFile f;
  f.lambda = sign_from_json(field(j, "lambda"), "lambda");
  f.ell = sign_from_json(field(j, "ell"), "ell");
  if (j.contains("S")) {
    f.S = matrix_from_json(j["S"]);
    if (f.S->rows() != 2 * m || f.S->cols() != 2 * m) {
      throw ParseError("S must be " + std::to_string(2 * m) + "x" + std::to_string(2 * m));
    }
    return f;
  }
  f.A = sparse_from_json(field(j, "A"), m);
  f.B = sparse_from_json(field(j, "B"), m);
  return f;
}

GenStructure structure_matrix(const StructureFile& f, const PseudoMetric& metric) {
  if (f.S) return GenStructure(*f.S, f.lambda, f.ell);
  const RMatrix& G = metric.gram();
  const RMatrix S = assemble(*f.A, Rational(f.lambda * f.ell) * (*f.B * metric.inverse()), G * *f.B,
                             -f.A->transpose());
  return GenStructure(S, f.lambda, f.ell);
}

json structure_to_json(const GenStructure& S) {
  return {{"lambda", S.lambda()}, {"ell", S.ell()}, {"S", matrix_to_json(S.matrix())}};
}

json classical_to_json(const ClassicalForm& cf, int lambda, int ell) {
  return {{"lambda", lambda}, {"ell", ell}, {"A", sparse_to_json(cf.A)}, {"B", sparse_to_json(cf.B)}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.witness) jc["witness"] = matrix_to_json(*c.witness);
    checks.push_back(std::move(jc));
  }
  return {{"subject", r.subject}, {"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

Report report_from_json(const json& j) {
  Report r;
  const json& subject = field(j, "subject");
  if (!subject.is_string()) throw ParseError("subject must be a string");
  r.subject = subject.get<std::string>();
  const json& checks = field(j, "checks");
  if (!checks.is_array()) throw ParseError("checks must be an array");
  for (const auto& jc : checks) {
    const json& pass = field(jc, "pass");
    if (!pass.is_boolean()) throw ParseError("pass must be a boolean");
    std::optional<RMatrix> witness;
    if (jc.contains("witness")) witness = matrix_from_json(jc["witness"]);
    r.add(field(jc, "name").get<std::string>(), pass.get<bool>(),
          jc.value("detail", std::string{}), std::move(witness));
  }
  return r;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ExportBundle export_entry(const CatalogEntry& entry, int epsilon, const Rational& s) {
  ExportBundle b;
  b.algebra = algebra_to_json(entry.algebra, entry.salamon);
  b.metric = entry.metric_values && entry.metric_basis
                 ? metric_to_json(*entry.metric_values, *entry.metric_basis)
                 : metric_to_json(entry.metric);
  b.structure = entry.classical ? classical_to_json(*entry.classical, entry.lambda, entry.ell)
                                : structure_to_json(entry_structure(entry, epsilon, s));
  return b;
}

}  // namespace gstruct
