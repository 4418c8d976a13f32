#include "cq/spec_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cq/errors.hpp"

namespace cq {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

namespace {

Complex entry_from_json(const Json& e, const std::string& what) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw InputError(what + ": matrix entries must be numbers or [re, im] pairs");
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing key '" + key + "'");
  return j.at(key);
}

int int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<int>();
}

}  // namespace

ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return ComplexMatrix(0, 0);
  if (!j[0].is_array()) throw InputError(what + ": expected an array of rows");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw InputError(what + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

RealMatrix real_matrix_from_json(const Json& j, const std::string& what) {
  const ComplexMatrix m = complex_matrix_from_json(j, what);
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0) throw InputError(what + ": expected a real matrix");
  return m.real();
}

RealVector real_vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of numbers");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(what + ": expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return std::make_shared<const FiniteGroup>(FiniteGroup::preset(j.get<std::string>()));
  if (!j.is_object()) throw InputError("group: expected {\"preset\": ...} or {\"table\": ...}");
  if (j.contains("preset")) {
    if (!j.at("preset").is_string()) throw InputError("group preset must be a string");
    return std::make_shared<const FiniteGroup>(FiniteGroup::preset(j.at("preset").get<std::string>()));
  }
  const auto& t = require(j, "table", "group");
  std::vector<std::vector<int>> table;
  try {
    table = t.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("group table must be an array of integer rows");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    try {
      labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("group labels must be strings");
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup(std::move(table), std::move(labels)));
}

UnitaryRep rep_from_json(const Json& j, const GroupPtr& g) {
  if (j.is_string() || (j.is_object() && j.contains("preset"))) {
    const auto& p = j.is_string() ? j : j.at("preset");
    if (!p.is_string()) throw InputError("rep preset must be a string");
    const auto name = p.get<std::string>();
    if (name == "regular") return regular_rep(g);
    if (name == "trivial") return trivial_rep(g);
    throw InputError("unknown rep preset '" + name + "' (expected regular or trivial)");
  }
  if (j.is_object() && j.contains("irrep")) {
    const int k = int_from_json(j.at("irrep"), "irrep index");
    const auto irreps = builtin_irreps(g);
    if (k < 0 || k >= static_cast<int>(irreps.size()))
      throw InputError("irrep index out of range (0.." + std::to_string(irreps.size() - 1) + ")");
    return irreps[static_cast<std::size_t>(k)];
  }
  const auto& mats = require(j, "matrices", "rep");
  if (!mats.is_array()) throw InputError("rep matrices must be an array");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < mats.size(); ++i)
    out.push_back(complex_matrix_from_json(mats[i], "rep matrix " + std::to_string(i)));
  if (static_cast<int>(out.size()) != g->order())
    throw InputError("rep needs one matrix per group element (" + std::to_string(g->order()) + ")");
  return UnitaryRep(g, std::move(out));
}

InductionCase induction_case_from_json(const Json& j) {
  InductionCase c;
  if (j.is_object() && j.contains("gram")) {
    c.gram = complex_matrix_from_json(j.at("gram"), "gram");
    return c;
  }
  const auto g = group_from_json(require(j, "group", "induction case"));
  c.group = g;
  c.u = rep_from_json(require(j, "U", "induction case"), g);
  c.rho = j.contains("rho") ? rep_from_json(j.at("rho"), g) : trivial_rep(g);
  return c;
}

std::vector<ComplexMatrix> observables_from_json(const Json& j) {
  const Json& list = j.is_object() ? require(j, "observables", "observables file") : j;
  if (!list.is_array()) throw InputError("observables: expected an array of matrices");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(complex_matrix_from_json(list[i], "observable " + std::to_string(i)));
  return out;
}

LinearRealization realization_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("realization: expected an object");
  if (j.contains("directions")) {
    const int n = int_from_json(require(j, "n", "translation realization"), "n");
    return LinearRealization::translations(n, real_matrix_from_json(j.at("directions"), "directions"));
  }
  SymplecticVectorSpace source = j.contains("omega")
                                     ? SymplecticVectorSpace(real_matrix_from_json(j.at("omega"), "omega"))
                                     : SymplecticVectorSpace::canonical(int_from_json(require(j, "n", "realization"), "n"));
  RealMatrix a = real_matrix_from_json(require(j, "J", "realization"), "J");
  if (a.size() == 0) a = RealMatrix(0, source.dim());
  RealVector b = j.contains("offset") ? real_vector_from_json(j.at("offset"), "offset") : RealVector::Zero(a.rows());
  return LinearRealization(std::move(source), std::move(a), std::move(b));
}

ReductionProblem reduction_problem_from_json(const Json& j) {
  LinearRealization jj = realization_from_json(j);
  if (j.contains("rho")) {
    LinearRealization rho = realization_from_json(j.at("rho"));
    return {std::move(jj), std::move(rho), false};
  }
  const RealVector level = j.contains("level") ? real_vector_from_json(j.at("level"), "level") : RealVector();
  LinearRealization pt = LinearRealization::point(jj.target_dim(), level);
  return {std::move(jj), std::move(pt), true};
}

ProjectiveRep projective_rep_from_json(const Json& j) {
  const auto g = group_from_json(require(j, "group", "projective rep"));
  const auto& mats = require(j, "matrices", "projective rep");
  if (!mats.is_array()) throw InputError("projective rep matrices must be an array");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < mats.size(); ++i)
    out.push_back(complex_matrix_from_json(mats[i], "projective matrix " + std::to_string(i)));
  if (out.empty()) throw InputError("projective rep needs matrices");
  return multiplier_of(g, std::move(out));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quote(const std::string& s) { return Json(s).dump(); }

void dump_rec(const Json& j, std::ostringstream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << quote(it.key()) << ": ";
        dump_rec(it.value(), out, depth + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Scalars and flat arrays (such as [re, im] pairs) stay on one line.
      auto flat = [](const Json& e) {
        return !e.is_structured() ||
               (e.is_array() && std::none_of(e.begin(), e.end(), [](const Json& x) { return x.is_structured(); }));
      };
      if (std::all_of(j.begin(), j.end(), flat)) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          dump_rec(j[i], out, depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << inner;
        dump_rec(j[i], out, depth + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? format_number(x) : "null");
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::ostringstream out;
  dump_rec(j, out, 0);
  out << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << cell(header[i]);
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw DimensionMismatch("CSV row width differs from the header");
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace cq
