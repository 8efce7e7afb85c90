#include "detspace/io.hpp"

#include <fstream>

namespace detspace {

Json field_to_json(const FieldPtr& f) {
  Json j;
  if (f->is_prime_field()) {
    j["p"] = f->characteristic();
    j["k"] = 1;
    return j;
  }
  require(f->base()->is_prime_field(),
          "tower fields have no file representation");
  j["p"] = f->characteristic();
  j["k"] = f->degree();
  j["modulus"] = f->modulus();
  return j;
}

FieldPtr json_to_field(const Json& j) {
  require(j.is_object() && j.contains("p") && j.contains("k"),
          "field record needs \"p\" and \"k\"");
  u64 p = j.at("p").get<u64>();
  unsigned k = j.at("k").get<unsigned>();
  std::optional<std::vector<Elt>> modulus;
  if (j.contains("modulus"))
    modulus = j.at("modulus").get<std::vector<Elt>>();
  return Field::make(p, k, modulus);
}

Json subspace_to_json(const MatSubspace& sub) {
  Json j;
  j["field"] = field_to_json(sub.field());
  if (sub.is_square()) {
    j["n"] = sub.rows();
  } else {
    j["rows"] = sub.rows();
    j["cols"] = sub.cols();
  }
  Json basis = Json::array();
  for (const Matrix& m : sub.basis()) {
    Json mat = Json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (unsigned j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2));
      mat.push_back(row);
    }
    basis.push_back(mat);
  }
  j["basis"] = basis;
  if (!sub.tag().empty()) j["tag"] = sub.tag();
  return j;
}

MatSubspace json_to_subspace(const Json& j) {
  require(j.is_object() && j.contains("field") && j.contains("basis"),
          "subspace record needs \"field\" and \"basis\"");
  FieldPtr f = json_to_field(j.at("field"));
  unsigned rows, cols;
  if (j.contains("n")) {
    rows = cols = j.at("n").get<unsigned>();
  } else {
    require(j.contains("rows") && j.contains("cols"),
            "subspace record needs \"n\" or \"rows\"/\"cols\"");
    rows = j.at("rows").get<unsigned>();
    cols = j.at("cols").get<unsigned>();
  }
  std::vector<Matrix> basis;
  for (const Json& mat : j.at("basis")) {
    require(mat.is_array() && mat.size() == rows, "basis matrix row count");
    std::vector<std::vector<Elt>> r;
    for (const Json& row : mat) {
      require(row.is_array() && row.size() == cols, "basis matrix row width");
      r.push_back(row.get<std::vector<Elt>>());
    }
    basis.push_back(Matrix::from_rows(f, r));
  }
  std::string tag = j.value("tag", std::string());
  return MatSubspace(f, rows, cols, std::move(basis), tag);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  require(out.good(), "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

MatSubspace read_subspace(const std::string& path) {
  return json_to_subspace(read_json_file(path));
}

void write_subspace(const std::string& path, const MatSubspace& sub) {
  write_json_file(path, subspace_to_json(sub));
}

}  // namespace detspace
