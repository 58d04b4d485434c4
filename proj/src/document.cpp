#include "qchan/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qchan {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::size_t positive_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0) {
    throw InputError(std::string("'") + key + "' must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

Json test_to_json(const ExtremalityTest& t) {
  Json j;
  j["verdict"] = to_string(t.verdict);
  j["decided_by"] = to_string(t.path);
  j["gram_order"] = t.gram_order;
  j["gram_rank"] = t.gram_rank;
  if (t.path == DecisionPath::GramRank) {
    j["smallest_kept_eigenvalue"] = number_or_null(t.smallest_kept_eigenvalue);
    j["largest_dropped_eigenvalue"] = number_or_null(t.largest_dropped_eigenvalue);
  } else {
    j["smallest_kept_eigenvalue"] = nullptr;
    j["largest_dropped_eigenvalue"] = nullptr;
  }
  j["ill_conditioned"] = t.ill_conditioned;
  return j;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw InputError("matrix rows must be non-empty lists");
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InputError("matrix rows differ in length");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw InputError("matrix entries must be [real, imaginary] pairs");
      }
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return {rows, cols, std::move(entries)};
}

Json to_json(const ChannelDocument& doc) {
  Json j;
  j["format_version"] = kFormatVersion;
  if (doc.name) j["name"] = *doc.name;
  if (doc.provenance) j["provenance"] = *doc.provenance;
  j["dim_in"] = doc.kraus.dim_in();
  j["dim_out"] = doc.kraus.dim_out();
  Json ops = Json::array();
  for (const auto& e : doc.kraus.ops()) ops.push_back(matrix_to_json(e));
  j["kraus"] = std::move(ops);
  return j;
}

ChannelDocument channel_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("channel document must be a JSON object");
  if (!j.contains("format_version") || j["format_version"] != kFormatVersion) {
    throw InputError("unsupported or missing format_version (expected 1)");
  }
  const std::size_t dim_in = positive_dim(j, "dim_in");
  const std::size_t dim_out = positive_dim(j, "dim_out");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw InputError("'kraus' must be a non-empty list of matrices");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& m : j["kraus"]) {
    ComplexMatrix e = matrix_from_json(m);
    if (e.rows() != dim_out || e.cols() != dim_in) {
      throw InputError("Kraus operator shape " + std::to_string(e.rows()) + "x" +
                       std::to_string(e.cols()) + " does not match dim_out x dim_in");
    }
    ops.push_back(std::move(e));
  }
  ChannelDocument doc{std::nullopt, std::nullopt, KrausSet(std::move(ops))};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw InputError("'provenance' must be a string");
    doc.provenance = j["provenance"].get<std::string>();
  }
  return doc;
}

ChannelDocument load_channel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return channel_from_json(j);
}

void save_channel(const ChannelDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << dump(to_json(doc));
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json report_to_json(const ExtremalityReport& rep, const TolerancePolicy& tol,
                    std::optional<double> elapsed_ms) {
  Json j;
  j["tool"] = "qchan";
  j["version"] = kToolVersion;
  j["tolerance"] = {{"rank_tol", tol.rel_rank_tol}, {"check_tol", tol.abs_check_tol}};
  j["dim_in"] = rep.dim_in;
  j["dim_out"] = rep.dim_out;
  const auto& c = rep.channel_class;
  j["class"] = {{"cp", c.cp}, {"tp", c.tp}, {"unital", c.unital}, {"ucpt", c.ucpt}};
  j["residuals"] = {{"tp", c.tp_residual}, {"unital", c.unital_residual}};
  j["kraus_count"] = rep.kraus_count;
  j["choi_rank"] = rep.choi_rank;
  j["extreme_cpt"] = to_string(rep.extreme_cpt());
  j["extreme_ucp"] = to_string(rep.extreme_ucp());
  j["extreme_ucpt"] = to_string(rep.extreme_ucpt());
  j["ucpt_rank_bound"] = rep.rank_bound.sharp;
  j["ucpt_rank_bound_coarse"] = rep.rank_bound.coarse;
  j["bound_violated"] = rep.bound_violated;

  const auto headline = rep.headline_gram();
  j["gram_order"] = headline ? headline->gram_order : 0;
  j["gram_rank"] = headline ? headline->gram_rank : 0;
  j["smallest_kept_eigenvalue"] = headline ? number_or_null(headline->smallest_kept_eigenvalue) : Json(nullptr);
  j["largest_dropped_eigenvalue"] = headline ? number_or_null(headline->largest_dropped_eigenvalue) : Json(nullptr);
  j["ill_conditioned"] = rep.ill_conditioned;
  j["tests"] = {{"cpt", test_to_json(rep.cpt)},
                {"ucp", test_to_json(rep.ucp)},
                {"ucpt", test_to_json(rep.ucpt)}};
  if (elapsed_ms) j["timing"] = {{"elapsed_ms", *elapsed_ms}};
  return j;
}

Json choi_to_json(const ChoiMatrix& c) {
  Json j;
  j["dim_in"] = c.dim_in();
  j["dim_out"] = c.dim_out();
  j["matrix"] = matrix_to_json(c.matrix());
  return j;
}

}  // namespace qchan
