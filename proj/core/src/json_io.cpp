#include "bspec/json_io.hpp"

#include <stdexcept>

namespace bspec {

void to_json(json& j, const Fq& x) { j = x.code(); }

json vec_json(std::span<const Fq> v) {
  json out = json::array();
  for (Fq x : v) out.push_back(x.code());
  return out;
}

void to_json(json& j, const Matrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_json(m.row(i)));
}

void to_json(json& j, const Poly& p) { j = p.to_string(); }

void to_json(json& j, const VecSubspace& s) {
  j = json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", s.basis()}};
}

void to_json(json& j, const MatSubspace& s) {
  j = json{{"rows", s.rows()}, {"cols", s.cols()}, {"dim", s.dim()}, {"basis", s.basis()}};
}

void to_json(json& j, const SpectrumProfile& p) {
  j = json{{"char_poly", p.char_poly},
           {"distinct_in_field", p.distinct_in_field},
           {"distinct_nonzero_in_field", p.distinct_nonzero_in_field},
           {"distinct_in_closure", p.distinct_in_closure},
           {"distinct_nonzero_in_closure", p.distinct_nonzero_in_closure}};
}

void to_json(json& j, const SpaceVerdict& v) {
  j = json{{"predicate", v.predicate.name()}, {"space", v.space_id},   {"mode", to_string(v.mode)},
           {"examined", v.examined},          {"seed", v.seed},        {"outcome", to_string(v.outcome)}};
  if (v.witness)
    j["witness"] = json{{"index", v.witness->index}, {"matrix", v.witness->matrix}, {"profile", v.witness->profile}};
}

void to_json(json& j, const AdaptedScanReport& r) {
  json points = json::array();
  for (const auto& p : r.points)
    points.push_back(json{{"index", p.index},
                          {"point", vec_json(p.point)},
                          {"intersection_dim", p.intersection_dim},
                          {"kind", to_string(p.kind)}});
  j = json{{"n", r.n},
           {"projective_points", r.points.size()},
           {"adapted", r.adapted},
           {"weakly_adapted", r.weakly_adapted},
           {"neither", r.neither},
           {"points", std::move(points)}};
}

void to_json(json& j, const HurdleSearch& h) {
  j = json{{"status", to_string(h.status)}, {"candidates", h.candidates}};
  if (h.certificate) {
    j["index"] = h.index;
    j["p"] = h.certificate->p;
    j["g"] = h.certificate->g;
  }
}

void to_json(json& j, const LemmaVerdict& v) {
  j = json{{"verdict", to_string(v.verdict)}, {"mode", to_string(v.mode)}, {"detail", v.detail}};
  if (v.point) j["point"] = vec_json(*v.point);
  if (v.matrix) j["matrix"] = *v.matrix;
}

void to_json(json& j, const TrialRecord& t) {
  j = json{{"index", t.index}, {"verdict", to_string(t.verdict)}, {"mode", to_string(t.mode)}, {"detail", t.detail}};
}

void to_json(json& j, const HarnessReport& r) {
  j = json{{"lemma", r.lemma},         {"field", r.field},     {"seed", r.seed},
           {"instances", r.instances}, {"held", r.held},       {"failed", r.failed},
           {"hypothesis_violations", r.violations},            {"budget", r.over_budget},
           {"sampled", r.sampled},     {"passed", r.passed()}, {"notable", r.notable}};
  if (!r.extra.empty()) j["extra"] = r.extra;
}

Vec vec_from_json(Field f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array of codes");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw std::invalid_argument("field elements must be non-negative integer codes");
    v.push_back(f.element(x.get<std::uint32_t>()));
  }
  return v;
}

Matrix matrix_from_json(Field f, const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(f, r));
  const std::size_t cols = rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

MatSubspace space_from_json(Field f, const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("basis"))
    throw std::invalid_argument("space JSON needs rows, cols and basis");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<Matrix> mats;
  for (const auto& m : j.at("basis")) {
    Matrix b = matrix_from_json(f, m);
    if (b.rows() != rows || b.cols() != cols) throw std::invalid_argument("basis matrix has the wrong shape");
    mats.push_back(std::move(b));
  }
  return MatSubspace::span(f, rows, cols, mats);
}

json strip_timing(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items())
      if (k != "timing_ms") out[k] = strip_timing(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

}  // namespace bspec
