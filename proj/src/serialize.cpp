#include "qcube/serialize.hpp"

#include <cstdio>

namespace qcube {

Json prob_json(const ProbVec8& p) {
  Json j = Json::array();
  for (std::size_t i = 0; i < 8; ++i) j.push_back(to_string(p[i]));
  return j;
}

ProbVec8 prob_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("expected an array of 8 rational strings");
  Vec8 e;
  for (std::size_t i = 0; i < 8; ++i) e[i] = rat_from_string(j[i].get<std::string>());
  return ProbVec8(e);
}

Json bloch_json(const std::array<Rat, 3>& r) {
  return Json::array({to_string(r[0]), to_string(r[1]), to_string(r[2])});
}

namespace {

std::string float17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json density_json(const DensityMatrix& rho) {
  Json j = Json::array();
  for (std::size_t i = 0; i < 4; ++i)
    j.push_back(Json::array({float17(rho.rho.m[i].real()), float17(rho.rho.m[i].imag())}));
  return j;
}

Json report_json(const Report& report) {
  Json failures = Json::array();
  for (const CheckFailure& f : report.failures)
    failures.push_back(Json{{"kind", f.kind}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return Json{{"checks", report.checks}, {"passes", report.passes}, {"failures", failures}};
}

Json eval_json(const Circuit& c, const std::vector<BranchOutcome>& branches) {
  Json out;
  out["mode"] = c.mode == Mode::Full ? "full" : "classical";
  Json list = Json::array();
  for (const BranchOutcome& br : branches) {
    Json outcomes = Json::array();
    for (const OutcomeRecord& rec : br.outcomes) {
      Json o;
      o["axis"] = std::string(1, axis_letter(rec.axis));
      o["tag"] = rec.tag ? Json(*rec.tag) : Json(nullptr);
      o["face"] = std::string(1, face_letter(rec.face));
      outcomes.push_back(std::move(o));
    }
    Json b;
    b["outcomes"] = std::move(outcomes);
    b["probability"] = to_string(br.probability);
    b["final_bloch"] = bloch_json(bloch_of(br.final_state.prob()));
    list.push_back(std::move(b));
  }
  out["branches"] = std::move(list);
  return out;
}

Json sample_json(const SampleResult& result) {
  Json counts = Json::object();
  for (const auto& [key, n] : result.counts) counts[key] = n;
  return Json{{"shots", result.shots}, {"seed", result.seed}, {"counts", counts}};
}

namespace {

Json matrix_json(const Mat3& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i)
    rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

}  // namespace

Json group_json(const RotationGroup& group) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < group.size(); ++i) {
    const Rotation& r = group.element(i);
    Json e;
    e["index"] = i;
    e["name"] = r.name;
    e["perm"] = cycle_notation(r.perm);
    e["matrix"] = matrix_json(r.matrix);
    e["order"] = group.element_order(i);
    elements.push_back(std::move(e));
  }
  return Json{{"count", group.size()}, {"elements", elements}};
}

Json group_classes_json(const RotationGroup& group) {
  Json classes = Json::array();
  for (const auto& cls : group.conjugacy_classes()) {
    Json members = Json::array();
    for (std::size_t i : cls.members) members.push_back(group.element(i).name);
    classes.push_back(Json{{"kind", cls.kind}, {"size", cls.members.size()}, {"members", members}});
  }
  return Json{{"classes", classes}};
}

Json group_table_json(const RotationGroup& group) {
  Json names = Json::array();
  for (const Rotation& r : group.elements()) names.push_back(r.name);
  Json table = Json::array();
  for (std::size_t a = 0; a < group.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < group.size(); ++b) row.push_back(group.compose_index(a, b));
    table.push_back(std::move(row));
  }
  return Json{{"elements", names}, {"table", table}};
}

}  // namespace qcube
