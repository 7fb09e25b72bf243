#include "sawlab/io.hpp"

#include <iomanip>
#include <sstream>

#include "sawlab/error.hpp"

namespace sawlab {

namespace {

Json big_list(const std::vector<mpz_class>& v) {
  auto out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<mpz_class> big_list_from(const Json& j) {
  std::vector<mpz_class> out;
  for (const auto& x : j) {
    mpz_class v;
    if (v.set_str(x.get<std::string>(), 10) != 0) throw UsageError("bad big integer in table");
    out.push_back(v);
  }
  return out;
}

Json labels(const std::vector<VertexLabel>& v) {
  auto out = Json::array();
  for (const auto& x : v) out.push_back(label_to_json(x));
  return out;
}

Json rounded(double x, const char* direction) { return {{"value", x}, {"rounding", direction}}; }

}  // namespace

Json label_to_json(const VertexLabel& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

VertexLabel label_from_json(const Json& j) {
  const auto v = j.get<std::vector<std::int64_t>>();
  return VertexLabel(std::span<const std::int64_t>(v.data(), v.size()));
}

Json to_json(const CountTable& t) {
  Json j;
  j["family"] = t.family;
  j["height"] = t.height;
  j["n_max"] = t.n_max;
  j["complete_through"] = t.complete_through;
  j["exhausted"] = t.exhausted;
  j["declared_orbits"] = t.declared_orbits;
  j["declared_d"] = t.declared_d;
  j["sigma"] = big_list(t.sigma);
  j["c"] = big_list(t.c);
  j["b"] = big_list(t.b);
  j["sigma_reps"] = labels(t.sigma_reps);
  auto sig = Json::array();
  for (const auto& row : t.sigma_by_rep) sig.push_back(big_list(row));
  j["sigma_by_rep"] = sig;
  j["b_reps"] = labels(t.b_reps);
  auto br = Json::array();
  for (const auto& row : t.b_by_rep) br.push_back(big_list(row));
  j["b_by_rep"] = br;
  auto spans = Json::array();
  for (const auto& row : t.b_by_span) spans.push_back(big_list(row));
  j["b_by_span"] = spans;
  return j;
}

CountTable table_from_json(const Json& j) {
  try {
    CountTable t;
    t.family = j.at("family").get<std::string>();
    t.height = j.at("height").get<std::string>();
    t.n_max = j.at("n_max").get<int>();
    t.complete_through = j.at("complete_through").get<int>();
    t.exhausted = j.at("exhausted").get<bool>();
    t.declared_orbits = j.at("declared_orbits").get<std::size_t>();
    t.declared_d = j.at("declared_d").get<int>();
    t.sigma = big_list_from(j.at("sigma"));
    t.c = big_list_from(j.at("c"));
    t.b = big_list_from(j.at("b"));
    for (const auto& x : j.at("sigma_reps")) t.sigma_reps.push_back(label_from_json(x));
    for (const auto& row : j.at("sigma_by_rep")) t.sigma_by_rep.push_back(big_list_from(row));
    for (const auto& x : j.at("b_reps")) t.b_reps.push_back(label_from_json(x));
    for (const auto& row : j.at("b_by_rep")) t.b_by_rep.push_back(big_list_from(row));
    for (const auto& row : j.at("b_by_span")) t.b_by_span.push_back(big_list_from(row));
    const auto size = static_cast<std::size_t>(t.complete_through + 1);
    if (t.sigma.size() != size || t.c.size() != size || t.b.size() != size || t.b_by_span.size() != size) {
      throw UsageError("table arrays do not match complete_through");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed count table: ") + e.what());
  }
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["family"] = r.family;
  j["height"] = r.height;
  j["n_max"] = r.n_max;
  j["lower"] = rounded(r.lower, "down");
  j["lower_at"] = r.lower_at;
  j["upper"] = rounded(r.upper, "up");
  j["upper_at"] = r.upper_at;
  j["width"] = r.width();
  j["lower_candidates"] = r.lower_candidates;
  j["upper_candidates"] = r.upper_candidates;
  return j;
}

Json to_json(const HeightValidationReport& r) {
  Json j;
  j["radius"] = r.radius;
  j["ok"] = r.ok();
  j["measured_d"] = r.measured_d;
  j["declared_d"] = r.declared_d;
  j["d_within_declared"] = r.d_within_declared;
  j["declared_r"] = r.declared_r;
  j["r_check"] = to_string(r.r_check);
  auto v = Json::array();
  for (const auto& x : r.violations) {
    Json e{{"clause", std::string(1, x.clause)},
           {"witness", label_to_json(x.witness)},
           {"detail", x.detail},
           {"value", x.value},
           {"expected", x.expected}};
    if (x.other) e["other"] = label_to_json(*x.other);
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

Json to_json(const SimilarityResult& r) {
  return {{"K", r.k}, {"cap", r.cap}, {"capped", r.capped}, {"mismatch_radius", r.mismatch_radius}};
}

Json to_json(const LocalityReport& r) {
  Json j;
  j["similarity"] = to_json(r.similarity);
  j["slack"] = r.slack;
  j["n_max"] = r.n_max;
  j["divergence_index"] = r.divergence_index;
  j["applicable"] = r.applicable;
  j["tables_consistent"] = r.tables_consistent;
  j["cross_bounds"] = r.cross_bounds;
  j["gap"] = r.gap;
  j["a"] = {{"table", to_json(r.table_a)}, {"bounds", to_json(r.bounds_a)}};
  j["b"] = {{"table", to_json(r.table_b)}, {"bounds", to_json(r.bounds_b)}};
  return j;
}

Json to_json(const BridgeDecomposition& d) { return {{"spans", d.spans}, {"breaks", d.breaks}, {"k", d.spans.size()}}; }

std::vector<std::string> verify_table(const CountTable& t) {
  std::vector<std::string> bad;
  const auto size = static_cast<std::size_t>(t.complete_through + 1);
  if (t.sigma.size() != size || t.c.size() != size || t.b.size() != size) {
    bad.push_back("array lengths disagree with complete_through");
    return bad;
  }
  if (size == 0) return bad;
  if (t.sigma[0] != 1 || t.c[0] != 1 || t.b[0] != 1) bad.push_back("empty-walk counts must be 1");
  for (std::size_t n = 0; n < size; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    if (t.sigma[n] < 0 || t.c[n] < 0 || t.b[n] < 0) bad.push_back("negative count" + at);
    mpz_class total = 0;
    if (n < t.b_by_span.size()) {
      for (const auto& x : t.b_by_span[n]) total += x;
    }
    if (total != t.b[n]) bad.push_back("b differs from its span breakdown" + at);
    mpz_class sigma_max = 0;
    for (const auto& row : t.sigma_by_rep) sigma_max = std::max(sigma_max, row.at(n));
    if (sigma_max != t.sigma[n]) bad.push_back("sigma is not the maximum over representatives" + at);
    if (!t.b_by_rep.empty()) {
      mpz_class b_min = t.b_by_rep.front().at(n);
      for (const auto& row : t.b_by_rep) b_min = std::min(b_min, row.at(n));
      if (b_min != t.b[n]) bad.push_back("b is not the minimum over representatives" + at);
      if (t.b_by_rep.front().at(n) > t.c[n]) bad.push_back("b exceeds c at the origin" + at);
    }
    if (!t.sigma_by_rep.empty() && t.c[n] > t.sigma_by_rep.front().at(n)) {
      bad.push_back("c exceeds sigma at the origin" + at);
    }
  }
  for (const auto& v : fekete_violations(t)) {
    bad.push_back(std::string(v.sequence == 's' ? "sigma" : "b") + " violates Fekete at (" +
                  std::to_string(v.m) + "," + std::to_string(v.n) + ")");
  }
  return bad;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_human(const CountTable& t) {
  std::ostringstream out;
  out << t.family << " / " << t.height << "\n";
  out << std::setw(4) << "n" << std::setw(22) << "sigma" << std::setw(22) << "c" << std::setw(22) << "b" << "\n";
  for (int n = 0; n <= t.complete_through; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out << std::setw(4) << n << std::setw(22) << t.sigma[i].get_str() << std::setw(22) << t.c[i].get_str()
        << std::setw(22) << t.b[i].get_str() << "\n";
  }
  if (t.exhausted) out << "(budget exhausted; complete through n=" << t.complete_through << ")\n";
  return out.str();
}

std::string render_csv(const CountTable& t) {
  std::ostringstream out;
  out << "n,sigma,c,b\n";
  for (int n = 0; n <= t.complete_through; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out << n << ',' << t.sigma[i].get_str() << ',' << t.c[i].get_str() << ',' << t.b[i].get_str() << "\n";
  }
  return out.str();
}

}  // namespace sawlab
