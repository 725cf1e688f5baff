#include "nh/json_io.hpp"

namespace nh {

CartanDatum datum_from_spec(const std::string& spec) {
  std::size_t first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos &&
      (spec[first] == '[' || spec[first] == '{')) {
    Json j = Json::parse(spec);
    std::string name = "cartan";
    Json matrix = j;
    if (j.is_object()) {
      matrix = j.at("cartan");
      if (j.contains("name")) name = j.at("name").get<std::string>();
    }
    auto rows = matrix.get<std::vector<std::vector<int>>>();
    return CartanDatum::from_cartan_matrix(std::move(rows), name);
  }
  return CartanDatum::named(spec);
}

Json poly_to_json(const Polynomial& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["coeff"] = to_string(c);
    t["exps"] = m.exps;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Polynomial poly_from_json(const Json& j) {
  int nvars = j.at("vars").get<int>();
  Polynomial p(nvars);
  for (const auto& t : j.at("terms")) {
    auto coeff = parse_rational(t.at("coeff").get<std::string>());
    if (!coeff) throw std::invalid_argument("bad rational in polynomial JSON");
    std::vector<int> exps = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("bad exponent vector length");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
    p.add_term(Monomial(exps), *coeff);
  }
  return p;
}

Json nh_to_json(const NHElement& h) {
  Json j;
  j["group"] = h.context()->group().datum().name;
  j["convention"] = convention_name(h.context()->convention());
  Json terms = Json::array();
  for (const auto& [w, c] : h.coeffs()) {
    Json t;
    t["word"] = w.reduced_word();
    t["coeff"] = poly_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json gkm_class_to_json(const WeylGroup& group, const GKMClass& c) {
  Json j;
  j["group"] = group.datum().name;
  j["parabolic"] = c.parabolic.indices;
  Json values = Json::array();
  for (const auto& [w, p] : c.values) {
    Json v;
    v["rep"] = w.reduced_word();
    v["poly"] = poly_to_json(p);
    values.push_back(std::move(v));
  }
  j["values"] = std::move(values);
  return j;
}

GKMClass gkm_class_from_json(const WeylGroup& group, const Json& j) {
  GKMClass c;
  c.parabolic = ParabolicSubset(j.at("parabolic").get<std::vector<int>>());
  c.parabolic.validate(group.rank());
  auto reps = group.min_coset_reps(c.parabolic);
  for (const auto& v : j.at("values")) {
    auto word = v.at("rep").get<std::vector<int>>();
    WeylElement w = group.from_word(word);
    bool minimal = false;
    for (const auto& r : reps) minimal = minimal || r == w;
    if (!minimal)
      throw std::invalid_argument(
          "GKM value indexed by a non-minimal representative");
    c.values.emplace(w, poly_from_json(v.at("poly")));
  }
  if (c.values.size() != reps.size())
    throw std::invalid_argument("GKM class has a wrong index set");
  return c;
}

Json fixed_point_vector_to_json(const FixedPointVector& v) {
  Json j;
  Json values = Json::array();
  for (const auto& [w, f] : v.values) {
    if (f.is_zero()) continue;
    Json entry;
    entry["elem"] = w.reduced_word();
    entry["num"] = poly_to_json(f.numerator());
    Json den = Json::array();
    for (const auto& l : f.denominator_factors())
      den.push_back(poly_to_json(l.to_polynomial()));
    entry["den"] = std::move(den);
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  return j;
}

FixedPointVector fixed_point_vector_from_json(const WeylGroup& group,
                                              const Json& j) {
  FixedPointVector v;
  for (const auto& entry : j.at("values")) {
    WeylElement w = group.from_word(entry.at("elem").get<std::vector<int>>());
    Polynomial num = poly_from_json(entry.at("num"));
    std::vector<LinearForm> den;
    for (const auto& dj : entry.at("den")) {
      Polynomial dp = poly_from_json(dj);
      LinearForm l(dp.vars());
      for (const auto& [m, c] : dp.terms()) {
        if (m.degree() != 1)
          throw std::invalid_argument("denominator factor must be linear");
        for (int k = 0; k < dp.vars(); ++k)
          if (m.exps[k] == 1) l.coeffs[k] = c;
      }
      den.push_back(l);
    }
    v.values.emplace(w, RootFraction(std::move(num), std::move(den)));
  }
  return v;
}

Json freeness_to_json(const FreenessReport& r) {
  Json j;
  j["group"] = r.group;
  j["parabolic"] = r.parabolic;
  j["r"] = r.r;
  Json rows = Json::array();
  for (const auto& row : r.per_degree) {
    Json d;
    d["degree"] = row.degree;
    d["kernel_dim"] = row.kernel_dim;
    d["span_count"] = row.span_count;
    d["free_prediction"] = row.free_prediction;
    rows.push_back(std::move(d));
  }
  j["per_degree"] = std::move(rows);
  j["verdict"] = r.verdict;
  if (!r.witness.empty()) {
    Json w = Json::array();
    for (const auto& [word, poly] : r.witness) {
      Json entry;
      entry["rep"] = word;
      entry["coefficient"] = poly_to_json(poly);
      w.push_back(std::move(entry));
    }
    j["witness"] = std::move(w);
  }
  return j;
}

Json relation_to_json(const RelationReport& r) {
  Json j;
  j["relation"] = r.relation;
  j["holds"] = r.holds;
  Json coeffs;
  for (const auto& [name, poly] : r.coefficients) coeffs[name] = poly_to_json(poly);
  j["coefficients"] = std::move(coeffs);
  j["residual_zero"] = r.residual_zero();
  return j;
}

Json corner_presentation_to_json(const CornerPresentationReport& r) {
  Json j;
  j["length_bound"] = r.length_bound;
  j["degree_truncation"] = r.degree_truncation;
  j["words"] = r.words;
  Json rows = Json::array();
  for (const auto& [deg, dim] : r.per_degree) {
    Json d;
    d["degree"] = deg;
    d["dimension"] = dim;
    rows.push_back(std::move(d));
  }
  j["per_degree"] = std::move(rows);
  j["closure_trusted_degree"] = r.closure_trusted_degree;
  j["closed"] = r.closed;
  if (!r.closure_witness.empty()) j["closure_witness"] = r.closure_witness;
  return j;
}

}  // namespace nh
