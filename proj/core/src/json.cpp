#include "zsschur/json.hpp"

namespace zsschur {

void to_json(nlohmann::json& j, const SchurParams& p) {
  j = nlohmann::json{{"k", p.k},     {"r", p.r},     {"m", p.m},
                     {"ell", p.ell}, {"eps", p.eps}, {"v", p.v}};
}

void from_json(const nlohmann::json& j, SchurParams& p) {
  j.at("k").get_to(p.k);
  j.at("r").get_to(p.r);
  j.at("m").get_to(p.m);
  j.at("ell").get_to(p.ell);
  j.at("eps").get_to(p.eps);
  j.at("v").get_to(p.v);
  p.validate();
}

void to_json(nlohmann::json& j, const Coloring& c) {
  j = nlohmann::json{{"t", c.t}, {"m", c.m}, {"colors", c.colors}};
}

void from_json(const nlohmann::json& j, Coloring& c) {
  j.at("t").get_to(c.t);
  j.at("m").get_to(c.m);
  c.colors.clear();
  for (const auto& entry : j.at("colors")) {
    const int value = entry.get<int>();
    if (value < 0 || value > 255)
      throw InvalidParams("color value out of byte range");
    c.colors.push_back(static_cast<std::uint8_t>(value));
  }
  c.validate();
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = nlohmann::json{{"entries", w.entries}};
}

void from_json(const nlohmann::json& j, Witness& w) {
  j.at("entries").get_to(w.entries);
  for (int x : w.entries)
    if (x < 1) throw InvalidParams("witness entries must be positive");
}

void to_json(nlohmann::json& j, const SearchResult& r) {
  j = nlohmann::json{{"params", r.params},
                     {"value", nullptr},
                     {"certificate", nullptr},
                     {"t_max", r.t_max},
                     {"elapsed_ms", r.elapsed_ms},
                     {"method", "oracle"}};
  if (r.value) j["value"] = *r.value;
  if (r.certificate) j["certificate"] = *r.certificate;
}

void to_json(nlohmann::json& j, const FormulaValue& f) {
  j = nlohmann::json{{"params", nullptr},
                     {"kind", to_string(f.kind)},
                     {"value", f.value},
                     {"source", f.source},
                     {"aux", nullptr}};
  if (f.params) j["params"] = *f.params;
  if (!f.aux.empty()) j["aux"] = f.aux;
}

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"params", c.params},
                     {"coloring", nullptr},
                     {"claim", c.claim},
                     {"source", c.source}};
  if (c.coloring) j["coloring"] = *c.coloring;
}

void from_json(const nlohmann::json& j, Certificate& c) {
  j.at("params").get_to(c.params);
  c.coloring.reset();
  if (j.contains("coloring") && !j.at("coloring").is_null()) {
    Coloring coloring;
    j.at("coloring").get_to(coloring);
    c.coloring = std::move(coloring);
  }
  c.claim = j.value("claim", std::string(kNoZeroSumClaim));
  c.source = j.value("source", std::string("user"));
}

void to_json(nlohmann::json& j, const ProofTuple& t) {
  j = nlohmann::json{{"params", t.params},
                     {"witness", t.witness},
                     {"zero_sum_claimed", t.zero_sum_claimed},
                     {"source", t.source}};
}

void from_json(const nlohmann::json& j, ProofTuple& t) {
  j.at("params").get_to(t.params);
  j.at("witness").get_to(t.witness);
  t.zero_sum_claimed = j.value("zero_sum_claimed", false);
  t.source = j.value("source", std::string("user"));
}

}  // namespace zsschur
