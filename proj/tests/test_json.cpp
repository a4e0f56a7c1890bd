#include <nlohmann/json.hpp>

#include "doctest.h"
#include "zsschur/certificates.hpp"
#include "zsschur/formulas.hpp"
#include "zsschur/json.hpp"
#include "zsschur/oracle.hpp"

using namespace zsschur;
using nlohmann::json;

TEST_CASE("params round trip") {
  const SchurParams p = params_for_source("thm-more", 12, 3, 1);
  const json j = p;
  CHECK(j.at("k") == 12);
  CHECK(j.at("eps") == 0);
  CHECK(j.get<SchurParams>() == p);
  json bad = j;
  bad["r"] = 5;
  CHECK_THROWS_AS(bad.get<SchurParams>(), InvalidParams);
}

TEST_CASE("coloring round trip and validation") {
  const Coloring chi = make_coloring(3, {0, 2, 1, 1});
  const json j = chi;
  CHECK(j.at("t") == 4);
  CHECK(j.at("colors").size() == 4);
  CHECK(j.get<Coloring>() == chi);

  CHECK_THROWS_AS(json::parse(R"({"t":3,"m":2,"colors":[0,1]})").get<Coloring>(),
                  InvalidParams);
  CHECK_THROWS_AS(json::parse(R"({"t":2,"m":2,"colors":[0,2]})").get<Coloring>(),
                  InvalidParams);
}

TEST_CASE("witness round trip") {
  const Witness w{{1, 1, 2, 1}};
  const json j = w;
  CHECK(j.get<Witness>() == w);
  CHECK_THROWS_AS(json::parse(R"({"entries":[1,0]})").get<Witness>(),
                  InvalidParams);
}

TEST_CASE("search result serialization is schema stable") {
  const auto found = compute_schur_number(params_for_source("thm-k", 4, 2, 0), 8);
  const json j = found;
  for (const char* key :
       {"params", "value", "certificate", "t_max", "elapsed_ms", "method"})
    CHECK(j.contains(key));
  CHECK(j.at("value") == 3);
  CHECK(j.at("method") == "oracle");
  CHECK_FALSE(j.at("certificate").is_null());

  const auto missing =
      compute_schur_number(params_for_source("thm-k", 4, 2, 0), 2);
  const json jm = missing;
  CHECK(jm.at("value").is_null());
  CHECK(jm.contains("certificate"));
}

TEST_CASE("formula value serialization") {
  const json j = value_thm_more(12, 3, 1);
  CHECK(j.at("kind") == "exact");
  CHECK(j.at("value") == 3);
  CHECK(j.at("source") == "thm-more");
  CHECK(j.at("aux").at("t") == 1);
  const json jt = value_trivial_km1(3);
  CHECK(jt.at("params").is_null());
}

TEST_CASE("certificate round trip") {
  const Certificate cert = cert_thm_k(6, 3);
  const json j = cert;
  const auto back = j.get<Certificate>();
  CHECK(back.params == cert.params);
  CHECK(back.coloring == cert.coloring);
  CHECK(back.source == cert.source);

  const Certificate empty = cert_thm_general(6);
  const json je = empty;
  CHECK(je.at("coloring").is_null());
  CHECK_FALSE(je.get<Certificate>().coloring.has_value());

  // A bare params+coloring file (no claim/source) is accepted.
  const auto user = json::parse(
      R"({"params":{"k":4,"r":2,"m":2,"ell":4,"eps":1,"v":0},
          "coloring":{"t":2,"m":2,"colors":[0,1]}})")
                        .get<Certificate>();
  CHECK(user.claim == kNoZeroSumClaim);
  CHECK(verify_certificate(user));
}

TEST_CASE("proof tuple round trip") {
  const ProofTuple tuple = witness_thm_more(12, 2, 2);
  const json j = tuple;
  const auto back = j.get<ProofTuple>();
  CHECK(back.witness == tuple.witness);
  CHECK(back.zero_sum_claimed == tuple.zero_sum_claimed);
}
