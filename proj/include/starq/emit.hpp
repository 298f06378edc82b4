#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "starq/classify.hpp"
#include "starq/decomp.hpp"
#include "starq/fock.hpp"
#include "starq/orbits.hpp"

namespace starq {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);

Json orbit_json(const OrbitGraph& g);
std::string orbit_dot(const OrbitGraph& g);
std::string orbit_table(const OrbitGraph& g);

const char* verdict_name(Verdict::Kind k);
Json verdict_json(const Weight& mu, const Verdict& v, bool gl);
std::string verdict_table(const Weight& mu, const Verdict& v, bool gl);

Json enumerate_json(const Weight& l, const std::vector<BoundedEntry>& entries);
std::string enumerate_table(const Weight& l, const std::vector<BoundedEntry>& entries);

Json families_json(const Weight& l, const std::vector<Family>& fams);
// Solid arrows for q(n) families, dashed for gl_n ones; bidirectional arrows
// get two heads.
std::string families_dot(const std::vector<Family>& fams);
std::string families_table(const std::vector<Family>& fams);

Json degree_json(const Weight& mu, const mpz_class& deg);

Json jh_json(int n, const Scalar& c, const std::vector<int>& ks);

Json check_json(const CheckReport& r);

Json error_json(const std::string& code, const std::string& message);

}  // namespace starq
