#pragma once

#include <string>

#include <json.hpp>

#include "cdu/charsum.hpp"
#include "cdu/sboxes.hpp"
#include "cdu/theorems.hpp"

namespace cdu {

using nlohmann::json;

json to_json(const FieldSpec& s);
FieldSpec field_spec_from_json(const json& j);

json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json to_json(const LinearizedPoly& l);
LinearizedPoly linpoly_from_json(const json& j);

json to_json(const SboxRecord& s);
SboxRecord sbox_from_json(const json& j);
SboxRecord load_sbox_file(const std::string& path);

json to_json(const CduReport& r);
json to_json(const SboxReport& r);
json to_json(const BoundCheck& b);
json to_json(const SecondThmCheck& c);
json to_json(const BluherCensus& c);
json to_json(const WeilReport& w);
json to_json(const Thm41Observed& t);

std::string cddt_csv(const Cddt& t);
std::string corpus_csv(const std::vector<SboxReport>& rows);

// decimal or 0x-prefixed hex
std::uint64_t parse_int(const std::string& s);

}  // namespace cdu
