#pragma once

#include <string>

#include <json.hpp>

#include "pythia/boxes.hpp"
#include "pythia/shared_side.hpp"
#include "pythia/triples.hpp"
#include "pythia/two_square.hpp"
#include "pythia/verifier.hpp"

namespace pythia {

// Field order is part of the output contract (jsonl lines must be
// byte-stable), hence ordered_json throughout.
using json = nlohmann::ordered_json;

json to_json(const Triple& t);
json to_json(const TwoTwoSolution& s);
json to_json(const Box& b);
json to_json(const FaceDiagonalBox& b);
json to_json(const TripleDecomposition& d);
json to_json(const TrianglePair& p);
json to_json(const SearchReport& r);

// CSV counterparts: values only, comma separated, in the same field order.
std::string to_csv(const Triple& t);
std::string to_csv(const TwoTwoSolution& s);
std::string to_csv(const Box& b);
std::string to_csv(const FaceDiagonalBox& b);
std::string to_csv(const TripleDecomposition& d);
std::string to_csv(const TrianglePair& p);

// Parser helpers; both encodings round-trip through these.
Triple triple_from_json(const json& j);
TwoTwoSolution two_two_from_json(const json& j);
Box box_from_json(const json& j);
TrianglePair pair_from_json(const json& j);
Triple triple_from_csv(const std::string& line);
TwoTwoSolution two_two_from_csv(const std::string& line);
Box box_from_csv(const std::string& line);
TrianglePair pair_from_csv(const std::string& line);

}  // namespace pythia
