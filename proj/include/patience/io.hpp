#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "patience/patience.hpp"
#include "patience/permutation.hpp"

namespace patience {

using Json = nlohmann::ordered_json;

// Serializes with ": " and ", " between object members and no spaces inside
// arrays that hold no objects: {"n": 8, "R": [[6,4,1],[5,2]]}.
std::string to_json_text(const Json& value);

// {"n": 8, "R": [[6,4,1],[5,2],[8,7,3]], "S": [[1,2,4],[3,7],[5,6,8]]}
// Each pile is listed in the order its entries were placed: insertion cards
// bottom to top, recording indices top to bottom.
Json stable_pair_json(const StablePair& pair);
std::string stable_pair_to_json(const StablePair& pair);

// Throws ParseError on malformed JSON and MalformedPair on piles that do not
// form two valid configurations of matching size.
StablePair stable_pair_from_json(std::string_view text);

// {"n": 8, "R": [[6,4,1],[5,2],[8,7,3]]}
std::string pile_config_to_json(const PileConfig& r);

}  // namespace patience
