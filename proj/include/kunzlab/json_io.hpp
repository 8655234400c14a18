#pragma once

#include <vector>

#include <json.hpp>

#include "kunzlab/kunz.hpp"
#include "kunzlab/language.hpp"
#include "kunzlab/lba.hpp"
#include "kunzlab/semigroup.hpp"

namespace kunzlab {

using Json = nlohmann::ordered_json;

/// {"small_elements","conductor","multiplicity","frobenius","depth","apery","kunz","genus"}
Json to_json(const NumericalSemigroup& s);
/// {"kind":"first"|"second","i","j","target"}
Json to_json(const Violation& v);
/// {"word","is_kunz","depth","violations"}
Json validation_json(const Word& w);
/// Array of words in wire format.
Json to_json(const std::vector<Word>& words);
/// Array of {"i","j","suffix","member_i","member_j"}.
Json to_json(const NerodeReport& report);
/// Array of {"cuts","u","v","x","y","z","status","k","reason"}.
Json to_json(const BaderMouraReport& report);
/// {"verdict","steps","cells_used","bound"}
Json to_json(const lba::RunResult& result);

}  // namespace kunzlab
