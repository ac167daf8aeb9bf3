#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "relwitt/group_word.hpp"
#include "relwitt/matrix.hpp"
#include "relwitt/row.hpp"
#include "relwitt/witt.hpp"

// JSON encodings shared by the command line tool and the report. Elements are
// strings in the ring's element grammar; integers are accepted on input.
namespace relwitt::io {

using nlohmann::json;

std::string element_text(const json& j);
std::vector<std::string> string_list(const json& j);

/// {"ring": spec, "rows": r, "cols": c, "entries": [[...]]}; a bare array of
/// rows is accepted on input.
json to_json(const Matrix& m);
Matrix matrix_from_json(const RingPtr& ring, const json& j);

json to_json(const UmRow& v);
UmRow row_from_json(const RingPtr& ring, const json& j);

/// {"i": 1, "j": 2, "a": "3"}; {"conj": [...], "core": {...}}; {"inv": {...}}.
json to_json(const Ring& ring, const Token& t);
Token token_from_json(const RingPtr& ring, const json& j);

/// {"n": 4, "tokens": [...]}.
json to_json(const GroupWord& w);
GroupWord word_from_json(const RingPtr& ring, const json& j);

/// {"t": 0, "epsilon": word}.
json to_json(const EquivalenceCertificate& c);
EquivalenceCertificate certificate_from_json(const RingPtr& ring, const json& j);

json to_json(const StandardForm& f);
json to_json(const WittSymbol& x);

}  // namespace relwitt::io
