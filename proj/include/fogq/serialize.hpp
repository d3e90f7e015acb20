#pragma once
#include <string>

#include "fogq/object.hpp"

namespace fogq {

// canonical UTF-8 JSON, fixed key order, compact separators, trailing newline;
// parse . serialize is byte-for-byte the identity on canonical files
std::string serialize(const OgusObject& m);
OgusObject parse_object(const std::string& text); // input_error on malformed input

OgusObject load_object(const std::string& path);
void save_object(const OgusObject& m, const std::string& path);

} // namespace fogq
