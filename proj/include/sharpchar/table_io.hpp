#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "sharpchar/chartab.hpp"

namespace sharpchar {

// Parse a table from its JSON text.  Shape/type problems throw
// table_format_error naming the offending field; with strict = true a table
// that fails validate() is also rejected, with the issues in the message.
std::shared_ptr<const CharacterTable> parse_table_json(const std::string& text,
                                                       bool strict = false);
std::shared_ptr<const CharacterTable> load_table(const std::filesystem::path& file,
                                                 bool strict = false);

// Canonical serialization: fixed key order, values re-emitted in canonical
// expression form, two-space indent, trailing newline.  Byte-identical for
// equal tables.
std::string table_to_json(const CharacterTable& table);
void save_table(const CharacterTable& table, const std::filesystem::path& file);

} // namespace sharpchar
