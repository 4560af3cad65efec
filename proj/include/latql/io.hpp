#pragma once

#include <string>
#include <string_view>

#include "latql/context.hpp"

namespace latql {

/// Burmeister format:
///
///   B
///   <context name, possibly empty>
///   <|G|>
///   <|M|>
///   <|G| object names, one per line>
///   <|M| attribute names, one per line>
///   <|G| rows of exactly |M| characters from {X, .}>
///
/// Every line is newline-terminated. Errors carry `source:line`.
FormalContext read_burmeister(std::string_view text, const std::string& source = "<input>");
std::string write_burmeister(const FormalContext& ctx);

/// A many-valued table as a relation: the header row names the attributes,
/// the first column is the key, and an empty cell is an undefined value.
Relation read_csv_relation(std::string_view text, const std::string& source = "<input>");
std::string write_csv_relation(const Relation& r);

std::string read_file(const std::string& path);

/// Loads a context file by extension: `.csv` is read as a relation and scaled
/// nominally, everything else is read as Burmeister.
FormalContext load_context_file(const std::string& path);

}  // namespace latql
