#pragma once

#include <string>

#include <json.hpp>

namespace cli {

using Doc = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name);

/// %.17g, which round-trips every double.
std::string format_number(double x);

/// Pretty JSON with every float printed by format_number.
std::string render_json(const Doc& doc);

/// Long format with header record,index,key,origin,n,t,value. Top-level
/// scalars go under record "summary"; nested objects use their key path as the
/// record; arrays of objects give one row per non-identity field, with the
/// array position in `index` and any origin/n/t fields copied to their columns.
std::string render_csv(const Doc& doc);

/// Aligned text for people.
std::string render_table(const Doc& doc);

std::string render(const Doc& doc, Format format);

}  // namespace cli
