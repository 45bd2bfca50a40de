#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cli {

namespace {

bool is_scalar(const Doc& j) { return !j.is_object() && !j.is_array(); }

bool is_identity_field(const std::string& key) {
  return key == "origin" || key == "n" || key == "t";
}

std::string number_text(const Doc& j, bool compact) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  const double x = j.get<double>();
  if (!compact) return format_number(x);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Scalar as bare text (csv, table); strings unquoted, null empty.
std::string plain(const Doc& j, bool compact) {
  if (j.is_null()) return compact ? "-" : "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number()) return number_text(j, compact);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void write_json(const Doc& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Doc(it.key()).dump() + ": ";
      write_json(it.value(), indent + 2, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write_json(j[i], indent + 2, out);
    }
    out += "\n" + close + "]";
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    out += std::isfinite(x) ? format_number(x) : "null";
  } else if (j.is_number()) {
    out += number_text(j, false);
  } else {
    out += j.dump();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

struct CsvRow {
  std::string record, index, key, origin, n, t, value;
};

void csv_walk(const Doc& obj, const std::string& prefix, std::vector<CsvRow>& rows) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    const Doc& v = it.value();
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (is_scalar(v)) {
      rows.push_back({prefix.empty() ? "summary" : prefix, "", key, "", "", "", plain(v, false)});
    } else if (v.is_object()) {
      csv_walk(v, path, rows);
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Doc& el = v[i];
        const std::string index = std::to_string(i);
        if (is_scalar(el)) {
          rows.push_back({path, index, key, "", "", "", plain(el, false)});
          continue;
        }
        if (!el.is_object()) continue;
        auto field = [&](const char* name) {
          return el.contains(name) ? plain(el[name], false) : std::string();
        };
        const std::string origin = field("origin"), n = field("n"), t = field("t");
        for (auto f = el.begin(); f != el.end(); ++f) {
          if (is_identity_field(f.key())) continue;
          if (is_scalar(f.value()))
            rows.push_back({path, index, f.key(), origin, n, t, plain(f.value(), false)});
        }
      }
    }
  }
}

void table_walk(const Doc& obj, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t width = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (is_scalar(it.value())) width = std::max(width, it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const Doc& v = it.value();
    if (is_scalar(v)) {
      out << pad << it.key() << std::string(width - it.key().size() + 2, ' ') << plain(v, true)
          << '\n';
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      table_walk(v, indent + 2, out);
    } else if (v.empty()) {
      out << pad << it.key() << ": (none)\n";
    } else if (!v[0].is_object()) {
      out << pad << it.key() << ":";
      for (const Doc& el : v) out << ' ' << plain(el, true);
      out << '\n';
    } else {
      out << pad << it.key() << ": " << v.size() << " rows\n";
      std::vector<std::string> cols;
      for (auto f = v[0].begin(); f != v[0].end(); ++f) cols.push_back(f.key());
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> widths;
      for (const std::string& c : cols) widths.push_back(c.size());
      for (const Doc& el : v) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          row.push_back(el.contains(cols[c]) ? plain(el[cols[c]], true) : "");
          widths[c] = std::max(widths[c], row.back().size());
        }
        cells.push_back(std::move(row));
      }
      auto line = [&](const std::vector<std::string>& row) {
        out << pad << "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << row[c];
          if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
      };
      line(cols);
      for (const auto& row : cells) line(row);
    }
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("format must be table, json or csv, not '" + name + "'");
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_json(const Doc& doc) {
  std::string out;
  write_json(doc, 0, out);
  return out + "\n";
}

std::string render_csv(const Doc& doc) {
  std::vector<CsvRow> rows;
  if (doc.is_object()) csv_walk(doc, "", rows);
  std::string out = "record,index,key,origin,n,t,value\r\n";
  for (const CsvRow& r : rows) {
    for (const std::string* f : {&r.record, &r.index, &r.key, &r.origin, &r.n, &r.t}) {
      out += csv_field(*f);
      out += ',';
    }
    out += csv_field(r.value);
    out += "\r\n";
  }
  return out;
}

std::string render_table(const Doc& doc) {
  std::ostringstream out;
  if (doc.is_object()) table_walk(doc, 0, out);
  return out.str();
}

std::string render(const Doc& doc, Format format) {
  switch (format) {
    case Format::Json: return render_json(doc);
    case Format::Csv: return render_csv(doc);
    case Format::Table: return render_table(doc);
  }
  return render_table(doc);
}

}  // namespace cli
