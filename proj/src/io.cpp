#include "latql/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "latql/error.hpp"

namespace latql {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

// Splits on '\n'. A missing final newline is tolerated.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back({text.substr(start, end - start), number++});
    start = end + 1;
  }
  return out;
}

std::string at(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

std::size_t parse_count(const Line& line, const std::string& source, const char* what) {
  if (line.text.empty() || line.text.size() > 9 ||
      line.text.find_first_not_of("0123456789") != std::string_view::npos)
    throw IntegrityError(std::string("malformed header: expected the ") + what +
                             " as a non-negative integer",
                         at(source, line.number));
  return std::stoul(std::string(line.text));
}

}  // namespace

FormalContext read_burmeister(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t i, const char* expected) -> const Line& {
    if (i >= lines.size())
      throw IntegrityError(std::string("unexpected end of file, expected ") + expected,
                           at(source, lines.empty() ? 1 : lines.back().number + 1));
    return lines[i];
  };

  if (line_at(0, "'B'").text != "B")
    throw IntegrityError("malformed header: first line must be 'B'", at(source, 1));
  std::string name(line_at(1, "the context name").text);
  const std::size_t n_objects = parse_count(line_at(2, "the object count"), source, "object count");
  const std::size_t n_attributes =
      parse_count(line_at(3, "the attribute count"), source, "attribute count");

  std::size_t i = 4;
  std::vector<std::string> objects, attributes;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < n_objects; ++k, ++i) {
    const Line& l = line_at(i, "an object name");
    if (!seen.insert(std::string(l.text)).second)
      throw IntegrityError("duplicate object name '" + std::string(l.text) + "'",
                           at(source, l.number));
    objects.emplace_back(l.text);
  }
  seen.clear();
  for (std::size_t k = 0; k < n_attributes; ++k, ++i) {
    const Line& l = line_at(i, "an attribute name");
    if (!seen.insert(std::string(l.text)).second)
      throw IntegrityError("duplicate attribute name '" + std::string(l.text) + "'",
                           at(source, l.number));
    attributes.emplace_back(l.text);
  }

  std::vector<AttributeSet> rows;
  for (std::size_t k = 0; k < n_objects; ++k, ++i) {
    const Line& l = line_at(i, "an incidence row");
    if (l.text.size() != n_attributes)
      throw IntegrityError("row length " + std::to_string(l.text.size()) + " differs from " +
                               std::to_string(n_attributes) + " attributes",
                           at(source, l.number));
    AttributeSet row(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = l.text[m];
      if (c == 'X')
        row.insert(m);
      else if (c != '.')
        throw IntegrityError(std::string("invalid incidence character '") + c + "'",
                             at(source, l.number));
    }
    rows.push_back(std::move(row));
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].text.empty())
      throw IntegrityError("unexpected content after the incidence rows", at(source, lines[i].number));

  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(name));
}

std::string write_burmeister(const FormalContext& ctx) {
  std::string out = "B\n" + ctx.name() + "\n" + std::to_string(ctx.num_objects()) + "\n" +
                    std::to_string(ctx.num_attributes()) + "\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct CsvRecord {
  std::vector<std::optional<std::string>> fields;
  std::size_t line;
};

std::vector<CsvRecord> parse_csv(std::string_view text, const std::string& source) {
  std::vector<CsvRecord> records;
  std::size_t i = 0, line = 1;
  while (i < text.size()) {
    CsvRecord rec{{}, line};
    bool end_of_record = false;
    while (!end_of_record) {
      std::string field;
      if (i < text.size() && text[i] == '"') {
        ++i;
        for (;;) {
          if (i >= text.size()) throw IntegrityError("unterminated quoted field", at(source, rec.line));
          if (text[i] == '"') {
            if (i + 1 < text.size() && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (text[i] == '\n') ++line;
          field += text[i++];
        }
      } else {
        while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
          field += text[i++];
      }
      if (i < text.size() && text[i] == '\r') ++i;
      if (i >= text.size() || text[i] == '\n') {
        end_of_record = true;
        ++i;
        ++line;
      } else if (text[i] == ',') {
        ++i;
      } else {
        throw IntegrityError("unexpected character after quoted field", at(source, line));
      }
      // Quoted or not, an empty cell is an undefined value.
      if (field.empty())
        rec.fields.emplace_back(std::nullopt);
      else
        rec.fields.emplace_back(std::move(field));
    }
    const bool blank = rec.fields.size() == 1 && !rec.fields[0];
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Relation read_csv_relation(std::string_view text, const std::string& source) {
  auto records = parse_csv(text, source);
  if (records.empty()) throw IntegrityError("missing header row", at(source, 1));

  Relation r;
  std::set<std::string> names;
  for (const auto& f : records[0].fields) {
    if (!f) throw IntegrityError("empty attribute name in header", at(source, records[0].line));
    if (!names.insert(*f).second)
      throw IntegrityError("duplicate attribute name '" + *f + "'", at(source, records[0].line));
    r.scheme.push_back(*f);
  }
  r.key = {r.scheme.front()};

  std::set<std::string> keys;
  for (std::size_t k = 1; k < records.size(); ++k) {
    auto& rec = records[k];
    if (rec.fields.size() != r.scheme.size())
      throw IntegrityError("row has " + std::to_string(rec.fields.size()) + " fields, header has " +
                               std::to_string(r.scheme.size()),
                           at(source, rec.line));
    if (!rec.fields[0]) throw IntegrityError("row has no key value", at(source, rec.line));
    if (!keys.insert(*rec.fields[0]).second)
      throw IntegrityError("duplicate key value '" + *rec.fields[0] + "'", at(source, rec.line));
    r.tuples.push_back(std::move(rec.fields));
  }
  return r;
}

std::string write_csv_relation(const Relation& r) {
  std::string out;
  for (std::size_t c = 0; c < r.scheme.size(); ++c) out += (c ? "," : "") + csv_field(r.scheme[c]);
  out += "\n";
  for (const auto& t : r.tuples) {
    for (std::size_t c = 0; c < t.size(); ++c) out += (c ? "," : "") + csv_field(t[c].value_or(""));
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FormalContext load_context_file(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    const auto mv = from_relation(read_csv_relation(text, path));
    return derive_context(mv, default_scales(mv));
  }
  return read_burmeister(text, path);
}

}  // namespace latql
