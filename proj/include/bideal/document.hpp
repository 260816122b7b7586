#ifndef BIDEAL_DOCUMENT_HPP
#define BIDEAL_DOCUMENT_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace bideal {

/*
 * On-disk arrangement:
 *   {"ambient_dim": 3, "forms": [["1","-1","0"], ...], "labels": ["H1", ...]}
 * Rationals are strings ("a" or "a/b"); bare JSON integers are accepted on
 * input, floats are not. "labels" is optional.
 */
struct ArrangementDocument {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<std::string>> forms;
  std::vector<std::string> labels;
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

inline std::string entry_string(const nlohmann::json& v, std::size_t form, std::size_t coord) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    parse_rational(s);  // validates
    return s;
  }
  if (v.is_number_integer()) return v.dump();
  malformed("forms[" + std::to_string(form) + "][" + std::to_string(coord) +
            "] must be a rational string or an integer");
}

}  // namespace detail

inline ArrangementDocument parse_document(const nlohmann::json& j) {
  if (!j.is_object()) detail::malformed("arrangement document must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "ambient_dim" && key != "forms" && key != "labels") detail::malformed("unknown key '" + key + "'");
  if (!j.contains("ambient_dim") || !j.contains("forms")) detail::malformed("document needs 'ambient_dim' and 'forms'");

  ArrangementDocument doc;
  const auto& dim = j.at("ambient_dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
    detail::malformed("'ambient_dim' must be a positive integer");
  doc.ambient_dim = dim.get<std::size_t>();

  const auto& forms = j.at("forms");
  if (!forms.is_array()) detail::malformed("'forms' must be an array");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& row = forms[i];
    if (!row.is_array()) detail::malformed("forms[" + std::to_string(i) + "] must be an array");
    if (row.size() != doc.ambient_dim)
      detail::malformed("forms[" + std::to_string(i) + "] has " + std::to_string(row.size()) + " entries, expected " +
                        std::to_string(doc.ambient_dim));
    std::vector<std::string> entries;
    for (std::size_t k = 0; k < row.size(); ++k) entries.push_back(detail::entry_string(row[k], i, k));
    doc.forms.push_back(std::move(entries));
  }

  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (!labels.is_array()) detail::malformed("'labels' must be an array of strings");
    for (const auto& l : labels) {
      if (!l.is_string()) detail::malformed("'labels' must be an array of strings");
      doc.labels.push_back(l.get<std::string>());
    }
    if (doc.labels.size() != doc.forms.size()) detail::malformed("'labels' and 'forms' differ in length");
  }
  return doc;
}

inline ArrangementDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

inline Arrangement to_arrangement(const ArrangementDocument& doc) {
  std::vector<Vector> forms;
  for (const auto& row : doc.forms) {
    Vector v;
    for (const auto& s : row) v.push_back(parse_rational(s));
    forms.push_back(std::move(v));
  }
  return make_arrangement(doc.ambient_dim, std::move(forms), doc.labels);
}

/// Normalized document of an arrangement; labels only when the arrangement carries them.
inline ArrangementDocument to_document(const Arrangement& a) {
  ArrangementDocument doc;
  doc.ambient_dim = a.dim();
  for (const auto& f : a.forms()) {
    std::vector<std::string> row;
    for (const auto& x : f) row.push_back(to_string(x));
    doc.forms.push_back(std::move(row));
  }
  if (a.has_labels()) doc.labels = a.labels();
  return doc;
}

inline nlohmann::json to_json(const ArrangementDocument& doc) {
  nlohmann::json j;
  j["ambient_dim"] = doc.ambient_dim;
  j["forms"] = doc.forms;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string serialize(const ArrangementDocument& doc) { return to_json(doc).dump(2) + "\n"; }

/// FNV-1a 64-bit over the canonical serialization, as "fnv1a64:<16 hex digits>".
inline std::string digest(const ArrangementDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace bideal

#endif  // BIDEAL_DOCUMENT_HPP
