#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mnm {

enum class errc {
  not_open,
  not_minimal,
  triple_overlap,
  not_generic,
  disconnected,
  invalid_parameters,
  band_occupied,
  degenerate_cover,
  non_generic_values,
  slab_attachment_ambiguous,
  out_of_range,
  invalid_epsilon,
  endpoint_collision,
  uncovered_value,
  parse_error,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// validate_gomic collects every violation before throwing.
struct cover_error : error {
  std::vector<std::pair<errc, std::string>> violations;
  explicit cover_error(std::vector<std::pair<errc, std::string>> v)
      : error(v.front().first, join(v)), violations(std::move(v)) {}

 private:
  static std::string join(const std::vector<std::pair<errc, std::string>>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += "; ";
      if (i > 0) s += std::string(errc_name(v[i].first)) + ": ";
      s += v[i].second;
    }
    return s;
  }
};

}  // namespace mnm
