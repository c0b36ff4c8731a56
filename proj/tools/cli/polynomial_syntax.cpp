#include "cli/polynomial_syntax.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "kbound/error.hpp"

namespace kbound::cli {
namespace {

[[noreturn]] void bad(std::string_view text, std::size_t at, const std::string& why) {
  throw_input("BAD_POLYNOMIAL", "cannot parse polynomial '" + std::string(text) + "': " + why, at);
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  // from_chars has no leading '+'; callers strip signs first.
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::size_t number_end(std::string_view s, std::size_t i) {
  const std::size_t start = i;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
  if (i > start && i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      i = j;
    }
  }
  return i;
}

Polynomial parse_raw(std::string_view text) {
  std::vector<double> c;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    double v = 0.0;
    bool neg = false;
    if (!item.empty() && (item[0] == '-' || item[0] == '+')) {
      neg = item[0] == '-';
      item.remove_prefix(1);
    }
    if (!parse_double(item, v)) bad(text, start, "bad coefficient");
    c.push_back(neg ? -v : v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(c));
}

Polynomial parse_expression(std::string_view text, const std::map<char, double>& params) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad(text, 0, "empty expression");

  std::vector<double> c(1, 0.0);
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t term_start = i;
    double sign = 1.0;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (i != 0) {
      bad(text, i, "expected '+' or '-'");
    }
    double coef = 1.0;
    bool have_coef = false;
    const std::size_t ne = number_end(s, i);
    if (ne > i) {
      if (!parse_double(std::string_view(s).substr(i, ne - i), coef)) bad(text, i, "bad number");
      have_coef = true;
      i = ne;
    }
    if (i < s.size() && s[i] == '*' && have_coef) ++i;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])) && s[i] != 'x') {
      const auto it = params.find(s[i]);
      if (it == params.end())
        throw_input("UNBOUND_PARAMETER", std::string("parameter '") + s[i] + "' has no value; pass --param " +
                                             s[i] + "=<value>");
      coef *= it->second;
      have_coef = true;
      ++i;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') ++i;
      const std::size_t ds = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > ds) {
        int pw = 0;
        std::from_chars(s.data() + ds, s.data() + i, pw);
        if (pw > 64) bad(text, ds, "degree too large");
        power = pw;
      } else if (s[i - 1] == '^') {
        bad(text, i, "missing exponent");
      }
    } else if (!have_coef) {
      bad(text, term_start, "empty term");
    }
    if (static_cast<int>(c.size()) <= power) c.resize(power + 1, 0.0);
    c[power] += sign * coef;
  }
  return Polynomial(std::move(c));
}

}  // namespace

PolySpec parse_polynomial(std::string_view text, const std::map<char, double>& params) {
  if (auto preset = preset_from_name(text)) return *preset;
  if (text.find(',') != std::string_view::npos) return parse_raw(text);
  return parse_expression(text, params);
}

std::pair<char, double> parse_parameter(std::string_view text) {
  const auto eq = text.find('=');
  double v = 0.0;
  if (eq != 1 || !std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == 'x')
    throw_input("BAD_PARAMETER", "expected <letter>=<number>, got '" + std::string(text) + "'");
  std::string_view num = text.substr(2);
  bool neg = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    neg = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!parse_double(num, v)) throw_input("BAD_PARAMETER", "bad value in '" + std::string(text) + "'");
  return {text[0], neg ? -v : v};
}

Polynomial resolve(const PolySpec& spec, int k, const EigenvalueProfile& spectrum) {
  if (const auto* p = std::get_if<Polynomial>(&spec)) return *p;
  return make_preset(std::get<PolynomialPreset>(spec), k, spectrum);
}

std::string format_polynomial(const Polynomial& p) {
  std::string out;
  const auto& c = p.coeffs();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const double v = c[i];
    if (v == 0.0) continue;
    char buf[32];
    const double mag = std::abs(v);
    std::string coef;
    if (mag != 1.0 || i == 0) {
      const auto r = std::to_chars(buf, buf + sizeof buf, mag);
      coef.assign(buf, r.ptr);
    }
    if (out.empty()) out += v < 0 ? "-" : "";
    else out += v < 0 ? "-" : "+";
    out += coef;
    if (i >= 1) out += "x";
    if (i >= 2) out += std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace kbound::cli
