#include "arr/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "arr/errors.hpp"

namespace arr {

namespace {

using nlohmann::json;

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Factor {
  std::map<std::size_t, ExactScalar> coeffs;  // variable index -> coefficient
  std::size_t position = 0;
};

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Arrangement parse() {
    parse_header();
    std::vector<Factor> factors;
    skip_space();
    if (at_end()) throw ParseError(ParseErrorKind::syntax, "empty polynomial");
    while (!at_end()) {
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end()) error("dangling '*'");
        continue;
      }
      parse_factor(factors);
      skip_space();
    }
    if (factors.empty()) throw ParseError(ParseErrorKind::syntax, "no linear factors");
    return build(factors);
  }

 private:
  [[noreturn]] void error(const std::string& msg, ParseErrorKind kind = ParseErrorKind::syntax) const {
    throw ParseError(kind, msg + " at offset " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }
  void skip_inline_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void parse_header() {
    skip_space();
    std::size_t save = pos_;
    std::string word;
    while (!at_end() && is_letter(peek())) word.push_back(text_[pos_++]);
    if (word != "vars" && word != "variables") {
      pos_ = save;
      return;
    }
    skip_inline_space();
    if (peek() == ':') ++pos_;
    header_ = true;
    for (;;) {
      skip_inline_space();
      if (at_end()) error("variable header must end with a newline or ';'");
      if (peek() == '\n' || peek() == ';' || peek() == '\r') {
        ++pos_;
        break;
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      std::string name = read_identifier();
      if (name.empty()) error("bad variable name in header");
      if (std::find(variables_.begin(), variables_.end(), name) != variables_.end())
        error("variable '" + name + "' listed twice");
      variables_.push_back(name);
    }
    if (variables_.empty()) error("empty variable header");
  }

  // letter, then digits, optionally introduced by '_'.
  std::string read_identifier() {
    std::string name;
    if (!is_letter(peek())) return name;
    name.push_back(text_[pos_++]);
    if (peek() == '_' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) name.push_back(text_[pos_++]);
    while (!at_end() && is_digit(peek())) name.push_back(text_[pos_++]);
    return name;
  }

  std::size_t variable_index(const std::string& name) {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it != variables_.end()) return static_cast<std::size_t>(it - variables_.begin());
    if (header_) error("variable '" + name + "' is not declared in the header", ParseErrorKind::unknown_variable);
    variables_.push_back(name);
    return variables_.size() - 1;
  }

  ExactScalar read_number() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (peek() == '/' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    if (peek() == '.') error("decimal coefficients are not supported; use p/q");
    return parse_scalar(text_.substr(start, pos_ - start));
  }

  std::int64_t read_exponent() {
    ++pos_;  // '^'
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) error("missing exponent");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  void add_factor(std::vector<Factor>& out, Factor f, std::int64_t exponent) {
    if (exponent == 0) return;
    for (std::int64_t e = 0; e < exponent; ++e) out.push_back(f);
  }

  void parse_factor(std::vector<Factor>& out) {
    char c = peek();
    if (c == '+' || c == '-') {  // unit constant
      ++pos_;
      return;
    }
    if (is_digit(c)) {
      ExactScalar k = read_number();
      skip_space();
      if (peek() == '^') read_exponent();
      if (k == 0) error("zero constant factor", ParseErrorKind::zero_form);
      return;
    }
    Factor f;
    f.position = pos_;
    if (c == '(') {
      ++pos_;
      f.coeffs = parse_linear_form();
      if (peek() != ')') error("expected ')'");
      ++pos_;
    } else if (is_letter(c)) {
      std::string name = read_identifier();
      f.coeffs[variable_index(name)] = 1;
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
    skip_space();
    std::int64_t exponent = 1;
    if (peek() == '^') exponent = read_exponent();
    add_factor(out, std::move(f), exponent);
  }

  std::map<std::size_t, ExactScalar> parse_linear_form() {
    std::map<std::size_t, ExactScalar> coeffs;
    bool first = true;
    for (;;) {
      skip_space();
      if (at_end()) error("unterminated '('");
      if (peek() == ')') {
        if (first) error("empty factor", ParseErrorKind::zero_form);
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        error("expected '+' or '-' between terms", is_letter(peek()) || peek() == '(' ? ParseErrorKind::nonlinear
                                                                                        : ParseErrorKind::syntax);
      }
      first = false;
      ExactScalar coeff(sign);
      bool have_number = false;
      if (is_digit(peek())) {
        coeff *= read_number();
        have_number = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (!is_letter(peek())) error("products of constants or factors inside a linear form",
                                        ParseErrorKind::nonlinear);
        }
      }
      if (is_letter(peek())) {
        std::string name = read_identifier();
        std::size_t idx = variable_index(name);
        skip_space();
        if (is_letter(peek()) || peek() == '*' || peek() == '^' || peek() == '(')
          error("factor is not linear", ParseErrorKind::nonlinear);
        coeffs[idx] += coeff;
      } else if (have_number) {
        skip_space();
        if (peek() == '^' || peek() == '(') error("factor is not linear", ParseErrorKind::nonlinear);
        if (coeff != 0) error("constant term: factor is not a linear form", ParseErrorKind::nonlinear);
      } else {
        error("expected a term");
      }
    }
    return coeffs;
  }

  Arrangement build(const std::vector<Factor>& factors) {
    const std::size_t d = variables_.size();
    std::vector<Normal> normals;
    std::set<Normal> seen;
    for (const auto& f : factors) {
      Normal v(d, ExactScalar(0));
      for (const auto& [idx, c] : f.coeffs) v[idx] = c;
      if (std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x == 0; }))
        throw ParseError(ParseErrorKind::zero_form, "factor at offset " + std::to_string(f.position) + " is zero");
      if (!seen.insert(canonical_form(v)).second)
        throw ParseError(ParseErrorKind::duplicate,
                         "factor at offset " + std::to_string(f.position) + " repeats a hyperplane");
      normals.push_back(std::move(v));
    }
    std::vector<std::string> labels;
    for (const auto& v : normals) labels.push_back(format_linear_form(v, variables_));
    return Arrangement(d, std::move(normals), std::move(labels), variables_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool header_ = false;
  std::vector<std::string> variables_;
};

ExactScalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return ExactScalar(mpz_class(j.dump()));
  if (j.is_number_float()) {
    double x = j.get<double>();
    if (x != static_cast<double>(static_cast<long long>(x)))
      throw ParseError(ParseErrorKind::syntax, "non-integer JSON number; write rationals as \"p/q\"");
    return ExactScalar(mpz_class(std::to_string(static_cast<long long>(x))));
  }
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError(ParseErrorKind::syntax, "matrix entries must be integers or \"p/q\" strings");
}

json scalar_to_json(const ExactScalar& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return json(x.get_num().get_si());
  return json(to_string(x));
}

Arrangement parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::syntax, std::string("invalid JSON: ") + e.what());
  }
  json rows;
  std::vector<std::string> variables, labels;
  if (doc.is_array()) {
    rows = doc;
  } else if (doc.is_object()) {
    if (!doc.contains("normals")) throw ParseError(ParseErrorKind::syntax, "JSON object lacks \"normals\"");
    rows = doc["normals"];
    try {
      if (doc.contains("variables")) variables = doc["variables"].get<std::vector<std::string>>();
      if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw ParseError(ParseErrorKind::syntax, "\"variables\" and \"labels\" must be string arrays");
    }
  } else {
    throw ParseError(ParseErrorKind::syntax, "expected a JSON array or object");
  }
  if (!rows.is_array() || rows.empty()) throw ParseError(ParseErrorKind::syntax, "\"normals\" must be a nonempty array");
  std::vector<Normal> normals;
  std::set<Normal> seen;
  std::size_t d = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.empty()) throw ParseError(ParseErrorKind::syntax, "each normal must be a nonempty array");
    if (i == 0) d = row.size();
    if (row.size() != d) throw ParseError(ParseErrorKind::syntax, "normals have different lengths");
    Normal v;
    for (const auto& x : row) v.push_back(scalar_from_json(x));
    if (std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x == 0; }))
      throw ParseError(ParseErrorKind::zero_form, "normal " + std::to_string(i + 1) + " is zero");
    if (!seen.insert(canonical_form(v)).second)
      throw ParseError(ParseErrorKind::duplicate, "normal " + std::to_string(i + 1) + " repeats a hyperplane");
    normals.push_back(std::move(v));
  }
  if (!variables.empty() && variables.size() != d)
    throw ParseError(ParseErrorKind::syntax, "\"variables\" length differs from normal length");
  if (!labels.empty() && labels.size() != normals.size())
    throw ParseError(ParseErrorKind::syntax, "\"labels\" length differs from normal count");
  return Arrangement(d, std::move(normals), std::move(labels), std::move(variables));
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !is_space(c); });
  if (first != text.end() && (*first == '{' || *first == '[')) return parse_json(text);
  return PolynomialParser(text).parse();
}

std::string format_linear_form(const Normal& normal, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    const ExactScalar& c = normal[i];
    if (c == 0) continue;
    ExactScalar mag = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != 1) out += to_string(mag);
    out += i < variables.size() ? variables[i] : "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

json to_json(const Arrangement& a) {
  json normals = json::array();
  for (const auto& v : a.normals()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(scalar_to_json(x));
    normals.push_back(std::move(row));
  }
  return json{{"ambient_dim", a.ambient_dim()},
              {"variables", a.variables()},
              {"normals", std::move(normals)},
              {"labels", a.labels()}};
}

json to_json(const Flat2& f) { return json{{"members", f.members}, {"mobius", f.mobius}}; }

json to_json(const L2Lattice& l2) {
  json flats = json::array();
  for (const auto& f : l2.flats) flats.push_back(to_json(f));
  return json{{"n", l2.n}, {"flats", std::move(flats)}};
}

}  // namespace arr
