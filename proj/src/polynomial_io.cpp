#include "lensroots/polynomial_io.hpp"

#include <cctype>
#include <cstdlib>

#include "lensroots/error.hpp"

namespace lensroots {

nlohmann::json to_json(const MixedPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"nu", e.nu}, {"mu", e.mu}, {"re", c.real()}, {"im", c.imag()}});
  return {{"terms", terms}};
}

MixedPolynomial polynomial_from_json(const nlohmann::json& j) {
  const nlohmann::json* terms = &j;
  if (j.is_object()) {
    if (j.contains("polynomial")) return polynomial_from_json(j.at("polynomial"));
    if (!j.contains("terms")) throw Error(ErrorCode::ParseError, "polynomial JSON needs a \"terms\" array");
    terms = &j.at("terms");
  }
  if (!terms->is_array()) throw Error(ErrorCode::ParseError, "\"terms\" must be an array");
  MixedPolynomial::TermMap map;
  try {
    for (const auto& t : *terms) {
      int nu = t.at("nu").get<int>();
      int mu = t.at("mu").get<int>();
      if (nu < 0 || mu < 0) throw Error(ErrorCode::ParseError, "negative exponent");
      double re = t.value("re", 0.0);
      double im = t.value("im", 0.0);
      map[{nu, mu}] += Complex(re, im);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  return MixedPolynomial(std::move(map));
}

namespace {

class TextParser {
 public:
  explicit TextParser(const std::string& s) : s_(s) {}

  MixedPolynomial parse() {
    MixedPolynomial::TermMap map;
    skip();
    if (pos_ < s_.size() && s_.compare(pos_, std::string::npos, "0") == 0) return {};
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      double sign = 1.0;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Complex c = 1.0;
      bool have_coeff = false;
      if (peek() == '(') {
        ++pos_;
        double re = number();
        expect(',');
        double im = number();
        expect(')');
        c = {re, im};
        have_coeff = true;
      } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
        c = number();
        have_coeff = true;
      }
      int nu = 0, mu = 0;
      bool have_var = false;
      while (true) {
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        }
        if (peek() != 'z') break;
        ++pos_;
        bool bar = false;
        if (peek() == 'b') {
          bar = true;
          ++pos_;
        }
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = static_cast<int>(number());
        }
        (bar ? mu : nu) += e;
        have_var = true;
      }
      if (!have_coeff && !have_var) fail("empty term");
      map[{nu, mu}] += sign * c;
    }
    return MixedPolynomial(std::move(map));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  double number() {
    skip();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MixedPolynomial parse_polynomial(const std::string& text) { return TextParser(text).parse(); }

}  // namespace lensroots
