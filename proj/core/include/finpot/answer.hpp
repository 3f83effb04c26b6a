#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace finpot {

// Scalar-or-string answer value. Numbers parsed from text keep their source
// literal so grading can round predictions to the gold answer's printed
// precision.
class Answer {
  public:
    enum class Kind { none, number, text };

    Answer() = default;

    static Answer number(double value);
    static Answer number(double value, std::string literal);
    static Answer text(std::string value);

    Kind kind() const { return kind_; }
    bool is_none() const { return kind_ == Kind::none; }
    bool is_number() const { return kind_ == Kind::number; }
    bool is_text() const { return kind_ == Kind::text; }

    double value() const { return number_; }
    const std::string& str() const { return text_; }

    // Source literal for numbers parsed from text; shortest round-trip
    // representation otherwise.
    std::string printed() const;

    nlohmann::json to_json() const;
    static Answer from_json(const nlohmann::json& j);

    bool operator==(const Answer& other) const;

  private:
    Kind kind_ = Kind::none;
    double number_ = 0.0;
    std::string text_;  // literal for numbers, content for text
};

// Lenient numeric parse used by grading: trims whitespace, strips a leading
// currency sign, thousands separators, and one trailing '%'. Returns nullopt
// when the remainder is not a plain number.
std::optional<double> parse_numeric(std::string_view s);

// Cleaned numeric literal corresponding to parse_numeric's view of s, or
// empty when not numeric. Used to count printed decimals.
std::string numeric_literal(std::string_view s);

// Digits after the decimal point in a plain decimal literal; -1 for
// scientific notation or non-numeric input.
int printed_decimals(std::string_view literal);

// Shortest round-trip decimal representation of a double.
std::string shortest_repr(double v);

}  // namespace finpot
