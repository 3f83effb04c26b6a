#include "finpot/answer.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "finpot/text.hpp"

namespace finpot {

Answer Answer::number(double value) {
    Answer a;
    a.kind_ = Kind::number;
    a.number_ = value;
    a.text_ = shortest_repr(value);
    return a;
}

Answer Answer::number(double value, std::string literal) {
    Answer a;
    a.kind_ = Kind::number;
    a.number_ = value;
    a.text_ = std::move(literal);
    return a;
}

Answer Answer::text(std::string value) {
    Answer a;
    a.kind_ = Kind::text;
    a.text_ = std::move(value);
    return a;
}

std::string Answer::printed() const {
    if (kind_ == Kind::none) return "";
    return text_;
}

nlohmann::json Answer::to_json() const {
    switch (kind_) {
        case Kind::none: return nullptr;
        case Kind::number: return number_;
        case Kind::text: return text_;
    }
    return nullptr;
}

Answer Answer::from_json(const nlohmann::json& j) {
    if (j.is_null()) return {};
    if (j.is_number()) return Answer::number(j.get<double>());
    if (j.is_string()) return Answer::text(j.get<std::string>());
    if (j.is_boolean()) return Answer::text(j.get<bool>() ? "true" : "false");
    // Lists and objects (e.g. a program returning several values) are kept
    // verbatim as their compact serialization.
    return Answer::text(j.dump());
}

bool Answer::operator==(const Answer& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == Kind::number) return number_ == other.number_;
    return text_ == other.text_;
}

std::string numeric_literal(std::string_view s) {
    std::string t = trim(s);
    if (t.empty()) return "";
    std::string cleaned;
    cleaned.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const char c = t[i];
        const bool before_digits = cleaned.empty() || cleaned == "-";
        if (c == '$' && before_digits) continue;   // currency sign
        if (c == ',') continue;                    // thousands separator
        if (c == '%' && i + 1 == t.size()) continue;  // one trailing percent sign
        if (c == ' ') {
            if (before_digits) continue;           // "$ 35" style spacing
            return "";
        }
        cleaned.push_back(c);
    }
    if (cleaned.empty()) return "";
    // Validate as a plain or scientific decimal number.
    const char* begin = cleaned.data();
    const char* end = begin + cleaned.size();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) return "";
    return cleaned;
}

std::optional<double> parse_numeric(std::string_view s) {
    const std::string lit = numeric_literal(s);
    if (lit.empty()) return std::nullopt;
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), out);
    if (ec != std::errc()) return std::nullopt;
    return out;
}

int printed_decimals(std::string_view literal) {
    if (literal.empty()) return -1;
    if (literal.find('e') != std::string_view::npos ||
        literal.find('E') != std::string_view::npos) {
        return -1;
    }
    const auto dot = literal.find('.');
    if (dot == std::string_view::npos) return 0;
    return static_cast<int>(literal.size() - dot - 1);
}

std::string shortest_repr(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

}  // namespace finpot
