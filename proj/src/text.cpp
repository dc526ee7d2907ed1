#include "skewcomm/text.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <optional>

namespace skewcomm {

using nlohmann::ordered_json;

namespace {

class Parser {
public:
    Parser(std::string_view text, const Field& k) : s_(text), k_(k) {}

    Elem element() {
        Elem a = field_expr();
        expect_end();
        return a;
    }

    struct Parsed {
        std::vector<std::pair<int, Elem>> terms;
        std::optional<int> prec;
    };

    Parsed series() {
        Parsed out;
        bool first = true;
        while (true) {
            skip();
            bool negative = false;
            if (peek('+') || peek('-')) {
                negative = s_[pos_] == '-';
                ++pos_;
                skip();
            } else if (!first) {
                break;
            }
            first = false;
            if (peek('O')) {
                if (negative) fail("precision term must be added");
                if (out.prec) fail("second precision term");
                out.prec = precision_term();
                skip();
                if (pos_ < s_.size()) fail("precision term must come last");
                break;
            }
            auto [e, c] = term();
            if (negative) c = k_.neg(c);
            out.terms.emplace_back(e, std::move(c));
        }
        expect_end();
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::SyntaxError, "at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_end() {
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    }

    int signed_int() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        const char* begin = s_.data() + start + (s_[start] == '+' ? 1 : 0);
        int value = 0;
        auto [ptr, ec] = std::from_chars(begin, s_.data() + pos_, value);
        if (ec != std::errc() || ptr != s_.data() + pos_) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }

    int x_power() {
        ++pos_;  // 'x'
        if (!peek('^')) return 1;
        ++pos_;
        return signed_int();
    }

    int precision_term() {
        ++pos_;  // 'O'
        expect('(');
        if (!peek('x')) fail("expected 'x'");
        const int p = x_power();
        expect(')');
        return p;
    }

    Elem atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return k_.from_rational(mpq_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (c == '(') {
            ++pos_;
            Elem a = field_expr();
            expect(')');
            return a;
        }
        if (c == k_.generator_symbol()) {
            ++pos_;
            return k_.generator();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown symbol '") + c + "'");
        fail(std::string("unexpected '") + c + "'");
    }

    Elem power() {
        Elem a = atom();
        if (!peek('^')) return a;
        ++pos_;
        const int e = signed_int();
        if (e < 0) return k_.pow(k_.inv(a), -static_cast<long>(e));
        return k_.pow(a, e);
    }

    Elem field_term() {
        Elem a = power();
        while (peek('*') || peek('/')) {
            const bool divide = s_[pos_++] == '/';
            Elem b = power();
            a = divide ? k_.div(a, b) : k_.mul(a, b);
        }
        return a;
    }

    Elem field_expr() {
        bool negative = false;
        if (peek('+') || peek('-')) negative = s_[pos_++] == '-';
        Elem a = field_term();
        if (negative) a = k_.neg(a);
        while (peek('+') || peek('-')) {
            const bool minus = s_[pos_++] == '-';
            Elem b = field_term();
            a = minus ? k_.sub(a, b) : k_.add(a, b);
        }
        return a;
    }

    // c x^e with field factors to the right of x^e moved left through sigma^e
    std::pair<int, Elem> term() {
        int e = 0;
        Elem c = k_.one();
        bool divide = false;
        while (true) {
            if (peek('x')) {
                const int p = x_power();
                e += divide ? -p : p;
            } else {
                Elem a = k_.apply_sigma(power(), e);
                c = divide ? k_.div(c, a) : k_.mul(c, a);
            }
            if (peek('*') || peek('/')) {
                divide = s_[pos_++] == '/';
            } else if (peek('x')) {
                divide = false;
            } else {
                break;
            }
        }
        return {e, std::move(c)};
    }

    std::string_view s_;
    const Field& k_;
    std::size_t pos_ = 0;
};

bool bare_atom(const std::string& s) {
    if (s.empty()) return false;
    bool digits = true;
    for (char c : s) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) return true;
    if (s[0] != 'g' && s[0] != 't') return false;
    if (s.size() == 1) return true;
    if (s.size() < 3 || s[1] != '^') return false;
    for (std::size_t i = 2; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

[[noreturn]] void schema_error(const std::string& what) { throw Error(Errc::SyntaxError, "certificate: " + what); }

const ordered_json& member(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int int_member(const ordered_json& j, const char* key) {
    const auto& v = member(j, key);
    if (!v.is_number_integer()) schema_error(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_member(const ordered_json& j, const char* key) {
    const auto& v = member(j, key);
    if (!v.is_string()) schema_error(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

Elem parse_element(std::string_view text, const Field& k) { return Parser(text, k).element(); }

SkewSeries parse_series(std::string_view text, const FieldCtx& field, int default_prec) {
    auto parsed = Parser(text, *field).series();
    int prec;
    if (parsed.prec) {
        prec = *parsed.prec;
    } else {
        // duplicates may cancel; the valuation is that of the sum
        int hi = INT_MIN;
        for (const auto& [e, c] : parsed.terms) hi = std::max(hi, e);
        const auto sum = SkewSeries::from_terms(field, parsed.terms, parsed.terms.empty() ? 0 : hi + 1);
        prec = sum.valuation().value_or(0) + default_prec;
        if (!parsed.terms.empty() && hi >= prec)
            throw Error(Errc::ExponentBeyondPrecision,
                        "exponent " + std::to_string(hi) + " not below default precision " + std::to_string(prec));
    }
    return SkewSeries::from_terms(field, parsed.terms, prec);
}

std::string format_series(const SkewSeries& f) {
    const Field& k = f.field();
    std::string out;
    for (std::size_t idx = 0; idx < f.coeffs().size(); ++idx) {
        const Elem& c = f.coeffs()[idx];
        if (k.is_zero(c)) continue;
        std::string atom = k.format(c);
        if (!bare_atom(atom)) atom = "(" + atom + ")";
        out += atom + "*x^" + std::to_string(f.window_start() + static_cast<int>(idx)) + " + ";
    }
    return out + "O(x^" + std::to_string(f.prec()) + ")";
}

std::string format_kseries(const KSeries& f) { return format_series(f.series()); }

ordered_json series_to_json(const SkewSeries& f) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(f.field().format(c));
    ordered_json j;
    j["val"] = f.window_start();
    j["prec"] = f.prec();
    j["coeffs"] = std::move(coeffs);
    return j;
}

SkewSeries series_from_json(const ordered_json& j, const FieldCtx& field) {
    const int val = int_member(j, "val");
    const int prec = int_member(j, "prec");
    const auto& arr = member(j, "coeffs");
    if (!arr.is_array()) schema_error("\"coeffs\" must be an array");
    if (prec < val || arr.size() != static_cast<std::size_t>(prec - val))
        schema_error("series with val " + std::to_string(val) + " and prec " + std::to_string(prec) + " needs " +
                     std::to_string(std::max(prec - val, 0)) + " coefficients, got " + std::to_string(arr.size()));
    std::vector<Elem> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_string()) schema_error("coefficients must be strings");
        coeffs.push_back(parse_element(c.get<std::string>(), *field));
    }
    return SkewSeries(field, val, std::move(coeffs), prec);
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["field"] = cert.field_spec();
    j["sigma"] = cert.sigma_spec();
    j["method"] = std::string(method_name(cert.method));
    j["prec"] = cert.check_prec;
    j["input"] = series_to_json(cert.input);
    ordered_json pairs = ordered_json::array();
    for (const auto& [p, q] : cert.pairs) pairs.push_back(ordered_json::array({series_to_json(p), series_to_json(q)}));
    j["pairs"] = std::move(pairs);
    if (cert.experimental) j["experimental"] = true;
    return j;
}

Certificate certificate_from_json(const ordered_json& j) {
    const FieldCtx field = make_field(string_member(j, "field"), string_member(j, "sigma"));
    const std::string name = string_member(j, "method");
    const auto method = method_from_name(name);
    if (!method) schema_error("unknown method \"" + name + "\"");
    const int check_prec = int_member(j, "prec");
    SkewSeries input = series_from_json(member(j, "input"), field);
    const auto& pairs = member(j, "pairs");
    if (!pairs.is_array() || pairs.size() != 2) schema_error("\"pairs\" must hold two pairs");
    std::vector<SeriesPair> parsed;
    for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) schema_error("each pair must hold two series");
        parsed.emplace_back(series_from_json(pair[0], field), series_from_json(pair[1], field));
    }
    bool experimental = false;
    if (j.contains("experimental")) {
        if (!j.at("experimental").is_boolean()) schema_error("\"experimental\" must be a boolean");
        experimental = j.at("experimental").get<bool>();
    }
    return Certificate{field, std::move(input), {std::move(parsed[0]), std::move(parsed[1])}, check_prec, *method,
                       experimental};
}

}  // namespace skewcomm
