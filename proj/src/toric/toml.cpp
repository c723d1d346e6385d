#include "verlinde/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace verlinde::toml {

namespace {

class Reader {
public:
    explicit Reader(const std::string& t) : s_(t) {}

    nlohmann::json document()
    {
        nlohmann::json root = nlohmann::json::object();
        nlohmann::json* table = &root;
        while (true) {
            skip_blank_lines();
            if (eof())
                break;
            if (peek() == '[') {
                table = header(root);
                continue;
            }
            std::vector<std::string> key = dotted_key();
            skip_ws();
            expect('=');
            skip_ws();
            nlohmann::json v = value();
            nlohmann::json* target = table;
            for (size_t i = 0; i + 1 < key.size(); ++i)
                target = &(*target)[key[i]];
            if (target->contains(key.back()))
                fail("duplicate key " + key.back());
            (*target)[key.back()] = std::move(v);
            end_of_line();
        }
        return root;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        size_t line = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i)
            line += s_[i] == '\n';
        throw std::runtime_error("toml line " + std::to_string(line) + ": " + msg);
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws()
    {
        while (!eof() && (peek() == ' ' || peek() == '\t'))
            ++pos_;
    }

    void skip_comment()
    {
        if (peek() == '#')
            while (!eof() && peek() != '\n')
                ++pos_;
    }

    void skip_blank_lines()
    {
        while (!eof()) {
            skip_ws();
            skip_comment();
            if (peek() == '\n' || peek() == '\r')
                ++pos_;
            else
                break;
        }
    }

    // whitespace, comments and newlines inside arrays
    void skip_space_all()
    {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                ++pos_;
            else if (c == '#')
                skip_comment();
            else
                break;
        }
    }

    void end_of_line()
    {
        skip_ws();
        skip_comment();
        if (eof())
            return;
        if (peek() == '\r')
            ++pos_;
        if (peek() != '\n')
            fail("trailing characters after value");
        ++pos_;
    }

    std::string bare_or_quoted_key()
    {
        skip_ws();
        if (peek() == '"')
            return string_literal();
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
            ++pos_;
        if (start == pos_)
            fail("expected a key");
        return s_.substr(start, pos_ - start);
    }

    std::vector<std::string> dotted_key()
    {
        std::vector<std::string> parts{bare_or_quoted_key()};
        skip_ws();
        while (peek() == '.') {
            ++pos_;
            parts.push_back(bare_or_quoted_key());
            skip_ws();
        }
        return parts;
    }

    nlohmann::json* header(nlohmann::json& root)
    {
        expect('[');
        bool array_table = peek() == '[';
        if (array_table)
            ++pos_;
        std::vector<std::string> key = dotted_key();
        expect(']');
        if (array_table)
            expect(']');
        end_of_line();
        nlohmann::json* t = &root;
        for (size_t i = 0; i + 1 < key.size(); ++i) {
            t = &(*t)[key[i]];
            if (t->is_array())
                t = &t->back();
        }
        nlohmann::json& last = (*t)[key.back()];
        if (array_table) {
            if (last.is_null())
                last = nlohmann::json::array();
            if (!last.is_array())
                fail("key " + key.back() + " is not an array of tables");
            last.push_back(nlohmann::json::object());
            return &last.back();
        }
        if (last.is_null())
            last = nlohmann::json::object();
        if (!last.is_object())
            fail("key " + key.back() + " is not a table");
        return &last;
    }

    std::string string_literal()
    {
        expect('"');
        std::string out;
        while (!eof() && peek() != '"') {
            char c = s_[pos_++];
            if (c == '\n')
                fail("unterminated string");
            if (c == '\\') {
                char e = s_[pos_++];
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: fail("unsupported escape");
                }
            } else {
                out += c;
            }
        }
        expect('"');
        return out;
    }

    nlohmann::json value()
    {
        char c = peek();
        if (c == '"')
            return string_literal();
        if (c == '[') {
            ++pos_;
            nlohmann::json arr = nlohmann::json::array();
            skip_space_all();
            while (peek() != ']') {
                arr.push_back(value());
                skip_space_all();
                if (peek() == ',') {
                    ++pos_;
                    skip_space_all();
                } else if (peek() != ']') {
                    fail("expected ',' or ']' in array");
                }
            }
            ++pos_;
            return arr;
        }
        if (c == '{') {
            ++pos_;
            nlohmann::json obj = nlohmann::json::object();
            skip_ws();
            while (peek() != '}') {
                std::vector<std::string> key = dotted_key();
                skip_ws();
                expect('=');
                skip_ws();
                nlohmann::json* target = &obj;
                for (size_t i = 0; i + 1 < key.size(); ++i)
                    target = &(*target)[key[i]];
                (*target)[key.back()] = value();
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    skip_ws();
                } else if (peek() != '}') {
                    fail("expected ',' or '}' in inline table");
                }
            }
            ++pos_;
            return obj;
        }
        if (s_.compare(pos_, 4, "true") == 0) {
            pos_ += 4;
            return true;
        }
        if (s_.compare(pos_, 5, "false") == 0) {
            pos_ += 5;
            return false;
        }
        size_t start = pos_;
        if (peek() == '+' || peek() == '-')
            ++pos_;
        while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string digits;
        for (size_t i = start; i < pos_; ++i)
            if (s_[i] != '_')
                digits += s_[i];
        if (digits.empty() || digits == "+" || digits == "-")
            fail("unsupported value");
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            fail("integer out of range: " + digits);
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

nlohmann::json parse(const std::string& text)
{
    return Reader(text).document();
}

nlohmann::json parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace verlinde::toml
