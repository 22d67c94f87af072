#include "permc/text_format.hpp"

#include <charconv>
#include <unordered_map>

#include "permc/errors.hpp"

namespace permc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

struct token {
    std::string_view text;
    std::size_t line;
};

class tokenizer {
public:
    explicit tokenizer(std::string_view s) : s_(s) {}

    bool next(token& t) {
        while (pos_ < s_.size() && is_space(s_[pos_])) {
            if (s_[pos_] == '\n') ++line_;
            ++pos_;
        }
        if (pos_ == s_.size()) return false;
        std::size_t start = pos_;
        while (pos_ < s_.size() && !is_space(s_[pos_])) ++pos_;
        t = {s_.substr(start, pos_ - start), line_};
        return true;
    }

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::size_t to_number(const token& t) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || end != t.text.data() + t.text.size())
        throw validation_error("line " + std::to_string(t.line) + ": '" + std::string(t.text) +
                               "' is not a non-negative integer");
    return v;
}

std::vector<std::size_t> parse_values(std::string_view text, bool distinct) {
    tokenizer in(text);
    token t;
    if (!in.next(t)) throw validation_error("line 1: missing length n");
    const std::size_t n = to_number(t);
    if (n > text.size()) throw validation_error("line " + std::to_string(t.line) + ": n = " + std::to_string(n) +
                                                " exceeds what the input can hold");
    std::vector<std::size_t> v;
    v.reserve(n);
    std::vector<std::size_t> first_line(distinct ? n + 1 : 0, 0);
    while (in.next(t)) {
        std::size_t x = to_number(t);
        if (v.size() == n)
            throw validation_error("line " + std::to_string(t.line) + ": more than n = " + std::to_string(n) + " values");
        if (x < 1 || x > n)
            throw validation_error("line " + std::to_string(t.line) + ": value " + std::to_string(x) + " outside [1," +
                                   std::to_string(n) + "]");
        if (distinct) {
            if (first_line[x])
                throw validation_error("line " + std::to_string(t.line) + ": value " + std::to_string(x) +
                                       " repeats (first seen on line " + std::to_string(first_line[x]) + ")");
            first_line[x] = t.line;
        }
        v.push_back(x);
    }
    if (v.size() != n)
        throw validation_error("line " + std::to_string(in.line()) + ": expected " + std::to_string(n) + " values, found " +
                               std::to_string(v.size()));
    return v;
}

} // namespace

std::vector<std::size_t> parse_function(std::string_view text) { return parse_values(text, false); }

permutation parse_permutation(std::string_view text) { return permutation(parse_values(text, true)); }

std::vector<std::size_t> parse_ids(std::string_view text) {
    tokenizer in(text);
    token t;
    std::vector<std::size_t> ids;
    while (in.next(t)) {
        auto x = to_number(t);
        if (x == 0) throw validation_error("line " + std::to_string(t.line) + ": word ids start at 1");
        ids.push_back(x);
    }
    return ids;
}

std::vector<std::size_t> tokenize_words(std::string_view text, std::vector<std::string>& vocabulary) {
    tokenizer in(text);
    token t;
    std::unordered_map<std::string_view, std::size_t> id;
    std::vector<std::size_t> out;
    while (in.next(t)) {
        auto [it, fresh] = id.try_emplace(t.text, id.size() + 1);
        if (fresh) vocabulary.emplace_back(t.text);
        out.push_back(it->second);
    }
    return out;
}

std::string format_permutation(const permutation& pi) {
    std::string s = std::to_string(pi.size()) + "\n";
    for (std::size_t i = 1; i <= pi.size(); ++i) {
        s += std::to_string(pi(i));
        s += i == pi.size() ? '\n' : ' ';
    }
    return s;
}

} // namespace permc
