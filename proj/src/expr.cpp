#include "slrc/expr.hpp"

#include <cctype>

namespace slrc {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BuiltCode parse() {
        BuiltCode b = product();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return b;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        std::string out = msg + "\n  " + s_ + "\n  " + std::string(pos_, ' ') + "^";
        throw Error(Errc::parse_error, out);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_tensor() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            return true;
        }
        // UTF-8 for the circled-times sign
        if (pos_ + 2 < s_.size() && s_[pos_] == '\xe2' && s_[pos_ + 1] == '\x8a' &&
            s_[pos_ + 2] == '\x97') {
            pos_ += 3;
            return true;
        }
        return false;
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("number too large");
            ++pos_;
        }
        return v;
    }

    BuiltCode product() {
        BuiltCode b = term();
        while (eat_tensor()) {
            BuiltCode rhs = term();
            for (auto& f : rhs.factors) b.factors.push_back(std::move(f));
            b.code = LinearCode(b.code.generator().kronecker(rhs.code.generator()),
                                b.code.name() + " x " + rhs.code.name());
        }
        return b;
    }

    static BuiltCode leaf(LinearCode c) {
        BuiltCode b{{c}, c};
        return b;
    }

    BuiltCode term() {
        skip_ws();
        if (eat('(')) {
            BuiltCode b = product();
            expect(')');
            return b;
        }
        if (pos_ >= s_.size()) fail("expected a code term");
        char head = s_[pos_];
        if (head == 'P') {
            ++pos_;
            expect('(');
            std::uint64_t q = number();
            expect(')');
            return leaf(make_P(static_cast<std::uint32_t>(q)));
        }
        if (head == 'D') {
            ++pos_;
            expect('(');
            std::uint64_t q = number();
            expect(',');
            std::uint64_t n = number();
            expect(')');
            return leaf(make_D(static_cast<std::uint32_t>(q), n));
        }
        if (head == 'R') {
            ++pos_;
            expect('(');
            std::uint64_t q = number();
            expect(',');
            std::uint64_t n = number();
            expect(',');
            std::uint64_t k = number();
            expect(')');
            return leaf(make_R(static_cast<std::uint32_t>(q), n, k));
        }
        if (head == 'B') {
            ++pos_;
            expect('(');
            std::uint64_t q = number();
            expect(',');
            std::uint64_t n = number();
            expect(',');
            std::uint64_t d = number();
            expect(')');
            return leaf(make_BCH(static_cast<std::uint32_t>(q), n, d));
        }
        if (s_.compare(pos_, 6, "punct(") == 0) {
            pos_ += 6;
            BuiltCode inner = product();
            expect(';');
            std::vector<std::size_t> idx;
            idx.push_back(number());
            while (eat(',')) idx.push_back(number());
            expect(')');
            // coordinate deletion breaks any inner factor structure, so the
            // result always counts as a single factor
            return leaf(inner.code.punctured(idx));
        }
        fail("expected a code term");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

BuiltCode parse_code_expr(const std::string& text) { return Parser(text).parse(); }

} // namespace slrc
