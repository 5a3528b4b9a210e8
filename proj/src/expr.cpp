#include "maycalc/expr.hpp"

#include <cctype>
#include <limits>

namespace maycalc {

namespace {

class Parser
{
public:
    Parser(const std::string& s, const PrimeContext& ctx, const std::map<std::string, Int>& vars)
        : s_(s), ctx_(ctx), vars_(vars)
    {
    }

    Int run()
    {
        Int v = sum();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError,
                    "expression '" + s_ + "' column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int checked(__int128 v) const
    {
        if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
            throw Error(ErrorCode::ParseError, "expression '" + s_ + "' overflows");
        return static_cast<Int>(v);
    }

    Int sum()
    {
        Int v = product();
        for (;;) {
            if (eat('+'))
                v = checked(static_cast<__int128>(v) + product());
            else if (eat('-'))
                v = checked(static_cast<__int128>(v) - product());
            else
                return v;
        }
    }

    Int product()
    {
        Int v = unary();
        while (eat('*'))
            v = checked(static_cast<__int128>(v) * unary());
        return v;
    }

    Int unary()
    {
        if (eat('-'))
            return checked(-static_cast<__int128>(unary()));
        if (eat('+'))
            return unary();
        return power();
    }

    Int power()
    {
        Int base = atom();
        if (eat('^')) {
            Int e = unary();  // right associative
            if (e < 0 || e > 62)
                fail("exponent out of range");
            __int128 r = 1;
            for (Int k = 0; k < e; ++k)
                r = checked(r * base);
            return static_cast<Int>(r);
        }
        return base;
    }

    Int atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Int v = sum();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ - start > 18)
                fail("integer too large");
            return std::stoll(s_.substr(start, pos_ - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            auto it = vars_.find(id);
            if (it != vars_.end())
                return it->second;
            if (id == "p")
                return ctx_.p();
            if (id == "q")
                return ctx_.q();
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected character");
    }

    const std::string& s_;
    const PrimeContext& ctx_;
    const std::map<std::string, Int>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Int eval_expr(const std::string& text, const PrimeContext& ctx, const std::map<std::string, Int>& vars)
{
    return Parser(text, ctx, vars).run();
}

}  // namespace maycalc
