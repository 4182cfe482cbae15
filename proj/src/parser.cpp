#include "slopelab/parser.hpp"

#include <cctype>

namespace slopelab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    KnotExprPtr parse() {
        KnotExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "expected end of input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool try_consume(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, "expected " + what);
        ++pos_;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
        if (pos_ == digits) throw ParseError(start, "expected an integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    KnotExprPtr expr() {
        skip_ws();
        const std::size_t at = pos_;
        if (try_consume("unknot")) return KnotExpr::unknot();
        if (try_consume("torus")) {
            expect('(', "'(' after torus");
            long long a = integer();
            expect(',', "',' between torus parameters");
            long long b = integer();
            expect(')', "')' closing torus");
            try {
                return KnotExpr::torus((int)a, (int)b);
            } catch (const DomainError& e) {
                throw ParseError(at, e.what());
            }
        }
        if (try_consume("mirror")) {
            expect('(', "'(' after mirror");
            KnotExprPtr inner = expr();
            expect(')', "')' closing mirror");
            return KnotExpr::mirror(inner);
        }
        if (try_consume("sum")) {
            expect('(', "'(' after sum");
            std::vector<KnotExprPtr> parts;
            parts.push_back(expr());
            expect(',', "',' (sum needs at least two parts)");
            parts.push_back(expr());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                parts.push_back(expr());
                skip_ws();
            }
            expect(')', "')' closing sum");
            return KnotExpr::sum(std::move(parts));
        }
        if (try_consume("wh")) {
            expect('(', "'(' after wh");
            long long omega = integer();
            expect(',', "',' after omega");
            long long tau = integer();
            expect(',', "',' after tau");
            KnotExprPtr companion = expr();
            expect(')', "')' closing wh");
            try {
                return KnotExpr::whitehead(omega, tau, companion);
            } catch (const DomainError& e) {
                throw ParseError(at, e.what());
            }
        }
        throw ParseError(pos_, "expected one of unknot, torus, mirror, sum, wh");
    }
};

} // namespace

KnotExprPtr parse_knot_expr(const std::string& text) { return Parser(text).parse(); }

} // namespace slopelab
