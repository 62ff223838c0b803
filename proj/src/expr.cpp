#include "qpd/expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "qpd/qfactory.hpp"

namespace qpd {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = kind;
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
}

bool is_known_name(const std::string& s) {
    return s == "pd" || s == "g" || s == "h" || s == "phi" || s == "psi" ||
           s == "sq_not3" || s == "sq_odd" || s == "sq_alt" || s == "oddmult";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::int64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail("expected integer");
        }
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::int64_t(1) << 50)) fail("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string ident() {
        skip_ws();
        std::string s;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                s += c;
                ++pos_;
            } else {
                break;
            }
        }
        return s;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (consume('+'))
                e = binary(ExprKind::Add, e, term());
            else if (consume('-'))
                e = binary(ExprKind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (consume('*'))
                e = binary(ExprKind::Mul, e, factor());
            else if (consume('/'))
                e = binary(ExprKind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!consume('^')) return base;
        Expr e;
        e.kind = ExprKind::Pow;
        e.args[0] = integer();
        e.lhs = std::move(base);
        return node(std::move(e));
    }

    ExprPtr call_subst() {
        expect('(');
        Expr e;
        e.kind = ExprKind::Subst;
        e.lhs = expr();
        expect(',');
        e.args[0] = integer();
        if (e.args[0] < 1) fail("subst requires k >= 1");
        expect(')');
        return node(std::move(e));
    }

    ExprPtr call_prog() {
        expect('(');
        Expr e;
        e.kind = ExprKind::Prog;
        e.lhs = expr();
        expect(',');
        e.args[0] = integer();
        expect(',');
        e.args[1] = integer();
        if (e.args[0] < 1 || e.args[1] < 0 || e.args[1] >= e.args[0])
            fail("prog requires A >= 1 and 0 <= r < A");
        expect(')');
        return node(std::move(e));
    }

    ExprPtr call_theta() {
        expect('(');
        Expr e;
        e.kind = ExprKind::Theta;
        for (int i = 0; i < 4; ++i) {
            if (i > 0) expect(',');
            e.args[static_cast<std::size_t>(i)] = integer();
        }
        expect(')');
        if (e.args[0] < 1 || e.args[1] < 1) fail("theta exponents must be >= 1");
        if ((e.args[2] != 1 && e.args[2] != -1) || (e.args[3] != 1 && e.args[3] != -1))
            fail("theta signs must be 1 or -1");
        return node(std::move(e));
    }

    ExprPtr call_poch() {
        expect('(');
        Expr e;
        e.kind = ExprKind::Poch;
        e.args[0] = integer();
        expect(',');
        e.args[1] = integer();
        expect(')');
        if (e.args[0] < 1 || e.args[1] < 1) fail("P(a,b) requires a, b >= 1");
        return node(std::move(e));
    }

    ExprPtr named_atom(const std::string& name) {
        Expr e;
        e.kind = ExprKind::Named;
        if (name.rfind("pd_", 0) == 0) {
            const std::string suffix = name.substr(3);
            if (suffix.empty()) fail("pd_ needs a subscript");
            std::int64_t k = 0;
            for (char c : suffix) {
                if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad pd_ subscript");
                k = k * 10 + (c - '0');
            }
            if (k < 2) fail("pd_<k> requires k >= 2");
            e.name = "pd";
            e.args[0] = k;
            return node(std::move(e));
        }
        if (!is_known_name(name)) fail("unknown name '" + name + "'");
        e.name = name;
        return node(std::move(e));
    }

    ExprPtr atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            Expr e;
            e.kind = ExprKind::IntLit;
            e.value = integer();
            return node(std::move(e));
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected atom");

        const std::size_t start = pos_;
        const std::string name = ident();
        if (name == "q") {
            Expr e;
            e.kind = ExprKind::QPow;
            if (consume('^')) {
                e.args[0] = integer();
                if (e.args[0] < 0) fail("q^j requires j >= 0");
            } else {
                e.args[0] = 1;
            }
            return node(std::move(e));
        }
        if (name.size() >= 2 && name[0] == 'f' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            Expr e;
            e.kind = ExprKind::Eta;
            std::int64_t k = 0;
            for (std::size_t i = 1; i < name.size(); ++i) k = k * 10 + (name[i] - '0');
            if (k < 1) fail("f<k> requires k >= 1");
            e.args[0] = k;
            return node(std::move(e));
        }
        if (name == "P") return call_poch();
        if (name == "theta") return call_theta();
        if (name == "subst") return call_subst();
        if (name == "prog") return call_prog();
        (void)start;
        return named_atom(name);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Precedence levels for printing: Add/Sub = 1, Mul/Div = 2, Pow = 3,
// atoms = 4. Negative literals get 0 so they parenthesize in any child slot.
int precedence(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Pow: return 3;
        case ExprKind::IntLit: return e.value < 0 ? 0 : 4;
        default: return 4;
    }
}

void print_rec(const ExprPtr& e, int min_prec, std::string& out) {
    const bool wrap = precedence(*e) < min_prec;
    if (wrap) out += '(';
    switch (e->kind) {
        case ExprKind::IntLit:
            out += e->value.get_str();
            break;
        case ExprKind::QPow:
            out += "q^" + std::to_string(e->args[0]);
            break;
        case ExprKind::Eta:
            out += "f" + std::to_string(e->args[0]);
            break;
        case ExprKind::Poch:
            out += "P(" + std::to_string(e->args[0]) + "," + std::to_string(e->args[1]) + ")";
            break;
        case ExprKind::Theta:
            out += "theta(" + std::to_string(e->args[0]) + "," + std::to_string(e->args[1]) +
                   "," + std::to_string(e->args[2]) + "," + std::to_string(e->args[3]) + ")";
            break;
        case ExprKind::Named:
            out += e->name;
            if (e->args[0] > 0) out += "_" + std::to_string(e->args[0]);
            break;
        case ExprKind::Add:
            print_rec(e->lhs, 1, out);
            out += '+';
            print_rec(e->rhs, 2, out);
            break;
        case ExprKind::Sub:
            print_rec(e->lhs, 1, out);
            out += '-';
            print_rec(e->rhs, 2, out);
            break;
        case ExprKind::Mul:
            print_rec(e->lhs, 2, out);
            out += '*';
            print_rec(e->rhs, 3, out);
            break;
        case ExprKind::Div:
            print_rec(e->lhs, 2, out);
            out += '/';
            print_rec(e->rhs, 3, out);
            break;
        case ExprKind::Pow:
            print_rec(e->lhs, 4, out);
            out += "^" + std::to_string(e->args[0]);
            break;
        case ExprKind::Subst:
            out += "subst(";
            print_rec(e->lhs, 1, out);
            out += "," + std::to_string(e->args[0]) + ")";
            break;
        case ExprKind::Prog:
            out += "prog(";
            print_rec(e->lhs, 1, out);
            out += "," + std::to_string(e->args[0]) + "," + std::to_string(e->args[1]) + ")";
            break;
    }
    if (wrap) out += ')';
}

TruncatedSeries eval_named(const Expr& e, std::int64_t N, OptMod mod) {
    if (e.name == "pd") {
        return e.args[0] == 0 ? pd_series(N, mod) : pdk_series(e.args[0], N, mod);
    }
    if (e.name == "g") return g_series(N, mod);
    if (e.name == "h") return h_series(N, mod);
    if (e.name == "phi") return theta(ThetaSpec::phi(), N, mod);
    if (e.name == "psi") return theta(ThetaSpec::psi(), N, mod);
    if (e.name == "sq_not3") return square_sum_not3(N, mod);
    if (e.name == "sq_odd") return square_sum_odd(N, mod);
    if (e.name == "sq_alt") return square_sum_alternating(N, mod);
    if (e.name == "oddmult") return odd_multiplicity_series(N, mod);
    throw std::logic_error("expr: unhandled name " + e.name);
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_rec(e, 0, out);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->value != b->value || a->name != b->name ||
        a->args != b->args)
        return false;
    return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

TruncatedSeries evaluate(const ExprPtr& e, std::int64_t N, OptMod mod) {
    switch (e->kind) {
        case ExprKind::IntLit:
            return TruncatedSeries::constant(e->value, N, mod);
        case ExprKind::QPow:
            return TruncatedSeries::monomial(1, e->args[0], N, mod);
        case ExprKind::Eta:
            return fk(e->args[0], N, mod);
        case ExprKind::Poch:
            return pochhammer(e->args[0], e->args[1], N, mod);
        case ExprKind::Theta:
            return theta(ThetaSpec::general(e->args[0], e->args[1],
                                            static_cast<int>(e->args[2]),
                                            static_cast<int>(e->args[3])),
                         N, mod);
        case ExprKind::Named:
            return eval_named(*e, N, mod);
        case ExprKind::Add:
            return add(evaluate(e->lhs, N, mod), evaluate(e->rhs, N, mod));
        case ExprKind::Sub:
            return sub(evaluate(e->lhs, N, mod), evaluate(e->rhs, N, mod));
        case ExprKind::Mul:
            return mul(evaluate(e->lhs, N, mod), evaluate(e->rhs, N, mod));
        case ExprKind::Div:
            return mul(evaluate(e->lhs, N, mod), invert(evaluate(e->rhs, N, mod)));
        case ExprKind::Pow:
            return power(evaluate(e->lhs, N, mod), e->args[0]);
        case ExprKind::Subst:
            return substitute_power(evaluate(e->lhs, N, mod), e->args[0]);
        case ExprKind::Prog:
            return extract_progression(
                evaluate(e->lhs, e->args[0] * N + e->args[1], mod), e->args[0],
                e->args[1]);
    }
    throw std::logic_error("expr: unhandled kind");
}

TruncatedSeries evaluate(const std::string& text, std::int64_t N, OptMod mod) {
    return evaluate(parse_expr(text), N, mod);
}

}  // namespace qpd
