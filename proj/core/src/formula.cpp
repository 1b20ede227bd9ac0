#include "bimodal/formula.hpp"

#include <cctype>

namespace bimodal {

FormulaPtr Formula::variable(std::string numeral) {
    return FormulaPtr(new Formula(Kind::Var, std::move(numeral), nullptr, nullptr));
}

FormulaPtr Formula::variable(unsigned long long id) {
    if (id == 0) return variable(std::string("0"));
    std::string bits;
    while (id) {
        bits.push_back(char('0' + (id & 1)));
        id >>= 1;
    }
    return variable(std::string(bits.rbegin(), bits.rend()));
}

FormulaPtr Formula::neg(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::Neg, {}, std::move(f), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(Kind::And, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::box(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::Box, {}, std::move(f), nullptr));
}

FormulaPtr Formula::know(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::K, {}, std::move(f), nullptr));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Var: return a->var == b->var;
        case Kind::And: return equal(a->left, b->left) && equal(a->right, b->right);
        default: return equal(a->left, b->left);
    }
}

static void render_into(const FormulaPtr& f, std::string& out) {
    switch (f->kind) {
        case Kind::Var:
            out += 'x';
            out += f->var;
            break;
        case Kind::Neg:
            out += '~';
            render_into(f->left, out);
            break;
        case Kind::Box:
            out += "[]";
            render_into(f->left, out);
            break;
        case Kind::K:
            out += 'K';
            render_into(f->left, out);
            break;
        case Kind::And:
            out += '(';
            render_into(f->left, out);
            out += " & ";
            render_into(f->right, out);
            out += ')';
            break;
    }
}

std::string render(const FormulaPtr& f) {
    std::string out;
    render_into(f, out);
    return out;
}

Lengths lengths(const FormulaPtr& f) {
    switch (f->kind) {
        case Kind::Var:
            return {1 + f->var.size(), 1};
        case Kind::Neg:
        case Kind::Box:
        case Kind::K: {
            auto c = lengths(f->left);
            return {c.symbols + 1, c.simplified + 1};
        }
        case Kind::And: {
            auto l = lengths(f->left);
            auto r = lengths(f->right);
            return {l.symbols + r.symbols + 3, l.simplified + r.simplified + 3};
        }
    }
    return {0, 0};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    FormulaPtr run() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(0, "empty input");
        FormulaPtr f = formula();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError(pos_, "trailing input");
        return f;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(pos_, std::string("expected ") + what);
        ++pos_;
    }

    // (phi | psi) := ~(~phi & ~psi)
    static FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
        return Formula::neg(Formula::conj(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
    }

    FormulaPtr formula() {
        skip_ws();
        char c = peek();
        switch (c) {
            case '~':
                ++pos_;
                return Formula::neg(formula());
            case '[':
                ++pos_;
                expect(']', "']'");
                return Formula::box(formula());
            case 'K':
                ++pos_;
                return Formula::know(formula());
            case 'L':  // L phi := ~K~phi
                ++pos_;
                return Formula::neg(Formula::know(Formula::neg(formula())));
            case '<':  // <> phi := ~[]~phi
                ++pos_;
                expect('>', "'>'");
                return Formula::neg(Formula::box(Formula::neg(formula())));
            case '(': {
                ++pos_;
                FormulaPtr l = formula();
                skip_ws();
                FormulaPtr f = binary(std::move(l));
                skip_ws();
                expect(')', "')'");
                return f;
            }
            case 'x':
                return variable();
            case '\0':
                throw ParseError(pos_, "unexpected end of input");
            default:
                throw ParseError(pos_, std::string("unknown token '") + c + "'");
        }
    }

    FormulaPtr binary(FormulaPtr l) {
        char c = peek();
        if (c == '&') {
            ++pos_;
            return Formula::conj(std::move(l), formula());
        }
        if (c == '|') {
            ++pos_;
            return mk_or(std::move(l), formula());
        }
        if (c == '-') {  // (phi -> psi) := (~phi | psi)
            ++pos_;
            expect('>', "'>'");
            return mk_or(Formula::neg(std::move(l)), formula());
        }
        if (c == '<') {  // (phi <-> psi) := ((~phi | psi) & (~psi | phi))
            ++pos_;
            expect('-', "'-'");
            expect('>', "'>'");
            FormulaPtr r = formula();
            return Formula::conj(mk_or(Formula::neg(l), r), mk_or(Formula::neg(r), l));
        }
        throw ParseError(pos_, "expected binary operator");
    }

    FormulaPtr variable() {
        std::size_t start = pos_;
        ++pos_;  // 'x'
        std::size_t digits = pos_;
        while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) ++pos_;
        if (pos_ == digits) throw ParseError(start, "variable without numeral");
        std::string numeral(s_.substr(digits, pos_ - digits));
        if (numeral.size() > 1 && numeral[0] == '0')
            throw ParseError(digits, "variable numeral with leading zero");
        return Formula::variable(std::move(numeral));
    }
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).run(); }

int SubformulaTable::index_of(const FormulaPtr& f) const {
    auto it = index.find(render(f));
    return it == index.end() ? -1 : it->second;
}

static int visit(const FormulaPtr& f, SubformulaTable& t) {
    int c0 = -1, c1 = -1;
    if (f->kind != Kind::Var) c0 = visit(f->left, t);
    if (f->kind == Kind::And) c1 = visit(f->right, t);
    std::string key = render(f);
    auto it = t.index.find(key);
    if (it != t.index.end()) return it->second;
    int idx = static_cast<int>(t.formulas.size());
    t.formulas.push_back(f);
    t.kinds.push_back(f->kind);
    t.child0.push_back(c0);
    t.child1.push_back(c1);
    t.index.emplace(std::move(key), idx);
    return idx;
}

SubformulaTable subformulas(const FormulaPtr& f) {
    SubformulaTable t;
    visit(f, t);
    std::size_t a = t.size();
    t.mask_at = Bitset(a);
    t.mask_box = Bitset(a);
    t.mask_k = Bitset(a);
    for (std::size_t i = 0; i < a; ++i) {
        if (t.kinds[i] == Kind::Var) t.mask_at.set(i);
        if (t.kinds[i] == Kind::Box) t.mask_box.set(i);
        if (t.kinds[i] == Kind::K) t.mask_k.set(i);
    }
    return t;
}

}  // namespace bimodal
