#include "lattangle/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lattangle {

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

MPoly MPoly::constant(const Cyclo& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = Cyclo(1);
    return p;
}

MPoly MPoly::monomial(const Cyclo& coeff, const std::vector<std::string>& vars,
                      const Exps& exps) {
    if (vars.size() != exps.size()) throw std::invalid_argument("monomial arity mismatch");
    MPoly p;
    if (coeff.is_zero()) return p;
    std::vector<size_t> idx(vars.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vars[a] < vars[b]; });
    Exps e;
    for (size_t i : idx) {
        if (!p.vars_.empty() && p.vars_.back() == vars[i])
            throw std::invalid_argument("duplicate variable");
        p.vars_.push_back(vars[i]);
        e.push_back(exps[i]);
    }
    p.terms_[e] = coeff;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (long e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Cyclo MPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms_.empty() ? Cyclo(0) : terms_.begin()->second;
}

MPoly MPoly::with_vars(const std::vector<std::string>& names) const {
    std::vector<long> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(names.begin(), names.end(), vars_[i]);
        if (it == names.end()) throw std::invalid_argument("with_vars: missing " + vars_[i]);
        pos[i] = it - names.begin();
    }
    MPoly p;
    p.vars_ = names;
    for (const auto& [e, c] : terms_) {
        Exps ne(names.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        p.terms_[ne] = c;
    }
    return p;
}

static std::vector<std::string> merged_vars(const MPoly& a, const MPoly& b) {
    std::vector<std::string> v = a.vars();
    v.insert(v.end(), b.vars().begin(), b.vars().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

MPoly MPoly::operator-() const {
    MPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    auto vars = merged_vars(a, b);
    MPoly x = a.with_vars(vars), y = b.with_vars(vars);
    for (const auto& [e, c] : y.terms_) {
        auto [it, fresh] = x.terms_.try_emplace(e, c);
        if (!fresh) it->second += c;
    }
    x.prune();
    return x;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    auto vars = merged_vars(a, b);
    MPoly x = a.with_vars(vars), y = b.with_vars(vars);
    MPoly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            MPoly::Exps e(vars.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Cyclo prod = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(e, prod);
            if (!fresh) it->second += prod;
        }
    }
    r.prune();
    return r;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
        MPoly p;
        p.vars_ = vars_;
        Exps ne = terms_.begin()->first;
        for (auto& v : ne) v = -v;
        p.terms_[ne] = terms_.begin()->second.inv();
        return p.pow(-e);
    }
    MPoly r = MPoly::constant(Cyclo(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Cyclo MPoly::eval(const std::map<std::string, Cyclo>& point) const {
    std::vector<Cyclo> vals;
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("eval: unbound variable " + v);
        vals.push_back(it->second);
    }
    Cyclo sum(0);
    for (const auto& [e, c] : terms_) {
        Cyclo t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * vals[i].pow(e[i]);
        sum = sum + t;
    }
    return sum;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& map) const {
    std::vector<MPoly> images;
    for (const auto& v : vars_) {
        auto it = map.find(v);
        images.push_back(it != map.end() ? it->second : MPoly::variable(v));
    }
    MPoly sum;
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        sum = sum + t;
    }
    return sum;
}

// ---------- parser ----------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    MPoly parse_expr() {
        MPoly r = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else return r;
        }
    }

    MPoly parse_term() {
        MPoly r = parse_power();
        while (eat('*')) r *= parse_power();
        return r;
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            if (e < 0) throw std::invalid_argument("negative exponent in expression");
            return base.pow(e);
        }
        return base;
    }

    MPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MPoly r = parse_expr();
            if (!eat(')')) throw std::invalid_argument("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) return MPoly::constant(Cyclo(Rational(parse_int())));
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                name += s[pos++];
            return MPoly::variable(name);
        }
        throw std::invalid_argument("unexpected character in expression: " + std::string(1, c));
    }

    long parse_int() {
        bool neg = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            throw std::invalid_argument("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
};

}  // namespace

MPoly MPoly::parse(const std::string& expr) {
    Parser p(expr);
    MPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size()) throw std::invalid_argument("trailing input in expression");
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        auto r = c.as_rational();
        if (r) os << format_rational(*r);
        else {
            os << "ord" << c.order() << ":[";
            for (size_t i = 0; i < c.coords().size(); ++i)
                os << (i ? "," : "") << format_rational(c.coords()[i]);
            os << "]";
        }
        os << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace lattangle
