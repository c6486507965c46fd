#include "cubics/poly.hpp"

#include <algorithm>
#include <cctype>

namespace cubics {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial::one()] = c;
}

Poly::Poly(const Rational& c, const Monomial& m) {
    if (c != 0) terms_[m] = c;
}

Poly Poly::variable(int v, int e) {
    return Poly(Rational(1), Monomial::var(v, e));
}

int Poly::x_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
    return d;
}

int Poly::t_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t_degree());
    return d;
}

bool Poly::is_x_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.x_degree() != d) return false;
    return true;
}

bool Poly::is_x_homogeneous() const {
    return is_zero() || is_x_homogeneous(terms_.begin()->first.x_degree());
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rational& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = r.terms_.emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Rational Poly::eval(const std::array<Rational, 4>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        if (m.t_degree() != 0) throw error("eval: polynomial involves t");
        Rational v = c;
        for (int i = 0; i < kNumXVars; ++i)
            for (int e = 0; e < m.exps[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Poly Poly::specialize_t(const Rational& t0) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int e = 0; e < m.exps[kTVar]; ++e) v *= t0;
        Monomial mx = m;
        mx.exps[kTVar] = 0;
        if (v != 0) {
            auto [it, inserted] = r.terms_.emplace(mx, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        for (int i = 0; i < kNumVars; ++i) {
            for (int e = 0; e < m.exps[i]; ++e) {
                if (i < static_cast<int>(images.size()))
                    term = term * images[i];
                else if (i == kTVar)
                    term = term * Poly::variable(kTVar);
                else
                    throw error("substitute: no image for occurring variable");
            }
        }
        r += term;
    }
    return r;
}

std::optional<Poly> Poly::divide_by_linear(const Poly& l) const {
    if (!l.is_x_homogeneous(1) || l.is_zero() || l.has_t())
        throw error("divide_by_linear: divisor is not a linear form");
    if (is_zero()) return Poly();
    // Solve this = l*q term by term along descending order: the leading term
    // of the remainder must be divisible by l's leading monomial.
    int pivot = -1;
    for (int i = 0; i < kNumXVars; ++i)
        if (l.coeff(Monomial::var(i)) != 0) {
            pivot = i;
            break;
        }
    Rational lc = l.coeff(Monomial::var(pivot));
    Poly rem = *this, q;
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms().begin();
        if (m.exps[pivot] == 0) return std::nullopt;
        Monomial mq = m;
        mq.exps[pivot] -= 1;
        Poly piece(c / lc, mq);
        q += piece;
        rem -= l * piece;
    }
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        bool is_one_mono = m == Monomial::one();
        if (first) {
            // a leading negative keeps its coefficient explicit ("-1*x0")
            // so the printed form stays inside the file grammar
            if (is_one_mono)
                s += to_string(a);
            else if (a == 1)
                s += m.str();
            else
                s += to_string(a) + "*" + m.str();
        } else {
            s += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
            if (is_one_mono)
                s += to_string(a);
            else if (a == 1)
                s += m.str();
            else
                s += to_string(a) + "*" + m.str();
        }
        first = false;
    }
    return s;
}

parse_error::parse_error(const std::string& what, std::size_t pos)
    : error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        bool neg = false;
        if (peek() == '-' && !starts_number_ahead()) {
            // leading sign on a variable term ("-x0^2"); numeric coefficients
            // carry their own sign inside parse_term
            ++pos_;
            neg = true;
        }
        Poly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += parse_term();
            } else if (c == '-') {
                ++pos_;
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    bool starts_number_ahead() {
        std::size_t save = pos_;
        ++pos_;  // over '-'
        skip_ws();
        bool digit = pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
        pos_ = save;
        return digit;
    }

    Poly parse_term() {
        char c = peek();
        Poly p;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            p = Poly(parse_coeff());
        } else {
            p = parse_factor();
        }
        while (consume('*')) p = p * parse_factor();
        return p;
    }

    Rational parse_coeff() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw parse_error("expected integer", pos_);
        std::string num = text_.substr(start, pos_ - start);
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw parse_error("expected positive denominator", pos_);
            std::string den = text_.substr(dstart, pos_ - dstart);
            Rational r = rational_from_string(num + "/" + den);
            return r;
        }
        return rational_from_string(num);
    }

    Poly parse_factor() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected variable", pos_);
        std::string name(1, text_[pos_++]);
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];
        int var = -1;
        for (int i = 0; i < kNumVars; ++i)
            if (name == kVarNames[i]) var = i;
        if (var < 0) throw parse_error("unknown variable '" + name + "'", start);
        int exp = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t estart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == estart) throw parse_error("expected exponent", pos_);
            exp = std::stoi(text_.substr(estart, pos_ - estart));
        }
        return Poly::variable(var, exp);
    }
};

}  // namespace

Poly parse_poly(const std::string& text) {
    return Parser(text).run();
}

}  // namespace cubics
