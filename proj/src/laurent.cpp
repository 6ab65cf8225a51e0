#include "equifront/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace equifront {

Laurent::Laurent(long long c, int exp) {
    if (c != 0) terms_[exp] = c;
}

void Laurent::set(int exp, long long c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

long long Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int Laurent::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

Laurent Laurent::invert_variable() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Laurent rem = *this, q;
    const int dtop = d.max_exp();
    const long long dlead = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        const int rtop = rem.max_exp();
        const long long rlead = rem.terms_.rbegin()->second;
        if (rlead % dlead != 0) throw std::domain_error("inexact polynomial division");
        Laurent m(rlead / dlead, rtop - dtop);
        q += m;
        rem -= m * d;
    }
    return q;
}

Laurent Laurent::scale_exponents_down(int k) const {
    Laurent r;
    for (auto& [e, c] : terms_) {
        if (e % k != 0) throw std::domain_error("exponent not divisible in rescale");
        r.terms_[e / k] = c;
    }
    return r;
}

std::string Laurent::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << var << "^" << e;
    }
    return os.str();
}

Laurent Laurent::parse(const std::string& text, const std::string& var) {
    Laurent r;
    if (text == "0") return r;
    std::string s = text;
    for (auto& ch : s)
        if (ch == '+') ch = ' ';
    std::istringstream is(s);
    std::string term;
    while (is >> term) {
        auto star = term.find('*');
        auto caret = term.find('^');
        if (star == std::string::npos || caret == std::string::npos ||
            term.substr(star + 1, caret - star - 1) != var)
            throw std::invalid_argument("bad polynomial term: " + term);
        long long c = std::strtoll(term.substr(0, star).c_str(), nullptr, 10);
        int e = static_cast<int>(std::strtol(term.substr(caret + 1).c_str(), nullptr, 10));
        r.set(e, r.coeff(e) + c);
    }
    return r;
}

}  // namespace equifront
