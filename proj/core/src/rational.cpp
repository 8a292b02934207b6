#include "kagome/rational.hpp"

#include <cctype>
#include <ostream>

namespace kagome {

Rat Rat::parse(std::string_view text) {
    if (text.empty()) throw InputError("Rat: empty string");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("Rat: bad character in '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("Rat: cannot parse '" + s + "'");
    if (sgn(q.get_den()) == 0) throw InputError("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace kagome
