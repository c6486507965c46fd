#include "cubics/rational.hpp"

namespace cubics {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw error("malformed rational literal: " + s);
    if (r.get_den() == 0) throw error("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace cubics
