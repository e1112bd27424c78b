#include "g2cl/rational.hpp"

namespace g2cl {

Int parse_int(const std::string& s) {
    Int n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    return n;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    return make_rat(n, d);
}

}  // namespace g2cl
