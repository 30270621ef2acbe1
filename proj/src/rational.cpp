#include "obst/rational.hpp"

namespace obst {

Scalar Scalar::parse(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("Scalar: cannot parse \"" + s + "\""); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Scalar(mpq_class(n));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) bad();
        mpz_class n(ns), d(ds);
        if (d == 0) bad();
        mpq_class q(n, d);
        return Scalar(std::move(q));
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Scalar();  // unreachable
}

}  // namespace obst
