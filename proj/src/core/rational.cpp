#include "core/rational.hpp"

#include <cctype>

namespace bccst {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        Rat r(Int(num), d);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        if (!digits_ok(ip) || fp.empty()) return std::nullopt;
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Int whole(ip);
        Int frac(fp);
        Int num = whole * scale + (whole < 0 || ip[0] == '-' ? -frac : frac);
        Rat r(num, scale);
        r.canonicalize();
        return r;
    }
    if (!digits_ok(s)) return std::nullopt;
    return Rat(Int(s));
}

}  // namespace bccst
