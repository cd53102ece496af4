#include "p1enum/serialize.hpp"

#include <sstream>

namespace p1enum {

std::vector<u32> serialize_elem_coords(const TowerView& V, const FieldElem& e) {
    return V.tensor_coords(e);
}

std::string record_jsonl(const TowerView& V, const HomPoly& f, const std::string& extra) {
    std::ostringstream os;
    os << "{\"q\":" << V.q() << ",\"n\":" << f.degree() << ",\"coeffs\":[";
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ',';
        os << '[';
        auto t = serialize_elem_coords(V, f.c[i]);
        for (size_t j = 0; j < t.size(); ++j) {
            if (j) os << ',';
            os << t[j];
        }
        os << ']';
    }
    os << ']';
    if (!extra.empty()) os << ',' << extra;
    os << '}';
    return os.str();
}

namespace {

// coefficient display: plain integer over a prime field, bracketed
// coordinate vector otherwise
std::string coeff_str(const TowerView& V, const FieldElem& e) {
    auto t = serialize_elem_coords(V, e);
    if (V.s() == 1) return std::to_string(t[0]);
    std::string s = "[";
    for (size_t j = 0; j < t.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(t[j]);
    }
    s += ']';
    return s;
}

bool coeff_is_one(const TowerView& V, const FieldElem& e) { return V.is_one(e); }

std::string monomial_str(u32 i, u32 n) {
    u32 xp = i, yp = n - i;
    std::string s;
    if (xp > 0) {
        s += "x";
        if (xp > 1) s += "^" + std::to_string(xp);
    }
    if (yp > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (yp > 1) s += "^" + std::to_string(yp);
    }
    return s;
}

}  // namespace

std::string record_text(const TowerView& V, const HomPoly& f) {
    u32 n = f.degree();
    std::string out;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (V.is_zero(f.c[i])) continue;
        if (!out.empty()) out += " + ";
        std::string mono = monomial_str(u32(i), n);
        if (mono.empty()) {
            out += coeff_str(V, f.c[i]);
        } else if (coeff_is_one(V, f.c[i])) {
            out += mono;
        } else {
            out += coeff_str(V, f.c[i]) + "*" + mono;
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace p1enum
