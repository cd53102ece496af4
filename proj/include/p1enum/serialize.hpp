#ifndef P1ENUM_SERIALIZE_HPP
#define P1ENUM_SERIALIZE_HPP

// Binary cursor blobs (resume states) and the CLI record formats.

#include "p1enum/projgeom.hpp"

#include <string>

namespace p1enum {

struct Writer {
    std::vector<u8> buf;
    void put_u32(u32 v) {
        for (int i = 0; i < 4; ++i) buf.push_back(u8(v >> (8 * i)));
    }
    void put_u64(u64 v) {
        for (int i = 0; i < 8; ++i) buf.push_back(u8(v >> (8 * i)));
    }
    void put_bool(bool b) { buf.push_back(b ? 1 : 0); }
    void put_elem(const FieldElem& e) {
        put_u32(e.deg());
        for (u32 c : e.c) put_u32(c);
    }
    void put_poly(const HomPoly& f) {
        put_u32(f.degree());
        for (const auto& c : f.c) put_elem(c);
    }
    void put_place(const Place& P) {
        put_u32(P.deg);
        put_poly(P.poly);
        put_bool(P.root.inf);
        put_elem(P.root.alpha);
    }
    void put_divisor(const Divisor& D) {
        put_u32(u32(D.parts.size()));
        for (auto& [pl, m] : D.parts) {
            put_place(pl);
            put_u32(m);
        }
    }
};

struct Reader {
    const std::vector<u8>* buf;
    size_t pos = 0;
    explicit Reader(const std::vector<u8>& b) : buf(&b) {}
    u8 byte() {
        if (pos >= buf->size()) throw std::runtime_error("resume state: truncated");
        return (*buf)[pos++];
    }
    u32 get_u32() {
        u32 v = 0;
        for (int i = 0; i < 4; ++i) v |= u32(byte()) << (8 * i);
        return v;
    }
    u64 get_u64() {
        u64 v = 0;
        for (int i = 0; i < 8; ++i) v |= u64(byte()) << (8 * i);
        return v;
    }
    bool get_bool() { return byte() != 0; }
    FieldElem get_elem() {
        u32 d = get_u32();
        if (d > 4096) throw std::runtime_error("resume state: bad element");
        std::vector<u32> c(d);
        for (u32 i = 0; i < d; ++i) c[i] = get_u32();
        return FieldElem(std::move(c));
    }
    HomPoly get_poly() {
        u32 n = get_u32();
        if (n > 1u << 20) throw std::runtime_error("resume state: bad polynomial");
        HomPoly f;
        f.c.resize(n + 1);
        for (u32 i = 0; i <= n; ++i) f.c[i] = get_elem();
        return f;
    }
    Place get_place() {
        Place P;
        P.deg = get_u32();
        P.poly = get_poly();
        P.root.inf = get_bool();
        P.root.alpha = get_elem();
        return P;
    }
    Divisor get_divisor() {
        Divisor D;
        u32 k = get_u32();
        if (k > 1u << 16) throw std::runtime_error("resume state: bad divisor");
        D.parts.resize(k);
        for (u32 i = 0; i < k; ++i) {
            D.parts[i].first = get_place();
            D.parts[i].second = get_u32();
        }
        return D;
    }
    bool done() const { return pos == buf->size(); }
};

/// Serialized coordinates of a field element: e*i integers in [0, p),
/// little-endian by basis index (tower coordinates, then prime-field ones).
std::vector<u32> serialize_elem_coords(const TowerView& V, const FieldElem& e);

/// One output record: {"q":..,"n":..,"coeffs":[[...],...]} with coeffs[i]
/// the coefficient of x^i y^(n-i); optional annotations appended.
std::string record_jsonl(const TowerView& V, const HomPoly& f,
                         const std::string& extra = "");
/// Human-readable polynomial in x, y.
std::string record_text(const TowerView& V, const HomPoly& f);

}  // namespace p1enum

#endif
