#include "algent/trajectory.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace algent {

bool operator==(const IntVec& a, const IntVec& b) { return a.v == b.v; }

bool operator==(const SparseSeq& a, const SparseSeq& b) {
    return a.modulus == b.modulus && a.entries == b.entries;
}

namespace {

void put_varint(std::string& s, std::uint64_t v) {
    while (v >= 0x80) {
        s.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    s.push_back(static_cast<char>(v));
}

std::uint64_t get_varint(const std::string& s, size_t& pos) {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
        std::uint64_t byte = static_cast<unsigned char>(s.at(pos++));
        v |= (byte & 0x7f) << shift;
        if (!(byte & 0x80)) return v;
        shift += 7;
    }
}

// sign-folded length, then little-endian magnitude bytes (none for zero)
void put_mpz(std::string& s, mpz_srcptr z) {
    if (mpz_sgn(z) == 0) {
        put_varint(s, 0);
        return;
    }
    size_t len = (mpz_sizeinbase(z, 2) + 7) / 8;
    put_varint(s, 2 * static_cast<std::uint64_t>(len) + (mpz_sgn(z) < 0 ? 1 : 0));
    size_t pos = s.size();
    s.resize(pos + len);
    size_t written = 0;
    mpz_export(&s[pos], &written, -1, 1, 0, 0, z);
    s.resize(pos + written);
}

void get_mpz(const std::string& s, size_t& pos, mpz_ptr z) {
    std::uint64_t folded = get_varint(s, pos);
    if (folded == 0) {
        mpz_set_ui(z, 0);
        return;
    }
    size_t len = static_cast<size_t>(folded / 2);
    mpz_import(z, len, -1, 1, 0, 0, s.data() + pos);
    pos += len;
    if (folded & 1) mpz_neg(z, z);
}

constexpr char kTagVec = 0x01;
constexpr char kTagSeq = 0x02;

Element decode_element(const std::string& s) {
    size_t pos = 0;
    char tag = s.at(pos++);
    if (tag == kTagVec) {
        IntVec x;
        size_t n = static_cast<size_t>(get_varint(s, pos));
        x.v.resize(n);
        for (size_t i = 0; i < n; ++i) {
            get_mpz(s, pos, mpq_numref(x.v[i].get_mpq_t()));
            get_mpz(s, pos, mpq_denref(x.v[i].get_mpq_t()));
        }
        return x;
    }
    SparseSeq x;
    x.modulus = static_cast<long>(get_varint(s, pos));
    size_t n = static_cast<size_t>(get_varint(s, pos));
    x.entries.resize(n);
    for (size_t i = 0; i < n; ++i) {
        x.entries[i].first = static_cast<long>(get_varint(s, pos));
        x.entries[i].second = static_cast<long>(get_varint(s, pos));
    }
    return x;
}

}  // namespace

std::string encode_element(const Element& x) {
    std::string s;
    if (const IntVec* v = std::get_if<IntVec>(&x)) {
        s.push_back(kTagVec);
        put_varint(s, v->v.size());
        for (const Rational& q : v->v) {
            put_mpz(s, mpq_numref(q.get_mpq_t()));
            put_mpz(s, mpq_denref(q.get_mpq_t()));
        }
    } else {
        const SparseSeq& q = std::get<SparseSeq>(x);
        s.push_back(kTagSeq);
        put_varint(s, static_cast<std::uint64_t>(q.modulus));
        put_varint(s, q.entries.size());
        for (const auto& [i, v] : q.entries) {
            put_varint(s, static_cast<std::uint64_t>(i));
            put_varint(s, static_cast<std::uint64_t>(v));
        }
    }
    return s;
}

Element add_elements(const Element& a, const Element& b) {
    if (const IntVec* va = std::get_if<IntVec>(&a)) {
        const IntVec* vb = std::get_if<IntVec>(&b);
        if (!vb || va->v.size() != vb->v.size())
            throw std::domain_error("cannot add elements of different shapes");
        IntVec r;
        r.v.reserve(va->v.size());
        for (size_t i = 0; i < va->v.size(); ++i) r.v.push_back(va->v[i] + vb->v[i]);
        return r;
    }
    const SparseSeq& sa = std::get<SparseSeq>(a);
    const SparseSeq* sb = std::get_if<SparseSeq>(&b);
    if (!sb || sa.modulus != sb->modulus)
        throw std::domain_error("cannot add elements of different shapes");
    SparseSeq r;
    r.modulus = sa.modulus;
    size_t i = 0, j = 0;
    while (i < sa.entries.size() || j < sb->entries.size()) {
        if (j == sb->entries.size() ||
            (i < sa.entries.size() && sa.entries[i].first < sb->entries[j].first)) {
            r.entries.push_back(sa.entries[i++]);
        } else if (i == sa.entries.size() || sb->entries[j].first < sa.entries[i].first) {
            r.entries.push_back(sb->entries[j++]);
        } else {
            long v = (sa.entries[i].second + sb->entries[j].second) % r.modulus;
            if (v) r.entries.emplace_back(sa.entries[i].first, v);
            ++i, ++j;
        }
    }
    return r;
}

Element zero_like(const Element& x) {
    if (const IntVec* v = std::get_if<IntVec>(&x)) return IntVec{std::vector<Rational>(v->v.size())};
    return SparseSeq{std::get<SparseSeq>(x).modulus, {}};
}

std::string element_str(const Element& x) {
    if (const IntVec* v = std::get_if<IntVec>(&x)) {
        std::string s = "(";
        for (size_t i = 0; i < v->v.size(); ++i) {
            if (i) s += ", ";
            s += to_string(v->v[i]);
        }
        return s + ")";
    }
    const SparseSeq& q = std::get<SparseSeq>(x);
    if (q.entries.empty()) return "0";
    std::string s;
    for (const auto& [i, v] : q.entries) {
        if (!s.empty()) s += " + ";
        if (v != 1) s += std::to_string(v) + "*";
        s += "e" + std::to_string(i);
    }
    return s;
}

EndoAction EndoAction::matrix(RatMatrix m) {
    EndoAction a;
    a.kind = Kind::Matrix;
    a.dim = m.n;
    a.mat = std::move(m);
    return a;
}

EndoAction EndoAction::scalar_mul(Rational r, int n) {
    if (n < 1) throw std::domain_error("scalar action needs a positive dimension");
    EndoAction a;
    a.kind = Kind::Scalar;
    a.scalar = std::move(r);
    a.dim = n;
    return a;
}

EndoAction EndoAction::shift(long m) {
    if (m < 2) throw std::domain_error("shift modulus must be at least 2");
    EndoAction a;
    a.kind = Kind::Shift;
    a.modulus = m;
    return a;
}

std::string EndoAction::str() const {
    switch (kind) {
        case Kind::Scalar:
            return "scalar(" + to_string(scalar) + ", " + std::to_string(dim) + ")";
        case Kind::Shift:
            return "shift(" + std::to_string(modulus) + ")";
        case Kind::Product:
            return "product(" + factors[0].str() + ", " + factors[1].str() + ")";
        case Kind::Matrix: {
            std::string s = "matrix(";
            for (int i = 0; i < mat.n; ++i) {
                if (i) s += "; ";
                for (int j = 0; j < mat.n; ++j) {
                    if (j) s += ", ";
                    s += to_string(mat.at(i, j));
                }
            }
            return s + ")";
        }
    }
    return "";
}

int action_dim(const EndoAction& a) {
    switch (a.kind) {
        case EndoAction::Kind::Matrix:
        case EndoAction::Kind::Scalar:
            return a.dim;
        case EndoAction::Kind::Shift:
            return -1;
        case EndoAction::Kind::Product: {
            int d0 = action_dim(a.factors[0]);
            return d0 < 0 ? -1 : d0 + action_dim(a.factors[1]);
        }
    }
    return -1;
}

EndoAction product_action(const EndoAction& a, const EndoAction& b) {
    int da = action_dim(a), db = action_dim(b);
    if ((da < 0) != (db < 0))
        throw std::domain_error("cannot form the product of a vector-shaped and a "
                                "sequence-shaped action: their elements have no common "
                                "injective encoding");
    EndoAction p;
    p.kind = EndoAction::Kind::Product;
    if (da < 0) {
        if (a.modulus != b.modulus)
            throw std::domain_error("product of shift actions requires equal moduli");
        p.modulus = a.modulus;
    } else {
        p.dim = da + db;
    }
    p.factors = {a, b};
    return p;
}

namespace {

// split an interleaved sequence into its even- and odd-index streams
std::pair<SparseSeq, SparseSeq> deinterleave(const SparseSeq& s) {
    SparseSeq ev{s.modulus, {}}, od{s.modulus, {}};
    for (const auto& [i, v] : s.entries)
        (i % 2 == 0 ? ev : od).entries.emplace_back(i / 2, v);
    return {std::move(ev), std::move(od)};
}

SparseSeq interleave(const SparseSeq& ev, const SparseSeq& od) {
    SparseSeq r{ev.modulus, {}};
    size_t i = 0, j = 0;
    while (i < ev.entries.size() || j < od.entries.size()) {
        bool take_even = j == od.entries.size() ||
                         (i < ev.entries.size() && ev.entries[i].first <= od.entries[j].first);
        if (take_even) {
            r.entries.emplace_back(2 * ev.entries[i].first, ev.entries[i].second);
            ++i;
        } else {
            r.entries.emplace_back(2 * od.entries[j].first + 1, od.entries[j].second);
            ++j;
        }
    }
    return r;
}

[[noreturn]] void shape_error(const EndoAction& a) {
    throw std::domain_error("element shape does not match action " + a.str());
}

}  // namespace

Element product_element(const EndoAction& a, const EndoAction& b,
                        const Element& x, const Element& y) {
    int da = action_dim(a), db = action_dim(b);
    if (da >= 0) {
        if (db < 0) throw std::domain_error("factor shapes disagree");
        const IntVec* vx = std::get_if<IntVec>(&x);
        const IntVec* vy = std::get_if<IntVec>(&y);
        if (!vx || static_cast<int>(vx->v.size()) != da) shape_error(a);
        if (!vy || static_cast<int>(vy->v.size()) != db) shape_error(b);
        IntVec r;
        r.v = vx->v;
        r.v.insert(r.v.end(), vy->v.begin(), vy->v.end());
        return r;
    }
    if (db >= 0) throw std::domain_error("factor shapes disagree");
    const SparseSeq* sx = std::get_if<SparseSeq>(&x);
    const SparseSeq* sy = std::get_if<SparseSeq>(&y);
    if (!sx || sx->modulus != a.modulus) shape_error(a);
    if (!sy || sy->modulus != b.modulus) shape_error(b);
    SparseSeq ev{sx->modulus, {}}, od{sx->modulus, {}};
    ev.entries = sx->entries;
    od.entries = sy->entries;
    return interleave(ev, od);
}

Element zero_element(const EndoAction& a) {
    int d = action_dim(a);
    if (d >= 0) return IntVec{std::vector<Rational>(static_cast<size_t>(d))};
    return SparseSeq{a.modulus, {}};
}

Element apply(const EndoAction& a, const Element& x) {
    switch (a.kind) {
        case EndoAction::Kind::Matrix: {
            const IntVec* v = std::get_if<IntVec>(&x);
            if (!v || static_cast<int>(v->v.size()) != a.mat.n) shape_error(a);
            return IntVec{a.mat * v->v};
        }
        case EndoAction::Kind::Scalar: {
            const IntVec* v = std::get_if<IntVec>(&x);
            if (!v || static_cast<int>(v->v.size()) != a.dim) shape_error(a);
            IntVec r;
            r.v.reserve(v->v.size());
            for (const Rational& q : v->v) r.v.push_back(a.scalar * q);
            return r;
        }
        case EndoAction::Kind::Shift: {
            const SparseSeq* s = std::get_if<SparseSeq>(&x);
            if (!s || s->modulus != a.modulus) shape_error(a);
            SparseSeq r{s->modulus, {}};
            r.entries.reserve(s->entries.size());
            for (const auto& [i, v] : s->entries) r.entries.emplace_back(i + 1, v);
            return r;
        }
        case EndoAction::Kind::Product: {
            int d0 = action_dim(a.factors[0]);
            if (d0 >= 0) {
                const IntVec* v = std::get_if<IntVec>(&x);
                if (!v || static_cast<int>(v->v.size()) != action_dim(a)) shape_error(a);
                IntVec xa{std::vector<Rational>(v->v.begin(), v->v.begin() + d0)};
                IntVec xb{std::vector<Rational>(v->v.begin() + d0, v->v.end())};
                Element ya = apply(a.factors[0], xa);
                Element yb = apply(a.factors[1], xb);
                IntVec r;
                r.v = std::move(std::get<IntVec>(ya).v);
                auto& t = std::get<IntVec>(yb).v;
                r.v.insert(r.v.end(), t.begin(), t.end());
                return r;
            }
            const SparseSeq* s = std::get_if<SparseSeq>(&x);
            if (!s || s->modulus != a.modulus) shape_error(a);
            auto [ev, od] = deinterleave(*s);
            Element ya = apply(a.factors[0], ev);
            Element yb = apply(a.factors[1], od);
            return interleave(std::get<SparseSeq>(ya), std::get<SparseSeq>(yb));
        }
    }
    shape_error(a);
}

namespace {

void validate_element(const EndoAction& a, const Element& x) {
    int d = action_dim(a);
    if (d >= 0) {
        const IntVec* v = std::get_if<IntVec>(&x);
        if (!v || static_cast<int>(v->v.size()) != d) shape_error(a);
        return;
    }
    const SparseSeq* s = std::get_if<SparseSeq>(&x);
    if (!s || s->modulus != a.modulus) shape_error(a);
    long last = -1;
    for (const auto& [i, v] : s->entries) {
        if (i <= last || v < 1 || v >= s->modulus)
            throw std::domain_error("sequence element is not canonical: need strictly "
                                    "increasing indices and values in [1, modulus-1]");
        last = i;
    }
}

}  // namespace

TrajectoryRecord enumerate_trajectory(const EndoAction& action, const std::vector<Element>& f,
                                      int horizon, std::uint64_t cap) {
    if (f.empty()) throw std::domain_error("the base set must be non-empty");
    if (horizon < 1) throw std::domain_error("horizon must be at least 1");

    std::vector<Element> base;
    std::unordered_set<std::string> seen;
    base.push_back(zero_element(action));  // growth rates are unchanged by adding 0
    seen.insert(encode_element(base[0]));
    for (const Element& x : f) {
        validate_element(action, x);
        if (seen.insert(encode_element(x)).second) base.push_back(x);
    }
    if (cap < base.size()) throw std::domain_error("cap is smaller than the base set");

    TrajectoryRecord rec;
    rec.horizon = horizon;

    std::unordered_set<std::string> traj(seen);
    std::vector<const std::string*> elems;  // insertion order; set nodes are stable
    elems.reserve(traj.size());
    for (const std::string& s : traj) elems.push_back(&s);
    rec.sizes.push_back(traj.size());
    rec.c.push_back(std::log(static_cast<double>(traj.size())));

    std::vector<Element> images = base;  // phi^n of the base set, advanced each step
    const std::string zero_enc = encode_element(base[0]);

    for (int n = 1; n < horizon; ++n) {
        std::unordered_set<std::string> dedupe;
        std::vector<Element> next;  // phi can collapse points, so re-dedupe
        for (const Element& g : images) {
            Element h = apply(action, g);
            if (dedupe.insert(encode_element(h)).second) next.push_back(std::move(h));
        }
        images = std::move(next);

        std::vector<const Element*> adding;  // t + 0 contributes nothing new
        for (const Element& g : images)
            if (encode_element(g) != zero_enc) adding.push_back(&g);

        size_t frontier = elems.size();  // T_n snapshot; appends below extend past it
        bool over_cap = false;
        for (size_t i = 0; i < frontier && !over_cap; ++i) {
            Element t = decode_element(*elems[i]);
            for (const Element* g : adding) {
                auto [it, fresh] = traj.insert(encode_element(add_elements(t, *g)));
                if (fresh) {
                    if (traj.size() > cap) {
                        over_cap = true;
                        break;
                    }
                    elems.push_back(&*it);
                }
            }
        }
        if (over_cap) {
            rec.truncated = true;
            break;
        }
        rec.sizes.push_back(traj.size());
        rec.c.push_back(std::log(static_cast<double>(traj.size())));
    }
    return rec;
}

GrowthEstimate growth_estimate(const TrajectoryRecord& record) {
    if (record.sizes.size() < 2)
        throw std::domain_error("tail slope requires at least two recorded sizes");
    GrowthEstimate g;
    g.horizon = static_cast<int>(record.sizes.size());
    g.truncated = record.truncated;
    g.fekete_upper = record.c[0];
    for (size_t i = 1; i < record.c.size(); ++i)
        g.fekete_upper = std::min(g.fekete_upper, record.c[i] / static_cast<double>(i + 1));
    g.tail_slope = record.c[record.c.size() - 1] - record.c[record.c.size() - 2];
    return g;
}

}  // namespace algent
