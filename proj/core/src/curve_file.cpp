#include "ecc/curve_file.hpp"

#include "ecc/curve.hpp"
#include "ecc/hex.hpp"
#include "ecc/montgomery.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ecc {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

mpz_class hex_field(std::string_view key, std::string_view v, std::size_t line) {
    try {
        return parse_hex(v);
    } catch (const HexParseError& e) {
        throw CurveFileError("line " + std::to_string(line) + ": key '" + std::string(key) +
                             "': " + e.what());
    }
}

}  // namespace

std::string_view model_name(CurveModel m) {
    return m == CurveModel::Montgomery ? "montgomery" : "weierstrass";
}

CurveFile CurveFile::parse(std::string_view text) {
    CurveFile f;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw CurveFileError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key(trim(line.substr(0, eq)));
        std::string_view val = trim(line.substr(eq + 1));
        if (val.empty())
            throw CurveFileError("line " + std::to_string(line_no) + ": empty value for " + key);
        if (!seen.insert(key).second)
            throw CurveFileError("line " + std::to_string(line_no) + ": duplicate key " + key);
        if (key == "name") {
            f.name = std::string(val);
        } else if (key == "model") {
            if (val == "weierstrass") f.model = CurveModel::Weierstrass;
            else if (val == "montgomery") f.model = CurveModel::Montgomery;
            else throw CurveFileError("line " + std::to_string(line_no) + ": unknown model");
        } else if (key == "p") {
            f.p = hex_field(key, val, line_no);
        } else if (key == "a") {
            f.a = hex_field(key, val, line_no);
        } else if (key == "b") {
            f.b = hex_field(key, val, line_no);
        } else if (key == "order") {
            f.order = hex_field(key, val, line_no);
        } else if (key == "gx") {
            f.gx = hex_field(key, val, line_no);
        } else if (key == "gy") {
            f.gy = hex_field(key, val, line_no);
        } else {
            throw CurveFileError("line " + std::to_string(line_no) + ": unknown key " + key);
        }
    }
    for (const char* required : {"p", "a", "b"})
        if (!seen.count(required))
            throw CurveFileError(std::string("missing required key ") + required);
    if (f.gx.has_value() != f.gy.has_value())
        throw CurveFileError("gx and gy must be given together");
    if ((f.gx && *f.gx >= f.p) || (f.gy && *f.gy >= f.p))
        throw CurveFileError("base point coordinate not below p");
    return f;
}

CurveFile CurveFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CurveFileError("cannot open curve file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string CurveFile::serialize() const {
    std::string s;
    if (!name.empty()) s += "name = " + name + "\n";
    s += "model = " + std::string(model_name(model)) + "\n";
    s += "p = " + to_hex(p) + "\n";
    s += "a = " + to_hex(a) + "\n";
    s += "b = " + to_hex(b) + "\n";
    if (order) s += "order = " + to_hex(*order) + "\n";
    if (gx) s += "gx = " + to_hex(*gx) + "\n";
    if (gy) s += "gy = " + to_hex(*gy) + "\n";
    return s;
}

CurveParams CurveFile::weierstrass() const {
    if (model != CurveModel::Weierstrass) throw CurveFileError("curve file is not weierstrass");
    try {
        CurveParams E = CurveParams::create(name, p, a, b, order);
        if (gx) E.point(E.field().element(*gx), E.field().element(*gy));
        return E;
    } catch (const CurveFileError&) {
        throw;
    } catch (const NotOnCurve&) {
        throw;
    } catch (const std::exception& e) {
        throw CurveFileError(std::string("invalid curve: ") + e.what());
    }
}

MontgomeryCurve CurveFile::montgomery() const {
    if (model != CurveModel::Montgomery) throw CurveFileError("curve file is not montgomery");
    try {
        MontgomeryCurve C = MontgomeryCurve::create(name, p, a, b);
        if (gx) {
            const PrimeModulus& f = C.field();
            FieldElement x = f.element(*gx), y = f.element(*gy);
            OpCounter& c = OpCounter::discard();
            // B y^2 = x^3 + A x^2 + x
            FieldElement lhs = fp::mul(C.B(), fp::sqr(y, c), c);
            FieldElement x2 = fp::sqr(x, c);
            FieldElement rhs =
                fp::add(fp::add(fp::mul(x2, x, c), fp::mul(C.A(), x2, c), c), x, c);
            if (lhs != rhs) throw NotOnCurve("base point is not on " + name);
        }
        return C;
    } catch (const CurveFileError&) {
        throw;
    } catch (const NotOnCurve&) {
        throw;
    } catch (const std::exception& e) {
        throw CurveFileError(std::string("invalid curve: ") + e.what());
    }
}

}  // namespace ecc
