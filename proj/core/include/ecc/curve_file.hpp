#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecc {

class CurveParams;
class MontgomeryCurve;

struct CurveFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CurveModel { Weierstrass, Montgomery };

// Line-oriented "key = value". '#' starts a comment; blank lines are ignored.
// Keys: name (text), model (weierstrass | montgomery), p, a, b, order, gx, gy
// (lowercase hex). For the montgomery model a and b hold A and B.
struct CurveFile {
    std::string name;
    CurveModel model = CurveModel::Weierstrass;
    mpz_class p, a, b;
    std::optional<mpz_class> order;
    std::optional<mpz_class> gx, gy;

    static CurveFile parse(std::string_view text);
    static CurveFile load(const std::string& path);
    // Canonical form; parse(serialize()) reproduces every field.
    std::string serialize() const;

    // Throws CurveFileError on an invalid curve, NotOnCurve for a bad base point.
    CurveParams weierstrass() const;
    MontgomeryCurve montgomery() const;

    friend bool operator==(const CurveFile& x, const CurveFile& y) {
        return x.name == y.name && x.model == y.model && x.p == y.p && x.a == y.a &&
               x.b == y.b && x.order == y.order && x.gx == y.gx && x.gy == y.gy;
    }
};

std::string_view model_name(CurveModel m);

}  // namespace ecc
