#pragma once

#include "ecc/curve.hpp"
#include "ecc/curve_file.hpp"
#include "small_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

inline std::string curve_path(const std::string& file) {
    return std::string(ECC_CURVES_DIR) + "/" + file;
}

// One parsed curve per file, so points from generator() and load() share a modulus.
inline const ecc::CurveParams& load(const std::string& file) {
    static std::map<std::string, ecc::CurveParams> cache;
    auto it = cache.find(file);
    if (it == cache.end())
        it = cache.emplace(file, ecc::CurveFile::load(curve_path(file)).weierstrass()).first;
    return it->second;
}

inline ecc::AffinePoint generator(const std::string& file) {
    ecc::CurveFile f = ecc::CurveFile::load(curve_path(file));
    const ecc::CurveParams& E = load(file);
    return E.point(E.field().element(*f.gx), E.field().element(*f.gy));
}

inline const ecc::CurveParams& p521() { return load("p521.curve"); }

// Small test curves, each cross-checked by integer enumeration in the tests.
struct SmallCurve {
    const char* file;
    long p, a, b;
    unsigned long order;
};

inline const std::vector<SmallCurve>& small_curves() {
    static const std::vector<SmallCurve> v = {
        {"toy211.curve", 211, 11, 1, 192},
        {"toy1009.curve", 1009, 0, 1, 948},
        {"toy1019.curve", 1019, 7, 1, 1002},
    };
    return v;
}

// Library points from the independent enumeration.
inline std::vector<ecc::AffinePoint> all_points(const ecc::CurveParams& E) {
    oracle::Weierstrass W{E.field().p().get_si(), E.a().value().get_si(), E.b().value().get_si()};
    std::vector<ecc::AffinePoint> out;
    for (const auto& P : W.points()) {
        if (!P) out.push_back(ecc::AffinePoint::infinity());
        else out.push_back(E.point(E.field().element(P->first), E.field().element(P->second)));
    }
    return out;
}

inline oracle::Pt to_oracle(const ecc::AffinePoint& P) {
    if (P.is_infinity()) return std::nullopt;
    return std::make_pair(P.x().value().get_si(), P.y().value().get_si());
}

}  // namespace fixtures
