#pragma once

// Internal nlohmann helpers shared by serialize.cpp and suites.cpp; the
// vendored header never appears in public includes.

#include <json.hpp>

#include "tricolor/algebra.hpp"
#include "tricolor/cyclotomic.hpp"

namespace tricolor::detail {

using ojson = nlohmann::ordered_json;

inline ojson cyc_json(const CycScalar& value) {
    return ojson::array({value.c0().str(), value.c1().str()});
}

inline CycScalar cyc_from(const ojson& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a CycScalar pair [\"p/q\", \"r/s\"]");
    return CycScalar(Rational::parse(j[0].get<std::string>()),
                     Rational::parse(j[1].get<std::string>()));
}

inline ojson algebra_json(const AlgebraElement& value) {
    ojson out = ojson::object();
    for (unsigned eps = 0; eps < 8; ++eps) {
        const CycScalar& c = value.component(eps);
        if (c.is_zero()) continue;
        std::string key = {char('0' + (eps & 1)), char('0' + ((eps >> 1) & 1)),
                           char('0' + ((eps >> 2) & 1))};
        out[key] = cyc_json(c);
    }
    if (value.ctx()) out["b"] = cyc_json(value.ctx()->b());
    return out;
}

inline AlgebraElement algebra_from(const ojson& j) {
    if (!j.is_object()) throw std::invalid_argument("expected an AlgebraElement object");
    if (!j.contains("b")) throw std::invalid_argument("AlgebraElement: missing b value");
    const BContextPtr ctx = BContext::make(cyc_from(j.at("b")));
    AlgebraElement out = AlgebraElement::zero(ctx);
    for (const auto& [key, val] : j.items()) {
        if (key == "b") continue;
        if (key.size() != 3 || key.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument("AlgebraElement: bad basis key '" + key + "'");
        const unsigned eps = static_cast<unsigned>((key[0] - '0') | ((key[1] - '0') << 1) |
                                                   ((key[2] - '0') << 2));
        out += AlgebraElement::monomial(ctx, eps, cyc_from(val));
    }
    return out;
}

} // namespace tricolor::detail
