#pragma once

#include <complex>
#include <random>
#include <string>

#include "arrcoh/io.hpp"

namespace fx {

inline arrcoh::io::Json load(const std::string& name) {
    return arrcoh::io::read_json_file(std::string(FIXTURE_DIR) + "/" + name);
}

inline arrcoh::Arrangement arrangement(const std::string& name) {
    return arrcoh::io::parse_arrangement(load(name + ".json"));
}

inline arrcoh::LineIncidence incidence(const std::string& name) {
    return arrcoh::io::load_incidence(load(name + ".json"));
}

// numeric image of a cyclotomic number under z -> exp(2 pi i / N)
inline std::complex<double> embed(const arrcoh::CycloNum& a) {
    const double pi = 3.14159265358979323846;
    const auto z = std::polar(1.0, 2 * pi / a.order());
    std::complex<double> s = 0, p = 1;
    for (const auto& c : a.coeffs()) {
        s += c.get_d() * p;
        p *= z;
    }
    return s;
}

inline arrcoh::Rational random_rational(std::mt19937_64& gen, int span = 7, int den = 6) {
    const long n = static_cast<long>(gen() % (2 * span + 1)) - span;
    const long d = static_cast<long>(gen() % den) + 1;
    return arrcoh::make_rational(n, d);
}

inline arrcoh::CycloNum random_cyclo(std::mt19937_64& gen, const arrcoh::FieldPtr& f) {
    std::vector<arrcoh::Rational> c;
    for (unsigned i = 0; i < f->degree(); ++i) c.push_back(random_rational(gen));
    return arrcoh::CycloNum(f, c);
}

} // namespace fx
