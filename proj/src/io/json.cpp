#include "svt/io/json.hpp"

#include <cstdio>
#include <fstream>

namespace svt::io {

using num::ComplexBall;
using num::RealBall;

json ball_json(const RealBall& x, int digits) {
    return json{{"inf", x.lower().to_decimal(digits, MPFR_RNDD)}, {"sup", x.upper().to_decimal(digits, MPFR_RNDU)}};
}

json complex_json(const ComplexBall& z) {
    return json{{"re", z.re_mid().to_hex()}, {"im", z.im_mid().to_hex()}, {"rad", z.rad().to_hex()}};
}

json rational_json(const mpq_class& q) { return num::format_rational(q); }

json form_json(const poly::QForm& f) {
    json out = json::array();
    for (int idx = 0; idx < f.size(); ++idx) {
        if (sgn(f.at(idx)) == 0) continue;
        poly::Exponent e = poly::monomial_at(f.degree(), idx);
        out.push_back(json{{"e0", e.e0}, {"e1", e.e1}, {"e2", e.e2}, {"coeff", rational_json(f.at(idx))}});
    }
    return out;
}

json ball_form_json(const poly::BallForm& f) {
    json out = json::array();
    for (int idx = 0; idx < f.size(); ++idx) {
        if (f.at(idx).is_exact_zero()) continue;
        poly::Exponent e = poly::monomial_at(f.degree(), idx);
        out.push_back(json{{"e0", e.e0}, {"e1", e.e1}, {"e2", e.e2}, {"coeff", complex_json(f.at(idx))}});
    }
    return out;
}

json bipoly_json(const poly::BiPoly& p) {
    json out = json::array();
    for (int e2 = 0; e2 <= p.degree(); ++e2) {
        const num::QPoly& c = p.coeff(e2);
        for (int e1 = 0; e1 <= c.degree(); ++e1)
            if (sgn(c.coeff(e1)) != 0) out.push_back(json{{"e1", e1}, {"e2", e2}, {"coeff", rational_json(c.coeff(e1))}});
    }
    return out;
}

json zpoly_json(const num::ZPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

json chain_json(const std::vector<interp::ChainEntry>& chain) {
    json out = json::array();
    for (const auto& e : chain)
        out.push_back(json{{"name", e.name}, {"lhs", ball_json(e.lhs)}, {"rhs", ball_json(e.rhs)}, {"ok", e.ok}});
    return out;
}

json variety_json(const var::ZeroDimVariety& z, long prec) {
    json coords = json::array();
    for (const auto& c : z.coords) {
        json cj = json::array();
        for (const auto& a : c.poly().coeffs()) cj.push_back(rational_json(a));
        coords.push_back(cj);
    }
    num::ZPoly mp = z.field ? z.field->minpoly : num::ZPoly(std::vector<mpz_class>{0, 1});
    return json{{"minpoly", zpoly_json(mp)},
                {"coords", coords},
                {"chow", form_json(z.chow)},
                {"degree", z.degree},
                {"h", ball_json(z.height)},
                {"h_abs", ball_json(var::weil_height(z, prec).h_abs)}};
}

json aux_json(const cons::AuxSearchResult& r) {
    json out{{"D", r.D},
             {"status", cons::status_name(r.status)},
             {"region", cons::region_name(r.region)},
             {"points", r.points},
             {"monomials", r.monomials},
             {"kernel_dim", r.kernel_dim},
             {"note", r.note}};
    if (r.status == cons::SearchStatus::found) {
        const auto& c = r.certificate;
        out["poly"] = bipoly_json(r.poly);
        json chain = json::array();
        chain.push_back(json{{"name", "deg P <= D"}, {"ok", c.degree_ok}});
        chain.push_back(json{{"name", "log ||P|| <= D^beta"}, {"lhs", ball_json(c.log_norm)},
                             {"margin", ball_json(c.norm_margin)}, {"ok", c.norm_ok}});
        json value{{"name", "log max |P(gamma_i)| <= -D^nu"}, {"exact_zero", c.exact_zero}, {"ok", c.value_ok}};
        if (!c.exact_zero) {
            value["lhs"] = ball_json(c.log_value);
            value["margin"] = ball_json(c.value_margin);
        }
        chain.push_back(value);
        out["certificate"] = chain;
    }
    return out;
}

json scalar_json(const poly::Scalar& x) {
    if (auto q = std::get_if<mpq_class>(&x)) return rational_json(*q);
    if (auto a = std::get_if<num::AlgebraicNumber>(&x))
        return json{{"minpoly", zpoly_json(a->minpoly)}, {"box", complex_json(a->box)}, {"degree", a->degree()}};
    return complex_json(std::get<ComplexBall>(x));
}

json params_json(const poly::TranslationParams& p) {
    return json{{"xi", scalar_json(p.xi)},
                {"eta", scalar_json(p.eta)},
                {"r", rational_json(p.r)},
                {"s", rational_json(p.s)},
                {"m", p.m.get_str()}};
}

namespace {

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw MalformedInput(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(path + "." + key + ": missing");
    return *it;
}

}  // namespace

mpq_class read_rational(const json& j, const std::string& path) {
    // integers are accepted as a convenience; fractional JSON numbers are refused
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw MalformedInput(path + ": expected an exact rational string");
    try {
        return num::parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

long read_integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<long>();
    mpq_class q = read_rational(j, path);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw MalformedInput(path + ": expected an integer");
    return q.get_num().get_si();
}

poly::Scalar read_scalar(const json& j, const std::string& path) {
    if (!j.is_object()) return read_rational(j, path);
    const json& mp = field(j, "minpoly", path);
    if (!mp.is_array() || mp.size() < 2) throw MalformedInput(path + ".minpoly: expected at least two coefficients");
    std::vector<mpz_class> c;
    for (size_t i = 0; i < mp.size(); ++i) {
        mpq_class q = read_rational(mp[i], path + ".minpoly[" + std::to_string(i) + "]");
        if (q.get_den() != 1) throw MalformedInput(path + ".minpoly[" + std::to_string(i) + "]: not an integer");
        c.push_back(q.get_num());
    }
    mpq_class re = read_rational(field(j, "approx", path), path + ".approx");
    mpq_class im = j.contains("approx_im") ? read_rational(j["approx_im"], path + ".approx_im") : mpq_class(0);
    num::ZPoly f(c);
    if (f.degree() < 1) throw MalformedInput(path + ".minpoly: constant polynomial");
    if (f.degree() == 1) {
        mpq_class root(-c[0], c[1]);
        root.canonicalize();
        return root;
    }
    try {
        return num::AlgebraicNumber::nearest_root(f, ComplexBall::from_mpq(re, im, 128));
    } catch (const Error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

poly::TranslationParams params_from_json(const json& j, const std::string& path) {
    poly::Scalar xi = read_scalar(field(j, "xi", path), path + ".xi");
    poly::Scalar eta = read_scalar(field(j, "eta", path), path + ".eta");
    mpq_class r = read_rational(field(j, "r", path), path + ".r");
    mpq_class s = read_rational(field(j, "s", path), path + ".s");
    std::optional<mpz_class> m;
    if (j.contains("m")) m = mpz_class(read_integer(j["m"], path + ".m"));
    try {
        return poly::TranslationParams::make(xi, eta, r, s, m);
    } catch (const PreconditionFailed& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

poly::QForm form_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw MalformedInput(path + ": expected a nonempty list of terms");
    int d = -1;
    poly::QForm f;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        long e[3];
        const char* names[3] = {"e0", "e1", "e2"};
        for (int k = 0; k < 3; ++k) {
            e[k] = read_integer(field(j[i], names[k], p), p + "." + names[k]);
            if (e[k] < 0) throw MalformedInput(p + "." + names[k] + ": negative exponent");
        }
        int deg = static_cast<int>(e[0] + e[1] + e[2]);
        if (d < 0) {
            d = deg;
            f = poly::QForm(d);
        } else if (deg != d) {
            throw MalformedInput(p + ": degree " + std::to_string(deg) + " differs from " + std::to_string(d));
        }
        f.set(static_cast<int>(e[1]), static_cast<int>(e[2]),
              f.coeff(static_cast<int>(e[1]), static_cast<int>(e[2])) + read_rational(field(j[i], "coeff", p), p + ".coeff"));
    }
    return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp);
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::remove(tmp.c_str());
            throw Error("cannot write " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace svt::io
