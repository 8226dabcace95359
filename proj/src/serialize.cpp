#include "qhgrass/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace qhgrass {

namespace {

using nlohmann::json;

json int_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    throw DomainError("polynomial coefficient must be an integer or a decimal string");
}

// "t_3^2*t_11" (text) / "t_3^2t_{11}" (latex); the unit monomial is handled
// by the callers.
std::string monomial_str(const Monomial& m, bool latex) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, pow] : m.entries()) {
        if (!latex && !first) os << '*';
        first = false;
        if (latex && v >= 10)
            os << "t_{" << v << '}';
        else
            os << "t_" << v;
        if (pow > 1) {
            if (latex && pow >= 10)
                os << "^{" << pow << '}';
            else
                os << '^' << pow;
        }
    }
    return os.str();
}

std::string poly_str(const TPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        const Int mag = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mono.is_unit()) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << (latex ? "" : "*");
            os << monomial_str(mono, latex);
        }
    }
    return os.str();
}

std::string factor_str(const LinearFactor& f, bool latex) {
    std::ostringstream os;
    os << '(' << (latex && f.a >= 10 ? "t_{" : "t_") << f.a << (latex && f.a >= 10 ? "}" : "")
       << '-' << (latex && f.b >= 10 ? "t_{" : "t_") << f.b << (latex && f.b >= 10 ? "}" : "")
       << ')';
    return os.str();
}

// Renders one expansion coefficient, empty string when it is the unit. Sums
// of factored products and multi-term expanded polynomials come wrapped in
// parentheses so they compose with the q and basis tokens around them.
std::string coefficient_str(const Coefficient& c, bool latex, bool expand) {
    if (!expand && c.factored) {
        const FactoredSum& sum = *c.factored;
        std::vector<std::string> products;
        for (const auto& product : sum) {
            if (product.empty()) {
                products.push_back("1");
            } else {
                std::string s;
                for (const LinearFactor& f : product) s += factor_str(f, latex);
                products.push_back(s);
            }
        }
        if (products.size() == 1) return products[0] == "1" ? "" : products[0];
        std::string joined;
        for (std::size_t i = 0; i < products.size(); ++i) {
            if (i) joined += " + ";
            joined += products[i];
        }
        return "(" + joined + ")";
    }
    const TPoly& v = c.value;
    if (v == TPoly::constant(1)) return "";
    std::string s = poly_str(v, latex);
    if (v.term_count() > 1) return "(" + s + ")";
    return s;
}

std::string q_str(int d, bool latex) {
    if (d == 0) return "";
    if (d == 1) return "q";
    std::ostringstream os;
    if (latex && d >= 10)
        os << "q^{" << d << '}';
    else
        os << "q^" << d;
    return os.str();
}

std::string sigma_str(const Partition& lam, bool latex) {
    if (latex) {
        std::string s = "\\sigma_{";
        s += lam.is_empty() ? "\\emptyset" : partition_to_text(lam);
        return s + "}";
    }
    return "sigma_" + partition_to_text(lam);
}

std::string expansion_str(const Expansion& e, bool latex, bool expand) {
    if (e.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string q = q_str(key.d, latex);
        std::string c = coefficient_str(coeff, latex, expand);
        if (!latex) {
            if (!q.empty()) os << q << '*';
            if (!c.empty()) os << c << '*';
        } else {
            os << q << c;
        }
        os << sigma_str(key.lam, latex);
    }
    return os.str();
}

std::string classical_str(const std::map<Partition, TPoly>& cls, bool latex) {
    if (cls.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, value] : cls) {
        if (!first) os << " + ";
        first = false;
        Coefficient c{value, std::nullopt};
        std::string cs = coefficient_str(c, latex, true);
        if (!cs.empty()) os << cs << (latex ? "" : "*");
        os << sigma_str(lam, latex);
    }
    return os.str();
}

} // namespace

json poly_to_json(const TPoly& p) {
    json out = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        json vars = json::array();
        for (const auto& [v, pow] : mono.entries()) vars.push_back(json::array({v, pow}));
        out.push_back(json::array({int_to_json(coeff), vars}));
    }
    return out;
}

TPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("polynomial serialization must be a list");
    TPoly out;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw DomainError("polynomial term must be [coefficient, [[var,power],...]]");
        Int c = int_from_json(entry[0]);
        Monomial m;
        for (const json& vp : entry[1]) {
            if (!vp.is_array() || vp.size() != 2)
                throw DomainError("monomial entry must be [var, power]");
            m = m * Monomial::var(vp[0].get<int>(), vp[1].get<int>());
        }
        out += TPoly::monomial(m, c);
    }
    return out;
}

std::string poly_to_text(const TPoly& p) { return poly_str(p, false); }
std::string poly_to_latex(const TPoly& p) { return poly_str(p, true); }

std::string partition_to_text(const Partition& p) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int x : p.parts()) {
        if (x == 0) break;
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (int x : p.parts()) {
        if (x == 0) break;
        out.push_back(x);
    }
    return out;
}

json expansion_to_json(const Expansion& e, const json& operation) {
    json terms = json::array();
    for (const auto& [key, coeff] : e.terms()) {
        terms.push_back(json{{"partition", partition_to_json(key.lam)},
                             {"q", key.d},
                             {"coefficient", poly_to_json(coeff.value)}});
    }
    return json{{"grassmannian", json{{"m", e.rect().m}, {"n", e.rect().n}}},
                {"operation", operation},
                {"terms", terms}};
}

Expansion expansion_from_json(const json& j) {
    const json& g = j.at("grassmannian");
    Rect rect{g.at("m").get<int>(), g.at("n").get<int>()};
    Expansion out(rect);
    for (const json& term : j.at("terms")) {
        Partition lam(rect, term.at("partition").get<std::vector<int>>());
        out.add(lam, term.at("q").get<int>(), poly_from_json(term.at("coefficient")));
    }
    return out;
}

std::string expansion_to_latex(const Expansion& e, bool expand) {
    return expansion_str(e, true, expand);
}

std::string expansion_to_text(const Expansion& e, bool expand) {
    return expansion_str(e, false, expand);
}

json classical_to_json(const std::map<Partition, TPoly>& cls, const Rect& rect,
                       const json& operation) {
    json terms = json::array();
    for (const auto& [lam, value] : cls) {
        terms.push_back(json{{"partition", partition_to_json(lam)},
                             {"q", 0},
                             {"coefficient", poly_to_json(value)}});
    }
    return json{{"grassmannian", json{{"m", rect.m}, {"n", rect.n}}},
                {"operation", operation},
                {"terms", terms}};
}

std::string classical_to_latex(const std::map<Partition, TPoly>& cls) {
    return classical_str(cls, true);
}

std::string classical_to_text(const std::map<Partition, TPoly>& cls) {
    return classical_str(cls, false);
}

json report_to_json(const CheckReport& rep) {
    json failures = json::array();
    for (const CheckFailure& f : rep.failures) {
        failures.push_back(json{{"kind", f.kind},
                                {"detail", f.detail},
                                {"lambda", f.lambda},
                                {"mu", f.mu},
                                {"nu", f.nu},
                                {"d", f.d},
                                {"expected", f.expected},
                                {"actual", f.actual}});
    }
    return json{{"status", rep.status},
                {"checked", rep.checked},
                {"skipped", rep.skipped},
                {"failures", failures}};
}

} // namespace qhgrass
