#include "mapenum/render.hpp"

#include "mapenum/errors.hpp"

#include <sstream>

namespace mapenum {

namespace {

// "5" or "{10}"
std::string script(long v) {
    const std::string s = std::to_string(v);
    return s.size() == 1 ? s : "{" + s + "}";
}

std::string latex_factor(const DenomFactor& f) {
    std::string s = f.factor.k == 1 ? "(1-t)" : "(1-" + std::to_string(f.factor.k) + "t)";
    if (f.exponent != 1)
        s += "^" + script(f.exponent);
    return s;
}

std::string function_name(const ModelSpec& model, char letter, unsigned g) {
    std::string base(1, letter);
    if (model.kind == ModelKind::Map)
        base = "\\widetilde{" + base + "}";
    return base + "_" + script(g);
}

std::string substitution(const ModelSpec& model) { return "t(1-" + std::to_string(model.subst_coeff) + "t)"; }

std::vector<DenomFactor> standard_factors(const ModelSpec& model, unsigned g) {
    const auto [e1, e2] = model.denom_exponents(g);
    return {{model.denom_factors[0], static_cast<unsigned>(e1)}, {model.denom_factors[1], static_cast<unsigned>(e2)}};
}

std::string latex_numerator(const FactoredRat& f) {
    const long m = f.t_power();
    const Poly& n = f.numerator();
    std::string mono = m == 0 ? "" : (m == 1 ? "t" : "t^" + script(m));
    if (n == Poly{1})
        return mono.empty() ? "1" : mono;
    if (n.coeffs().size() == 1)
        return n.coeffs()[0].get_str() + mono;
    return mono + "(" + latex_terms(n) + ")";
}

std::vector<std::string> coefficient_strings(const Poly& p, std::size_t from) {
    std::vector<std::string> out;
    for (std::size_t i = from; i < p.coeffs().size(); ++i)
        out.push_back(to_decimal(p.coeffs()[i]));
    return out;
}

} // namespace

std::string latex_terms(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rat& c = p.coeffs()[i];
        if (c == 0)
            continue;
        const Rat mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (i == 0 || mag != 1)
            os << (is_integer(mag) ? mag.get_str() : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}");
        if (i >= 1)
            os << 't';
        if (i >= 2)
            os << '^' << script(static_cast<long>(i));
        first = false;
    }
    return os.str();
}

std::string render_plain(const ModelSpec& model, const GenusSolution& sol) {
    if (sol.genus <= 1 || !sol.polynomial)
        return sol.c_of_t.to_string();
    std::string out = "(" + sol.polynomial->to_string() + ")/(";
    for (const auto& f : standard_factors(model, sol.genus))
        out += factor_to_string(f);
    return out + ")";
}

std::vector<std::string> latex_polynomial_lines(const ModelSpec& model, const GenusSolution& sol,
                                                std::size_t width) {
    if (!sol.polynomial)
        throw EngineError(ErrorKind::InvalidArgument, "genus " + std::to_string(sol.genus) + " has no P_g");
    // split the term string at sign characters
    const std::string terms = latex_terms(*sol.polynomial);
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0 || terms[i] == '+' || terms[i] == '-')
            pieces.emplace_back();
        pieces.back() += terms[i];
    }
    const std::string head = function_name(model, 'P', sol.genus) + "(t)&=";
    std::vector<std::string> lines;
    std::string current;
    for (const auto& piece : pieces) {
        if (!current.empty() && current.size() + piece.size() > width) {
            lines.push_back(std::move(current));
            current.clear();
        }
        current += piece;
    }
    lines.push_back(std::move(current));
    for (std::size_t i = 0; i < lines.size(); ++i)
        lines[i] = (i == 0 ? head : std::string(head.size() - 2, ' ') + "&") + lines[i];
    return lines;
}

std::string render_latex(const ModelSpec& model, const GenusSolution& sol) {
    std::ostringstream os;
    const unsigned g = sol.genus;
    os << "\\begin{align*}\n" << function_name(model, 'C', g) << "(" << substitution(model) << ")&=";
    if (g <= 1 || !sol.polynomial) {
        const FactoredRat& f = sol.c_of_t;
        std::string den;
        for (const auto& d : f.denominator())
            den += latex_factor(d);
        if (den.empty())
            os << latex_numerator(f);
        else
            os << "\\frac{" << latex_numerator(f) << "}{" << den << "}";
        os << ".\n\\end{align*}\n";
        return os.str();
    }
    std::string den;
    for (const auto& f : standard_factors(model, g))
        den += latex_factor(f);
    os << "\\frac{" << function_name(model, 'P', g) << "(t)}{" << den << "},\\\\\n";
    const auto lines = latex_polynomial_lines(model, sol);
    for (std::size_t i = 0; i < lines.size(); ++i)
        os << lines[i] << (i + 1 < lines.size() ? "\\\\\n" : ".\n");
    os << "\\end{align*}\n";
    return os.str();
}

std::string render_latex_polynomials(const ModelSpec& model, const std::vector<GenusSolution>& sols) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t k = 0; k < sols.size(); ++k) {
        const auto lines = latex_polynomial_lines(model, sols[k]);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            os << lines[i];
            if (i + 1 < lines.size())
                os << "\\\\\n";
            else
                os << (k + 1 < sols.size() ? ",\\\\\n" : ".\n");
        }
    }
    os << "\\end{align*}\n";
    return os.str();
}

nlohmann::json solution_to_json(const ModelSpec& model, const GenusSolution& sol) {
    nlohmann::json j;
    j["model"] = std::string(to_string(model.kind));
    j["genus"] = sol.genus;
    nlohmann::json denom = nlohmann::json::array();
    if (sol.polynomial) {
        const Poly& p = *sol.polynomial;
        const long offset = std::max(p.valuation(), 0L);
        j["offset"] = offset;
        j["coefficients"] = coefficient_strings(p, static_cast<std::size_t>(offset));
        for (const auto& f : standard_factors(model, sol.genus))
            denom.push_back({{"k", f.factor.k}, {"exp", f.exponent}});
    } else {
        j["offset"] = sol.c_of_t.t_power();
        j["coefficients"] = coefficient_strings(sol.c_of_t.numerator(), 0);
        for (const auto& f : sol.c_of_t.denominator())
            denom.push_back({{"k", f.factor.k}, {"exp", f.exponent}});
    }
    j["denom"] = denom;
    return j;
}

GenusSolution solution_from_json(const ModelSpec& model, const nlohmann::json& j) {
    try {
        if (j.at("model").get<std::string>() != to_string(model.kind))
            throw EngineError(ErrorKind::InvalidArgument, "record belongs to model " + j.at("model").get<std::string>());
        GenusSolution sol;
        sol.genus = j.at("genus").get<unsigned>();
        const long offset = j.at("offset").get<long>();
        std::vector<Rat> coeffs;
        for (const auto& c : j.at("coefficients"))
            coeffs.push_back(parse_rat(c.get<std::string>()));
        std::vector<DenomFactor> den;
        for (const auto& d : j.at("denom"))
            den.push_back({LinFactor{d.at("k").get<long>()}, d.at("exp").get<unsigned>()});

        const Poly num(std::move(coeffs));
        sol.c_of_t = FactoredRat::from_parts(offset, num, std::move(den));
        if (sol.genus >= 1) {
            if (offset < 0)
                throw EngineError(ErrorKind::InvalidArgument, "negative offset in a P_g record");
            sol.polynomial = num.shifted_up(static_cast<std::size_t>(offset));
        }
        return sol;
    } catch (const nlohmann::json::exception& e) {
        throw EngineError(ErrorKind::InvalidArgument, std::string("malformed solution record: ") + e.what());
    }
}

nlohmann::json counts_to_json(const CountTable& table) {
    std::vector<std::string> counts;
    for (const auto& c : table.counts)
        counts.push_back(to_decimal(c));
    return {{"model", std::string(to_string(table.kind))}, {"genus", table.genus}, {"counts", counts}};
}

std::string counts_to_csv(const CountTable& table) {
    std::ostringstream os;
    os << "n,count\n";
    for (std::size_t n = 0; n < table.counts.size(); ++n)
        os << n << ',' << to_decimal(table.counts[n]) << '\n';
    return os.str();
}

std::string counts_to_plain(const CountTable& table) {
    std::ostringstream os;
    for (std::size_t n = 0; n < table.counts.size(); ++n)
        os << (n ? ", " : "") << to_decimal(table.counts[n]);
    os << '\n';
    return os.str();
}

} // namespace mapenum
