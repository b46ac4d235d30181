// ecf: continued fractions, Hermite integrals, Pade approximants, and
// digits of e, all in exact arithmetic.

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecf/ecf.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;    // verification failure / internal disagreement
constexpr int kExitUsage = 2;   // malformed input

struct Output {
    std::string command;
    json parameters = json::object();
    json result = json::object();
    std::vector<std::string> plain_lines;
    bool as_json = false;

    void line(const std::string& s) { plain_lines.push_back(s); }

    void emit_ok() const {
        if (as_json) {
            json envelope = {{"command", command},
                             {"parameters", parameters},
                             {"result", result},
                             {"status", "ok"}};
            std::cout << envelope.dump(2) << "\n";
        } else {
            for (const auto& l : plain_lines) std::cout << l << "\n";
        }
    }

    void emit_error(const std::string& message) const {
        if (as_json) {
            json envelope = {{"command", command},
                             {"parameters", parameters},
                             {"result", json::object()},
                             {"status", "error"},
                             {"error_message", message}};
            std::cout << envelope.dump(2) << "\n";
        } else {
            std::cerr << "error: " << message << "\n";
        }
    }
};

std::string bracket_list(const std::vector<ecf::Int>& terms) {
    std::string out = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ",";
        out += terms[i].get_str();
    }
    return out + "]";
}

json terms_json(const std::vector<ecf::Int>& terms) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back(t.get_str());
    return arr;
}

json poly_json(const ecf::Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(ecf::to_string(c));
    return arr;
}

std::string poly_plain(const ecf::Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += ",";
        out += ecf::to_string(p.coefficients()[i]);
    }
    return out;
}

// Parse "2,1,2,1,1,4" into big integers; empty pieces or junk are usage errors.
std::vector<ecf::Int> parse_term_list(const std::string& spec) {
    std::vector<ecf::Int> terms;
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("empty term in list: " + spec);
        try {
            terms.emplace_back(piece, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed term '" + piece + "'");
        }
    }
    if (terms.empty()) throw std::invalid_argument("empty term list");
    return terms;
}

int cmd_convergents(Output& out, std::size_t count, const std::string& terms_spec) {
    out.parameters = {{"count", count}, {"terms", terms_spec}};

    ecf::TermGenerator gen;
    std::vector<ecf::Int> explicit_terms;
    if (terms_spec == "e") {
        gen = ecf::e_term;
    } else {
        explicit_terms = parse_term_list(terms_spec);
        if (count > explicit_terms.size())
            throw std::invalid_argument("count exceeds number of terms given");
        gen = [&explicit_terms](std::size_t i) { return explicit_terms[i]; };
    }
    auto conv = ecf::convergents(gen, count);

    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"i", "a_i", "p_i", "q_i"});
    for (const auto& c : conv)
        rows.push_back({std::to_string(c.index), gen(c.index).get_str(),
                        c.p.get_str(), c.q.get_str()});
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows)
        for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], r[k].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t k = 0; k < 4; ++k) {
            if (k) line += "  ";
            line += std::string(width[k] - r[k].size(), ' ') + r[k];
        }
        out.line(line);
    }

    json jrows = json::array();
    for (const auto& c : conv)
        jrows.push_back({{"i", c.index},
                         {"a", gen(c.index).get_str()},
                         {"p", c.p.get_str()},
                         {"q", c.q.get_str()}});
    out.result = {{"rows", jrows}};
    return kExitOk;
}

int cmd_cf(Output& out, const std::string& num_str, const std::string& den_str,
           const std::string& form) {
    out.parameters = {{"numerator", num_str}, {"denominator", den_str}, {"form", form}};
    ecf::Int num(num_str, 10), den(den_str, 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    auto convention = form == "unit-tail" ? ecf::CfConvention::UnitTail
                                          : ecf::CfConvention::Canonical;
    auto seq = ecf::cf_of_rational(ecf::make_rational(num, den), convention);
    out.line(bracket_list(seq.terms));
    out.result = {{"terms", terms_json(seq.terms)}};
    return kExitOk;
}

int cmd_pade(Output& out, std::size_t m, std::size_t n, const std::string& method,
             bool at_one) {
    out.parameters = {{"m", m}, {"n", n}, {"method", method}, {"at_one", at_one}};
    ecf::PadeApproximant approx = method == "linsolve" ? ecf::pade_by_linear_system(m, n)
                                                       : ecf::pade_by_lemma(m, n);
    out.line("p = " + poly_plain(approx.numerator));
    out.line("q = " + poly_plain(approx.denominator));
    out.result = {{"p", poly_json(approx.numerator)}, {"q", poly_json(approx.denominator)}};
    if (at_one) {
        ecf::Rational value = ecf::evaluate_at_one(approx);
        auto canonical = ecf::cf_of_rational(value, ecf::CfConvention::Canonical);
        auto unit_tail = ecf::cf_of_rational(value, ecf::CfConvention::UnitTail);
        out.line("value at 1 = " + ecf::to_string(value));
        out.line("cf canonical = " + bracket_list(canonical.terms));
        out.line("cf unit-tail = " + bracket_list(unit_tail.terms));
        out.result["at_one"] = {{"value", ecf::to_string(value)},
                                {"cf_canonical", terms_json(canonical.terms)},
                                {"cf_unit_tail", terms_json(unit_tail.terms)}};
    }
    return kExitOk;
}

int cmd_verify(Output& out, std::size_t prop1, std::size_t identities,
               std::size_t correspondence) {
    out.parameters = {{"prop1", prop1},
                      {"identities", identities},
                      {"correspondence", correspondence}};
    bool all_ok = true;
    json checks = json::array();

    auto report_rows = [&](const std::string& name, const ecf::VerificationReport& rep) {
        json jrows = json::array();
        for (const auto& row : rep.rows) {
            out.line(name + " n=" + std::to_string(row.n) + " " +
                     (row.pass ? "pass" : "FAIL"));
            jrows.push_back({{"n", row.n}, {"pass", row.pass}});
        }
        checks.push_back({{"name", name}, {"pass", rep.all_pass()}, {"rows", jrows}});
        all_ok = all_ok && rep.all_pass();
    };

    if (prop1 > 0) report_rows("prop1", ecf::verify_prop1(prop1));
    if (identities > 0)
        report_rows("identities", ecf::verify_derivative_identities(identities));
    if (correspondence > 0) {
        auto rep = ecf::convergent_correspondence(correspondence);
        json jrows = json::array();
        for (const auto& row : rep.rows) {
            out.line("correspondence n=" + std::to_string(row.n) + " " +
                     (row.pass() ? "pass" : "FAIL"));
            jrows.push_back({{"n", row.n},
                             {"diag", row.diag},
                             {"superdiag", row.superdiag},
                             {"subdiag", row.subdiag}});
        }
        checks.push_back(
            {{"name", "correspondence"}, {"pass", rep.all_pass()}, {"rows", jrows}});
        all_ok = all_ok && rep.all_pass();
    }

    out.line(all_ok ? "all checks passed" : "FAILURES detected");
    out.result = {{"checks", checks}, {"pass", all_ok}};
    return all_ok ? kExitOk : kExitFail;
}

int cmd_e(Output& out, std::size_t digits, const std::string& method, bool bench,
          bool deterministic) {
    out.parameters = {{"digits", digits}, {"method", method}, {"bench", bench}};
    if (bench) {
        auto report = ecf::benchmark(digits);
        out.line(report.digits);
        json jrecords = json::array();
        for (const auto& rec : report.records) {
            double ms = deterministic ? 0.0 : rec.wall_ms;
            std::ostringstream line;
            line << rec.method << ": terms=" << rec.terms << " wall_ms=" << ms
                 << " digits_agreed=" << rec.digits_agreed;
            out.line(line.str());
            jrecords.push_back({{"method", rec.method},
                                {"terms", rec.terms},
                                {"wall_ms", ms},
                                {"digits_agreed", rec.digits_agreed}});
        }
        out.result = {{"digits", report.digits}, {"records", jrecords}};
        return kExitOk;
    }
    if (method == "both") {
        auto cf = ecf::e_decimal(digits);
        auto taylor = ecf::e_by_taylor(digits);
        if (cf.digits != taylor.digits) throw ecf::DigitMismatch("methods disagree");
        out.line(cf.digits);
        out.result = {{"digits", cf.digits},
                      {"terms_cf", cf.terms_used},
                      {"terms_taylor", taylor.terms_used}};
        return kExitOk;
    }
    auto res = method == "taylor" ? ecf::e_by_taylor(digits) : ecf::e_decimal(digits);
    out.line(res.digits);
    out.result = {{"digits", res.digits},
                  {"terms", res.terms_used},
                  {"bound", ecf::to_string(res.bound)}};
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued fractions, Hermite integrals, Pade approximants, "
                 "and digits of e"};
    app.require_subcommand(1);

    std::string format = "plain";
    bool deterministic = false;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));
    app.add_flag("--deterministic", deterministic, "Zero out timing fields");

    // convergents
    auto* sc_conv = app.add_subcommand("convergents", "Convergent table (i, a_i, p_i, q_i)");
    std::size_t conv_count = 9;
    std::string conv_terms = "e";
    sc_conv->add_option("count", conv_count, "Number of convergents")->required()
        ->check(CLI::PositiveNumber);
    sc_conv->add_option("--terms", conv_terms, "'e' or a comma-separated term list");

    // cf
    auto* sc_cf = app.add_subcommand("cf", "Continued fraction of a rational");
    std::string cf_num, cf_den;
    std::string cf_form = "canonical";
    sc_cf->add_option("numerator", cf_num)->required();
    sc_cf->add_option("denominator", cf_den)->required();
    sc_cf->add_option("--form", cf_form)->check(CLI::IsMember({"canonical", "unit-tail"}));

    // pade
    auto* sc_pade = app.add_subcommand("pade", "Pade approximant of e^z of type (m,n)");
    std::size_t pade_m = 0, pade_n = 0;
    std::string pade_method = "lemma";
    bool pade_at_one = false;
    sc_pade->add_option("m", pade_m)->required();
    sc_pade->add_option("n", pade_n)->required();
    sc_pade->add_option("--method", pade_method)
        ->check(CLI::IsMember({"lemma", "linsolve"}));
    sc_pade->add_flag("--at-one", pade_at_one, "Evaluate at z = 1");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "Verification reports");
    std::size_t v_prop1 = 0, v_identities = 0, v_correspondence = 0;
    sc_verify->add_option("--prop1", v_prop1, "Check A_n, B_n, C_n against convergents up to N")
        ->check(CLI::PositiveNumber);
    sc_verify->add_option("--identities", v_identities,
                          "Check the proof's polynomial identities up to N")
        ->check(CLI::PositiveNumber);
    sc_verify->add_option("--correspondence", v_correspondence,
                          "Check Pade values at 1 against convergents up to N")
        ->check(CLI::PositiveNumber);

    // e
    auto* sc_e = app.add_subcommand("e", "Digits of e");
    std::size_t e_digits = 0;
    std::string e_method = "cf";
    bool e_bench = false;
    sc_e->add_option("--digits", e_digits)->required()->check(CLI::PositiveNumber);
    sc_e->add_option("--method", e_method)->check(CLI::IsMember({"cf", "taylor", "both"}));
    sc_e->add_flag("--bench", e_bench, "Benchmark both methods");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.as_json = format == "json";
    int code = kExitUsage;
    try {
        if (sc_conv->parsed()) {
            out.command = "convergents";
            code = cmd_convergents(out, conv_count, conv_terms);
        } else if (sc_cf->parsed()) {
            out.command = "cf";
            code = cmd_cf(out, cf_num, cf_den, cf_form);
        } else if (sc_pade->parsed()) {
            out.command = "pade";
            code = cmd_pade(out, pade_m, pade_n, pade_method, pade_at_one);
        } else if (sc_verify->parsed()) {
            out.command = "verify";
            if (v_prop1 == 0 && v_identities == 0 && v_correspondence == 0)
                throw std::invalid_argument(
                    "verify needs at least one of --prop1, --identities, --correspondence");
            code = cmd_verify(out, v_prop1, v_identities, v_correspondence);
        } else if (sc_e->parsed()) {
            out.command = "e";
            code = cmd_e(out, e_digits, e_method, e_bench, deterministic);
        }
    } catch (const ecf::DigitMismatch& e) {
        out.emit_error(e.what());
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        out.emit_error(e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        out.emit_error(e.what());
        return kExitFail;
    }
    out.emit_ok();
    return code;
}
