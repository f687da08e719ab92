// katzcyc: command-line front end for cyclic vectors of differential modules.
//
// Exit status: 0 success (or "certified"), 2 criterion not satisfied,
// 1 error.  Results go to stdout as JSON; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "katzcyc/io.hpp"
#include "katzcyc/katzcyc.hpp"

namespace {

using namespace katzcyc;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCertified = 2;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::optional<std::vector<Rational>> parse_constants(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational q;
        if (item.empty() || q.set_str(item, 10) != 0) throw InputError("invalid constant '" + item + "'");
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json envelope(const std::string& command, Json input, Json result) {
    return Json{{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}};
}

int cmd_tables(long n, const std::string& format, long max_n) {
    if (n < 1) throw InputError("tables: n must be >= 1");
    if (n > max_n) throw InputError("tables: n exceeds the configured maximum " + std::to_string(max_n));
    if (format == "latex") {
        std::cout << tables_latex(n);
        return kExitOk;
    }
    emit(tables_json(n));
    return kExitOk;
}

int cmd_cyclic(const std::string& path, const std::string& constants) {
    const auto mod = load_module(read_json_file(path));
    const auto cands = parse_constants(constants);
    return std::visit(
        [&](const auto& m) {
            const auto& ring = m.ring();
            const auto found = find_cyclic(m, cands);
            const auto bc = base_change(m);
            PolyXRing rx(ring);
            Json result;
            result["constant"] = found.constant.get_str();
            result["candidate_index"] = found.index;
            result["vector"] = row_to_json(ring, found.vector);
            result["determinant"] = ring.to_string(found.determinant);
            result["P"] = rx.to_string(bc.determinant);
            result["is_basis"] = found.invertible;
            try {
                Json b = Json::array();
                for (const auto& x : companion_form(m, found.vector)) b.push_back(ring.to_string(x));
                result["companion"] = b;
            } catch (const std::domain_error& e) {
                std::cerr << "companion form unavailable: " << e.what() << "\n";
                result["companion"] = nullptr;
            }
            emit(envelope("cyclic", module_to_json(m), result));
            return kExitOk;
        },
        mod);
}

int cmd_companion(const std::string& path, const std::string& constants) {
    const auto mod = load_module(read_json_file(path));
    const auto cands = parse_constants(constants);
    return std::visit(
        [&](const auto& m) {
            const auto& ring = m.ring();
            const auto found = find_cyclic(m, cands);
            const auto b = companion_form(m, found.vector);
            const auto residual = companion_residual(m, found.vector, b);
            bool zero = true;
            for (const auto& x : residual) zero = zero && ring.is_zero(x);
            Json coeffs = Json::array();
            std::string ode = "y^(" + std::to_string(m.rank()) + ") =";
            for (std::size_t k = 0; k < b.size(); ++k) {
                coeffs.push_back(ring.to_string(b[k]));
                ode += (k ? " + (" : " (") + ring.to_string(b[k]) + ")*y^(" + std::to_string(k) + ")";
            }
            Json result{{"constant", found.constant.get_str()},
                        {"vector", row_to_json(ring, found.vector)},
                        {"coefficients", coeffs},
                        {"equation", ode},
                        {"residual_zero", zero}};
            emit(envelope("companion", module_to_json(m), result));
            return zero ? kExitOk : kExitError;
        },
        mod);
}

int cmd_certify(const std::string& path, const std::string& criterion, const std::string& norm) {
    const auto mod = load_module(read_json_file(path));
    std::optional<NormChoice> choice;
    if (norm == "sup")
        choice = NormChoice::Sup;
    else if (norm == "rho-t")
        choice = NormChoice::RhoInverseT;
    else if (norm == "rho-d")
        choice = NormChoice::RhoD;
    else if (!norm.empty())
        throw InputError("unknown norm '" + norm + "'");
    return std::visit(
        [&](const auto& m) -> int {
            using R = std::decay_t<decltype(m.ring())>;
            if constexpr (!BanachRing<R>) {
                throw UnsupportedOperation("certify: ring kind '" + m.ring().kind_name() + "' carries no norm");
            } else {
                auto fixed = [&](NormChoice own) {
                    if (choice && *choice != own)
                        throw InputError("criterion " + criterion + " uses the " + to_string(own) + " norm");
                };
                CyclicityCertificate<typename R::element_type> cert;
                if (criterion == "prop2.3") {
                    fixed(NormChoice::Sup);
                    cert = check_prop_2_3(m);
                } else if (criterion == "prop2.5") {
                    fixed(NormChoice::RhoInverseT);
                    cert = check_prop_2_5(m);
                } else if (criterion == "prop2.8") {
                    fixed(NormChoice::RhoD);
                    cert = check_prop_2_8(m);
                } else if (criterion == "lemma2.1") {
                    cert = certify_lemma_2_1(m, choice.value_or(NormChoice::Sup));
                } else {
                    throw InputError("unknown criterion '" + criterion + "'");
                }
                emit(envelope("certify", module_to_json(m), certificate_to_json(cert, m.ring())));
                return cert.certified ? kExitOk : kExitNotCertified;
            }
        },
        mod);
}

int cmd_counterexample(unsigned long p, unsigned e, std::size_t n) {
    const auto rep = charp_counterexample(p, e, n);
    Json result{{"p", rep.p},
                {"e", rep.e},
                {"q", rep.q},
                {"n", rep.n},
                {"degree_bound", rep.degree_bound},
                {"monomials_checked", rep.monomials_checked},
                {"polynomials_checked", rep.polynomials_checked},
                {"d_power_q_vanishes", rep.derivative_power_vanishes},
                {"vectors_checked", rep.vectors_checked},
                {"max_first_zero_index", rep.max_first_zero_index},
                {"zero_member_found", rep.zero_member_found},
                {"wedges_vanish", rep.determinants_vanish},
                {"failures", rep.failures},
                {"conclusion", rep.conclusion()}};
    emit(envelope("counterexample", Json{{"p", p}, {"e", e}, {"n", n}}, result));
    return rep.confirmed() ? kExitOk : kExitNotCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Katz cyclic vectors and small-connection certificates"};
    app.require_subcommand(1);

    long n = 0;
    long max_n = 8;
    std::string format = "json";
    auto* tables = app.add_subcommand("tables", "print the universal base-change tables H_0..H_{2n-2}");
    tables->add_option("-n", n, "rank")->required();
    tables->add_option("--format", format, "json or latex")->check(CLI::IsMember({"json", "latex"}));
    tables->add_option("--max-n", max_n, "largest accepted rank");

    std::string input;
    std::string constants;
    auto* cyclic = app.add_subcommand("cyclic", "find a cyclic vector by the constant search");
    cyclic->add_option("-i,--input", input, "module JSON file")->required();
    cyclic->add_option("--constants", constants, "comma-separated candidate constants");

    auto* companion = app.add_subcommand("companion", "scalar equation in a cyclic basis");
    companion->add_option("-i,--input", input, "module JSON file")->required();
    companion->add_option("--constants", constants, "comma-separated candidate constants");

    std::string criterion;
    std::string norm;
    auto* certify = app.add_subcommand("certify", "norm-smallness cyclicity certificate");
    certify->add_option("-i,--input", input, "module JSON file")->required();
    certify->add_option("--criterion", criterion, "prop2.3 | prop2.5 | prop2.8 | lemma2.1")->required();
    certify->add_option("--norm", norm, "sup | rho-t | rho-d (lemma2.1)");

    unsigned long p = 0;
    unsigned e = 1;
    std::size_t rank = 0;
    auto* counter = app.add_subcommand("counterexample", "characteristic-p non-cyclicity witnesses");
    counter->add_option("-p", p, "prime")->required();
    counter->add_option("-e", e, "field degree, q = p^e");
    counter->add_option("-n", rank, "rank, must exceed q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (tables->parsed()) return cmd_tables(n, format, max_n);
        if (cyclic->parsed()) return cmd_cyclic(input, constants);
        if (companion->parsed()) return cmd_companion(input, constants);
        if (certify->parsed()) return cmd_certify(input, criterion, norm);
        if (counter->parsed()) return cmd_counterexample(p, e, rank);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
