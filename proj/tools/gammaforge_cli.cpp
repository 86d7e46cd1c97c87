// gammaforge: synthesis and verification of elementary Fourier identities
// over local fields.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammaforge/constants.hpp"
#include "gammaforge/covering.hpp"
#include "gammaforge/divisor.hpp"
#include "gammaforge/gamma.hpp"
#include "gammaforge/padic.hpp"
#include "gammaforge/pvs.hpp"
#include "gammaforge/verifier.hpp"

using namespace gf;

namespace {

LocalField parse_field(const std::string& tag, long long q)
{
    if (tag == "R") return LocalField::real();
    if (tag == "C") return LocalField::complex_field();
    if (tag == "Qp" || tag == "NonArch") return LocalField::nonarch(q);
    raise(ErrorCode::ParseError, "unknown field " + tag + " (use R, C, or Qp with --q)");
}

std::vector<long long> parse_ll_list(const std::string& text)
{
    std::vector<long long> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void emit(const nlohmann::json& j, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        os << j.dump(2) << "\n";
    }
}

int cmd_gamma(const std::string& field_tag, long long q, double s, double s_imag, long long n,
              long long d, double a, const std::string& out)
{
    LocalField F = parse_field(field_tag, q);
    nlohmann::json j;
    j["schema"] = "1";
    j["field"] = field_tag;
    j["s"] = format_double_15(s);
    j["n"] = n;
    if (d <= 1) {
        GammaValue g = gamma_f(F, cdouble(s, s_imag), n);
        j["value"] = complex_to_json(g.value);
        j["at_pole"] = g.at_pole;
    } else {
        cdouble v = F.archimedean() ? gamma_generalized(F, d, cdouble(a, 0.0), cdouble(s, s_imag), n)
                                    : gamma_generalized_nonarch(F, d, (long long)a, cdouble(s, s_imag));
        j["d"] = d;
        j["a"] = format_double_15(a);
        j["value"] = complex_to_json(v);
        j["at_pole"] = false;
    }
    emit(j, out);
    return 0;
}

int cmd_identities_covering(long long n, const std::string& type, const std::string& field_tag,
                            bool latex, bool constants, const std::string& out)
{
    LocalField F = parse_field(field_tag, 0);
    std::vector<long long> sizes = parse_ll_list(type);
    auto systems = enumerate_coverings(n, sizes);
    std::vector<long long> exps = covering_type_exponents(n, sizes);

    nlohmann::json j;
    j["schema"] = "1";
    j["n"] = n;
    j["type"] = sizes;
    j["exponents"] = exps;
    j["identities"] = nlohmann::json::array();
    for (const auto& cs : systems) {
        MonomialIdentity id = covering_to_identity(cs, F, exps);
        if (constants) id.C = identity_constant(id);
        nlohmann::json ji = identity_to_json(id);
        ji["covering_biggest"] = cs.biggest();
        if (latex) ji["latex"] = identity_to_latex(id);
        j["identities"].push_back(ji);
    }
    j["count"] = systems.size();
    emit(j, out);
    return 0;
}

int cmd_identities_pvs(const std::string& space, bool latex, const std::string& out)
{
    PVSDescriptor V = builtin_pvs(space);
    auto ids = pvs_identities(V);
    nlohmann::json j;
    j["schema"] = "1";
    j["space"] = space;
    j["M"] = V.M;
    j["D"] = V.D;
    j["b_roots"] = nlohmann::json::array();
    for (const auto& r : V.b_roots) j["b_roots"].push_back(r.to_string());
    j["identities"] = nlohmann::json::array();
    for (const auto& pid : ids) {
        nlohmann::json ji;
        ji["sigma"] = nlohmann::json::array();
        for (const auto& r : pid.sigma) ji["sigma"].push_back(r.to_string());
        ji["q"] = pid.q.to_string();
        ji["p"] = pid.p.to_string();
        ji["q_dual"] = pid.q_dual.to_string();
        ji["p_dual"] = pid.p_dual.to_string();
        ji["identity"] = identity_to_json(pid.identity);
        ji["expanded"] = identity_to_json(expand_pvs_identity(pid, V));
        if (latex) ji["latex"] = identity_to_latex(pid.identity);
        j["identities"].push_back(ji);
    }
    j["count"] = ids.size();
    emit(j, out);
    return 0;
}

int cmd_identities_monomial(const std::string& field_tag, const std::string& exps_text,
                            const std::string& out)
{
    LocalField F = parse_field(field_tag, 0);
    std::vector<long long> exps = parse_ll_list(exps_text);
    auto sols = solve_relation(F, exps);
    nlohmann::json j;
    j["schema"] = "1";
    j["exponents"] = exps;
    j["solutions"] = nlohmann::json::array();
    for (const auto& sol : sols) {
        nlohmann::json js;
        js["case"] = sol.case_;
        js["mu"] = nlohmann::json::array();
        for (const auto& m : sol.mu) js["mu"].push_back(character_to_json(m));
        js["xi"] = character_to_json(sol.xi);
        j["solutions"].push_back(js);
    }
    j["count"] = sols.size();
    emit(j, out);
    return 0;
}

int cmd_verify(const std::string& identity_path, int tests, double tol, unsigned long long seed,
               bool control, const std::string& out)
{
    std::ifstream is(identity_path);
    if (!is) {
        std::cerr << "cannot open " << identity_path << "\n";
        return 2;
    }
    nlohmann::json jid;
    is >> jid;
    MonomialIdentity id = identity_from_json(jid);
    if (control) id.b = id.b * Rational(2); // falsification control
    VerifierOptions opt;
    opt.threads = verifier_threads();
    VerificationReport rep = verify_identity(id, tests, tol, seed, opt);
    emit(report_to_json(rep), out);
    return rep.pass ? 0 : 1;
}

int cmd_verify_cubic(long long p, int precision, bool control, const std::string& out)
{
    CubicIdentityReport rep = verify_cubic_identity(p, precision, control);
    emit(cubic_report_to_json(rep), out);
    return rep.pass ? 0 : 1;
}

int cmd_legendre_check(const std::string& f_text, const std::string& fstar_text)
{
    std::vector<std::string> names_f, names_g;
    Polynomial f = parse_polynomial(f_text, names_f);
    Polynomial g = parse_polynomial(fstar_text, names_g);
    if (names_f.size() != names_g.size())
        raise(ErrorCode::DegreeMismatch, "f and fstar must use the same number of variables");
    MltCheck chk = mlt_verify(RationalFunc{f}, RationalFunc{g});
    nlohmann::json j;
    j["schema"] = "1";
    j["pass"] = chk.ok;
    j["scale"] = chk.scale.to_string();
    std::cout << j.dump(2) << "\n";
    return chk.ok ? 0 : 1;
}

int cmd_selftest()
{
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        if (!ok) ++failures;
    };

    // Gamma functional equation spot checks per field
    {
        bool ok = true;
        for (const LocalField& F :
             {LocalField::real(), LocalField::complex_field(), LocalField::nonarch(3)}) {
            cdouble s{0.37, 0.21};
            long long n = F.kind == FieldKind::NonArch ? 0 : 1;
            cdouble nu_s = F.kind == FieldKind::Complex ? 2.0 : 1.0;
            cdouble lhs = gamma_f(F, s, n).value * gamma_f(F, nu_s - s, -n).value;
            cdouble rhs = F.kind == FieldKind::Real ? -1.0
                          : F.kind == FieldKind::Complex
                              ? ((n % 2) ? -1.0 : 1.0)
                              : cdouble(1.0, 0.0);
            if (F.kind == FieldKind::NonArch) rhs = 1.0;
            ok = ok && std::abs(lhs - rhs) < 1e-9;
        }
        check("gamma functional equation", ok);
    }
    {
        auto sols = solve_relation(LocalField::real(), {-1, 3});
        check("six cubic-family relation solutions", sols.size() == 6);
    }
    {
        ShellSumReport rep = check_gamma_nonarch(3, {Rational(1, 2), Rational(2), Rational(5, 3)});
        check("nonarchimedean Gamma shell sums", rep.pass);
    }
    {
        auto V = builtin_pvs("det(3)");
        check("det(3) multiplicative Legendre transform", mlt_verify(V.f, V.f_star).ok);
    }
    {
        MonomialIdentity gauss;
        gauss.field = LocalField::real();
        gauss.exponents = {2};
        gauss.degrees = {1};
        gauss.lambda = {Character::trivial(gauss.field)};
        gauss.gamma = Character(gauss.field, Rational(1, 2), 0);
        gauss.eta = derive_eta(gauss.lambda, gauss.gamma, gauss.exponents);
        gauss.a = Rational(-1, 2);
        gauss.b = Rational(1, 2);
        cdouble C = identity_constant(gauss);
        check("Gauss identity constant e^{-i pi/4}",
              std::abs(C - std::polar(1.0, -0.25 * 3.14159265358979323846)) < 1e-9);
    }
    std::cout << (failures ? "SELFTEST FAILED\n" : "SELFTEST OK\n");
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gammaforge: elementary Fourier identities over local fields"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to a file instead of stdout");

    // gamma eval
    auto* gamma_cmd = app.add_subcommand("gamma", "Gamma function evaluation");
    auto* gamma_eval = gamma_cmd->add_subcommand("eval", "evaluate Gamma^F (or Gamma_{d,a})");
    std::string g_field = "R";
    long long g_q = 2, g_n = 0, g_d = 1;
    double g_s = 0.5, g_simag = 0.0, g_a = 1.0;
    gamma_eval->add_option("--field", g_field, "R | C | Qp");
    gamma_eval->add_option("--q", g_q, "residue field size (Qp)");
    gamma_eval->add_option("--s", g_s, "exponent (real part)");
    gamma_eval->add_option("--s-imag", g_simag, "exponent (imaginary part)");
    gamma_eval->add_option("--n", g_n, "twist");
    gamma_eval->add_option("--d", g_d, "generalized Gamma order");
    gamma_eval->add_option("--a", g_a, "generalized Gamma shift");

    // identities ...
    auto* ids_cmd = app.add_subcommand("identities", "identity synthesis");
    auto* ids_cov = ids_cmd->add_subcommand("covering", "identities from exact covering systems");
    long long cov_n = 3;
    std::string cov_type = "1,1,1", cov_field = "R";
    bool cov_latex = false, cov_constants = false;
    ids_cov->add_option("--n", cov_n, "modulus");
    ids_cov->add_option("--type", cov_type, "coset sizes, e.g. 1,1,1");
    ids_cov->add_option("--field", cov_field, "R | C");
    ids_cov->add_flag("--latex", cov_latex, "emit display forms");
    ids_cov->add_flag("--constants", cov_constants, "compute the constants C");

    auto* ids_pvs = ids_cmd->add_subcommand("pvs", "identities of prehomogeneous spaces");
    std::string pvs_space = "e6_cubic";
    bool pvs_latex = false;
    ids_pvs->add_option("--space", pvs_space, "power(n) | monomial(k) | sym_det(3) | det(n) | "
                                              "pfaffian(6) | e6_cubic | quad_times_linear(N)");
    ids_pvs->add_flag("--latex", pvs_latex, "emit display forms");

    auto* ids_mon = ids_cmd->add_subcommand("monomial", "relation solutions for given exponents");
    std::string mon_field = "R", mon_exps = "-1,3";
    ids_mon->add_option("--field", mon_field, "R | C");
    ids_mon->add_option("--exponents", mon_exps, "comma-separated nonzero exponents");

    // verify [cubic]
    auto* verify_cmd = app.add_subcommand("verify", "numeric verification");
    std::string v_identity;
    int v_tests = 3;
    double v_tol = 1e-2;
    unsigned long long v_seed = 12345;
    bool v_control = false;
    verify_cmd->add_option("--identity", v_identity, "identity JSON file");
    verify_cmd->add_option("--tests", v_tests, "number of test functions");
    verify_cmd->add_option("--tol", v_tol, "relative tolerance");
    verify_cmd->add_option("--seed", v_seed, "test-function seed");
    verify_cmd->add_flag("--control", v_control, "falsification control (b doubled)");

    auto* verify_cubic = verify_cmd->add_subcommand("cubic", "nonarchimedean cubic identity");
    long long c_p = 2;
    int c_precision = 3;
    bool c_control = false;
    verify_cubic->add_option("--p", c_p, "prime");
    verify_cubic->add_option("--precision", c_precision, "support truncation level");
    verify_cubic->add_flag("--control", c_control, "trivial-character control");

    // legendre check
    auto* leg_cmd = app.add_subcommand("legendre", "multiplicative Legendre transform checks");
    auto* leg_check = leg_cmd->add_subcommand("check", "verify a (f, f_*) pair");
    std::string leg_f, leg_fstar;
    leg_check->add_option("--f", leg_f, "polynomial expression")->required();
    leg_check->add_option("--fstar", leg_fstar, "polynomial expression")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gamma_eval->parsed())
            return cmd_gamma(g_field, g_q, g_s, g_simag, g_n, g_d, g_a, out_path);
        if (ids_cov->parsed())
            return cmd_identities_covering(cov_n, cov_type, cov_field, cov_latex, cov_constants,
                                           out_path);
        if (ids_pvs->parsed()) return cmd_identities_pvs(pvs_space, pvs_latex, out_path);
        if (ids_mon->parsed()) return cmd_identities_monomial(mon_field, mon_exps, out_path);
        if (verify_cubic->parsed()) return cmd_verify_cubic(c_p, c_precision, c_control, out_path);
        if (verify_cmd->parsed())
            return cmd_verify(v_identity, v_tests, v_tol, v_seed, v_control, out_path);
        if (leg_check->parsed()) return cmd_legendre_check(leg_f, leg_fstar);
        if (selftest_cmd->parsed()) return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand executed\n";
    return 2;
}
