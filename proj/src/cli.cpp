#include "cgknot/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cgknot/casson_gordon.hpp"
#include "cgknot/knot.hpp"
#include "cgknot/parse.hpp"
#include "cgknot/report.hpp"
#include "cgknot/version.hpp"

namespace cgknot {

namespace {

void echo_input(std::ostream& err, const std::string& src, std::size_t column)
{
    err << "  input: " << src << "\n";
    if (column >= 1 && column <= src.size() + 1)
        err << std::string(9 + column - 1, ' ') << "^\n";
}

WittElement expression_element(const KnotExpr& e)
{
    WittElement el;
    for (const auto& [w, n] : e.terms())
        el = el + alpha_atom(w, UnitAngle(0, 1)).scaled(TwoLocal(n));
    return el;
}

struct DemoCheck {
    std::ostream& out;
    bool ok = true;

    void check(bool cond, const std::string& what)
    {
        out << (cond ? "  ok   " : "  FAIL ") << what << "\n";
        ok = ok && cond;
    }
};

int run_demo(std::ostream& out, Format fmt, int jobs)
{
    (void)fmt; // the demo is a self-checking narrative; text only
    DemoCheck d{out};

    out << "headline combination J = T(2,3;2,13) + T(2,15) - T(2,3;2,15) - T(2,13)\n";
    KnotExpr j = parse_expression("T(2,3;2,13) + T(2,15) - T(2,3;2,15) - T(2,13)");

    out << "algebraic sliceness:\n";
    d.check(is_algebraically_slice(j) == SliceStatus::ZERO_CERTIFICATE,
            "the combination is algebraically slice (certified zero Witt class)");
    d.check(fox_milnor_is_norm(alexander(j), alexander_orders(j)),
            "Fox-Milnor: the Alexander polynomial is a norm");
    TauS ts = tau_s(j);
    d.check(ts.tau == 0 && ts.s_half == 0, "tau = s/2 = 0 for the combination");

    out << "signature anchors:\n";
    JumpFunction j13 = lt_jump(KnotExpr::knot(CableWord::torus(2, 13)));
    d.check(j13.at(UnitAngle(1, 26)) == TwoLocal(-1), "jump of T(2,13) at 1/26 is -1");
    d.check(j13.at(UnitAngle(1, 12)).is_zero(), "jump of T(2,13) at 1/12 is 0");
    JumpFunction jc = lt_jump(KnotExpr::knot(CableWord::torus(2, 3).cabled(2, 13)));
    d.check(jc.at(UnitAngle(1, 26)) == TwoLocal(-1), "jump of T(2,3;2,13) at 1/26 is -1");
    d.check(jc.at(UnitAngle(1, 12)) == TwoLocal(-1), "jump of T(2,3;2,13) at 1/12 is -1");

    out << "slice obstruction (exhaustive):\n";
    FamilySpec fam = {FamilyMember{CableWord::torus(2, 3), 13, 15, 1}};
    ObstructionCertificate cert =
        slice_obstruction(fam, ObstructionMode::Exhaustive, 1000000, jobs);
    d.check(cert.verdict == "NOT_SLICE", "verdict NOT_SLICE");
    d.check(cert.mode_run == ObstructionMode::Exhaustive && cert.enumerated == 48,
            "all 48 nontrivial character cases enumerated");
    bool witnessed = cert.cases.size() == 48;
    for (const auto& w : cert.cases)
        witnessed = witnessed && (w.kind == "disc-parity" || w.kind == "alpha-jump");
    d.check(witnessed, "every case carries a nonvanishing witness");

    out << "independent basis members at the first few primes:\n";
    for (long q : {13L, 17L, 19L}) {
        FamilySpec f = {FamilyMember{CableWord::torus(2, 3), q, 11, 1}};
        ObstructionCertificate cq = slice_obstruction(f, ObstructionMode::Structural);
        std::ostringstream what;
        what << "J_" << q << " = T(2,3;2," << q << ") + T(2,11) - T(2,3;2,11) - T(2," << q
             << ") obstructed";
        d.check(cq.verdict == "NOT_SLICE", what.str());
    }

    out << (d.ok ? "demo: all checks passed\n" : "demo: FAILED\n");
    return d.ok ? 0 : 3;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact slice obstructions for combinations of cable and torus knots"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string fmt_name;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt_name,
                        "output format: text, json or csv (default from CGKNOT_FORMAT)");
    };

    std::string expr_src, angle_src, word_src, family_src, orders_src, char_src;
    std::string mode_name = "exhaustive", disc_mode_name = "closed";
    long p_arg = 0, d_arg = 0, prime_arg = 0;
    long budget = 1000000;
    int jobs = 1;
    bool allow_composite = false;

    CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of an expression");
    alex->add_option("expr", expr_src, "knot expression")->required();
    add_format(alex);

    CLI::App* jumps = app.add_subcommand("jumps", "Levine-Tristram signature jumps");
    jumps->add_option("expr", expr_src, "knot expression")->required();
    add_format(jumps);

    CLI::App* sig = app.add_subcommand("sig-at", "averaged signature at a unit angle");
    sig->add_option("expr", expr_src, "knot expression")->required();
    sig->add_option("angle", angle_src, "angle c/m in turns")->required();
    add_format(sig);

    CLI::App* disc = app.add_subcommand(
        "disc", "canonical discriminant of an expression or a dihedral character");
    disc->add_option("expr", expr_src, "knot expression");
    disc->add_option("--char", char_src, "p,a: twisted discriminant for chi_a at prime p");
    disc->add_option("--disc-mode", disc_mode_name, "closed, fox or both (default closed)");
    disc->add_option("--orders", orders_src, "override candidate root orders a,b,c");
    disc->add_flag("--allow-composite", allow_composite,
                   "experimental: accept composite p in --char");
    add_format(disc);

    CLI::App* twisted =
        app.add_subcommand("twisted", "dihedral twisted Alexander polynomial of T(2,p)");
    twisted->add_option("p", p_arg, "odd prime")->required();
    twisted->add_option("d", d_arg, "character parameter mod p")->required();
    twisted->add_flag("--allow-composite", allow_composite, "experimental: accept composite p");
    add_format(twisted);

    CLI::App* defc = app.add_subcommand("deficiency", "deficiency certificate at a prime");
    defc->add_option("word", word_src, "single cable word")->required();
    defc->add_option("p", prime_arg, "odd prime")->required();
    add_format(defc);

    CLI::App* indc =
        app.add_subcommand("independence", "translate-independence certificate at a prime");
    indc->add_option("word", word_src, "single cable word")->required();
    indc->add_option("p", prime_arg, "odd prime")->required();
    add_format(indc);

    CLI::App* obst = app.add_subcommand("obstruct", "slice obstruction for a cable family");
    obst->add_option("--family", family_src,
                     "members \"K=<word>; q=<odd>,<even>[; n=<int>]\" joined by \"|\"")
        ->required();
    obst->add_option("--mode", mode_name, "structural or exhaustive (default exhaustive)");
    obst->add_option("--budget", budget, "enumeration budget (default 1000000)");
    obst->add_option("--jobs", jobs, "worker threads for enumeration");
    add_format(obst);

    CLI::App* demo = app.add_subcommand("demo", "self-checking headline computation");
    demo->add_option("--jobs", jobs, "worker threads for enumeration");
    add_format(demo);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cgknot");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Format fmt = fmt_name.empty() ? default_format() : parse_format(fmt_name);

    if (alex->parsed()) {
        KnotExpr e = parse_expression(expr_src);
        emit_alex(out, fmt, expr_src, e, alexander(e));
        return 0;
    }
    if (jumps->parsed()) {
        KnotExpr e = parse_expression(expr_src);
        emit_jumps(out, fmt, expr_src, lt_jump(e));
        return 0;
    }
    if (sig->parsed()) {
        KnotExpr e = parse_expression(expr_src);
        UnitAngle w = parse_angle(angle_src);
        emit_sig_at(out, fmt, expr_src, w, lt_signature_at(e, w));
        return 0;
    }
    if (disc->parsed()) {
        if (!char_src.empty() && !expr_src.empty())
            throw std::invalid_argument("disc: give either an expression or --char, not both");
        if (!char_src.empty()) {
            std::size_t comma = char_src.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("disc: --char expects \"p,a\"");
            long p = std::stol(char_src.substr(0, comma));
            long a = std::stol(char_src.substr(comma + 1));
            CanonicalDisc closed = cg_disc(p, a, DiscMode::ClosedForm, allow_composite);
            if (disc_mode_name == "closed") {
                emit_disc_char(out, fmt, char_src, p, a, "closed", closed);
            } else if (disc_mode_name == "fox") {
                emit_disc_char(out, fmt, char_src, p, a, "fox",
                               cg_disc(p, a, DiscMode::Fox, allow_composite));
            } else if (disc_mode_name == "both") {
                CanonicalDisc fox = cg_disc(p, a, DiscMode::Fox, allow_composite);
                if (!(fox == closed))
                    throw std::logic_error("disc: closed form and Fox computation disagree");
                emit_disc_char(out, fmt, char_src, p, a, "both", closed);
            } else {
                throw std::invalid_argument("disc: --disc-mode must be closed, fox or both");
            }
            return 0;
        }
        if (expr_src.empty())
            throw std::invalid_argument("disc: an expression or --char is required");
        KnotExpr e = parse_expression(expr_src);
        std::set<long> orders =
            orders_src.empty() ? alexander_orders(e) : parse_orders(orders_src);
        emit_disc_expr(out, fmt, expr_src, disc_pm(expression_element(e), orders));
        return 0;
    }
    if (twisted->parsed()) {
        std::ostringstream in;
        in << "p=" << p_arg << " d=" << d_arg;
        emit_twisted(out, fmt, in.str(), p_arg, d_arg,
                     twisted_alex_T2p(p_arg, d_arg, allow_composite));
        return 0;
    }
    if (defc->parsed()) {
        emit_deficiency(out, fmt, word_src,
                        deficiency_certificate(parse_word(word_src), prime_arg));
        return 0;
    }
    if (indc->parsed()) {
        emit_independence(out, fmt, word_src,
                          independence_certificate(parse_word(word_src), prime_arg));
        return 0;
    }
    if (obst->parsed()) {
        ObstructionMode mode;
        if (mode_name == "structural")
            mode = ObstructionMode::Structural;
        else if (mode_name == "exhaustive")
            mode = ObstructionMode::Exhaustive;
        else
            throw std::invalid_argument("obstruct: --mode must be structural or exhaustive");
        FamilySpec fam = parse_family(family_src);
        ObstructionCertificate cert = slice_obstruction(fam, mode, budget, jobs);
        emit_obstruction(out, fmt, family_src, fam, cert);
        return cert.verdict == "NOT_SLICE" ? 0 : 2;
    }
    if (demo->parsed())
        return run_demo(out, fmt, jobs);
    throw std::logic_error("cli: unreached verb");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        echo_input(err, e.source(), e.column());
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace cgknot
