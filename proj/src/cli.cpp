#include "bnring/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "bnring/acceptance.hpp"
#include "bnring/betti.hpp"
#include "bnring/io.hpp"
#include "bnring/kring.hpp"
#include "bnring/lr.hpp"
#include "bnring/repring.hpp"

namespace bnring {

namespace {

using io::Json;

struct Options {
    int genus = 0;
    bool hyperelliptic = false;
    bool json = false;
    int bound = kOracleDefaultBound;

    std::string a, b, c;       // partition arguments
    bool has_c = false;
    std::string locus;
    int param = 0;
    bool oracle = false;
    bool quick = false;
    bool full = false;
    std::vector<std::string> only;
};

CurveContext context(const Options& o)
{
    require(o.genus != 0, "this command needs --genus");
    return CurveContext(o.genus, o.hyperelliptic);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_lr(const Options& o, std::ostream& out)
{
    const Partition alpha = Partition::parse(o.a);
    const Partition beta = Partition::parse(o.b);
    if (o.has_c) {
        const Partition gamma = Partition::parse(o.c);
        const Integer m = o.oracle ? lr_oracle(alpha, beta, gamma, o.bound)
                                   : lr_coefficient(alpha, beta, gamma);
        if (o.json)
            print_json(out, {{"alpha", io::to_json(alpha)},
                             {"beta", io::to_json(beta)},
                             {"gamma", io::to_json(gamma)},
                             {"coefficient", m.get_str()}});
        else
            out << m << '\n';
        return kExitOk;
    }
    const auto expansion = lr_expand_product(alpha, beta);
    if (o.oracle)
        for (const auto& [gamma, m] : expansion)
            ensure(lr_oracle(alpha, beta, gamma, o.bound) == m,
                   "oracle disagrees at " + gamma.to_string());
    if (o.json) {
        Json terms = Json::array();
        for (const auto& [gamma, m] : expansion)
            terms.push_back({{"partition", io::to_json(gamma)}, {"mult", m.get_str()}});
        print_json(out, {{"alpha", io::to_json(alpha)}, {"beta", io::to_json(beta)}, {"expansion", terms}});
        return kExitOk;
    }
    std::string line;
    for (const auto& [gamma, m] : expansion) {
        if (!line.empty()) line += ' ';
        line += gamma.to_string() + ":" + m.get_str();
    }
    out << line << '\n';
    return kExitOk;
}

int cmd_conv(const Options& o, std::ostream& out)
{
    const CurveContext ctx = context(o);
    const KClass k = convolve(class_of(Partition::parse(o.a), ctx), class_of(Partition::parse(o.b), ctx));
    if (o.json)
        print_json(out, io::to_json(k));
    else
        out << (k.is_zero() ? "0" : k.to_string()) << '\n';
    return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out)
{
    const CurveContext ctx = context(o);
    const Partition alpha = Partition::parse(o.a);
    const LaurentPoly h = betti_polynomial(alpha, ctx);
    if (o.json)
        print_json(out, {{"partition", io::to_json(alpha)},
                         {"g", ctx.g},
                         {"hyperelliptic", ctx.hyperelliptic},
                         {"h", io::to_json(h)}});
    else
        out << h << '\n';
    return kExitOk;
}

int cmd_decomp(const Options& o, std::ostream& out)
{
    const BettiReport r = perverse_decomposition(Partition::parse(o.a), context(o));
    if (o.json) {
        print_json(out, io::to_json(r));
        return kExitOk;
    }
    out << "h = " << r.h << '\n'
        << "P = " << r.P << '\n'
        << "h_perverse = " << r.h_perverse << '\n'
        << "euler = " << r.euler << '\n';
    return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out)
{
    const CurveContext ctx = context(o);
    const Partition alpha = Partition::parse(o.a);
    const Partition d = dual_partition(alpha, ctx);
    if (o.json)
        print_json(out, {{"partition", io::to_json(alpha)}, {"g", ctx.g}, {"dual", io::to_json(d)}});
    else
        out << d << '\n';
    return kExitOk;
}

int cmd_euler(const Options& o, std::ostream& out)
{
    const CurveContext ctx = context(o);
    const Partition alpha = Partition::parse(o.a);
    const Integer e = euler_characteristic(alpha, ctx);
    if (o.json)
        print_json(out, {{"partition", io::to_json(alpha)}, {"g", ctx.g}, {"euler", e.get_str()}});
    else
        out << e << '\n';
    return kExitOk;
}

int cmd_ih(const Options& o, std::ostream& out)
{
    const CurveContext ctx = context(o);
    const Locus locus = parse_locus(o.locus);
    const LaurentPoly h = ih_betti(locus, o.param, ctx);
    if (o.json)
        print_json(out, {{"locus", to_string(locus)},
                         {"param", o.param},
                         {"g", ctx.g},
                         {"hyperelliptic", ctx.hyperelliptic},
                         {"h", io::to_json(h)}});
    else
        out << h << '\n';
    return kExitOk;
}

int cmd_rep_compare(const Options& o, std::ostream& out)
{
    const ComparisonReport r =
        compare_convolution_to_tensor(Partition::parse(o.a), Partition::parse(o.b), context(o));
    if (o.json) {
        print_json(out, io::to_json(r));
    } else {
        out << "convolution: " << r.left.to_string() << '\n'
            << "tensor:      " << r.right.to_string() << '\n'
            << "dimension:   " << r.left_dim << " / " << r.right_dim << '\n'
            << "equal:       " << (r.equal ? "yes" : "no") << '\n';
    }
    return r.equal ? kExitOk : kExitConsistency;
}

int cmd_selftest(const Options& o, std::ostream& out)
{
    const Budget budget = o.full ? Budget::Full : Budget::Quick;
    std::vector<std::string> ids = o.only.empty() ? criterion_ids() : o.only;
    bool all = true;
    Json results = Json::array();
    for (const std::string& id : ids) {
        const CriterionResult r = run_criterion(id, budget);
        all = all && r.passed;
        if (o.json)
            results.push_back({{"id", r.id}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
        else
            out << format_result(r, false) << '\n';
    }
    if (o.json) print_json(out, {{"budget", o.full ? "full" : "quick"}, {"results", results}});
    return all ? kExitOk : kExitConsistency;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Convolution rings of Brill-Noether sheaves: exact combinatorics"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("-g,--genus", o.genus, "genus of the curve (>= 2)");
    app.add_flag("--hyperelliptic", o.hyperelliptic, "treat the curve as hyperelliptic");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--bound", o.bound, "degree bound of the brute-force oracles")->check(CLI::PositiveNumber);

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or full product");
    lr->add_option("alpha", o.a)->required();
    lr->add_option("beta", o.b)->required();
    auto* gamma_opt = lr->add_option("gamma", o.c);
    lr->add_flag("--oracle", o.oracle, "use or cross-check with the brute-force oracle");

    auto* conv = app.add_subcommand("conv", "convolution product in the Grothendieck ring");
    conv->add_option("alpha", o.a)->required();
    conv->add_option("beta", o.b)->required();

    auto* betti = app.add_subcommand("betti", "Betti polynomial h(delta_alpha)");
    betti->add_option("alpha", o.a)->required();

    auto* decomp = app.add_subcommand("decomp", "perverse decomposition h = h_perverse + P h_X");
    decomp->add_option("alpha", o.a)->required();

    auto* dual = app.add_subcommand("dual", "dual partition");
    dual->add_option("alpha", o.a)->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("alpha", o.a)->required();

    auto* ih = app.add_subcommand("ih", "intersection cohomology of W_d, Theta or W_r - W_r");
    ih->add_option("locus", o.locus)->required();
    ih->add_option("param", o.param, "d for W_d, r for W_r - W_r");

    auto* cmp = app.add_subcommand("rep-compare", "convolution versus tensor product");
    cmp->add_option("alpha", o.a)->required();
    cmp->add_option("beta", o.b)->required();

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    auto* quick = self->add_flag("--quick", o.quick, "reduced ranges (default)");
    self->add_flag("--full", o.full, "full acceptance ranges")->excludes(quick);
    self->add_option("--only", o.only, "criterion ids, e.g. A3");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        o.has_c = gamma_opt->count() > 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (lr->parsed()) return cmd_lr(o, out);
        if (conv->parsed()) return cmd_conv(o, out);
        if (betti->parsed()) return cmd_betti(o, out);
        if (decomp->parsed()) return cmd_decomp(o, out);
        if (dual->parsed()) return cmd_dual(o, out);
        if (euler->parsed()) return cmd_euler(o, out);
        if (ih->parsed()) return cmd_ih(o, out);
        if (cmp->parsed()) return cmd_rep_compare(o, out);
        if (self->parsed()) return cmd_selftest(o, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConsistency;
    }
    return kExitUsage;
}

} // namespace bnring
