// skewcomm: command-line front end for decomposing skew Laurent series into
// two commutators, checking certificates and evaluating series arithmetic.

#include "skewcomm/decompose.hpp"
#include "skewcomm/text.hpp"
#include "skewcomm/trace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace skewcomm;
using nlohmann::ordered_json;

int exit_code(Errc code) {
    switch (code) {
        case Errc::UnsupportedOrder:
        case Errc::IdentityAutomorphism: return 3;
        case Errc::SyntaxError:
        case Errc::InvalidField:
        case Errc::ExponentBeyondPrecision:
        case Errc::ZeroNotInvertible:
        case Errc::FieldMismatch: return 2;
        default: return 1;
    }
}

struct FieldArgs {
    std::string field;
    std::string sigma;
    int prec = 32;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--field", args.field, "gf(p^m)[;poly=c0,...,cm] or qt")->required();
    cmd->add_option("--sigma", args.sigma, "frob, frob^e, shift or scale:q")->required();
    cmd->add_option("--prec", args.prec, "relative precision when the series has no O(x^N) term")
        ->capture_default_str();
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int run_decompose(const FieldArgs& args, const std::string& expr) {
    const auto field = make_field(args.field, args.sigma);
    const auto f = parse_series(expr, field, args.prec);
    print(certificate_to_json(decompose(f)));
    return 0;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::SyntaxError, "cannot read " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::SyntaxError, e.what());
    }
    const auto cert = certificate_from_json(j);
    const bool ok = verify_certificate(cert);
    ordered_json out;
    out["valid"] = ok;
    out["method"] = std::string(method_name(cert.method));
    out["prec"] = cert.check_prec;
    print(out);
    if (!ok) std::cerr << "skewcomm: certificate does not multiply back to its input\n";
    return ok ? 0 : 1;
}

int run_trace(const FieldArgs& args, const std::string& expr) {
    const auto field = make_field(args.field, args.sigma);
    const auto f = parse_series(expr, field, args.prec);
    const auto trd = reduced_trace(f);
    ordered_json out;
    out["n"] = trd.period();
    out["trd"] = format_kseries(trd);
    print(out);
    return 0;
}

int run_eval(const FieldArgs& args, const std::string& op, const std::vector<std::string>& exprs) {
    const auto field = make_field(args.field, args.sigma);
    const std::size_t arity = op == "inv" ? 1 : 2;
    if (exprs.size() != arity)
        throw Error(Errc::SyntaxError, "--op " + op + " takes " + std::to_string(arity) + " series");
    const auto f = parse_series(exprs[0], field, args.prec);
    SkewSeries result = f;
    if (op == "inv") {
        result = inverse(f);
    } else {
        const auto g = parse_series(exprs[1], field, args.prec);
        if (op == "add") result = f + g;
        else if (op == "sub") result = f - g;
        else if (op == "mul") result = f * g;
        else result = commutator(f, g);
    }
    ordered_json out;
    out["result"] = format_series(result);
    print(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in k((sigma; x)) and two-commutator decompositions"};
    app.require_subcommand(1);

    FieldArgs dargs;
    std::string dexpr;
    auto* dec = app.add_subcommand("decompose", "write a series as [p1,q1][p2,q2] and print the certificate");
    add_field_options(dec, dargs);
    dec->add_option("series", dexpr)->required();

    std::string path;
    auto* ver = app.add_subcommand("verify", "re-multiply a certificate file");
    ver->add_option("certificate", path)->required();

    FieldArgs targs;
    std::string texpr;
    auto* tr = app.add_subcommand("trace", "reduced trace over k((x^n))");
    add_field_options(tr, targs);
    tr->add_option("series", texpr)->required();

    FieldArgs eargs;
    std::string op;
    std::vector<std::string> eexprs;
    auto* ev = app.add_subcommand("eval", "series arithmetic");
    add_field_options(ev, eargs);
    ev->add_option("--op", op)->required()->check(CLI::IsMember({"add", "sub", "mul", "inv", "comm"}));
    ev->add_option("series", eexprs)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*dec) return run_decompose(dargs, dexpr);
        if (*ver) return run_verify(path);
        if (*tr) return run_trace(targs, texpr);
        return run_eval(eargs, op, eexprs);
    } catch (const Error& e) {
        std::cerr << "skewcomm: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "skewcomm: internal error: " << e.what() << '\n';
        return 1;
    }
}
