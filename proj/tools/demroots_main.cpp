#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "demroots/errors.hpp"
#include "demroots/io.hpp"
#include "demroots/verify.hpp"

namespace {

using namespace demroots;

InputDescription load_input(const std::string& path) {
    if (path == "-") return parse_input(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    return parse_input(in);
}

IntVec parse_cli_vector(const std::string& s) {
    std::istringstream is(s);
    IntVec v;
    std::string tok;
    while (is >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
    }
    if (v.empty()) throw ParseError("empty vector argument");
    return v;
}

void emit(const Report& rep, bool json) {
    if (json)
        std::cout << rep.json.dump(2) << '\n';
    else
        std::cout << rep.human;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact toolkit for Demazure roots, locally nilpotent derivations and root "
                 "subgroups of affine varieties with torus actions"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable JSON report");
    // let flags like --json written after the subcommand reach the parent
    app.fallthrough();

    std::string input_path;
    std::string box_arg;
    bool filter_dominant = false;

    auto* dual = app.add_subcommand("dual", "dual cone: rays and facet map (kind: cone)");
    dual->add_option("input", input_path, "input file, or - for stdin")->required();

    auto* roots = app.add_subcommand(
        "roots", "Demazure roots within a box, grouped by dual ray (kind: cone or toric-monoid)");
    roots->add_option("input", input_path, "input file, or - for stdin")->required();
    roots->add_option("--box", box_arg, "override the enumeration bound");
    roots->add_flag("--filter-dominant", filter_dominant,
                    "keep only weights pairing nonnegatively with every coroot of the input");

    auto* classify = app.add_subcommand(
        "classify", "root-subgroup classification (kind: rank-one or horospherical)");
    classify->add_option("input", input_path, "input file, or - for stdin")->required();
    classify->add_option("--box", box_arg, "override the enumeration bound");

    std::string root_arg, param_arg = "1";
    std::vector<std::string> term_args;
    auto* act = app.add_subcommand(
        "act", "apply a derivation and its exponential to an algebra element (kind: toric-monoid)");
    act->add_option("input", input_path, "input file, or - for stdin")->required();
    act->add_option("--root", root_arg, "Demazure root, e.g. \"-1 2\"")->required();
    act->add_option("--term", term_args,
                    "term 'coeff w1 w2 ...' of the algebra element; repeatable")
        ->required();
    act->add_option("--param", param_arg, "group parameter s (rational, default 1)");

    auto* verify = app.add_subcommand("verify", "run the built-in fixture suite");
    (void)verify;

    app.parse(argc, argv);

    if (app.got_subcommand("verify")) {
        VerifyResult r = run_builtin_fixture_suite();
        if (json)
            std::cout << verify_to_json(r).dump(2) << '\n';
        else
            std::cout << verify_to_text(r);
        return r.all_pass() ? 0 : 1;
    }

    std::optional<Int> box_override;
    if (!box_arg.empty()) {
        Int b(box_arg);
        if (b < 0 || b > 64) throw ParseError("box bound must be between 0 and 64");
        box_override = b;
    }

    if (app.got_subcommand("dual")) {
        emit(cmd_dual(load_input(input_path)), json);
    } else if (app.got_subcommand("roots")) {
        emit(cmd_roots(load_input(input_path), filter_dominant, box_override), json);
    } else if (app.got_subcommand("classify")) {
        emit(cmd_classify(load_input(input_path), box_override), json);
    } else if (app.got_subcommand("act")) {
        ActRequest req;
        req.root = parse_cli_vector(root_arg);
        for (const auto& t : term_args) {
            std::istringstream is(t);
            std::string coeff;
            if (!(is >> coeff)) throw ParseError("empty --term");
            IntVec w;
            std::string tok;
            while (is >> tok) w.emplace_back(Int(tok));
            req.element = ae_add(req.element, AlgebraElement::monomial(w, parse_rational(coeff)));
        }
        req.parameter = parse_rational(param_arg);
        emit(cmd_act(load_input(input_path), req), json);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        return CLI::App{}.exit(e);
    } catch (const demroots::TheoremPreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const demroots::BoxTooSmallError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const demroots::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const demroots::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
