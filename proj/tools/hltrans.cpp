/*
   Copyright 2026 The hltrans Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hltrans: transition matrices between symmetric and quasisymmetric bases.
//
//   hltrans matrix --from P --to G --n 4 [--format text|json|latex]
//   hltrans expand --function P --shape 3.2/1 --basis F [--format text|json]
//   hltrans verify --suite all --max-n 4
//   hltrans enumerate --objects syt --shape 3.2
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hltrans/io.hpp"
#include "hltrans/kernels.hpp"
#include "hltrans/verify.hpp"

namespace {

using namespace hltrans;
using hltrans::io::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("environment variable ") + name + " is not an integer");
    }
}

struct Caps {
    int max_n = 7;
    int max_n_tournament = 5;
};

SkewShape read_shape(const std::string& text) {
    try {
        io::ParsedShape p = io::parse_shape(text);
        if (p.shorthand)
            std::cerr << "warning: '" << text << "' read as single-digit parts " << p.shape.str() << '\n';
        return p.shape;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad shape: ") + e.what());
    }
}

Composition read_composition(const std::string& text) {
    try {
        io::ParsedParts p = io::parse_parts(text);
        Composition c(p.parts);
        if (p.shorthand) std::cerr << "warning: '" << text << "' read as single-digit parts " << c.str() << '\n';
        return c;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad composition: ") + e.what());
    }
}

Basis read_basis(const std::string& text) {
    try {
        return parse_basis(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// --- matrix ---------------------------------------------------------------

struct MatrixArgs {
    std::string from, to, format = "text";
    int n = 0;
    bool no_shortcut = false;
};

int run_matrix(const MatrixArgs& a, const Caps& caps) {
    const Basis from = read_basis(a.from), to = read_basis(a.to);
    if (!is_supported(from, to))
        throw UsageError("unsupported pair M(" + a.from + "," + a.to + ")");
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    const bool costly = (from == Basis::P && to == Basis::s) || (from == Basis::s && to == Basis::P);
    const int cap = costly ? caps.max_n_tournament : caps.max_n;
    if (a.n > cap) throw UsageError("n = " + std::to_string(a.n) + " exceeds the cap " + std::to_string(cap));
    BuildOptions opts;
    opts.corollary_cancel = !a.no_shortcut;
    opts.force_tournaments = costly && a.n > kMaxTournamentSize;
    const TransitionMatrix m = build(from, to, a.n, opts);
    if (a.format == "json")
        std::cout << io::to_json(m).dump() << '\n';
    else if (a.format == "latex")
        std::cout << io::to_latex(m);
    else
        std::cout << io::to_text(m);
    return kExitOk;
}

// --- expand ---------------------------------------------------------------

struct ExpandArgs {
    std::string function = "P", shape, basis = "F", format = "text";
};

int run_expand(const ExpandArgs& a, const Caps& caps) {
    const Basis which = read_basis(a.function), target = read_basis(a.basis);
    if (which != Basis::P && which != Basis::Q) throw UsageError("--function must be P or Q");
    if (target != Basis::F && target != Basis::M) throw UsageError("--basis must be F or M");
    const SkewShape shape = read_shape(a.shape);
    if (shape.size() > caps.max_n)
        throw UsageError("shape has " + std::to_string(shape.size()) + " cells, cap is " + std::to_string(caps.max_n));
    const QSymExpansion e = expand_skew(which, shape, target);
    if (a.format == "json")
        std::cout << io::to_json(e).dump() << '\n';
    else
        std::cout << io::to_text(e);
    return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 4;
};

int run_verify(const VerifyArgs& a, const Caps& caps) {
    if (a.max_n < 0 || a.max_n > caps.max_n)
        throw UsageError("--max-n must lie in [0, " + std::to_string(caps.max_n) + "]");
    const bool all = a.suite == "all";
    if (a.suite == "oracle" && a.max_n > kOracleMaxVariables)
        throw UsageError("the oracle suite accepts --max-n up to " + std::to_string(kOracleMaxVariables));
    verify::Report report;
    if (all || a.suite == "appendix") report.append(verify::appendix_suite());
    if (all || a.suite == "identities") {
        report.append(verify::identities_suite(a.max_n, std::min(a.max_n, caps.max_n_tournament)));
        report.append(verify::involution_suite(std::min(a.max_n + 1, caps.max_n)));
        report.append(verify::bijection_suite(std::min(a.max_n, 5), std::min(a.max_n, 3)));
    }
    if (all || a.suite == "oracle") report.append(verify::oracle_suite(std::min(a.max_n, kOracleMaxVariables)));
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << '\n';
    }
    std::cout << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
    return report.ok() ? kExitOk : kExitFailed;
}

// --- enumerate ------------------------------------------------------------

struct EnumerateArgs {
    std::string objects, shape, content, variant = "P";
    int max_entry = 0;
};

json weighted_cells_json(const std::vector<WeightedCell>& cells) {
    json a = json::array();
    for (const auto& wc : cells) a.push_back(json::array({wc.cell.row, wc.cell.col, wc.weight}));
    return a;
}

bool is_partition_content(const std::vector<int>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] > c[i - 1]) return false;
    return true;
}

int run_enumerate(const EnumerateArgs& a, const Caps& caps) {
    const std::string& kind = a.objects;
    if (kind == "ssct" || kind == "sct") {
        const Composition shape = read_composition(a.shape);
        if (shape.size() > caps.max_n) throw UsageError("shape exceeds the cap");
        Composition content = kind == "sct" ? Composition(std::vector<int>(static_cast<std::size_t>(shape.size()), 1))
                                            : (a.content.empty() ? throw UsageError("ssct needs --content")
                                                                 : read_composition(a.content));
        if (content.size() != shape.size()) throw UsageError("shape and content sizes differ");
        for_each_ssct(shape, content, [&](const CompositionTableau& t) {
            json j = io::to_json(t);
            const AscentData asc = ssct_asc(t);
            j["asc"] = asc.set;
            j["sumasc"] = asc.sum;
            if (kind == "sct") j["descent_composition"] = sct_descent_composition(t).parts();
            std::cout << j.dump() << '\n';
        });
        return kExitOk;
    }

    const SkewShape shape = read_shape(a.shape);
    if (shape.size() > caps.max_n) throw UsageError("shape exceeds the cap");
    if (kind == "syt") {
        for_each_syt(shape, [&](const Tableau& s) {
            json j = io::to_json(s);
            j["des"] = des_set(s);
            j["spec"] = weighted_cells_json(special_cells(s));
            j["espec"] = io::cells_json(espec_cells(s));
            std::cout << j.dump() << '\n';
        });
    } else if (kind == "ssyt") {
        std::optional<Composition> content;
        if (!a.content.empty()) content = read_composition(a.content);
        const int top = content ? content->length() : a.max_entry;
        if (top <= 0) throw UsageError("ssyt needs --content or --max-entry");
        if (top > caps.max_n) throw UsageError("--max-entry exceeds the cap");
        for_each_ssyt(shape, top, content, [&](const Tableau& t) {
            json j = io::to_json(t);
            const auto c = t.content();
            j["content"] = c;
            j["psi"] = io::to_json(psi_poly(t));
            j["phi"] = io::to_json(phi_poly(t));
            if (shape.is_straight() && is_partition_content(c) &&
                std::find(c.begin(), c.end(), 0) == c.end())
                j["charge"] = charge_tableau(t);
            std::cout << j.dump() << '\n';
        });
    } else if (kind == "starred") {
        const Basis v = read_basis(a.variant);
        if (v != Basis::P && v != Basis::Q) throw UsageError("--variant must be P or Q");
        for_each_starred_syt(shape, v == Basis::P ? Variant::P : Variant::Q, [&](const StarredTableau& s) {
            json j = io::to_json(s.base());
            j["stars"] = io::cells_json(s.stars());
            j["sign"] = s.sign();
            j["tstat"] = s.tstat();
            j["asc"] = ascent_set(s);
            std::cout << j.dump() << '\n';
        });
    } else {
        throw UsageError("unknown --objects '" + kind + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transition matrices between symmetric and quasisymmetric function bases"};
    app.require_subcommand(1);

    Caps caps;
    std::optional<int> cap_flag, tcap_flag;
    app.fallthrough();
    app.add_option("--cap", cap_flag, "largest degree to compute (env HLTRANS_MAX_N, default 7)");
    app.add_option("--tournament-cap", tcap_flag,
                   "largest degree for M(P,s) and M(s,P) (env HLTRANS_MAX_N_TOURNAMENT, default 5)");

    MatrixArgs margs;
    auto* matrix = app.add_subcommand("matrix", "print a transition matrix");
    matrix->add_option("--from", margs.from, "row basis: m s P Q M F G S K")->required();
    matrix->add_option("--to", margs.to, "column basis")->required();
    matrix->add_option("--n", margs.n, "degree")->required();
    matrix->add_option("--format", margs.format)->check(CLI::IsMember({"text", "json", "latex"}));
    matrix->add_flag("--no-shortcut", margs.no_shortcut, "M(P,G): keep tableaux whose contribution cancels");

    ExpandArgs eargs;
    auto* expand = app.add_subcommand("expand", "expand a skew Hall-Littlewood function");
    expand->add_option("--function", eargs.function)->check(CLI::IsMember({"P", "Q"}));
    expand->add_option("--shape", eargs.shape, "outer/inner, e.g. 3.2/1")->required();
    expand->add_option("--basis", eargs.basis)->check(CLI::IsMember({"F", "M"}));
    expand->add_option("--format", eargs.format)->check(CLI::IsMember({"text", "json"}));

    VerifyArgs vargs;
    auto* verify_cmd = app.add_subcommand("verify", "run self-checks");
    verify_cmd->add_option("--suite", vargs.suite)->check(CLI::IsMember({"appendix", "identities", "oracle", "all"}));
    verify_cmd->add_option("--max-n", vargs.max_n);

    EnumerateArgs nargs;
    auto* enumerate = app.add_subcommand("enumerate", "list tableaux with their statistics as JSON lines");
    enumerate->add_option("--objects", nargs.objects)
        ->required()
        ->check(CLI::IsMember({"syt", "ssyt", "ssct", "sct", "starred"}));
    enumerate->add_option("--shape", nargs.shape)->required();
    enumerate->add_option("--content", nargs.content);
    enumerate->add_option("--max-entry", nargs.max_entry);
    enumerate->add_option("--variant", nargs.variant)->check(CLI::IsMember({"P", "Q"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        caps.max_n = cap_flag.value_or(env_int("HLTRANS_MAX_N", caps.max_n));
        caps.max_n_tournament = tcap_flag.value_or(env_int("HLTRANS_MAX_N_TOURNAMENT", caps.max_n_tournament));
        if (*matrix) return run_matrix(margs, caps);
        if (*expand) return run_expand(eargs, caps);
        if (*verify_cmd) return run_verify(vargs, caps);
        if (*enumerate) return run_enumerate(nargs, caps);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
