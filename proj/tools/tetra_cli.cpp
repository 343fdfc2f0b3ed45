// tetra: command-line front end for tetrahedral curves.
//
// Exit codes: 0 success, 1 verification mismatch or domain error, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tetra/betti.hpp"
#include "tetra/classify.hpp"
#include "tetra/gin.hpp"
#include "tetra/groebner.hpp"
#include "tetra/ideal.hpp"
#include "tetra/resolution.hpp"
#include "tetra/tuple.hpp"
#include "tetra/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tetra;

constexpr const char* kVersion = "1.0.0";

struct Options {
    std::string verb;
    std::string format = "text";
    bool timing = false;
    std::string tuple_text;
    TetTuple tuple;
    bool trace = false;
    bool oracle_check = false;
    int upto = 0;
    std::string suite;
    int bound = 5;
    std::uint64_t seed = 1;
    std::uint32_t prime = kDefaultPrime;
};

struct Outcome {
    json result = json::object();
    json input = json::object();
    json provenance = json::object();
    int exit_code = 0;
};

// ---------------------------------------------------------------------------
// JSON builders

json tuple_json(const TetTuple& t) { return json(t.entries()); }

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json betti_json(const BettiTable& b) {
    json entries = json::array();
    for (const auto& [k, v] : b.entries()) entries.push_back({k.first, k.second, v});
    return json{{"entries", entries}};
}

json ideal_json(const std::vector<Monomial>& gens) {
    json out = json::array();
    for (const auto& g : gens) out.push_back(to_string(g));
    return out;
}

json stable_json(const StableIdeal& s) { return ideal_json(s.lex_generators()); }

std::string kind_name(TerminalKind k) {
    switch (k) {
    case TerminalKind::Trivial: return "trivial";
    case TerminalKind::MinimalCurve: return "minimal-curve";
    case TerminalKind::CIPower: return "ci-power";
    }
    return "";
}

std::vector<std::uint64_t> seeds_of(const Options& o) { return {o.seed, o.seed + 1}; }

std::vector<std::uint32_t> primes_of(const Options& o) {
    return {o.prime, o.prime == kSecondPrime ? kDefaultPrime : kSecondPrime};
}

// ---------------------------------------------------------------------------
// Verbs

Outcome run_classify(const Options& o) {
    Outcome out;
    const auto r = classify(o.tuple);
    const auto fam = acm_linear_family(o.tuple);
    out.result = {
        {"trivial", r.trivial},
        {"acm", r.acm},
        {"minimal", r.minimal},
        {"buchsbaum_minimal_r", optional_json(r.buchsbaum_minimal_r)},
        {"schwartau", r.schwartau},
        {"componentwise_linear", r.componentwise_linear},
        {"linear_resolution", r.linear_resolution},
        {"ci_power_r", optional_json(r.ci_power_r)},
        {"degree", r.degree},
        {"regularity", optional_json(r.regularity)},
        {"acm_linear_family", fam ? json(std::string(1, *fam)) : json(nullptr)},
        {"canonical", tuple_json(canonicalize(o.tuple).tuple)},
    };
    return out;
}

Outcome run_reduce(const Options& o) {
    Outcome out;
    out.input["trace"] = o.trace;
    const auto tr = reduction_trace(o.tuple);
    out.result["terminal"] = tuple_json(tr.terminal);
    out.result["terminal_kind"] = kind_name(tr.terminal_kind);
    out.result["length"] = tr.steps.size();
    out.result["first_ci_power"] = tr.first_ci_power ? json(*tr.first_ci_power) : json(nullptr);
    if (o.trace) {
        json steps = json::array();
        for (const auto& s : tr.steps) {
            steps.push_back({{"type", std::string(1, to_char(s.type))},
                             {"parent", tuple_json(s.parent)},
                             {"child", tuple_json(s.child)},
                             {"facet_weights", json(facet_weights(s.parent))},
                             {"G", std::string(1, static_cast<char>('a' + s.G))},
                             {"F", to_string(s.F)},
                             {"f_degree", s.f_degree()}});
        }
        out.result["steps"] = steps;
    }
    return out;
}

Outcome run_betti(const Options& o) {
    Outcome out;
    out.input["oracle_check"] = o.oracle_check;
    const auto rec = resolution_recipe(o.tuple);
    const auto b = rec.assemble();
    json steps = json::array();
    for (const auto& s : rec.steps) steps.push_back({{"f_degree", s.f_degree}, {"shift", s.shift_applied}});
    out.result["betti"] = betti_json(b);
    out.result["base"] = kind_name(rec.base_kind);
    out.result["ci_r"] = rec.base_kind == TerminalKind::CIPower ? json(rec.ci_r) : json(nullptr);
    out.result["steps"] = steps;
    out.result["projective_dimension"] = b.projective_dimension();
    out.result["regularity"] = b.regularity();
    out.result["linear"] = b.is_linear();
    if (o.oracle_check) {
        const auto oracle = betti_table_oracle(ideal_of_tuple(o.tuple));
        out.result["oracle"] = betti_json(oracle);
        out.result["oracle_agrees"] = oracle == b;
        if (oracle != b) out.exit_code = 1;
    }
    return out;
}

Outcome run_gin(const Options& o) {
    Outcome out;
    out.input["oracle_check"] = o.oracle_check;
    const auto g = gin_of_curve(o.tuple);
    out.result["supported"] = g.has_value();
    out.result["gin"] = g ? stable_json(*g) : json(nullptr);
    out.result["betti"] = g ? betti_json(ek_betti(*g)) : json(nullptr);
    out.result["prediction"] = betti_json(gin_betti_prediction(o.tuple));
    if (o.oracle_check) {
        const auto seeds = seeds_of(o);
        const auto primes = primes_of(o);
        const auto oracle = gin_oracle(ideal_of_tuple(o.tuple), {seeds[0], seeds[1]}, {primes[0], primes[1]});
        out.result["oracle"] = stable_json(oracle);
        out.result["oracle_agrees"] = g ? json(oracle == *g) : json(nullptr);
        if (g && !(oracle == *g)) out.exit_code = 1;
        out.provenance["seeds"] = seeds;
        out.provenance["primes"] = primes;
    }
    return out;
}

Outcome run_hilbert(const Options& o) {
    Outcome out;
    out.input["upto"] = o.upto;
    const auto h = hilbert_data(ideal_of_tuple(o.tuple), o.upto);
    out.result["values"] = h.values;
    out.result["first_difference"] = h.first_difference();
    out.result["h_vector"] = h.h_vector;
    out.result["degree"] = h.degree;
    return out;
}

Outcome run_enumerate(const Options& o) {
    Outcome out;
    json orbits = json::array();
    for (const auto& t : enumerate_linear_in_class(o.tuple)) orbits.push_back(tuple_json(t));
    out.result["count"] = orbits.size();
    out.result["orbits"] = orbits;
    return out;
}

Outcome run_verify(const Options& o) {
    Outcome out;
    out.input = {{"suite", o.suite}, {"bound", o.bound}, {"seed", o.seed}, {"prime", o.prime}};
    const std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    const VerifyOptions vo{o.bound, o.seed, o.prime};
    json suites = json::array();
    bool all = true;
    for (const auto& n : names) {
        const auto r = run_suite(n, vo);
        all = all && r.passed();
        suites.push_back({{"name", r.name},
                          {"bound", r.bound},
                          {"cases", r.cases},
                          {"mismatches", r.mismatches},
                          {"passed", r.passed()},
                          {"examples", r.examples}});
    }
    out.result["suites"] = suites;
    out.result["passed"] = all;
    out.provenance["bound"] = o.bound;
    out.provenance["seeds"] = seeds_of(o);
    out.provenance["primes"] = primes_of(o);
    if (!all) out.exit_code = 1;
    return out;
}

// ---------------------------------------------------------------------------
// Text rendering, derived from the JSON report

std::string tuple_text(const json& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i].get<int>());
    return s + ")";
}

std::string value_text(const json& v) {
    if (v.is_null()) return "none";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + value_text(x);
        return s;
    }
    return v.dump();
}

BettiTable betti_from_json(const json& j) {
    BettiTable b;
    for (const auto& e : j.at("entries")) b.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
    return b;
}

std::string resolution_line(const BettiTable& b, const std::string& target) {
    std::ostringstream os;
    os << "0";
    for (int i = b.projective_dimension(); i >= 0; --i) {
        std::vector<std::pair<int, long long>> mod;
        for (const auto& [k, v] : b.entries())
            if (k.first == i) mod.emplace_back(k.second, v);
        std::sort(mod.begin(), mod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        os << " → ";
        for (std::size_t m = 0; m < mod.size(); ++m) {
            if (m) os << " ⊕ ";
            os << "R(-" << mod[m].first << ")";
            if (mod[m].second != 1) os << "^" << mod[m].second;
        }
    }
    os << " → " << target << " → 0";
    return os.str();
}

std::string betti_grid(const BettiTable& b) {
    if (b.empty()) return "";
    const int pd = b.projective_dimension();
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [k, v] : b.entries()) {
        lo = std::min(lo, k.second - k.first);
        hi = std::max(hi, k.second - k.first);
    }
    std::vector<long long> total(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [k, v] : b.entries()) total[static_cast<std::size_t>(k.first)] += v;
    std::size_t w = 3;
    for (long long t : total) w = std::max(w, std::to_string(t).size() + 1);
    std::ostringstream os;
    os << std::setw(7) << "";
    for (int i = 0; i <= pd; ++i) os << std::setw(static_cast<int>(w)) << i;
    os << "\ntotal:";
    os << " ";
    for (long long t : total) os << std::setw(static_cast<int>(w)) << t;
    for (int r = lo; r <= hi; ++r) {
        os << "\n" << std::setw(5) << r << ": ";
        for (int i = 0; i <= pd; ++i) {
            const long long v = b.at(i, r + i);
            os << std::setw(static_cast<int>(w)) << (v ? std::to_string(v) : ".");
        }
    }
    return os.str();
}

void render_text(std::ostream& os, const std::string& verb, const json& report) {
    const json& r = report.at("result");
    const json& in = report.at("input");
    os << verb << " " << (in.contains("tuple") ? in["tuple"] : in["suite"]).get<std::string>() << "\n";
    if (r.contains("error")) {
        os << "error: " << r["error"]["kind"].get<std::string>() << ": " << r["error"]["message"].get<std::string>()
           << "\n";
        return;
    }
    if (verb == "classify") {
        for (const auto& [k, v] : r.items())
            os << "  " << k << ": " << (k == "canonical" ? tuple_text(v) : value_text(v)) << "\n";
    } else if (verb == "reduce") {
        if (r.contains("steps")) {
            for (const auto& s : r["steps"]) {
                os << "  " << tuple_text(s["parent"]) << " --" << s["type"].get<std::string>() << "--> "
                   << tuple_text(s["child"]) << "   G = " << s["G"].get<std::string>()
                   << ", F = " << s["F"].get<std::string>() << ", deg F = " << s["f_degree"].get<int>() << "\n";
            }
        }
        os << "  terminal: " << tuple_text(r["terminal"]) << " (" << r["terminal_kind"].get<std::string>() << ")\n";
        os << "  length: " << r["length"].get<std::size_t>() << "\n";
        os << "  first_ci_power: " << value_text(r["first_ci_power"]) << "\n";
    } else if (verb == "betti") {
        const auto b = betti_from_json(r["betti"]);
        os << "  " << resolution_line(b, "I") << "\n" << betti_grid(b) << "\n";
        os << "  base: " << r["base"].get<std::string>();
        if (!r["ci_r"].is_null()) os << " r=" << r["ci_r"].get<int>();
        os << "\n  projective_dimension: " << r["projective_dimension"].get<int>()
           << "\n  regularity: " << r["regularity"].get<int>() << "\n  linear: " << value_text(r["linear"]) << "\n";
        if (r.contains("oracle")) {
            const auto ob = betti_from_json(r["oracle"]);
            os << "  oracle: " << resolution_line(ob, "I") << "\n  oracle_agrees: " << value_text(r["oracle_agrees"])
               << "\n";
        }
    } else if (verb == "gin") {
        auto gens = [](const json& g) {
            std::string s = "(";
            for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].get<std::string>();
            return s + ")";
        };
        os << "  supported: " << value_text(r["supported"]) << "\n";
        if (!r["gin"].is_null()) {
            os << "  gin: " << gens(r["gin"]) << "\n";
            const auto b = betti_from_json(r["betti"]);
            os << "  " << resolution_line(b, "gin") << "\n" << betti_grid(b) << "\n";
        }
        os << "  prediction: " << resolution_line(betti_from_json(r["prediction"]), "gin") << "\n";
        if (r.contains("oracle"))
            os << "  oracle: " << gens(r["oracle"]) << "\n  oracle_agrees: " << value_text(r["oracle_agrees"]) << "\n";
    } else if (verb == "hilbert") {
        for (const char* k : {"values", "first_difference", "h_vector", "degree"})
            os << "  " << k << ": " << value_text(r[k]) << "\n";
    } else if (verb == "enumerate-linear") {
        os << "  count: " << r["count"].get<std::size_t>() << "\n";
        for (const auto& t : r["orbits"]) os << "  " << tuple_text(t) << "\n";
    } else if (verb == "verify") {
        for (const auto& s : r["suites"]) {
            os << "  " << std::left << std::setw(18) << s["name"].get<std::string>() << std::right
               << (s["passed"].get<bool>() ? "PASS" : "FAIL") << "  bound " << s["bound"].get<int>() << ", "
               << s["cases"].get<long long>() << " cases, " << s["mismatches"].get<long long>() << " mismatches\n";
            for (const auto& e : s["examples"]) os << "      " << e.get<std::string>() << "\n";
        }
        os << "  passed: " << value_text(r["passed"]) << "\n";
    }
    const json& p = report.at("provenance");
    if (p.contains("elapsed_ms")) os << "  elapsed_ms: " << p["elapsed_ms"].dump() << "\n";
}

// ---------------------------------------------------------------------------

std::string message_of(const Error& e) {
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    std::string m = e.what();
    return m.rfind(prefix, 0) == 0 ? m.substr(prefix.size()) : m;
}

Outcome dispatch(const Options& o) {
    if (o.verb == "classify") return run_classify(o);
    if (o.verb == "reduce") return run_reduce(o);
    if (o.verb == "betti") return run_betti(o);
    if (o.verb == "gin") return run_gin(o);
    if (o.verb == "hilbert") return run_hilbert(o);
    if (o.verb == "enumerate-linear") return run_enumerate(o);
    return run_verify(o);
}

int execute(const Options& o) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = dispatch(o);
    } catch (const Error& e) {
        out.result = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", message_of(e)}}}};
        out.exit_code = 1;
    }
    json input = json::object();
    if (o.verb != "verify") input["tuple"] = to_string(o.tuple);
    for (const auto& [k, v] : out.input.items()) input[k] = v;

    json provenance = {{"tool", "tetra"}, {"version", kVersion}};
    for (const auto& [k, v] : out.provenance.items()) provenance[k] = v;
    if (o.timing) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        provenance["elapsed_ms"] = std::round(ms * 1000.0) / 1000.0;
    }
    const json report = {{"command", o.verb}, {"input", input}, {"result", out.result}, {"provenance", provenance}};
    if (o.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        render_text(std::cout, o.verb, report);
    return out.exit_code;
}

struct TupleValidator : CLI::Validator {
    TupleValidator() {
        name_ = "TUPLE";
        func_ = [](const std::string& s) -> std::string {
            try {
                (void)parse_tuple(s);
                return {};
            } catch (const Error& e) {
                return e.what();
            }
        };
    }
};

struct PrimeValidator : CLI::Validator {
    PrimeValidator() {
        name_ = "PRIME";
        func_ = [](const std::string& s) -> std::string {
            try {
                const unsigned long v = std::stoul(s);
                if (v >= (1ul << 31)) return "prime must be below 2^31";
                (void)PrimeField(static_cast<std::uint32_t>(v));
                return {};
            } catch (const Error& e) {
                return e.what();
            } catch (const std::exception&) {
                return "not a number: " + s;
            }
        };
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tetrahedral curves: reduction, classification, Betti tables, regularity and gins"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", o.timing, "Report elapsed time in the provenance block");

    const TupleValidator tuple_check;
    auto add_tuple = [&](CLI::App* sub) {
        sub->add_option("tuple", o.tuple_text, "Six comma-separated edge weights a1,...,a6")
            ->required()
            ->check(tuple_check);
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classification flags, degree and regularity");
    add_tuple(classify_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Maximal-weight reduction to the terminal curve");
    add_tuple(reduce_cmd);
    reduce_cmd->add_flag("--trace", o.trace, "Print every step");

    auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of the ideal");
    add_tuple(betti_cmd);
    betti_cmd->add_flag("--oracle-check", o.oracle_check, "Compare against the Koszul-homology oracle");

    const PrimeValidator prime_check;
    auto* gin_cmd = app.add_subcommand("gin", "Reverse-lexicographic generic initial ideal");
    add_tuple(gin_cmd);
    gin_cmd->add_flag("--oracle-check", o.oracle_check, "Compare against the Groebner oracle");
    gin_cmd->add_option("--seed", o.seed, "Seed of the first coordinate change (the second uses seed+1)");
    gin_cmd->add_option("--prime", o.prime, "First prime (the second is 65521, or 32003 if equal)")->check(prime_check);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function, h-vector and degree");
    add_tuple(hilbert_cmd);
    hilbert_cmd->add_option("--upto", o.upto, "Last degree computed")->required()->check(CLI::NonNegativeNumber);

    auto* enum_cmd = app.add_subcommand("enumerate-linear", "Linear curves in the class of a minimal curve");
    add_tuple(enum_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify_cmd->add_option("--suite", o.suite, "Suite name or all")->required()->check(CLI::IsMember(allowed));
    verify_cmd->add_option("--bound", o.bound, "Bound on the entry sum")->check(CLI::Range(0, 12));
    verify_cmd->add_option("--seed", o.seed, "Seed for random sampling and coordinate changes");
    verify_cmd->add_option("--prime", o.prime, "First prime for the Groebner oracle")->check(prime_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "tetra: error: " << msg << "\n";
        return 2;
    }

    o.verb = app.get_subcommands().front()->get_name();
    if (!o.tuple_text.empty()) o.tuple = parse_tuple(o.tuple_text);
    return execute(o);
}
