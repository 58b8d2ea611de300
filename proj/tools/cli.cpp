#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "mel/equilibrium.hpp"
#include "mel/error.hpp"
#include "mel/fom.hpp"
#include "mel/parser.hpp"
#include "mel/printer.hpp"
#include "mel/rewrite.hpp"
#include "mel/semantics.hpp"
#include "mel/trace_io.hpp"

namespace mel::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

// Parse and validation failures end up here and map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Theory load_theory(const std::string& path) {
    try {
        return parse_theory(read_file(path), path);
    } catch (const SyntaxError& e) {
        throw InputError(path + ":" + e.what());
    }
}

Formula load_formula(const std::string& text) {
    try {
        return parse_formula(text);
    } catch (const SyntaxError& e) {
        throw InputError(std::string("formula: ") + e.what());
    }
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct BoundsFlags {
    std::size_t max_len = 3;
    std::size_t min_len = 1;
    Time max_time = 3;
    bool exact_len = false;
    bool non_strict = false;
    std::string alphabet;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-len", max_len, "Longest trace length")->capture_default_str();
        cmd->add_option("--min-len", min_len, "Shortest trace length")->capture_default_str();
        cmd->add_option("--max-time", max_time, "Largest time stamp")->capture_default_str();
        cmd->add_flag("--exact-len", exact_len, "Only traces of length --max-len");
        cmd->add_flag("--non-strict", non_strict, "Allow repeated time stamps");
        cmd->add_option("--alphabet", alphabet, "Extra atoms, comma separated");
    }

    EnumerationBounds make(std::vector<std::string> atoms) const {
        for (auto& a : split_names(alphabet)) atoms.push_back(std::move(a));
        EnumerationBounds b;
        b.alphabet = Alphabet(std::move(atoms));
        b.max_len = max_len;
        b.min_len = exact_len ? max_len : min_len;
        b.max_time = max_time;
        b.strict_only = !non_strict;
        b.validate();
        return b;
    }
};

void join_atoms(std::vector<std::string>& into, const std::vector<std::string>& more) {
    into.insert(into.end(), more.begin(), more.end());
}

int cmd_check(const std::string& theory_path, const std::string& trace_path, std::size_t at,
              std::ostream& out) {
    const Theory theory = load_theory(theory_path);
    const TimedHTTrace trace = trace_from_json(read_file(trace_path));
    if (at >= trace.length())
        throw InputError("--at " + std::to_string(at) + " is outside a trace of length " +
                         std::to_string(trace.length()));
    Evaluator ev(trace);
    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < theory.size(); ++i) {
        const bool ok = ev.sat(theory.formulas[i], at);
        out << "formula " << i + 1 << ": " << (ok ? "sat" : "unsat") << "  "
            << print_formula(theory.formulas[i]) << "\n";
        if (!ok) failed.push_back(i + 1);
    }
    if (failed.empty()) {
        out << "SAT\n";
        return kYes;
    }
    out << "UNSAT(formula ";
    for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? "," : "") << failed[i];
    out << ")\n";
    return kNo;
}

int cmd_models(const std::string& theory_path, const BoundsFlags& flags, bool equilibrium,
               bool no_axiom, std::ostream& out) {
    const Theory theory = load_theory(theory_path);
    const EnumerationBounds bounds = flags.make(atoms_of(theory));
    std::size_t count = 0;
    auto emit = [&](const TimedHTTrace& m) {
        out << trace_to_json(m) << "\n";
        ++count;
        return true;
    };
    if (equilibrium) {
        for_each_equilibrium(theory, bounds, emit, EquilibriumOptions{!no_axiom});
    } else {
        for_each_total_trace(bounds, [&](const TimedHTTrace& m) {
            return is_model(m, theory) ? emit(m) : true;
        });
    }
    out << count << (count == 1 ? " model" : " models") << "\n";
    return kYes;
}

int cmd_equiv(const std::string& left_path, const std::string& right_path, const BoundsFlags& flags,
              std::ostream& out) {
    const Theory left = load_theory(left_path);
    const Theory right = load_theory(right_path);
    std::vector<std::string> atoms = atoms_of(left);
    join_atoms(atoms, atoms_of(right));
    const EquivVerdict v = bounded_equiv(left, right, flags.make(std::move(atoms)));
    if (v.equivalent) {
        out << "EQUIVALENT (within bounds)\n";
        return kYes;
    }
    const Counterexample& c = *v.counterexample;
    const Theory& t = c.side == 1 ? left : right;
    out << "NOT EQUIVALENT\n";
    out << trace_to_json(c.trace) << "\n";
    out << "rejected by " << (c.side == 1 ? "left" : "right") << " formula " << c.formula_index + 1
        << ": " << print_formula(t.formulas[c.formula_index]) << "\n";
    return kNo;
}

int cmd_rewrite(const std::string& text, const std::string& pass, bool non_strict, std::ostream& out,
                std::ostream& err) {
    const Formula f = load_formula(text);
    try {
        out << print_formula(apply_pass(pass, f, RewriteOptions{!non_strict})) << "\n";
        return kYes;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kNo;
    }
}

fom::Term parse_term(const std::string& at) {
    if (!at.empty() && std::all_of(at.begin(), at.end(), [](unsigned char c) { return std::isdigit(c); }))
        return fom::Term::at(std::stoull(at));
    if (at.empty() || !std::islower(static_cast<unsigned char>(at[0])))
        throw InputError("--at needs a natural number or a variable name");
    return fom::Term::variable(at);
}

int cmd_translate(const std::string& text, const std::string& at, bool raw, std::ostream& out,
                  std::ostream& err) {
    const Formula f = load_formula(text);
    const fom::Term x = parse_term(at);
    try {
        const fom::Sentence s = fom::translate(f, x);
        out << fom::print(raw ? s : fom::simplify(s)) << "\n";
        return kYes;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kNo;
    }
}

std::string atoms_json(const fom::AtomSetG& atoms) {
    std::string s = "[";
    bool first = true;
    for (const auto& a : atoms) {
        s += first ? "\"" : ",\"";
        s += a.str() + "\"";
        first = false;
    }
    return s + "]";
}

int cmd_qht(const std::string& sentence_path, const std::string& interp_path, bool equilibrium,
            std::ostream& out) {
    fom::Sentence s;
    try {
        s = fom::parse(read_file(sentence_path));
    } catch (const SyntaxError& e) {
        throw InputError(sentence_path + ":" + e.what());
    }
    if (const auto free = fom::free_variables(s); !free.empty())
        throw InputError("sentence has free variable '" + free.front() + "'");
    const fom::Interpretation m = fom::interpretation_from_json(read_file(interp_path));
    if (!equilibrium) {
        const bool ok = fom::sat(m, s);
        out << (ok ? "SAT" : "UNSAT") << "\n";
        return ok ? kYes : kNo;
    }
    const fom::EquilibriumResult r = fom::check_equilibrium(m.domain, m.there, s);
    if (r.equilibrium) {
        out << "EQ\n";
        return kYes;
    }
    out << "NON-EQ\n";
    if (r.witness) {
        out << "witness here: " << atoms_json(*r.witness) << "\n";
    } else {
        out << "the total interpretation does not satisfy the sentence\n";
    }
    return kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric equilibrium logic toolkit", "mel"};
    app.require_subcommand(1);

    std::string theory_path, trace_path, left_path, right_path, formula, pass, sentence_path,
        interp_path;
    std::string at_term = "0";
    std::size_t at = 0;
    bool equilibrium = false, no_axiom = false, raw = false, simplified = false, non_strict = false;
    BoundsFlags bounds;

    auto* check = app.add_subcommand("check", "Evaluate a theory on a trace");
    check->add_option("theory", theory_path, "Theory file")->required();
    check->add_option("trace", trace_path, "Trace JSON file")->required();
    check->add_option("--at", at, "State index")->capture_default_str();

    auto* models = app.add_subcommand("models", "List total models within bounds");
    models->add_option("theory", theory_path, "Theory file")->required();
    bounds.attach(models);
    models->add_flag("--equilibrium", equilibrium, "Only equilibrium models");
    models->add_flag("--no-strict-axiom", no_axiom, "Do not add the strictness axiom");

    auto* equiv = app.add_subcommand("equiv", "Compare the models of two theories within bounds");
    equiv->add_option("left", left_path, "Theory file")->required();
    equiv->add_option("right", right_path, "Theory file")->required();
    bounds.attach(equiv);

    auto* rewrite = app.add_subcommand("rewrite", "Apply a rewrite pass to a formula");
    rewrite->add_option("--formula", formula, "Formula text")->required();
    rewrite->add_option("--pass", pass, "unf, unary, demorgan, dual, swap, onestep or split:<i>")
        ->required();
    rewrite->add_flag("--non-strict", non_strict, "Do not assume strict traces");

    auto* translate = app.add_subcommand("translate", "Translate a formula into first-order form");
    translate->add_option("--formula", formula, "Formula text")->required();
    translate->add_option("--at", at_term, "Time point or variable")->capture_default_str();
    auto* raw_flag = translate->add_flag("--raw", raw, "Print the translation unsimplified");
    translate->add_flag("--simplified", simplified, "Print the simplified translation (default)")
        ->excludes(raw_flag);

    auto* qht = app.add_subcommand("qht", "Evaluate a first-order sentence on an interpretation");
    qht->add_option("--sentence-path", sentence_path, "Sentence file")->required();
    qht->add_option("--interp-path", interp_path, "Interpretation JSON file")->required();
    qht->add_flag("--equilibrium", equilibrium, "Check equilibrium instead");

    std::vector<const char*> argv{"mel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kUsage;
    }

    try {
        if (*check) return cmd_check(theory_path, trace_path, at, out);
        if (*models) return cmd_models(theory_path, bounds, equilibrium, no_axiom, out);
        if (*equiv) return cmd_equiv(left_path, right_path, bounds, out);
        if (*rewrite) return cmd_rewrite(formula, pass, non_strict, out, err);
        if (*translate) return cmd_translate(formula, at_term, raw, out, err);
        if (*qht) return cmd_qht(sentence_path, interp_path, equilibrium, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace mel::cli
