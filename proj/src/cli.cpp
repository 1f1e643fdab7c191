#include "fuzzyq/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "fuzzyq/des.hpp"
#include "fuzzyq/document.hpp"
#include "fuzzyq/error.hpp"
#include "fuzzyq/oracle.hpp"
#include "fuzzyq/reduction.hpp"

namespace fuzzyq::cli {

namespace {

std::string shown(const Alphabet& alphabet, const Word& u) {
    return u.empty() ? "the empty word" : "\"" + format_word(alphabet, u) + "\"";
}

std::string joined(const std::vector<std::string>& items, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string trace(const std::vector<std::size_t>& sizes) {
    std::vector<std::string> parts;
    for (std::size_t s : sizes) parts.push_back(std::to_string(s));
    return joined(parts, " -> ");
}

FuzzyRecognizer require_recognizer(const AnyMachine& m, const std::string& path) {
    if (const auto* r = std::get_if<FuzzyRecognizer>(&m)) return *r;
    throw Error(ErrorKind::RecognizerRequired, "'" + path + "' has no sigma/tau");
}

void write_artifact(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Validation, "cannot write '" + path + "'");
    file << text;
}

struct Options {
    std::string input;
    std::string second;
    std::string output;
    std::string method;
    std::string schedule;
    std::string direction = "fwd";
    std::size_t max_iter = 256;
    std::size_t max_states = 4096;
    std::size_t max_depth = 64;
    std::size_t max_rounds = 16;
    std::size_t max_len = 6;
    std::size_t horizon = 16;
    bool json = false;
    bool generated = false;
};

FamilyLimits limits(const Options& o) { return {o.max_states, o.max_depth}; }

int cmd_info(const Options& o, std::ostream& out) {
    const AnyMachine m = load(o.input);
    const FuzzyAutomaton& a = std::visit([](const auto& x) -> const FuzzyAutomaton& { return transitions(x); }, m);
    out << "kind: " << (std::holds_alternative<FuzzyRecognizer>(m) ? "recognizer" : "automaton") << "\n";
    out << "lattice: " << a.lattice().name() << "\n";
    out << "states: " << a.size() << " (" << joined(a.states()) << ")\n";
    out << "alphabet: " << joined(a.alphabet()) << "\n";
    return ok;
}

template <Machine M>
int print_report(const ReductionReport<M>& report, const Options& o, std::ostream& out, std::ostream& err) {
    const bool settled = report.converged && !report.approximate;
    if (o.json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << "method: " << to_string(report.method) << "\n";
        if (settled) {
            out << "converged: yes (iterate " << report.iterates << ")\n";
            out << "quasi-order: " << report.quasi_order.to_string() << "\n";
        } else if (report.approximate) {
            out << "converged: no (state family truncated; relation over-approximates)\n";
            out << "quasi-order: " << report.quasi_order.to_string() << "\n";
        } else {
            out << "converged: no (stopped at iterate " << report.iterates << ")\n";
            out << "last iterate: " << report.quasi_order.to_string() << "\n";
            out << "iterate infimum: " << report.iterate_infimum.to_string() << "\n";
        }
        out << "state trace: " << trace(report.state_trace) << "\n";
    }
    if (!o.output.empty()) {
        if (settled) {
            write_artifact(o.output, serialize(report.quotient));
        } else {
            err << "quotient not written: the analysis is undetermined\n";
        }
    }
    return settled ? ok : undetermined;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    const auto method = parse_method(o.method);
    if (!method) throw CLI::ValidationError("--method", "unknown method '" + o.method + "'");
    InvariantOptions options;
    options.max_iter = o.max_iter;
    options.family = limits(o);
    const AnyMachine m = load(o.input);
    return std::visit([&](const auto& x) { return print_report(greatest_invariant(x, *method, options), o, out, err); },
                      m);
}

template <Machine M>
int print_alternate(const AlternateResult<M>& result, const Options& o, std::ostream& out) {
    out << "schedule: " << o.schedule << "\n";
    for (std::size_t i = 0; i < result.rounds.size(); ++i) {
        const auto& r = result.rounds[i];
        out << "round " << (i + 1) << ": " << to_string(r.method) << " " << trace(r.state_trace)
            << (r.converged ? "" : " (not converged)") << "\n";
    }
    out << "stop: " << to_string(result.stop) << "\n";
    out << "state trace: " << trace(result.state_trace) << "\n";
    out << "reduct: " << result.reduct.size() << " states\n";
    if (!o.output.empty()) write_artifact(o.output, serialize(result.reduct));
    return result.stop == StopRule::not_converged ? undetermined : ok;
}

int cmd_alternate(const Options& o, std::ostream& out) {
    const auto schedule = parse_schedule(o.schedule);
    if (!schedule) throw CLI::ValidationError("--schedule", "unknown schedule '" + o.schedule + "'");
    AlternateOptions options;
    options.max_rounds = o.max_rounds;
    options.max_iter = o.max_iter;
    options.family = limits(o);
    const AnyMachine m = load(o.input);
    return std::visit([&](const auto& x) { return print_alternate(alternate_reduce(x, *schedule, options), o, out); },
                      m);
}

int cmd_equiv(const Options& o, std::ostream& out) {
    const FuzzyRecognizer a = require_recognizer(load(o.input), o.input);
    const FuzzyRecognizer b = require_recognizer(load(o.second), o.second);
    const auto verdict =
        languages_equal_up_to(a, b, o.max_len, o.generated ? LanguageKind::generated : LanguageKind::recognized);
    if (verdict.equal()) {
        out << "equal up to " << o.max_len << "\n";
    } else {
        const auto& d = *verdict.first_divergence;
        out << "differ at " << shown(a.alphabet(), d.word) << ": " << d.left.to_string() << " vs " << d.right.to_string()
            << "\n";
    }
    return ok;
}

int cmd_determinize(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.direction != "fwd" && o.direction != "rev") {
        throw CLI::ValidationError("--direction", "expected fwd or rev");
    }
    const Direction direction = o.direction == "fwd" ? Direction::forward : Direction::reverse;
    const FuzzyRecognizer r = require_recognizer(load(o.input), o.input);
    const auto family = reachable_state_family(r, direction, limits(o));
    out << "direction: " << o.direction << "\n";
    out << "members: " << family.members.size() << (family.complete ? " (complete)" : " (truncated)") << "\n";
    for (const auto& m : family.members) {
        out << "  " << (m.word.empty() ? "e" : format_word(r.alphabet(), m.word)) << ": " << m.set.to_string() << "\n";
    }
    if (!family.complete) {
        if (!o.output.empty()) err << "determinized recognizer not written: the family did not close\n";
        return undetermined;
    }
    if (!o.output.empty()) write_artifact(o.output, serialize(determinize(r, direction, limits(o))));
    return ok;
}

int print_composition(const ComposedRecognizer& c, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << serialize(c.recognizer);
        return ok;
    }
    out << "states: " << c.recognizer.size() << "\n";
    out << "alphabet: " << joined(c.recognizer.alphabet()) << "\n";
    out << "shared: " << joined(c.shared) << "\n";
    out << "left only: " << joined(c.private_left) << "\n";
    out << "right only: " << joined(c.private_right) << "\n";
    write_artifact(o.output, serialize(c.recognizer));
    return ok;
}

int print_blocking(const BlockingResult& b, const Alphabet& alphabet, const Options& o, std::ostream& out) {
    switch (b.verdict) {
        case BlockingVerdict::nonblocking:
            out << "nonblocking\n";
            return ok;
        case BlockingVerdict::blocking:
            out << "blocking, witness " << shown(alphabet, *b.witness) << "\n";
            return ok;
        case BlockingVerdict::undetermined:
            out << "undetermined: no gap on words up to length " << o.horizon << "\n";
            return undetermined;
    }
    return undetermined;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"State reduction of fuzzy automata by fuzzy quasi-orders", "fuzzyq"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-states", o.max_states, "Cap on the size of a state family")->capture_default_str();
        sub->add_option("--max-depth", o.max_depth, "Cap on word length in a state family")->capture_default_str();
    };

    auto* info = app.add_subcommand("info", "Summarise an automaton document");
    info->add_option("--input,input", o.input, "Automaton document")->required();
    info->callback([&] { action = [&] { return cmd_info(o, out); }; });

    auto* reduce = app.add_subcommand("reduce", "Compute an invariant quasi-order and its quotient");
    reduce->add_option("--method", o.method, "ri|li|rie|lie|cri|cli|sri|sli|wri|wli|wrie|wlie")->required();
    reduce->add_option("--input,input", o.input, "Automaton document")->required();
    reduce->add_option("--max-iter", o.max_iter, "Iteration cap")->capture_default_str();
    add_limits(reduce);
    reduce->add_option("--output", o.output, "Where to write the quotient document");
    reduce->add_flag("--json", o.json, "Print the report as JSON");
    reduce->callback([&] { action = [&] { return cmd_reduce(o, out, err); }; });

    auto* alternate = app.add_subcommand("alternate", "Alternate right and left reductions");
    alternate->add_option("--schedule", o.schedule, "rl|lr|wrl|wlr")->required();
    alternate->add_option("--input,input", o.input, "Automaton document")->required();
    alternate->add_option("--max-rounds", o.max_rounds, "Round cap")->capture_default_str();
    alternate->add_option("--max-iter", o.max_iter, "Iteration cap per round")->capture_default_str();
    add_limits(alternate);
    alternate->add_option("--output", o.output, "Where to write the reduct document");
    alternate->callback([&] { action = [&] { return cmd_alternate(o, out); }; });

    auto* equiv = app.add_subcommand("equiv", "Compare two recognized languages on short words");
    equiv->add_option("a", o.input, "First recognizer")->required();
    equiv->add_option("b", o.second, "Second recognizer")->required();
    equiv->add_option("--max-len", o.max_len, "Longest word compared")->capture_default_str();
    equiv->add_flag("--generated", o.generated, "Compare generated languages instead");
    equiv->callback([&] { action = [&] { return cmd_equiv(o, out); }; });

    auto* det = app.add_subcommand("determinize", "Accessible fuzzy subset construction");
    det->add_option("--direction", o.direction, "fwd|rev")->capture_default_str();
    det->add_option("--input,input", o.input, "Recognizer document")->required();
    add_limits(det);
    det->add_option("--output", o.output, "Where to write the deterministic recognizer");
    det->callback([&] { action = [&] { return cmd_determinize(o, out, err); }; });

    auto* des = app.add_subcommand("des", "Discrete-event-system operations");
    des->require_subcommand(1);
    auto* parallel = des->add_subcommand("parallel", "Parallel composition");
    auto* product = des->add_subcommand("product", "Product over the shared letters");
    for (auto* sub : {parallel, product}) {
        sub->add_option("a", o.input, "Left recognizer")->required();
        sub->add_option("b", o.second, "Right recognizer")->required();
        sub->add_option("--output", o.output, "Where to write the composite recognizer");
    }
    parallel->callback([&] {
        action = [&] {
            return print_composition(parallel_compose(require_recognizer(load(o.input), o.input),
                                                      require_recognizer(load(o.second), o.second)),
                                     o, out);
        };
    });
    product->callback([&] {
        action = [&] {
            return print_composition(product_compose(require_recognizer(load(o.input), o.input),
                                                     require_recognizer(load(o.second), o.second)),
                                     o, out);
        };
    });
    auto* blocking = des->add_subcommand("blocking", "Decide whether a recognizer is blocking");
    blocking->add_option("a", o.input, "Recognizer")->required();
    auto* conflict = des->add_subcommand("conflict", "Decide whether two recognizers conflict");
    conflict->add_option("a", o.input, "Left recognizer")->required();
    conflict->add_option("b", o.second, "Right recognizer")->required();
    for (auto* sub : {blocking, conflict}) {
        sub->add_option("--horizon", o.horizon, "Word length scanned when the state family is infinite")
            ->capture_default_str();
        add_limits(sub);
    }
    blocking->callback([&] {
        action = [&] {
            const auto r = require_recognizer(load(o.input), o.input);
            return print_blocking(check_blocking(r, o.horizon, limits(o)), r.alphabet(), o, out);
        };
    });
    conflict->callback([&] {
        action = [&] {
            const auto composed = parallel_compose(require_recognizer(load(o.input), o.input),
                                                   require_recognizer(load(o.second), o.second));
            const auto& r = composed.recognizer;
            return print_blocking(check_blocking(r, o.horizon, limits(o)), r.alphabet(), o, out);
        };
    });

    std::vector<const char*> argv{"fuzzyq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return action();
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }
}

}  // namespace fuzzyq::cli
