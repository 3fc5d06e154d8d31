// Command line front end: semitoric <group> <command> [options]
#include "semitoric/classify.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/io.hpp"
#include "semitoric/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace semitoric;

namespace {

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kMismatch = 3 };

struct Outcome {
    std::string output;
    std::vector<std::string> trace;
    int exit = kOk;
};

struct Inputs {
    std::string file;
    std::string vectors;
    std::string word;
    std::string other;
    std::string seed;
    Int c = 0;
    bool c_given = false;
    std::size_t index = 0;
    bool exhaustive = false;
    bool trace = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError(ErrorKind::InvalidInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SemitoricHelix load_helix(const Inputs& in) {
    if (!in.vectors.empty()) {
        if (!in.c_given) throw DomainError(ErrorKind::InvalidInput, "-c is required with -v");
        return {in.c, parse_vectors(in.vectors)};
    }
    if (in.file.empty()) throw DomainError(ErrorKind::InvalidInput, "no helix given (file or -v)");
    return helix_from_json(read_input(in.file));
}

ToricFan load_fan(const Inputs& in) {
    if (!in.vectors.empty()) return {parse_vectors(in.vectors)};
    if (in.file.empty()) throw DomainError(ErrorKind::InvalidInput, "no fan given (file or -v)");
    return fan_from_json(read_input(in.file));
}

SemitoricPolygon load_polygon(const Inputs& in) {
    if (in.file.empty()) throw DomainError(ErrorKind::InvalidInput, "no polygon file given");
    return polygon_from_json(read_input(in.file));
}

Mat2 load_seed(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '('))
        return parse_matrix(text);
    return eval(parse_word(text));
}

Outcome suite_outcome(const SuiteResult& r) {
    Outcome o;
    std::ostringstream os;
    os << (r.ok ? "PASS" : "FAIL") << " " << r.summary << " in " << r.seconds << " s";
    o.output = os.str();
    o.trace = r.failures;
    o.exit = r.ok ? kOk : kMismatch;
    return o;
}

Outcome run(const std::string& group, const std::string& cmd, const Inputs& in,
            const std::map<std::string, std::string>& opt) {
    Outcome o;
    auto num = [&](const char* key, Int def) {
        auto it = opt.find(key);
        return it == opt.end() || it->second.empty() ? def : std::stoll(it->second);
    };
    if (group == "word") {
        Word w = parse_word(in.word);
        if (cmd == "eval") o.output = to_string(eval(w));
        else if (cmd == "winding") o.output = render_twelfths(winding_twelfths(w));
        else if (cmd == "reduce") {
            std::vector<RewriteStep> steps;
            StandardForm sf = reduce(w, &steps);
            o.output = render(sf.to_word());
            if (in.trace)
                for (const auto& s : steps)
                    o.trace.push_back(std::string(rule_name(s.rule)) + "@" + std::to_string(s.position) +
                                      ": " + s.before + " -> " + s.after);
        } else if (cmd == "eqg") {
            o.output = eq_g(w, parse_word(in.other)) ? "true" : "false";
        }
    } else if (group == "helix") {
        if (cmd == "from-seed") {
            if (!in.c_given) throw DomainError(ErrorKind::InvalidInput, "-c is required");
            o.output = to_json(type7_from_seed(in.c, load_seed(in.seed)));
            return o;
        }
        SemitoricHelix h = load_helix(in);
        if (cmd == "validate") {
            helix_validate(h);
            o.output = "ok " + helix_canonical(h).render();
        } else if (cmd == "word") {
            helix_validate(h);
            try {
                o.output = render(helix_word(h));
            } catch (const DomainError& e) {
                if (e.kind() != ErrorKind::HelixEquationViolated) throw;
                o.output = e.tag();
                o.exit = kMismatch;
            }
        } else if (cmd == "classify") {
            o.output = helix_classify_minimal(h).render();
        } else if (cmd == "blowup") {
            helix_validate(h);
            o.output = to_json(helix_blowup(h, in.index));
        } else if (cmd == "blowdown") {
            helix_validate(h);
            o.output = to_json(helix_blowdown(h, in.index));
        } else if (cmd == "minimize") {
            if (in.exhaustive) {
                for (const auto& k : helix_reachable_minimal(h)) o.output += (o.output.empty() ? "" : "\n") + k.render();
            } else {
                auto r = helix_minimize(h);
                o.output = to_json(r.helix);
                for (auto i : r.blowdowns) o.trace.push_back("blowdown@" + std::to_string(i));
            }
        } else if (cmd == "render") {
            helix_validate(h);
            o.output = render_svg(h);
        }
    } else if (group == "fan") {
        ToricFan f = load_fan(in);
        if (cmd == "validate") {
            fan_validate(f);
            o.output = "ok";
        } else if (cmd == "minimize") {
            if (in.exhaustive) {
                for (const auto& k : fan_reachable_minimal(f)) o.output += (o.output.empty() ? "" : "\n") + k.render();
            } else {
                auto r = fan_minimize(f);
                o.output = to_json(r.fan);
                for (auto i : r.blowdowns) o.trace.push_back("blowdown@" + std::to_string(i));
            }
        } else if (cmd == "classify") {
            o.output = fan_classify_minimal(f).render();
        } else if (cmd == "render") {
            fan_validate(f);
            o.output = render_svg(f);
        }
    } else if (group == "polygon") {
        if (cmd == "from-helix") {
            o.output = to_json(helix_to_polygon(load_helix(in)));
            return o;
        }
        SemitoricPolygon p = load_polygon(in);
        if (cmd == "validate") {
            polygon_validate(p);
            o.output = "ok";
        } else if (cmd == "to-helix") {
            o.output = to_json(polygon_to_helix(p));
        } else if (cmd == "render") {
            o.output = render_svg(p);
        }
    } else if (group == "verify") {
        if (cmd == "fulton") return suite_outcome(verify_fulton(static_cast<int>(num("depth", 5))));
        if (cmd == "minimal-words") {
            std::vector<Int> cs;
            std::stringstream ss(opt.count("complexities") ? opt.at("complexities") : "1,2,3");
            for (std::string part; std::getline(ss, part, ',');) cs.push_back(std::stoll(part));
            return suite_outcome(verify_minimal_words(static_cast<int>(num("max-d", 5)), num("bound", 6), cs));
        }
        if (cmd == "jmax") {
            std::vector<Int> cs;
            std::stringstream ss(opt.count("complexities") ? opt.at("complexities") : "2,3");
            for (std::string part; std::getline(ss, part, ',');) cs.push_back(std::stoll(part));
            return suite_outcome(verify_jmax(static_cast<int>(num("depth", 5)), cs, num("bound", 4),
                                             static_cast<int>(num("seed-length", 3)), num("seed-bound", 4)));
        }
        if (cmd == "winding-oracle")
            return suite_outcome(verify_winding_oracle(static_cast<std::size_t>(num("samples", 1000)),
                                                       static_cast<std::uint64_t>(num("seed", 1))));
    }
    return o;
}

const char* describe(const std::string& group, const std::string& cmd) {
    static const std::map<std::string, const char*> text{
        {"word eval", "Matrix of a word"},
        {"word winding", "Winding number in twelfths"},
        {"word reduce", "Standard form of a word"},
        {"word eqg", "Equality in the universal cover group"},
        {"helix validate", "Check a helix"},
        {"helix word", "Helix word S T^a0 ... S T^a(d-1)"},
        {"helix classify", "Type of a minimal helix"},
        {"helix blowup", "Insert v_i + v_(i+1) after v_i"},
        {"helix blowdown", "Remove v_i"},
        {"helix minimize", "Blow down until minimal"},
        {"helix from-seed", "Type 7 helix from a seed"},
        {"helix render", "SVG drawing"},
        {"fan validate", "Check a fan"},
        {"fan minimize", "Blow down to a minimal model"},
        {"fan classify", "Name of a minimal fan"},
        {"fan render", "SVG drawing"},
        {"polygon validate", "Check a polygon"},
        {"polygon to-helix", "Helix of a polygon"},
        {"polygon from-helix", "Polygon with minimal edge lengths for a helix"},
        {"polygon render", "SVG drawing"},
        {"verify fulton", "Every fan near a minimal model minimizes"},
        {"verify minimal-words", "Brute force over minimal helix words"},
        {"verify jmax", "Helices without (1,0) near minimal models"},
        {"verify winding-oracle", "Word winding against geometric winding"},
    };
    auto it = text.find(group + " " + cmd);
    return it == text.end() ? "" : it->second;
}

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semitoric helices, fans and polygons"};
    app.require_subcommand(1);
    bool json_report = false, timestamp = false;
    app.add_flag("--json", json_report, "Print a JSON run report instead of plain output");
    app.add_flag("--timestamp", timestamp, "Add a timestamp to the output");

    Inputs in;
    std::map<std::string, std::string> opt;
    std::string group, cmd;

    auto add_group = [&](const std::string& name, const std::string& help,
                         const std::vector<std::string>& cmds, auto&& configure) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        for (const auto& c : cmds) {
            CLI::App* sub = g->add_subcommand(c, describe(name, c));
            configure(sub, c);
            sub->callback([&, name, c] {
                group = name;
                cmd = c;
            });
        }
    };

    add_group("word", "Words in S and T", {"eval", "winding", "reduce", "eqg"},
              [&](CLI::App* sub, const std::string& c) {
                  sub->add_option("word", in.word, "Word such as ST^-1ST^-4")->required();
                  if (c == "eqg") sub->add_option("other", in.other, "Second word")->required();
                  if (c == "reduce") sub->add_flag("--trace", in.trace, "Print every rewrite");
              });
    add_group("helix", "Semitoric helices",
              {"validate", "word", "classify", "blowup", "blowdown", "minimize", "from-seed", "render"},
              [&](CLI::App* sub, const std::string& c) {
                  auto* copt = sub->add_option("-c,--complexity", in.c, "Complexity c");
                  copt->each([&](const std::string&) { in.c_given = true; });
                  if (c == "from-seed") {
                      sub->add_option("--seed", in.seed, "Seed matrix [[a,b],[c,d]] or word")->required();
                      return;
                  }
                  sub->add_option("file", in.file, "Helix JSON file, - for stdin");
                  sub->add_option("-v,--vectors", in.vectors, "Vectors such as (0,1),(-1,1)");
                  if (c == "blowup" || c == "blowdown") sub->add_option("-i,--index", in.index)->required();
                  if (c == "minimize") {
                      sub->add_flag("--exhaustive", in.exhaustive, "Report every reachable minimal helix");
                      sub->add_flag("--trace", in.trace, "Print the blowdown indices");
                  }
              });
    add_group("fan", "Toric fans", {"validate", "minimize", "classify", "render"},
              [&](CLI::App* sub, const std::string& c) {
                  sub->add_option("file", in.file, "Fan JSON file, - for stdin");
                  sub->add_option("-v,--vectors", in.vectors, "Vectors such as (1,0),(0,1),(-1,-1)");
                  if (c == "minimize") {
                      sub->add_flag("--exhaustive", in.exhaustive, "Report every reachable minimal model");
                      sub->add_flag("--trace", in.trace, "Print the blowdown indices");
                  }
              });
    add_group("polygon", "Semitoric polygons", {"validate", "to-helix", "from-helix", "render"},
              [&](CLI::App* sub, const std::string& c) {
                  sub->add_option("file", in.file, c == "from-helix" ? "Helix JSON file" : "Polygon JSON file");
                  if (c == "from-helix") {
                      sub->add_option("-v,--vectors", in.vectors);
                      auto* copt = sub->add_option("-c,--complexity", in.c);
                      copt->each([&](const std::string&) { in.c_given = true; });
                  }
              });
    add_group("verify", "Verification suites", {"fulton", "minimal-words", "jmax", "winding-oracle"},
              [&](CLI::App* sub, const std::string& c) {
                  auto add = [&](const std::string& flag, const std::string& help) {
                      opt[flag] = "";
                      sub->add_option("--" + flag, opt[flag], help);
                  };
                  if (c == "fulton") add("depth", "Maximum number of blowups (default 5)");
                  if (c == "minimal-words") {
                      add("max-d", "Maximum word length (default 5)");
                      add("bound", "Maximum |a_i| (default 6)");
                      add("complexities", "Comma separated list (default 1,2,3)");
                  }
                  if (c == "jmax") {
                      add("depth", "Maximum number of blowups (default 5)");
                      add("complexities", "Comma separated list (default 2,3)");
                      add("bound", "Parameter range for types 5 and 6 (default 4)");
                      add("seed-length", "Maximum type 7 seed length (default 3)");
                      add("seed-bound", "Maximum type 7 seed exponent (default 4)");
                  }
                  if (c == "winding-oracle") {
                      add("samples", "Number of random samples (default 1000)");
                      add("seed", "Random seed (default 1)");
                  }
              });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }
    for (auto it = opt.begin(); it != opt.end();)
        it = it->second.empty() ? opt.erase(it) : std::next(it);

    Outcome o;
    try {
        o = run(group, cmd, in, opt);
    } catch (const ParseError& e) {
        o.output = e.what();
        o.exit = kParse;
    } catch (const DomainError& e) {
        o.output = e.kind() == ErrorKind::InvalidInput ? std::string(e.what()) : e.tag();
        o.exit = e.kind() == ErrorKind::InvalidInput ? kParse : kDomain;
        if (e.kind() != ErrorKind::InvalidInput && !e.detail().empty()) o.trace.push_back(e.detail());
    } catch (const std::exception& e) {
        o.output = e.what();
        o.exit = kParse;
    }

    if (json_report) {
        std::string echo;
        for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);
        std::string digest_src = in.word + "|" + in.other + "|" + in.vectors + "|" + in.seed;
        if (!in.file.empty() && in.file != "-") {
            try {
                digest_src += "|" + read_input(in.file);
            } catch (const DomainError&) {
            }
        }
        nlohmann::json report{{"command", echo},
                              {"inputs_digest", fnv1a(digest_src)},
                              {"output", o.output},
                              {"trace", o.trace},
                              {"exit", o.exit}};
        if (timestamp) report["timestamp"] = static_cast<long long>(std::time(nullptr));
        std::cout << report.dump(2) << "\n";
        return o.exit;
    }
    if (timestamp) std::cout << "# " << static_cast<long long>(std::time(nullptr)) << "\n";
    std::cout << o.output << "\n";
    for (const auto& t : o.trace) std::cout << t << "\n";
    return o.exit;
}
