#include "mediator/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mediator {

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_int(const std::string& tok, int& out) {
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

struct Parser {
    LoadResult result;
    Scenario s;
    bool saw_users = false, saw_delta = false, saw_negotiators = false,
         saw_uploader = false, saw_targets = false;

    void error(int line, const std::string& msg) {
        result.parse_errors.push_back("line " + std::to_string(line) + ": " +
                                      msg);
    }

    void handle(int line, const std::string& key,
                const std::vector<std::string>& args) {
        if (key == "users") {
            saw_users = true;
            s.users = args;
        } else if (key == "delta") {
            saw_delta = true;
            if (args.size() != 1 || !parse_int(args[0], s.ties.delta)) {
                error(line, "delta expects one integer");
            }
        } else if (key == "negotiators") {
            saw_negotiators = true;
            s.negotiators = args;
        } else if (key == "uploader") {
            saw_uploader = true;
            if (args.size() != 1) {
                error(line, "uploader expects one user id");
            } else {
                s.uploader = args[0];
            }
        } else if (key == "targets") {
            saw_targets = true;
            s.targets = args;
        } else if (key == "group") {
            // group: <owner> <name> = <member>...
            auto eq = std::find(args.begin(), args.end(), "=");
            if (args.size() < 3 || eq != args.begin() + 2) {
                error(line, "group expects '<owner> <name> = <members...>'");
                return;
            }
            Group g;
            g.name = args[1];
            g.members.insert(args.begin() + 3, args.end());
            s.group_sets[args[0]].owner = args[0];
            s.group_sets[args[0]].groups.push_back(std::move(g));
        } else if (key == "policy") {
            // policy: <owner> grant = <groups...> except = <users...>
            auto grant = std::find(args.begin(), args.end(), "grant");
            auto except = std::find(args.begin(), args.end(), "except");
            if (args.size() < 5 || grant != args.begin() + 1 ||
                except == args.end() || *(grant + 1) != "=" ||
                except + 1 == args.end() || *(except + 1) != "=") {
                error(line,
                      "policy expects '<owner> grant = <groups...> except = "
                      "<users...>'");
                return;
            }
            PrivacyPolicy p;
            p.owner = args[0];
            p.granted.insert(grant + 2, except);
            p.exceptions.insert(except + 2, args.end());
            if (s.policies.count(p.owner) != 0) {
                error(line, "duplicate policy for '" + p.owner + "'");
                return;
            }
            s.policies.emplace(p.owner, std::move(p));
        } else if (key == "tie") {
            // tie: <a> <b> = <value>
            int value = 0;
            if (args.size() != 4 || args[2] != "=" ||
                !parse_int(args[3], value)) {
                error(line, "tie expects '<a> <b> = <integer>'");
                return;
            }
            s.ties.set(args[0], args[1], value);
        } else {
            error(line, "unknown key '" + key + "'");
        }
    }
};

}  // namespace

LoadResult parse_scenario(const std::string& text,
                          const std::string& fallback_id) {
    Parser p;
    p.s.id = fallback_id;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        const auto first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;

        const auto colon = trimmed.find(':');
        if (colon == std::string::npos) {
            p.error(lineno, "expected 'key: value'");
            continue;
        }
        std::string key = trimmed.substr(first, colon - first);
        p.handle(lineno, key, tokenize(trimmed.substr(colon + 1)));
    }

    if (!p.saw_users) p.error(0, "missing 'users' line");
    if (!p.saw_delta) p.error(0, "missing 'delta' line");
    if (!p.saw_negotiators) p.error(0, "missing 'negotiators' line");
    if (!p.saw_uploader) p.error(0, "missing 'uploader' line");
    if (!p.saw_targets) p.error(0, "missing 'targets' line");

    if (!p.result.parse_errors.empty()) return std::move(p.result);

    p.result.scenario = std::move(p.s);
    p.result.validation = validate_scenario(*p.result.scenario);
    return std::move(p.result);
}

LoadResult load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        LoadResult r;
        r.parse_errors.push_back("cannot open '" + path + "'");
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(),
                          std::filesystem::path(path).stem().string());
}

std::string to_text(const Scenario& s) {
    std::ostringstream out;
    auto join = [](const auto& seq) {
        std::string r;
        for (const auto& item : seq) {
            if (!r.empty()) r += ' ';
            r += item;
        }
        return r;
    };

    out << "users: " << join(s.users) << '\n';
    out << "delta: " << s.ties.delta << '\n';
    out << "negotiators: " << join(s.negotiators) << '\n';
    out << "uploader: " << s.uploader << '\n';
    out << "targets: " << join(s.targets) << '\n';
    for (const auto& n : s.negotiators) {
        auto it = s.group_sets.find(n);
        if (it == s.group_sets.end()) continue;
        for (const auto& g : it->second.groups) {
            out << "group: " << n << ' ' << g.name << " = " << join(g.members)
                << '\n';
        }
    }
    for (const auto& n : s.negotiators) {
        auto it = s.policies.find(n);
        if (it == s.policies.end()) continue;
        out << "policy: " << n << " grant =";
        for (const auto& g : it->second.granted) out << ' ' << g;
        out << " except =";
        for (const auto& e : it->second.exceptions) out << ' ' << e;
        out << '\n';
    }
    for (const auto& [pair, value] : s.ties.entries) {
        out << "tie: " << pair.first << ' ' << pair.second << " = " << value
            << '\n';
    }
    return out.str();
}

bool save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << to_text(s);
    return static_cast<bool>(out);
}

}  // namespace mediator
