#include "qpaths/qsystem/seed.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "qpaths/errors.hpp"

namespace qp {

std::string Seed::default_name(int alpha, int n) {
    return "R" + std::to_string(alpha) + "_" + (n < 0 ? "m" + std::to_string(-n) : std::to_string(n));
}

Seed::Seed(MotzkinPath path, std::shared_ptr<VarRegistry> registry)
    : path_(std::move(path)), registry_(registry ? std::move(registry) : std::make_shared<VarRegistry>()) {
    for (int a = 1; a <= rank(); ++a) {
        int m = path_.at(a);
        vars_.push_back({registry_->intern(default_name(a, m)), registry_->intern(default_name(a, m + 1))});
    }
}

Seed::Seed(MotzkinPath path, std::shared_ptr<VarRegistry> registry, std::vector<std::array<VarId, 2>> vars)
    : path_(std::move(path)), registry_(std::move(registry)), vars_(std::move(vars)) {
    if (!registry_) throw std::invalid_argument("seed needs a registry");
    if (static_cast<int>(vars_.size()) != rank()) throw std::invalid_argument("seed variable count mismatch");
}

bool Seed::contains(int alpha, int n) const {
    if (alpha < 1 || alpha > rank()) return false;
    int m = path_.at(alpha);
    return n == m || n == m + 1;
}

VarId Seed::var_id(int alpha, int n) const {
    if (!contains(alpha, n))
        throw std::out_of_range("R_{" + std::to_string(alpha) + "," + std::to_string(n) + "} is not in the seed");
    return vars_[static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(n - path_.at(alpha))];
}

std::vector<VarId> Seed::all_ids() const {
    std::vector<VarId> out;
    for (const auto& v : vars_) out.push_back(v[0]);
    for (const auto& v : vars_) out.push_back(v[1]);
    return out;
}

Seed parse_seed(std::istream& in, std::shared_ptr<VarRegistry> registry) {
    static const std::regex line_re(R"(^\s*R\s+(-?\d+)\s+(-?\d+)\s*=\s*([A-Za-z_][A-Za-z0-9_']*)\s*$)");
    std::map<int, std::map<int, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::smatch mt;
        if (!std::regex_match(line, mt, line_re))
            throw ParseError("seed file line " + std::to_string(lineno) + ": expected 'R alpha n = name'");
        int alpha = std::stoi(mt[1]);
        int n = std::stoi(mt[2]);
        if (alpha < 1) throw ParseError("seed file line " + std::to_string(lineno) + ": alpha must be >= 1");
        if (!entries[alpha].emplace(n, mt[3]).second)
            throw ParseError("seed file line " + std::to_string(lineno) + ": duplicate entry");
    }
    if (entries.empty()) throw ParseError("seed file is empty");
    int r = entries.rbegin()->first;
    std::vector<int> m;
    for (int a = 1; a <= r; ++a) {
        auto it = entries.find(a);
        if (it == entries.end() || it->second.size() != 2)
            throw ParseError("seed file: alpha " + std::to_string(a) + " needs exactly two entries");
        int lo = it->second.begin()->first, hi = it->second.rbegin()->first;
        if (hi != lo + 1) throw ParseError("seed file: times for alpha " + std::to_string(a) + " are not consecutive");
        m.push_back(lo);
    }
    MotzkinPath path(m);
    if (!registry) registry = std::make_shared<VarRegistry>();
    std::vector<std::array<VarId, 2>> vars;
    for (int a = 1; a <= r; ++a) {
        const auto& e = entries[a];
        VarId v0 = registry->intern(e.begin()->second), v1 = registry->intern(e.rbegin()->second);
        if (v0 == v1) throw ParseError("seed file: repeated variable name");
        vars.push_back({v0, v1});
    }
    // Names must be pairwise distinct across the whole seed.
    std::vector<VarId> ids;
    for (auto& v : vars) ids.insert(ids.end(), v.begin(), v.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw ParseError("seed file: repeated variable name");
    return Seed(std::move(path), std::move(registry), std::move(vars));
}

}  // namespace qp
