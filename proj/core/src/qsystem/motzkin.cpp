#include "qpaths/qsystem/motzkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "qpaths/errors.hpp"

namespace qp {

MotzkinPath::MotzkinPath(std::vector<int> m) : m_(std::move(m)) {
    if (m_.empty()) throw MotzkinViolation("Motzkin path of rank 0");
    for (std::size_t i = 0; i + 1 < m_.size(); ++i)
        if (std::abs(m_[i] - m_[i + 1]) > 1)
            throw MotzkinViolation("not a Motzkin path: " + to_string());
}

bool MotzkinPath::is_fundamental() const { return *std::min_element(m_.begin(), m_.end()) == 0; }

MotzkinPath MotzkinPath::shifted(int alpha, int delta) const {
    if (alpha < 1 || alpha > rank()) throw MotzkinViolation("index out of range");
    std::vector<int> v = m_;
    v[static_cast<std::size_t>(alpha - 1)] += delta;
    return MotzkinPath(std::move(v));
}

namespace {

std::vector<std::pair<int, int>> runs(const std::vector<int>& m, int step) {
    std::vector<std::pair<int, int>> out;
    const int r = static_cast<int>(m.size());
    int a = 0;
    while (a < r - 1) {
        if (m[a + 1] == m[a] + step) {
            int b = a;
            while (b + 1 < r && m[b + 1] == m[b] + step) ++b;
            out.emplace_back(a + 1, b + 1);
            a = b;
        } else {
            ++a;
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> MotzkinPath::ascending_segments() const { return runs(m_, 1); }
std::vector<std::pair<int, int>> MotzkinPath::descending_segments() const { return runs(m_, -1); }

std::string MotzkinPath::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m_[i]);
    }
    return s + ")";
}

MotzkinPath parse_motzkin(std::string_view text) {
    std::vector<int> v;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc()) throw ParseError("bad integer in Motzkin path");
            v.push_back(value);
            i = static_cast<std::size_t>(ptr - text.data());
        } else if (ch == ',' || ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else {
            throw ParseError(std::string("unexpected character in Motzkin path: ") + ch);
        }
    }
    return MotzkinPath(std::move(v));
}

std::vector<MotzkinPath> fundamental_domain(int r) {
    std::vector<MotzkinPath> out;
    if (r < 1) return out;
    // Walks with steps in {-1,0,1} from every start height; keep min == 0.
    std::vector<int> cur(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            if (*std::min_element(cur.begin(), cur.end()) == 0) out.emplace_back(cur);
            return;
        }
        for (int d = -1; d <= 1; ++d) {
            int v = cur[i - 1] + d;
            if (v < 0 || v >= r) continue;
            cur[i] = v;
            self(self, i + 1);
        }
    };
    for (int start = 0; start < r; ++start) {
        cur[0] = start;
        rec(rec, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qp
