#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qp {

// Integer sequence (m_1, ..., m_r) with |m_a - m_{a+1}| <= 1. Indices are
// 1-based through at(); values() exposes the raw 0-based vector.
class MotzkinPath {
public:
    MotzkinPath() = default;
    explicit MotzkinPath(std::vector<int> m);

    static MotzkinPath zero(int r) { return MotzkinPath(std::vector<int>(static_cast<std::size_t>(r), 0)); }

    int rank() const { return static_cast<int>(m_.size()); }
    int at(int alpha) const { return m_.at(static_cast<std::size_t>(alpha - 1)); }
    const std::vector<int>& values() const { return m_; }

    bool is_fundamental() const;
    // m + delta * e_alpha; MotzkinViolation if the result is not Motzkin.
    MotzkinPath shifted(int alpha, int delta) const;

    // Maximal runs [s, e] (1-based, s < e) on which m increases by one per
    // step, respectively decreases by one per step.
    std::vector<std::pair<int, int>> ascending_segments() const;
    std::vector<std::pair<int, int>> descending_segments() const;

    std::string to_string() const;  // "(0,1,2)"
    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
    friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

private:
    std::vector<int> m_;
};

// Accepts "0,1,2", "(0,1,2)" or "0 1 2".
MotzkinPath parse_motzkin(std::string_view text);

// All Motzkin paths of length r with minimum 0, in lexicographic order.
std::vector<MotzkinPath> fundamental_domain(int r);

}  // namespace qp
