#pragma once

#include <array>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "qpaths/laurent/laurent_poly.hpp"
#include "qpaths/qsystem/motzkin.hpp"

namespace qp {

// The cluster x_m: for every alpha the two variables R_{alpha,m_alpha} and
// R_{alpha,m_alpha+1}. Boundary rows alpha = 0 and r+1 are the constant 1
// and are never stored.
class Seed {
public:
    // Default names are "R<alpha>_<n>", e.g. R1_0. Seeds built over the same
    // registry share a variable whenever they share an (alpha, n) pair.
    explicit Seed(MotzkinPath path, std::shared_ptr<VarRegistry> registry = nullptr);
    Seed(MotzkinPath path, std::shared_ptr<VarRegistry> registry,
         std::vector<std::array<VarId, 2>> vars);

    int rank() const { return path_.rank(); }
    const MotzkinPath& path() const { return path_; }
    const std::shared_ptr<VarRegistry>& registry() const { return registry_; }

    bool contains(int alpha, int n) const;
    VarId var_id(int alpha, int n) const;
    LaurentPoly var(int alpha, int n) const { return LaurentPoly::variable(var_id(alpha, n)); }
    // All 2r variable ids, ordered as (alpha, m_alpha) then (alpha, m_alpha+1).
    std::vector<VarId> all_ids() const;

    static std::string default_name(int alpha, int n);

private:
    MotzkinPath path_;
    std::shared_ptr<VarRegistry> registry_;
    std::vector<std::array<VarId, 2>> vars_;
};

// Seed description: one line per variable, "R alpha n = name". Blank lines
// and lines starting with '#' are ignored. The rank and Motzkin path are
// inferred; every alpha in 1..r must have exactly two consecutive times.
Seed parse_seed(std::istream& in, std::shared_ptr<VarRegistry> registry = nullptr);

}  // namespace qp
