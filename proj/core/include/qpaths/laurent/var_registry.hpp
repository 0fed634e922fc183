#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qp {

using VarId = std::uint32_t;

// Bidirectional map between formal variable names and dense integer ids.
// A registry belongs to one computation context; it is not synchronized.
class VarRegistry {
public:
    VarId intern(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;
    const std::string& name(VarId id) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VarId> ids_;
};

}  // namespace qp
