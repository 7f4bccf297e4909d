#include "cellsym/common.hpp"

namespace cellsym {

std::string sequence_str(const std::vector<std::uint32_t>& entries) {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    out += ')';
    return out;
}

}  // namespace cellsym
