#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellsym {

// Every failure carries a stable machine-readable code ("ZeroTwice",
// "ResourceLimit", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace limits {
// Enumeration guardrails. Desk-scale work stays far below these; anything
// larger is refused with ResourceLimit instead of grinding.
inline constexpr unsigned max_rank = 40;
inline constexpr unsigned max_p = 7;
inline constexpr unsigned max_catalan_arg = 30;  // Cat_30 still fits in 64 bits
}  // namespace limits

// "(a1,a2,...,ak)" with no spaces, base-10 entries.
std::string sequence_str(const std::vector<std::uint32_t>& entries);

}  // namespace cellsym
