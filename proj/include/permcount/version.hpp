#pragma once

namespace permcount {

inline constexpr const char* tool_name = "permcount";
inline constexpr const char* tool_version = "0.1.0";

// every report embeds these so results are reproducible from the report alone
inline constexpr const char* convention_note = "(a∘b)(x)=a(b(x))";

}  // namespace permcount
