#pragma once

namespace cliffgraph
{

    inline constexpr const char *kVersion = "0.1.0";

} // namespace cliffgraph
