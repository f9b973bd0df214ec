#include "lineclip/clippers.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace lineclip {

std::string_view algorithm_name(AlgorithmId id) noexcept
{
    switch (id) {
    case AlgorithmId::CohenSutherland: return "CS";
    case AlgorithmId::LiangBarsky: return "LB";
    case AlgorithmId::CyrusBeck: return "CB";
    case AlgorithmId::NichollLeeNicholl: return "NLN";
    case AlgorithmId::Skala: return "Skala";
    case AlgorithmId::KWC: return "KWC";
    case AlgorithmId::Proposed: return "Proposed";
    }
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name)
{
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });

    struct Alias {
        std::string_view spelling;
        AlgorithmId id;
    };
    static constexpr Alias aliases[] = {
        {"cs", AlgorithmId::CohenSutherland},   {"cohen-sutherland", AlgorithmId::CohenSutherland},
        {"lb", AlgorithmId::LiangBarsky},       {"liang-barsky", AlgorithmId::LiangBarsky},
        {"cb", AlgorithmId::CyrusBeck},         {"cyrus-beck", AlgorithmId::CyrusBeck},
        {"nln", AlgorithmId::NichollLeeNicholl}, {"nicholl-lee-nicholl", AlgorithmId::NichollLeeNicholl},
        {"skala", AlgorithmId::Skala},          {"kwc", AlgorithmId::KWC},
        {"proposed", AlgorithmId::Proposed},    {"prop", AlgorithmId::Proposed},
    };
    for (const Alias& a : aliases)
        if (a.spelling == key)
            return a.id;
    return std::nullopt;
}

ClipFn clip_function(AlgorithmId id) noexcept
{
    switch (id) {
    case AlgorithmId::CohenSutherland: return &clip_cohen_sutherland;
    case AlgorithmId::LiangBarsky: return &clip_liang_barsky;
    case AlgorithmId::CyrusBeck: return &clip_cyrus_beck;
    case AlgorithmId::NichollLeeNicholl: return &clip_nicholl_lee_nicholl;
    case AlgorithmId::Skala: return &clip_skala;
    case AlgorithmId::KWC: return &clip_kwc;
    case AlgorithmId::Proposed: return &clip_proposed;
    }
    return &clip_proposed;
}

} // namespace lineclip
