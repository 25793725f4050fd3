#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ringsynth/rings.hpp"

namespace ringsynth {

// INT {X,CX,CCX,HH}, SUPINT {X,CX,CCX,H}, REAL {X,CX,CCX,H,CH},
// IMAG {X,CX,CCX,F}, GAUSS {X,CX,CCX,WH,S}, SUPGAUSS {X,CX,CCX,H,S}
enum class GateSetTag { INT, SUPINT, REAL, IMAG, GAUSS, SUPGAUSS };

inline constexpr GateSetTag kAllGateSets[] = {GateSetTag::INT,  GateSetTag::SUPINT, GateSetTag::REAL,
                                              GateSetTag::IMAG, GateSetTag::GAUSS,  GateSetTag::SUPGAUSS};

std::string_view gateset_name(GateSetTag g);  // lower case, as on the command line
std::optional<GateSetTag> parse_gateset(std::string_view s);
RingTag gateset_ring(GateSetTag g);
std::optional<GateSetTag> minimal_gateset(RingTag t);
std::string gateset_listing(GateSetTag g);  // "{X,CX,CCX,HH}"

}  // namespace ringsynth
