#include "selfref/report.hpp"

// Generated from scenarios/*.scn by scripts/embed_scenarios.sh; the unit tests
// check the two stay in sync.

namespace selfref {

namespace {

constexpr BuiltinScenario kBuiltins[] = {
    {"lagadonian_agreement.scn", R"scn(# Two conditions on the expression a that agree: neither instance begins with it.
name lagadonian-agreement
stipulate a -> obj v
stipulate b -> term a
schema lagadonian
mode csi
depth 2
policy no-self-reference
expect verdict (5) CSI('a') false
expect verdict (6) CSI(b) false
expect certificate
)scn"},
    {"lagadonian_csi.scn", R"scn(# A name that names itself, coordinated instances only.
name lagadonian-csi
stipulate d -> term d
schema lagadonian
mode csi
depth 2
policy no-self-reference
policy no-naming-cycles
expect verdict (7) CSI(d) true
expect verdict (8) CSI('d') false
expect conflict leibniz CSI(d) CSI('d')
expect no-other-conflicts
)scn"},
    {"lagadonian_all.scn", R"scn(# Every substitution instance lays down a condition.
name lagadonian-all
stipulate d -> term d
schema lagadonian
mode all
depth 2
expect verdict (7) CSI(d) true
expect verdict (8) CSI('d') false
expect verdict (8+) Phi('d', 'd') true
expect conflict leibniz CSI(d) CSI('d')
expect conflict direct Phi('d', 'd') CSI('d')
)scn"},
    {"laputan_csi.scn", R"scn(# Two names for one arbitrary object; no self-reference anywhere.
name laputan-csi
stipulate a -> obj v
stipulate b -> obj v
schema laputan
mode csi
depth 1
policy injective-naming
policy no-self-reference
expect verdict (9) CSI(a) true
expect verdict (10) CSI(b) false
expect conflict leibniz CSI(a) CSI(b)
expect no-other-conflicts
)scn"},
    {"laputan_all.scn", R"scn(name laputan-all
stipulate a -> obj v
stipulate b -> obj v
schema laputan
mode all
depth 1
expect verdict (9) CSI(a) true
expect verdict (10) CSI(b) false
expect verdict (9+) Phi(b, 'a') true
expect conflict leibniz CSI(a) CSI(b)
expect conflict direct Phi(b, 'a') CSI(b)
)scn"},
    {"deictic.scn", R"scn(# x is the first term of this very substitution instance of (#).
name deictic
stipulate d -> term d
schema lagadonian
mode csi
depth 1
expect deictic (3) d true
expect deictic (4) 'd' false
expect deictic (open) open indeterminate
)scn"},
};

}  // namespace

std::span<const BuiltinScenario> builtin_scenarios() { return kBuiltins; }

}  // namespace selfref
