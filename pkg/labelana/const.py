"""Constants for the labelana analyzer."""

# Report schema tag
SCHEMA_VERSION = "labelana/1"

# Environment override for the atom cap
ENV_MAX_ATOMS = "LABELANA_MAX_ATOMS"

# Input limits
DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_EDGES = 10_000

# Analysis limits
DEFAULT_MAX_ATOMS = 16
DEFAULT_WORD_BOUND_MULTIPLIER = 1
DEFAULT_MAX_LOOP_WORDS = 8
DEFAULT_SEED = 0

# Minimal-set brute force runs only below this many atoms
MINIMAL_SET_SELF_CHECK_ATOMS = 8

# Forced-chain witnesses are re-verified up to this many repetitions
WITNESS_REPETITIONS = 4

# Cover search modes
COVER_SAME_LENGTH = "same-length"
COVER_PREFIX_FREE = "prefix-free"
COVER_BOTH = "both"
COVER_MODES = (COVER_SAME_LENGTH, COVER_PREFIX_FREE, COVER_BOTH)
DEFAULT_COVER_MODE = COVER_BOTH

# Output formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"
OUTPUT_FORMATS = (FORMAT_TEXT, FORMAT_JSON)
DEFAULT_OUTPUT_FORMAT = FORMAT_TEXT

# Exit codes (operational failures only, never verdicts)
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4
EXIT_CONSISTENCY = 5

# Predicates accepted by the check subcommand
PROPERTY_DISAGREEABLE = "disagreeable"
PROPERTY_STRONGLY_DISAGREEABLE = "strongly-disagreeable"
PROPERTY_STRONGLY_COFINAL = "strongly-cofinal"
PROPERTY_L_E = "l-e"
PROPERTY_STAR = "star"
PROPERTY_CONNECTS = "connects"
PROPERTY_WLR = "wlr"
PROPERTIES = (
    PROPERTY_DISAGREEABLE,
    PROPERTY_STRONGLY_DISAGREEABLE,
    PROPERTY_STRONGLY_COFINAL,
    PROPERTY_L_E,
    PROPERTY_STAR,
    PROPERTY_CONNECTS,
    PROPERTY_WLR,
)

# Verdict rule tags
RULE_SIMPLICITY_CRITERION = "simplicity-criterion"
RULE_COFINAL_DISAGREEABLE_SIMPLE = "cofinal-disagreeable-simple"
RULE_COFINAL_LOOP_PI = "cofinal-disagreeable-loop"
RULE_DISAGREEABLE_CONNECTS_IH = "disagreeable-connects-ih"
RULE_STAR_IH_CONVERSE = "star-ih-converse"
RULE_QUOTIENTS_CONNECT_PI = "quotients-connect"
RULE_EXITLESS_MINIMAL_LOOP = "exitless-minimal-loop"
RULE_NONPOWER_LOOP_PAIR = "nonpower-loop-pair"
RULE_STAR_NOT_STRONGLY_DISAGREEABLE = "star-not-strongly-disagreeable"
RULE_SIMPLE_IH_EQUIVALENCE = "simple-ih-equivalence"
RULE_STRONGLY_DISAGREEABLE_GAUGE = "strongly-disagreeable-gauge"
RULE_LOOP_WITH_EXIT = "loop-with-exit"
RULE_STANDING_ASSUMPTION = "standing-assumption"

RULE_STATEMENTS = {
    RULE_SIMPLICITY_CRITERION: (
        "The algebra is simple exactly when no exit-less cycle exists and the "
        "only hereditary saturated cores are empty and everything."
    ),
    RULE_COFINAL_DISAGREEABLE_SIMPLE: (
        "A disagreeable, strongly cofinal space has a simple algebra."
    ),
    RULE_COFINAL_LOOP_PI: (
        "A disagreeable, strongly cofinal space carrying a loop (in particular "
        "a cycle) has a simple, purely infinite algebra."
    ),
    RULE_DISAGREEABLE_CONNECTS_IH: (
        "If the space is disagreeable and every vertex connects to a loop, "
        "every nonzero hereditary subalgebra holds an infinite projection."
    ),
    RULE_STAR_IH_CONVERSE: (
        "Under condition (*), a disagreeable space whose algebra has property "
        "(IH) has every vertex connecting to a loop."
    ),
    RULE_QUOTIENTS_CONNECT_PI: (
        "A strongly disagreeable space in which every vertex connects to a "
        "loop in every quotient has a purely infinite algebra."
    ),
    RULE_EXITLESS_MINIMAL_LOOP: (
        "An exit-less loop of length n at a minimal set yields a hereditary "
        "subalgebra isomorphic to M_n(C(T)), so the algebra is not purely "
        "infinite."
    ),
    RULE_NONPOWER_LOOP_PAIR: (
        "A purely infinite algebra needs two loops at every minimal set with "
        "loops whose words share no common power."
    ),
    RULE_STAR_NOT_STRONGLY_DISAGREEABLE: (
        "When every quotient satisfies condition (*), pure infiniteness forces "
        "strong disagreeability."
    ),
    RULE_SIMPLE_IH_EQUIVALENCE: (
        "A simple algebra is purely infinite exactly when it has property (IH)."
    ),
    RULE_STRONGLY_DISAGREEABLE_GAUGE: (
        "Every ideal of the algebra of a strongly disagreeable space is "
        "gauge-invariant."
    ),
    RULE_LOOP_WITH_EXIT: (
        "The projection of the base of a loop with an exit is infinite."
    ),
    RULE_STANDING_ASSUMPTION: (
        "The family is not weakly left-resolving, so no criterion applies."
    ),
}

# Verdict questions
QUESTION_SIMPLE = "Simple"
QUESTION_IH = "IH"
QUESTION_PURELY_INFINITE = "PurelyInfinite"
QUESTION_GAUGE_INVARIANT_IDEALS = "GaugeInvariantIdeals"
QUESTION_INFINITE_PROJECTION = "InfiniteProjectionExists"

# Caveats
CAVEAT_BOUNDED = "bounded search"
CAVEAT_WLR_FAILED = "w.l.r. failed - standing assumption violated"
CAVEAT_ONE_DIRECTIONAL = "one-directional rule; converse not available"

# DOT palette for atoms
ATOM_COLORS = (
    "#03a9f4",
    "#ffb300",
    "#8bc34a",
    "#e91e63",
    "#9c27b0",
    "#00bcd4",
    "#ff5722",
    "#607d8b",
)
