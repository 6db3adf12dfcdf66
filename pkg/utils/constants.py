# Commands
CMD_DEMO="demo"; CMD_CHECK="check"; CMD_CATEGORIES="categories"; CMD_FUZZ="fuzz"

# Interpreters
INTERPRETER_REF="ref"; INTERPRETER_PARALLEL="parallel"
INTERPRETERS=(INTERPRETER_REF,INTERPRETER_PARALLEL)

# Exit codes
EXIT_OK=0; EXIT_FAILURE=1; EXIT_USAGE=2

# Rendering
STORE_SEP=" :+ "; MAPSTO="↦"; END_SUFFIX=" END"
BARE_INT_LABEL="Int" # Integer label rendered without its constructor name

# Entities
MAX_ENTITY=2**64-1 # Largest 64-bit id
SENTINEL_BASE=2**63 # Default fresh sentinels for influence when no state is at hand

# Misc
DEFAULT_LINEARIZATION_LIMIT=10080 # 7! * 2
ROOT_NODE="z"
