"""
Constants used in the semimod package.

It includes the config and log file names, the default scan and output
settings and the machine word limit for semigroup arithmetic.

"""

import sys

# Name of the project configuration file looked up from the project root
CONFIG_FILENAME = "semimod.json"

# Name of the log file written when save_logs is enabled
LOG_FILENAME = "semimod.log"

# Environment variable overriding the project root lookup
WORKSPACE_ENV_VAR = "SEMIMOD_WORKSPACE"

# alpha * beta has to fit in a signed machine word
MAX_SEMIGROUP_PRODUCT = sys.maxsize

# Output formats supported by every CLI command
OUTPUT_FORMATS = ["json", "tsv", "text"]

DEFAULT_OUTPUT_FORMAT = "text"

# Default upper bound on alpha + beta for `census --all`
DEFAULT_MAX_SUM = 16

# Smallest alpha + beta for which a valid semigroup exists (<2,3>)
MIN_SEMIGROUP_SUM = 5

DEFAULT_RESOLUTION_STEPS = 4

DEFAULT_SVG_CELL_SIZE = 0.6

# Characters of the ASCII path rendering
ASCII_EMPTY = "."
ASCII_VERTEX = "+"
ASCII_TURN = "*"
ASCII_ENDPOINT = "o"
ASCII_DOWN = "|"
ASCII_RIGHT = "-"

# Columns of the census table
CENSUS_COLUMNS = ["alpha", "beta", "generator_count", "observed", "expected"]
