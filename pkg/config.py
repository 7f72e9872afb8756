"""
Configuration Management for the Reduced Words Toolkit
======================================================

This module centralizes the default settings used by the library and the
command-line front end: enumeration bounds, the witness materialization cap,
rewriting caps, DOT rendering options and logging.

Every value here is a default. The command line overrides them with flags;
nothing is read from the environment or from configuration files, so a
command's output depends only on its arguments.
"""


class Config:
    """
    Central configuration class for the toolkit

    Settings are grouped into sections, one loader per concern, so that a
    new concern can be added without touching the others.
    """

    def __init__(self):
        """Initialize configuration with default values"""
        self._load_base_config()
        self._load_enumeration_config()
        self._load_shortest_config()
        self._load_rewriting_config()
        self._load_export_config()
        self._load_logging_config()

    def _load_base_config(self):
        """Load basic application configuration"""
        self.APP_NAME = "reduced-words"
        self.APP_VERSION = "1.0.0"
        self.APP_DESCRIPTION = (
            "Finite automata over inverse alphabets: free-group reduction, "
            "closure saturation, quotients and shortest reducible words"
        )

    def _load_enumeration_config(self):
        """Bounds used when listing the words of a language"""
        self.DEFAULT_ENUMERATION_LENGTH = 6
        # Hard ceiling for CLI listings; enumeration is exponential in length
        self.MAX_ENUMERATION_LENGTH = 16

    def _load_shortest_config(self):
        """Settings for the shortest reducible word search"""
        self.WITNESS_CAP = 2 ** 16
        self.INFINITY_TOKEN = "inf"

    def _load_rewriting_config(self):
        """Settings for generalized rewriting and the counterexample census"""
        self.DEFAULT_REWRITE_CAP_SLACK = 0
        self.EQ_DEMO_LENGTH = 8
        self.RG_DEMO_LENGTH = 9
        self.EQUATION_EPSILON_TOKEN = "eps"

    def _load_export_config(self):
        """Configure automaton export formats"""
        self.SUPPORTED_EXPORT_FORMATS = ["text", "dot", "json"]
        self.EPSILON_TOKEN = "e"
        self.DOT_RANKDIR = "LR"
        self.DOT_FONT = "Helvetica"
        self.EXPORT_FORMAT_VERSION = "1.0"

    def _load_logging_config(self):
        """Logging defaults; successful runs stay silent on stderr"""
        self.LOG_LEVEL = "WARNING"
        self.VERBOSE_LOG_LEVEL = "INFO"
        self.LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

    def is_export_format_supported(self, fmt: str) -> bool:
        """Check if an export format is supported"""
        return fmt.lower() in self.SUPPORTED_EXPORT_FORMATS
