import logging

# Largest set a closure (super summit set, finite subgroup) may reach before
# giving up. The CLI lets GARSIDE_CAP override it.
DEFAULT_CAP = 100000

# Index of the identity simple in every structure table
IDENTITY = 0

# Whether to log every cycling, decycling and closure step.
# Only log step details when debugging, due to CPU overhead.
LOG_STEPS = False


def log_step(prefix, element):
    if LOG_STEPS:
        logging.debug(
            f"{prefix} <Element inf={element.inf_power} "
            f"factors={list(element.factors)}>"
        )


class GarsideError(ValueError):
    """Base class for errors the CLI reports as domain errors."""


class MalformedStructureError(GarsideError):
    pass


class StructureParseError(GarsideError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class StructureAxiomError(GarsideError):
    def __init__(self, report):
        super().__init__(
            "Structure is not a Garside structure: "
            + "; ".join(report.violations)
        )
        self.report = report


class HypothesisError(GarsideError):
    pass


class CapExceededError(GarsideError):
    def __init__(self, what, cap):
        super().__init__(f"{what} exceeded the cap of {cap} elements")
        self.cap = cap


class WordSyntaxError(GarsideError):
    pass
