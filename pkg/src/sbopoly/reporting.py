"""Pass/fail bookkeeping shared by the verification suites and the CLI."""

from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
EXPECTED_NEGATIVE = "expected-negative"


@dataclass
class Check:
    """One verified identity or recorded observation."""

    name: str
    status: str
    detail: str = ""

    @property
    def ok(self):
        return self.status != FAIL


def check(name, passed, detail=""):
    return Check(name, PASS if passed else FAIL, detail)


def all_ok(checks):
    return all(c.ok for c in checks)


def failures(checks):
    return [c for c in checks if not c.ok]


class RealnessCounterexample(Exception):
    """Raised when the empirical zero-structure scan finds a counterexample.

    Full realness of the zeros is an observation, not a theorem, so a hit is
    dumped loudly (polynomial, family, indices, root report) instead of being
    folded into an ordinary failed check.
    """

    def __init__(self, dump):
        super().__init__("zero-structure counterexample: %r" % (dump,))
        self.dump = dump
