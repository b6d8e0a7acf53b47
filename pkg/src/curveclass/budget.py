"""Enumeration budget plumbing.

Every exhaustive loop in the package is capped.  The cap is, in order of
precedence: an explicit ``budget=`` argument, the CURVECLASS_BUDGET
environment variable, then the default below.
"""

import os

DEFAULT_BUDGET = 10**6

# separate caps for the divisor-class oracle
ORACLE_ORDER_CAP = 10**4
ORACLE_ENUM_CAP = 10**3

# matrix-group closure cap
CLOSURE_CAP = 10**4


def resolve_budget(budget=None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("CURVECLASS_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET
