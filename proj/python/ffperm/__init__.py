"""Permutation polynomials over GF(q^3)."""

import json

from ._core import (
    Field,
    FieldError,
    SpecError,
    gamma,
    gcd_pattern,
    lambda_set,
    mu,
    run_cli,
)
from ._core import check as _check


def check(family, p, k, l=None, m=None, n=None, c_index=1):
    """Exhaustive verdict for one family instance, as a dict."""
    return json.loads(_check(family, p, k, l, m, n, c_index))


def suite(family, **options):
    """Runs a parameter grid through the CLI; returns (records, summary)."""
    args = ["suite", "--family", family]
    for key, value in options.items():
        flag = "--" + key.replace("_", "-")
        if value is True:
            args.append(flag)
        elif isinstance(value, (list, tuple)):
            args += [flag, ",".join(str(v) for v in value)]
        else:
            args += [flag, str(value)]
    code, out, err = run_cli(args)
    if code == 2:
        raise SpecError(err.strip())
    records = [json.loads(line) for line in out.splitlines() if line]
    return records, json.loads(err.splitlines()[-1])


__all__ = [
    "Field",
    "FieldError",
    "SpecError",
    "check",
    "gamma",
    "gcd_pattern",
    "lambda_set",
    "mu",
    "run_cli",
    "suite",
]
